import typing as tp
import json
from enum import Enum


class CheckStatus(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'
    OBSERVED = 'observed'
    PAPER_DISCREPANCY = 'paper-discrepancy'

    @property
    def is_failure(self) -> bool:
        return self in (CheckStatus.FAIL, CheckStatus.PAPER_DISCREPANCY)


class CheckResult(tp.NamedTuple):
    '''
    Outcome of one named verification. Counterexamples are plain JSON-compatible records.
    '''
    name: str
    status: CheckStatus
    detail: str = ''
    counterexamples: tp.Tuple[tp.Dict[str, tp.Any], ...] = ()

    @classmethod
    def from_counterexamples(cls,
            name: str,
            counterexamples: tp.Iterable[tp.Dict[str, tp.Any]],
            count: int,
            *,
            failure: CheckStatus = CheckStatus.FAIL,
            ) -> 'CheckResult':
        found = tuple(counterexamples)
        if found:
            return cls(name, failure,
                    '{} of {} cases disagree'.format(len(found), count), found)
        return cls(name, CheckStatus.PASS, '{} cases'.format(count))

    def to_dict(self) -> tp.Dict[str, tp.Any]:
        return {
                'name': self.name,
                'status': self.status.value,
                'detail': self.detail,
                'counterexamples': [dict(c) for c in self.counterexamples],
                }


class VerifyReport:
    '''
    An ordered collection of check results.
    '''
    __slots__ = ('results',)

    def __init__(self, results: tp.Iterable[CheckResult] = ()) -> None:
        self.results = tuple(results)

    def __iter__(self) -> tp.Iterator[CheckResult]:
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def __add__(self, other: 'VerifyReport') -> 'VerifyReport':
        return VerifyReport(self.results + tuple(other))

    @property
    def passed(self) -> bool:
        return not any(r.status.is_failure for r in self.results)

    def failures(self) -> tp.Tuple[CheckResult, ...]:
        return tuple(r for r in self.results if r.status.is_failure)

    def counts(self) -> tp.Dict[str, int]:
        post = {status.value: 0 for status in CheckStatus}
        for r in self.results:
            post[r.status.value] += 1
        return post

    def to_dict(self) -> tp.Dict[str, tp.Any]:
        return {
                'passed': self.passed,
                'counts': self.counts(),
                'results': [r.to_dict() for r in self.results],
                }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for r in self.results:
            lines.append('{:<18} {}: {}'.format(r.status.value.upper(), r.name, r.detail))
            for c in r.counterexamples[:5]:
                lines.append('    ' + json.dumps(c, ensure_ascii=False))
        summary = ', '.join('{} {}'.format(v, k) for k, v in self.counts().items() if v)
        lines.append('{}: {}'.format('PASS' if self.passed else 'FAIL', summary or 'no checks'))
        return '\n'.join(lines)
