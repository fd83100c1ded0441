import typing as tp
import io
import csv
import json
from enum import Enum
from collections import namedtuple

from rankloci.core.patterns import Pattern
from rankloci.core.degrees import DegreeTable
from rankloci.core.classes import GrassmannClass
from rankloci.core.report import VerifyReport
from rankloci.core.exception import ErrorPrecondition


#-------------------------------------------------------------------------------
class DisplayFormats(str, Enum):
    '''
    Define display output format.
    '''
    TEXT = 'text'
    JSON = 'json'
    CSV = 'csv'


class DocumentKind(str, Enum):
    DEGREE = 'degree'
    TABLE = 'table'
    CLASS = 'class'
    VERIFY = 'verify'


#-------------------------------------------------------------------------------
class DisplayConfig:
    '''
    Storage container for all display settings.
    '''
    __slots__ = (
            'cell_align_left',
            'cell_margin',
            )

    @classmethod
    def from_json(cls, json_str: str) -> 'DisplayConfig':
        args = json.loads(json_str.strip())
        # filter arguments by current slots
        args_valid = {}
        for k in cls.__slots__:
            if k in args:
                args_valid[k] = args[k]
        return cls(**args_valid)

    def __init__(self, *,
            cell_align_left: bool = False,
            cell_margin: int = 2,
            ) -> None:
        if cell_margin < 1:
            raise ErrorPrecondition('cell_margin must be at least 1', cell_margin)
        self.cell_align_left = bool(cell_align_left)
        self.cell_margin = cell_margin

    def __repr__(self) -> str:
        return '<' + self.__class__.__name__ + ' ' + ' '.join(
                '{k}={v}'.format(k=k, v=v) for k, v in self.to_dict().items()) + '>'

    def __eq__(self, other: tp.Any) -> bool:
        if not isinstance(other, DisplayConfig):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def to_dict(self, **kwargs: tp.Any) -> tp.Dict[str, tp.Any]:
        return {k: kwargs.get(k, getattr(self, k)) for k in self.__slots__}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_display_config(self, **kwargs: tp.Any) -> 'DisplayConfig':
        return self.__class__(**self.to_dict(**kwargs))


class DisplayConfigs:
    '''
    Container of common default configs.
    '''
    DEFAULT = DisplayConfig()


#-------------------------------------------------------------------------------
# store the string and whether the cell holds a number
DisplayCell = namedtuple('DisplayCell', ('raw', 'numeric'))

class Display:
    '''
    A Display is a string representation of a table, encoded as a list of rows of DisplayCell, normalized to equal column widths when rendered.
    '''
    __slots__ = ('_rows', '_config')

    @staticmethod
    def to_cell(value: tp.Any) -> DisplayCell:
        numeric = isinstance(value, int) and not isinstance(value, bool)
        return DisplayCell(str(value), numeric)

    @classmethod
    def from_rows(cls,
            rows: tp.Iterable[tp.Iterable[tp.Any]],
            header: tp.Optional[tp.Sequence[str]] = None,
            config: tp.Optional[DisplayConfig] = None,
            ) -> 'Display':
        cells = []
        if header is not None:
            cells.append([DisplayCell(str(h), False) for h in header])
        for row in rows:
            cells.append([cls.to_cell(v) for v in row])
        return cls(cells, config=config)

    def __init__(self,
            rows: tp.List[tp.List[DisplayCell]],
            config: tp.Optional[DisplayConfig] = None,
            ) -> None:
        self._rows = rows
        self._config = config or DisplayConfigs.DEFAULT

    def _widths(self) -> tp.List[int]:
        count = max((len(row) for row in self._rows), default=0)
        widths = [0] * count
        for row in self._rows:
            for idx, cell in enumerate(row):
                widths[idx] = max(widths[idx], len(cell.raw))
        return widths

    def to_rows(self) -> tp.List[str]:
        widths = self._widths()
        margin = ' ' * self._config.cell_margin
        post = []
        for row in self._rows:
            parts = []
            for idx, width in enumerate(widths):
                cell = row[idx] if idx < len(row) else DisplayCell('', False)
                # numbers are always right-aligned
                if cell.numeric or not self._config.cell_align_left:
                    parts.append(cell.raw.rjust(width))
                else:
                    parts.append(cell.raw.ljust(width))
            post.append(margin.join(parts).rstrip())
        return post

    def __str__(self) -> str:
        return '\n'.join(self.to_rows())

    def __repr__(self) -> str:
        return str(self)


#-------------------------------------------------------------------------------
def _pattern_to_json(pattern: Pattern) -> tp.Dict[str, tp.Any]:
    return {'cells': [[r, c] for r, c in pattern.sorted_cells()]}

def _csv(header: tp.Sequence[str], rows: tp.Iterable[tp.Sequence[tp.Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()

def _terminate(text: str) -> str:
    return text if text.endswith('\n') else text + '\n'


class OutputDocument:
    '''
    A rendered command result. Degree and table documents share one JSON schema, with degrees serialized as decimal strings.
    '''
    __slots__ = ('format', 'kind', 'payload')

    @classmethod
    def from_degrees(cls,
            n: int,
            pattern: Pattern,
            degrees: tp.Iterable[tp.Tuple[int, int]],
            *,
            kind: DocumentKind = DocumentKind.TABLE,
            format: DisplayFormats = DisplayFormats.TEXT,
            ) -> 'OutputDocument':
        payload = {
                'n': n,
                'pattern': pattern,
                'degrees': tuple((int(r), int(d)) for r, d in degrees),
                }
        return cls(format, kind, payload)

    @classmethod
    def from_table(cls,
            table: DegreeTable,
            *,
            format: DisplayFormats = DisplayFormats.TEXT,
            ) -> 'OutputDocument':
        pattern = table.pattern if table.pattern is not None else Pattern()
        return cls.from_degrees(table.n, pattern, table.items(), format=format)

    @classmethod
    def from_class(cls,
            n: int,
            r: int,
            pattern: Pattern,
            value: GrassmannClass,
            *,
            format: DisplayFormats = DisplayFormats.TEXT,
            ) -> 'OutputDocument':
        return cls(format, DocumentKind.CLASS,
                {'n': n, 'r': r, 'pattern': pattern, 'class': value})

    @classmethod
    def from_report(cls,
            report: VerifyReport,
            *,
            format: DisplayFormats = DisplayFormats.TEXT,
            ) -> 'OutputDocument':
        return cls(format, DocumentKind.VERIFY, report)

    @classmethod
    def from_json(cls,
            json_str: str,
            *,
            kind: DocumentKind = DocumentKind.TABLE,
            ) -> 'OutputDocument':
        '''Rebuild a degree or table document from its JSON rendering.
        '''
        if kind not in (DocumentKind.DEGREE, DocumentKind.TABLE):
            raise ErrorPrecondition('only degree documents can be read back', kind)
        data = json.loads(json_str)
        pattern = Pattern(tuple(cell) for cell in data['pattern']['cells'])
        degrees = ((entry['r'], int(entry['d'])) for entry in data['degrees'])
        return cls.from_degrees(data['n'], pattern, degrees,
                kind=kind, format=DisplayFormats.JSON)

    def __init__(self,
            format: DisplayFormats,
            kind: DocumentKind,
            payload: tp.Any,
            ) -> None:
        self.format = DisplayFormats(format)
        self.kind = DocumentKind(kind)
        self.payload = payload

    def __repr__(self) -> str:
        return '<OutputDocument {} {}>'.format(self.kind.value, self.format.value)

    def to_format(self, format: DisplayFormats) -> 'OutputDocument':
        return self.__class__(format, self.kind, self.payload)

    #---------------------------------------------------------------------------
    def _render_degrees(self, config: DisplayConfig) -> str:
        payload = self.payload
        if self.format is DisplayFormats.JSON:
            return json.dumps({
                    'n': payload['n'],
                    'pattern': _pattern_to_json(payload['pattern']),
                    'degrees': [{'r': r, 'd': str(d)} for r, d in payload['degrees']],
                    })
        if self.format is DisplayFormats.CSV:
            return _csv(('r', 'd'), payload['degrees'])
        if self.kind is DocumentKind.DEGREE:
            return '\n'.join(str(d) for _, d in payload['degrees'])
        return str(Display.from_rows(payload['degrees'], header=('r', 'd'), config=config))

    def _render_class(self) -> str:
        payload = self.payload
        value: GrassmannClass = payload['class']
        if self.format is DisplayFormats.JSON:
            return json.dumps({
                    'n': payload['n'],
                    'r': payload['r'],
                    'pattern': _pattern_to_json(payload['pattern']),
                    'class': [{'partition': list(p), 'coefficient': str(c)}
                            for p, c in value.value.items()],
                    'text': value.to_text(),
                    }, ensure_ascii=False)
        if self.format is DisplayFormats.CSV:
            return _csv(('partition', 'coefficient'),
                    ((p.to_bracket(), c) for p, c in value.value.items()))
        return value.to_text()

    def _render_report(self) -> str:
        report: VerifyReport = self.payload
        if self.format is DisplayFormats.JSON:
            return report.to_json()
        if self.format is DisplayFormats.CSV:
            return _csv(('name', 'status', 'detail'),
                    ((r.name, r.status.value, r.detail) for r in report))
        return report.to_text()

    def render(self, config: tp.Optional[DisplayConfig] = None) -> str:
        '''Return the document as a newline-terminated string.
        '''
        config = config or DisplayConfigs.DEFAULT
        if self.kind in (DocumentKind.DEGREE, DocumentKind.TABLE):
            text = self._render_degrees(config)
        elif self.kind is DocumentKind.CLASS:
            text = self._render_class()
        else:
            text = self._render_report()
        return _terminate(text)
