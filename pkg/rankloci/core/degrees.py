'''
Degrees d_{n,r,S} of projections of the rank locus of n × n matrices of rank at most r from the span of the entries S, evaluated as ∫_{G(n-r,n)} c(S∨)^n (1 - Σ_S), together with the closed forms available for special S.
'''
import typing as tp
import logging
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import numpy as np

from rankloci.core.util import binomial
from rankloci.core.util import fraction_to_int
from rankloci.core.util import object_array
from rankloci.core.util import immutable_filter
from rankloci.core.util import IntegerSequence
from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.chow import special_s
from rankloci.core.chow import special_q
from rankloci.core.chow import total_s
from rankloci.core.chow import total_s_power
from rankloci.core.chow import integral_product
from rankloci.core.chow import deg_sigma
from rankloci.core.chow import mul
from rankloci.core.classes import one_minus_sigma_blocks
from rankloci.core.classes import sigma_col
from rankloci.core.patterns import Pattern
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import ShapeKind
from rankloci.core.patterns import shapes_of
from rankloci.core.config import EngineConfig
from rankloci.core.config import ConfigActive
from rankloci.core.report import CheckResult
from rankloci.core.report import CheckStatus
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorInternalConsistency


logger = logging.getLogger(__name__)

ShapesType = tp.Sequence[BlockShape]

#-------------------------------------------------------------------------------
class DegreeTable:
    '''
    Degrees d_{n,r,S} for r = 1..n, stored as an immutable object array of Python ints.
    '''
    __slots__ = ('n', 'pattern', 'label', '_ranks', '_values')

    def __init__(self,
            n: int,
            values: tp.Iterable[int],
            *,
            pattern: tp.Optional[Pattern] = None,
            label: str = '',
            ) -> None:
        self.n = n
        self.pattern = pattern
        self.label = label
        self._values = object_array(int(v) for v in values)
        if len(self._values) != n:
            raise ErrorPrecondition('a degree table needs one value per rank', n, len(self._values))
        for r, v in zip(range(1, n + 1), self._values):
            if v < 0:
                raise ErrorInternalConsistency('negative degree', n, r, v)
        self._ranks = immutable_filter(np.arange(1, n + 1))

    @property
    def ranks(self) -> np.ndarray:
        return self._ranks

    @property
    def values(self) -> np.ndarray:
        return self._values

    def __getitem__(self, r: int) -> int:
        if not 1 <= r <= self.n:
            raise KeyError(r)
        return self._values[r - 1]

    def __len__(self) -> int:
        return self.n

    def __iter__(self) -> tp.Iterator[int]:
        return iter(self._values.tolist())

    def items(self) -> tp.Iterator[tp.Tuple[int, int]]:
        return zip(self._ranks.tolist(), self._values.tolist())

    def to_list(self) -> tp.List[int]:
        return self._values.tolist()

    def __eq__(self, other: tp.Any) -> bool:
        if isinstance(other, DegreeTable):
            return self.n == other.n and self.to_list() == other.to_list()
        if isinstance(other, (list, tuple)):
            return self.to_list() == list(other)
        return NotImplemented

    def __repr__(self) -> str:
        label = ' ' + self.label if self.label else ''
        return '<DegreeTable n={}{} {}>'.format(self.n, label, self.to_list())


#-------------------------------------------------------------------------------
# helpers

def _context(n: int, r: int) -> GrassmannContext:
    if not 0 <= r <= n:
        raise ErrorPrecondition('rank r must satisfy 0 <= r <= n', n, r)
    return GrassmannContext.from_rank(n, r)

def partial_total_s(ctx: GrassmannContext, top: int) -> ChowElement:
    '''c_0 + c_1 + ... + c_top of S∨; zero when top < 0.
    '''
    post = ChowElement.zero(ctx)
    for i in range(0, min(top, ctx.k) + 1):
        post = post + special_s(ctx, i)
    return post

def _product(ctx: GrassmannContext, factors: tp.Iterable[ChowElement]) -> ChowElement:
    post = ChowElement.unit(ctx)
    for factor in factors:
        post = mul(ctx, post, factor)
        if not post:
            break
    return post

def _checked(value: int, *context: tp.Any) -> int:
    if value < 0:
        raise ErrorInternalConsistency('negative degree', value, *context)
    return value

#-------------------------------------------------------------------------------
# master formula

def degree_from_blocks(ctx: GrassmannContext,
        shapes: ShapesType,
        *,
        config: tp.Optional[EngineConfig] = None,
        ) -> int:
    '''
    d = ∫ c(S∨)^n (1 - Σ_S) with Σ_S assembled block by block.
    '''
    config = config or ConfigActive.get()
    factor = one_minus_sigma_blocks(ctx, shapes)
    value = integral_product(ctx, total_s_power(ctx, ctx.n), factor)
    value = _checked(value, ctx, tuple(str(s) for s in shapes))
    if config.verify:
        closed = closed_form_for_shapes(ctx.n, ctx.r, shapes)
        if closed is not None and closed != value:
            raise ErrorInternalConsistency('closed form disagrees with the block integral',
                    ctx, tuple(str(s) for s in shapes), value, closed)
    return value

def closed_form_for_shapes(n: int, r: int, shapes: ShapesType) -> tp.Optional[int]:
    '''
    Evaluate the dedicated formula for rows only, rows with columns, or corners only; None when none applies.
    '''
    if not shapes:
        return deg_sigma(n, n - r)
    kinds = {s.kind for s in shapes}
    if kinds == {ShapeKind.CORNER}:
        if 2 * len(shapes) > n:
            return None
        return d_corners(n, r, len(shapes))
    if kinds <= {ShapeKind.ROW, ShapeKind.COL}:
        rows = [s.size for s in shapes if s.kind is ShapeKind.ROW]
        cols = [s.size for s in shapes if s.kind is ShapeKind.COL]
        if len(rows) > n:
            return None
        if not cols:
            return d_rows(n, r, rows)
        return d_mix(n, r, rows, cols)
    return None

def degree_for_pattern(n: int,
        r: int,
        pattern: Pattern,
        *,
        config: tp.Optional[EngineConfig] = None,
        ) -> int:
    pattern.validate(n)
    return degree_from_blocks(_context(n, r), shapes_of(pattern), config=config)

def degree_table(n: int,
        pattern: Pattern,
        *,
        config: tp.Optional[EngineConfig] = None,
        label: str = '',
        ) -> DegreeTable:
    '''
    Degrees for r = 1..n; with more than one configured worker, ranks are evaluated on a thread pool.
    '''
    config = config or ConfigActive.get()
    pattern.validate(n)
    shapes = shapes_of(pattern)

    def func(r: int) -> int:
        logger.debug('evaluating n=%d r=%d %s', n, r, ', '.join(str(s) for s in shapes))
        return degree_from_blocks(_context(n, r), shapes, config=config)

    ranks = range(1, n + 1)
    if config.use_threads:
        with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
            values = list(executor.map(func, ranks))
    else:
        values = [func(r) for r in ranks]
    return DegreeTable(n, values, pattern=pattern, label=label)

#-------------------------------------------------------------------------------
# closed forms

def d_onerow(n: int, r: int, length: int) -> int:
    '''
    ℓ entries in one row: ∫ c^{n-1} (c_0 + ... + c_{k-ℓ}).
    '''
    if length < 0:
        raise ErrorPrecondition('row length must be nonnegative', length)
    ctx = _context(n, r)
    if n == 0:
        return 1
    value = integral_product(ctx,
            total_s_power(ctx, n - 1),
            partial_total_s(ctx, ctx.k - length))
    return _checked(value, 'onerow', n, r, length)

def d_onerow_closed(n: int, r: int, length: int) -> int:
    '''
    Binomial expression for the one-row degree, valid for ℓ <= k.
    '''
    k = n - r
    if not 0 <= r <= n:
        raise ErrorPrecondition('rank r must satisfy 0 <= r <= n', n, r)
    if not 0 <= length <= k:
        raise ErrorPrecondition('closed form requires 0 <= ℓ <= n - r', n, r, length)
    lead = Fraction(1)
    for j in range(k):
        lead *= Fraction(binomial(n + j, k), binomial(k + j, k))
    scale = Fraction(1)
    for j in range(k):
        scale *= Fraction(binomial(n + j, k + 1), binomial(k + 1 + j, k + 1))
    total = Fraction(0)
    for i in range(n - k):
        sign = -1 if i % 2 else 1
        total += sign * binomial(length - 1 + k + i, length - 1) * Fraction(
                binomial(n - k - 1, i) * binomial(i + k - 1, i),
                binomial(2 * k + i, i))
    return fraction_to_int(lead - scale * total)

def d_onecol(n: int, r: int, length: int) -> int:
    '''
    m entries in one column: ∫ c^n (1 - Σ_col).
    '''
    if length < 1:
        raise ErrorPrecondition('column length must be at least 1', length)
    ctx = _context(n, r)
    factor = 1 - sigma_col(ctx, length).value
    return _checked(integral_product(ctx, total_s_power(ctx, n), factor),
            'onecol', n, r, length)

def _row_factors(ctx: GrassmannContext, lengths: IntegerSequence) -> tp.List[ChowElement]:
    return [partial_total_s(ctx, ctx.k - length) for length in lengths]

def d_rows(n: int, r: int, lengths: IntegerSequence) -> int:
    '''
    Rows sharing no column: ∫ c^{n-a} Π_i (c_0 + ... + c_{k-ℓ_i}) for a row lengths.
    '''
    lengths = list(lengths)
    if len(lengths) > n:
        raise ErrorPrecondition('more row lengths than rows', n, len(lengths))
    if any(length < 0 for length in lengths):
        raise ErrorPrecondition('row lengths must be nonnegative', lengths)
    ctx = _context(n, r)
    if any(length > ctx.k for length in lengths):
        return 0
    value = integral_product(ctx,
            total_s_power(ctx, n - len(lengths)),
            _product(ctx, _row_factors(ctx, lengths)))
    return _checked(value, 'rows', n, r, lengths)

def d_diag(n: int, r: int, s: int) -> int:
    '''
    s entries on the diagonal: Σ_j C(s,j) (-1)^j deg σ_{n-j, r-j}.
    '''
    if not 0 <= s <= n:
        raise ErrorPrecondition('require 0 <= s <= n', n, s)
    if not 0 <= r <= n:
        raise ErrorPrecondition('rank r must satisfy 0 <= r <= n', n, r)
    k = n - r
    value = 0
    for j in range(s + 1):
        if n - j < k:
            continue
        sign = -1 if j % 2 else 1
        value += sign * binomial(s, j) * deg_sigma(n - j, k)
    return _checked(value, 'diag', n, r, s)

def d_mix(n: int,
        r: int,
        row_lengths: IntegerSequence,
        col_lengths: IntegerSequence,
        ) -> int:
    '''
    Row blocks and column blocks: ∫ c^{n-a} Π_rows (c_0 + ... + c_{k-ℓ_j}) Π_cols (1 - Σ_col(m_j)).
    '''
    row_lengths = list(row_lengths)
    col_lengths = list(col_lengths)
    if len(row_lengths) > n:
        raise ErrorPrecondition('more row lengths than rows', n, len(row_lengths))
    if any(m < 1 for m in col_lengths):
        raise ErrorPrecondition('column lengths must be at least 1', col_lengths)
    ctx = _context(n, r)
    factors = _row_factors(ctx, row_lengths)
    factors.extend(1 - sigma_col(ctx, m).value for m in col_lengths)
    value = integral_product(ctx,
            total_s_power(ctx, n - len(row_lengths)),
            _product(ctx, factors))
    return _checked(value, 'mix', n, r, row_lengths, col_lengths)

def corner_factor(ctx: GrassmannContext) -> ChowElement:
    '''c² - (k c_k + c_{k-1}) c - (c_k² - Σ_i i c_i c_k), the per-corner factor.
    '''
    k = ctx.k
    c = total_s(ctx)
    c_k = special_s(ctx, k)
    linear = c_k.scale(k) + special_s(ctx, k - 1)
    weighted = ChowElement.zero(ctx)
    for i in range(1, k + 1):
        weighted = weighted + special_s(ctx, i).scale(i)
    return mul(ctx, c, c) - mul(ctx, linear, c) - mul(ctx, c_k, c_k - weighted)

def d_corners(n: int, r: int, count: int) -> int:
    '''
    g corners with no shared rows or columns: ∫ c^{n-2g} F^g, with F from corner_factor.
    '''
    if count < 0:
        raise ErrorPrecondition('corner count must be nonnegative', count)
    if 2 * count > n:
        raise ErrorPrecondition('corners do not fit: 2g > n', n, count)
    ctx = _context(n, r)
    value = integral_product(ctx,
            total_s_power(ctx, n - 2 * count),
            corner_factor(ctx) ** count)
    return _checked(value, 'corners', n, r, count)

def rank_one_multiplicity(n: int, r: int) -> int:
    '''Multiplicity of the rank locus at a matrix of rank one: deg σ_{n-1, r-1}.
    '''
    if not 1 <= r <= n:
        raise ErrorPrecondition('rank r must satisfy 1 <= r <= n', n, r)
    return deg_sigma(n - 1, n - r)

def d_full_row(n: int, r: int) -> int:
    '''d_{n,r|n-r} = Π_{i=0}^{k-2} C(n+i,k)/C(k+i,k).
    '''
    if not 0 <= r <= n:
        raise ErrorPrecondition('rank r must satisfy 0 <= r <= n', n, r)
    k = n - r
    value = Fraction(1)
    for i in range(k - 1):
        value *= Fraction(binomial(n + i, k), binomial(k + i, k))
    return fraction_to_int(value)

#-------------------------------------------------------------------------------
# identities

def schubc_sides(k: int, n: int, i: int) -> tp.Tuple[int, Fraction]:
    '''
    Both sides of ∫_{G(k,n-1)} c(S∨)^n c_i(Q') = Π_j C(n+j,k+1)/C(k+1+j,k+1) · C(n-k-1,i) C(i+k-1,i) / C(2k+i,i).
    '''
    ctx = GrassmannContext(k, n - 1)
    # c_i(Q') = (-1)^i c_i(Q'∨)
    quotient = special_q(ctx, i).scale(-1 if i % 2 else 1)
    engine = integral_product(ctx, total_s_power(ctx, n), quotient)
    value = Fraction(1)
    for j in range(k):
        value *= Fraction(binomial(n + j, k + 1), binomial(k + 1 + j, k + 1))
    value *= Fraction(binomial(n - k - 1, i) * binomial(i + k - 1, i), binomial(2 * k + i, i))
    return engine, value

def schubc_check(max_k: int = 3, max_n: int = 7) -> tp.Tuple[CheckResult, ...]:
    counterexamples = []
    count = 0
    for k in range(1, max_k + 1):
        for n in range(k + 1, max_n + 1):
            for i in range(n - k):
                count += 1
                engine, closed = schubc_sides(k, n, i)
                if engine != closed:
                    counterexamples.append({'k': k, 'n': n, 'i': i,
                            'engine': str(engine), 'closed': str(closed)})
    return (CheckResult.from_counterexamples('schubert-binomial-identity',
            counterexamples, count, failure=CheckStatus.PAPER_DISCREPANCY),)

def observed_checks(max_corner_n: int = 9) -> tp.Tuple[CheckResult, ...]:
    '''
    Regularities seen in computed tables but not proven; reported, never counted as failures.
    '''
    corner = Pattern.from_shapes((BlockShape.corner(),))
    seen = []
    for n in range(2, max_corner_n + 1):
        d = degree_for_pattern(n, n - 2, corner)
        if d != n - 1:
            seen.append({'n': n, 'd': str(d)})
    held = 'held' if not seen else 'did not hold'
    results = [CheckResult('corner-rank-n-2-is-n-1', CheckStatus.OBSERVED,
            '{} for 2 <= n <= {}'.format(held, max_corner_n), tuple(seen))]

    seen = []
    for k in range(1, 4):
        s = k * k
        values = {n: d_diag(n, n - k, s) for n in (s, s + 2)}
        if len(set(values.values())) != 1:
            seen.append({'k': k, **{str(n): str(v) for n, v in values.items()}})
    held = 'held' if not seen else 'did not hold'
    results.append(CheckResult('full-diagonal-independent-of-n', CheckStatus.OBSERVED,
            '{} for k <= 3 at n = k² and k² + 2'.format(held), tuple(seen)))
    return tuple(results)
