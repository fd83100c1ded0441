'''
An independent evaluation path for Grassmannian integrals: formulas are kept as polynomials in the symbols s_i = c_i(S∨) and q_j = c_j(Q∨), and integrated by substituting symmetric polynomials in k variables and extracting one coefficient against the Vandermonde product. Nothing here calls the Schubert-basis multiplication; it is a test instrument and deliberately unoptimized.
'''
import typing as tp
import logging
from functools import lru_cache
from itertools import combinations
from itertools import combinations_with_replacement

from sympy import ZZ
from sympy.polys.rings import PolyRing
from sympy.polys.rings import PolyElement

from rankloci.core.util import binomial
from rankloci.core.util import product
from rankloci.core import chow
from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.patterns import Pattern
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import ShapeKind
from rankloci.core.patterns import shapes_of
from rankloci.core import degrees
from rankloci.core.degrees import degree_for_pattern
from rankloci.core.degrees import degree_from_blocks
from rankloci.core.report import CheckResult
from rankloci.core.report import CheckStatus
from rankloci.core.report import VerifyReport
from rankloci.core.exception import ErrorUnsupportedShape
from rankloci.core.exception import ErrorPrecondition


logger = logging.getLogger(__name__)

Row = BlockShape.row
Col = BlockShape.col
Corner = BlockShape.corner
Square = BlockShape.square

#-------------------------------------------------------------------------------
# symbol rings

@lru_cache(maxsize=None)
def _symbol_ring(k: int, width: int) -> tp.Tuple[PolyRing, tp.Tuple[int, ...]]:
    '''
    Ring over s_1..s_k, q_1..q_width with the grading weight of every generator. At least one generator of each kind is kept so the ring is never empty; generators beyond the ranks are never populated.
    '''
    s_count = max(k, 1)
    q_count = max(width, 1)
    names = (['s{}'.format(i) for i in range(1, s_count + 1)]
            + ['q{}'.format(j) for j in range(1, q_count + 1)])
    weights = tuple(range(1, s_count + 1)) + tuple(range(1, q_count + 1))
    return PolyRing(names, ZZ), weights

@lru_cache(maxsize=None)
def _variable_ring(k: int) -> PolyRing:
    return PolyRing(['x{}'.format(i) for i in range(1, k + 1)], ZZ)


class SpecialPolynomial:
    '''
    A polynomial with integer coefficients in the special classes of one Grassmannian; terms of weighted degree above k(n-k) are dropped as they are formed.
    '''
    __slots__ = ('context', 'poly')

    def __init__(self, context: GrassmannContext, poly: PolyElement) -> None:
        self.context = context
        self.poly = _truncate(context, poly)

    @staticmethod
    def ring(context: GrassmannContext) -> PolyRing:
        return _symbol_ring(context.k, context.width)[0]

    @classmethod
    def from_int(cls, context: GrassmannContext, value: int) -> 'SpecialPolynomial':
        return cls(context, cls.ring(context)(value))

    @classmethod
    def s(cls, context: GrassmannContext, i: int) -> 'SpecialPolynomial':
        if i < 0 or i > context.k:
            return cls.from_int(context, 0)
        if i == 0:
            return cls.from_int(context, 1)
        return cls(context, cls.ring(context).gens[i - 1])

    @classmethod
    def q(cls, context: GrassmannContext, j: int) -> 'SpecialPolynomial':
        if j < 0 or j > context.width:
            return cls.from_int(context, 0)
        if j == 0:
            return cls.from_int(context, 1)
        offset = max(context.k, 1)
        return cls(context, cls.ring(context).gens[offset + j - 1])

    @classmethod
    def total_s(cls, context: GrassmannContext) -> 'SpecialPolynomial':
        return cls.sum(context, (cls.s(context, i) for i in range(context.k + 1)))

    @classmethod
    def total_q(cls, context: GrassmannContext) -> 'SpecialPolynomial':
        return cls.sum(context, (cls.q(context, j) for j in range(context.width + 1)))

    @classmethod
    def sum(cls,
            context: GrassmannContext,
            values: tp.Iterable['SpecialPolynomial'],
            ) -> 'SpecialPolynomial':
        post = cls.ring(context).zero
        for v in values:
            post += v.poly
        return cls(context, post)

    #---------------------------------------------------------------------------
    def _other(self, other: tp.Any) -> PolyElement:
        if isinstance(other, SpecialPolynomial):
            return other.poly
        return self.ring(self.context)(other)

    def __add__(self, other: tp.Any) -> 'SpecialPolynomial':
        return SpecialPolynomial(self.context, self.poly + self._other(other))

    __radd__ = __add__

    def __sub__(self, other: tp.Any) -> 'SpecialPolynomial':
        return SpecialPolynomial(self.context, self.poly - self._other(other))

    def __rsub__(self, other: tp.Any) -> 'SpecialPolynomial':
        return SpecialPolynomial(self.context, self._other(other) - self.poly)

    def __neg__(self) -> 'SpecialPolynomial':
        return SpecialPolynomial(self.context, -self.poly)

    def __mul__(self, other: tp.Any) -> 'SpecialPolynomial':
        return SpecialPolynomial(self.context, self.poly * self._other(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'SpecialPolynomial':
        post = SpecialPolynomial.from_int(self.context, 1)
        for _ in range(exponent):
            post = post * self
        return post

    def __eq__(self, other: tp.Any) -> bool:
        if isinstance(other, SpecialPolynomial):
            return self.context == other.context and self.poly == other.poly
        return self.poly == self._other(other)

    def __hash__(self) -> int:
        return hash((self.context, frozenset(self.poly.items())))

    def __repr__(self) -> str:
        return '<SpecialPolynomial G({},{}) {}>'.format(
                self.context.k, self.context.n, self.poly.as_expr())

    @property
    def constant(self) -> int:
        ring = self.ring(self.context)
        return int(self.poly.get(ring.zero_monom, 0))

    def to_chow(self) -> ChowElement:
        '''The class this polynomial represents, built with the Schubert-basis engine.
        '''
        ctx = self.context
        ring, _ = _symbol_ring(ctx.k, ctx.width)
        offset = max(ctx.k, 1)
        post = ChowElement.zero(ctx)
        for monom, coef in self.poly.items():
            term = ChowElement.unit(ctx, int(coef))
            for idx, e in enumerate(monom):
                if not e:
                    continue
                if idx < offset:
                    factor = chow.special_s(ctx, idx + 1)
                else:
                    factor = chow.special_q(ctx, idx - offset + 1)
                term = term * factor ** e
            post = post + term
        return post


def _weight(weights: tp.Tuple[int, ...], monom: tp.Tuple[int, ...]) -> int:
    return sum(w * e for w, e in zip(weights, monom))

def _truncate(context: GrassmannContext, poly: PolyElement) -> PolyElement:
    ring, weights = _symbol_ring(context.k, context.width)
    dim = context.dim
    return ring.from_dict({m: c for m, c in poly.items() if _weight(weights, m) <= dim})

#-------------------------------------------------------------------------------
# integration

@lru_cache(maxsize=None)
def _substitutions(k: int, width: int) -> tp.Tuple[PolyElement, ...]:
    '''s_i -> e_i(x), q_j -> (-1)^j h_j(x), in symbol-ring generator order.
    '''
    ring = _variable_ring(k)
    xs = ring.gens
    post = []
    for i in range(1, max(k, 1) + 1):
        post.append(sum((product(c, ring.one) for c in combinations(xs, i)), ring.zero))
    for j in range(1, max(width, 1) + 1):
        h = sum((product(c, ring.one) for c in combinations_with_replacement(xs, j)), ring.zero)
        post.append(-h if j % 2 else h)
    return tuple(post)

@lru_cache(maxsize=None)
def _vandermonde(k: int) -> PolyElement:
    ring = _variable_ring(k)
    xs = ring.gens
    post = ring.one
    for i, j in combinations(range(k), 2):
        post *= xs[i] - xs[j]
    return post

def oracle_integral(ctx: GrassmannContext, p: SpecialPolynomial) -> int:
    '''
    ∫ p over G(k, n): the coefficient of x_1^{n-1} x_2^{n-2} ... x_k^{n-k} in p(e, ±h) · Π_{i<j} (x_i - x_j).
    '''
    if p.context != ctx:
        raise ErrorPrecondition('polynomial from a different Grassmannian', p.context, ctx)
    if ctx.k == 0:
        return p.constant
    _, weights = _symbol_ring(ctx.k, ctx.width)
    ring = _variable_ring(ctx.k)
    subs = _substitutions(ctx.k, ctx.width)
    powers: tp.Dict[tp.Tuple[int, int], PolyElement] = {}

    def power(idx: int, e: int) -> PolyElement:
        key = (idx, e)
        if key not in powers:
            powers[key] = subs[idx] ** e
        return powers[key]

    total = ring.zero
    for monom, coef in p.poly.items():
        # only the top degree can reach the target monomial
        if _weight(weights, monom) != ctx.dim:
            continue
        term = ring(coef)
        for idx, e in enumerate(monom):
            if e:
                term *= power(idx, e)
        total += term

    total *= _vandermonde(ctx.k)
    target = tuple(ctx.n - i for i in range(1, ctx.k + 1))
    return int(total.get(target, 0))

#-------------------------------------------------------------------------------
# Grassmann classes, transcribed again over the symbols

def oracle_sigma(ctx: GrassmannContext, shape: BlockShape) -> SpecialPolynomial:
    SP = SpecialPolynomial
    k, r = ctx.k, ctx.r
    s = lambda i: SP.s(ctx, i)
    q = lambda j: SP.q(ctx, j)
    # c(S∨)^{-1} = c(Q∨)
    c_inv = SP.total_q(ctx)

    if shape.kind is ShapeKind.ROW:
        top = SP.sum(ctx, (s(i) for i in range(k - shape.size + 1, k + 1)))
        return c_inv * top

    if shape.kind is ShapeKind.COL:
        m = shape.size
        return SP.sum(ctx, (q(i) * binomial(m - 1 + k + i, m - 1) for i in range(r + 1))) * s(k)

    if shape.kind is ShapeKind.CORNER:
        first = (s(k) * k + s(k - 1)) * c_inv
        second = (s(k) * s(k) - SP.sum(ctx, (s(i) * s(k) * i for i in range(k + 1)))) * c_inv * c_inv
        return first + second

    if shape.kind is ShapeKind.SQUARE:
        c_k_sq = s(k) * s(k)
        post = SP.from_int(ctx, 0)
        for i in range(r + 1):
            for j in range(r + 1):
                post = post - q(i) * q(j) * c_k_sq * binomial(2 * k + i + j + 3, 3)
        for j in range(r + 1):
            post = post + q(j) * (s(k) * 2 + s(k - 1) * (k + j))
        for i in range(k + 1):
            for u in range(r + 1):
                for v in range(r + 1):
                    for w in range(r + 1):
                        coef = (2 * binomial(i, 3)
                                - 2 * (k - u + v + w + 1) * binomial(i, 2)
                                + (k - u + v + w + 2) * (2 * k + v + w + 1) * binomial(i, 1))
                        if coef:
                            post = post + q(u) * q(v) * q(w) * s(k - i) * c_k_sq * coef
        return post

    raise ErrorUnsupportedShape('unsupported shape {}'.format(shape), ())

def oracle_degree(n: int, r: int, shapes: tp.Sequence[BlockShape]) -> int:
    '''∫ c(S∨)^n Π (1 - Σ_block) through the oracle.
    '''
    if not 0 <= r <= n:
        raise ErrorPrecondition('rank r must satisfy 0 <= r <= n', n, r)
    ctx = GrassmannContext.from_rank(n, r)
    p = SpecialPolynomial.total_s(ctx) ** n
    for shape in shapes:
        p = p * (1 - oracle_sigma(ctx, shape))
    return oracle_integral(ctx, p)

#-------------------------------------------------------------------------------
# verification suite

def pattern_corpus(max_n: tp.Optional[int] = None) -> tp.Tuple[tp.Tuple[str, Pattern], ...]:
    '''
    Labelled patterns covering every supported shape and several combinations; the last one is unsupported. Patterns wider than max_n are left out.
    '''
    F = Pattern.from_shapes
    corpus = [
            ('empty', Pattern()),
            ('row-1', F((Row(1),))),
            ('row-2', F((Row(2),))),
            ('row-3', F((Row(3),))),
            ('row-4', F((Row(4),))),
            ('col-2', F((Col(2),))),
            ('col-3', F((Col(3),))),
            ('col-4', F((Col(4),))),
            ('corner-a', Pattern(((1, 1), (1, 2), (2, 1)))),
            ('corner-b', Pattern(((1, 1), (1, 2), (2, 2)))),
            ('corner-c', Pattern(((1, 1), (2, 1), (2, 2)))),
            ('corner-d', Pattern(((1, 2), (2, 1), (2, 2)))),
            ('corner-offset', Pattern(((2, 4), (3, 4), (3, 5)))),
            ('square', F((Square(),))),
            ('rows-1-1', F((Row(1), Row(1)))),
            ('rows-1-1-1', F((Row(1),) * 3)),
            ('rows-1-1-1-1', F((Row(1),) * 4)),
            ('diagonal-5', F((Row(1),) * 5)),
            ('rows-2-1', F((Row(2), Row(1)))),
            ('rows-2-2', F((Row(2), Row(2)))),
            ('rows-3-1', F((Row(3), Row(1)))),
            ('rows-2-1-1', F((Row(2), Row(1), Row(1)))),
            ('cols-2-2', F((Col(2), Col(2)))),
            ('row-1-col-2', F((Row(1), Col(2)))),
            ('row-2-col-2', F((Row(2), Col(2)))),
            ('row-2-col-3', F((Row(2), Col(3)))),
            ('row-3-col-2', F((Row(3), Col(2)))),
            ('corner-row-1', F((Corner(), Row(1)))),
            ('corner-row-2', F((Corner(), Row(2)))),
            ('corner-col-2', F((Corner(), Col(2)))),
            ('corner-row-1-row-1', F((Corner(), Row(1), Row(1)))),
            ('corners-2', F((Corner(), Corner()))),
            ('square-row-1', F((Square(), Row(1)))),
            ('square-col-2', F((Square(), Col(2)))),
            ('square-corner', F((Square(), Corner()))),
            ('squares-2', F((Square(), Square()))),
            ('scattered-3', Pattern(((1, 3), (2, 1), (3, 2)))),
            ('split-row', Pattern(((1, 1), (1, 3), (2, 2)))),
            ('zigzag', Pattern(((1, 1), (1, 2), (2, 2), (2, 3)))),
            ]
    if max_n is None:
        return tuple(corpus)
    return tuple((label, p) for label, p in corpus if p.extent <= max_n)

def _check_whitney(max_n: int) -> CheckResult:
    found = []
    count = 0
    for n in range(0, max_n + 1):
        for k in range(0, n + 1):
            ctx = GrassmannContext(k, n)
            count += 1
            product_value = chow.mul(ctx, chow.total_s(ctx), chow.total_q(ctx))
            if product_value != 1:
                found.append({'k': k, 'n': n, 'product': product_value.to_text()})
    return CheckResult.from_counterexamples('whitney-identity', found, count)

def _check_degree_consistency(max_n: int) -> CheckResult:
    found = []
    count = 0
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            ctx = GrassmannContext(k, n)
            count += 1
            engine = chow.integral(ctx, chow.total_s(ctx) ** n)
            closed = chow.deg_sigma(n, k)
            if engine != closed:
                found.append({'k': k, 'n': n, 'engine': str(engine), 'closed': str(closed)})
    return CheckResult.from_counterexamples('degree-of-rank-locus', found, count)

def _check_oracle_monomials(max_n: int) -> CheckResult:
    found = []
    count = 0
    for n in range(1, min(max_n, 6) + 1):
        for k in range(1, min(n, 3) + 1):
            ctx = GrassmannContext(k, n)
            s_parts = tuple(range(1, k + 1))
            q_parts = tuple(range(1, ctx.width + 1))
            for s_count in range(0, ctx.dim + 1):
                for s_mono in combinations_with_replacement(s_parts, s_count):
                    rest = ctx.dim - sum(s_mono)
                    if rest < 0:
                        continue
                    for q_count in range(0, rest + 1):
                        for q_mono in combinations_with_replacement(q_parts, q_count):
                            if sum(q_mono) != rest:
                                continue
                            p = SpecialPolynomial.from_int(ctx, 1)
                            for i in s_mono:
                                p = p * SpecialPolynomial.s(ctx, i)
                            for j in q_mono:
                                p = p * SpecialPolynomial.q(ctx, j)
                            count += 1
                            engine = chow.integral(ctx, p.to_chow())
                            oracle = oracle_integral(ctx, p)
                            if engine != oracle:
                                found.append({'k': k, 'n': n, 's': list(s_mono),
                                        'q': list(q_mono), 'engine': str(engine),
                                        'oracle': str(oracle)})
    return CheckResult.from_counterexamples('oracle-monomial-integrals', found, count)

def _check_oracle_degrees(max_n: int) -> tp.List[CheckResult]:
    post = []
    found = []
    count = 0
    for label, pattern in pattern_corpus(max_n):
        try:
            shapes = shapes_of(pattern)
        except ErrorUnsupportedShape as e:
            post.append(CheckResult('oracle-degree:' + label, CheckStatus.SKIPPED,
                    'unsupported shape: {}'.format(e)))
            continue
        for n in range(max(pattern.extent, 1), max_n + 1):
            for r in range(1, n + 1):
                count += 1
                engine = degree_from_blocks(GrassmannContext.from_rank(n, r), shapes)
                oracle = oracle_degree(n, r, shapes)
                if engine != oracle:
                    found.append({'pattern': label, 'n': n, 'r': r,
                            'engine': str(engine), 'oracle': str(oracle)})
    post.insert(0, CheckResult.from_counterexamples('oracle-degrees', found, count))
    return post

def _check_empty_pattern(max_n: int) -> CheckResult:
    found = []
    count = 0
    for n in range(1, max_n + 1):
        for r in range(1, n + 1):
            count += 1
            engine = degree_for_pattern(n, r, Pattern())
            if engine != chow.deg_sigma(n, n - r):
                found.append({'n': n, 'r': r, 'engine': str(engine)})
    return CheckResult.from_counterexamples('empty-pattern', found, count)

def _check_pairs(name: str,
        cases: tp.Iterable[tp.Tuple[tp.Dict[str, tp.Any], tp.Callable[[], int], tp.Callable[[], int]]],
        ) -> CheckResult:
    found = []
    count = 0
    for label, left, right in cases:
        count += 1
        a, b = left(), right()
        if a != b:
            found.append(dict(label, left=str(a), right=str(b)))
    return CheckResult.from_counterexamples(name, found, count)

def _ranks(max_n: int, n_min: int = 1) -> tp.Iterator[tp.Tuple[int, int]]:
    for n in range(n_min, max_n + 1):
        for r in range(1, n + 1):
            yield n, r

def _closed_form_checks(max_n: int) -> tp.List[CheckResult]:
    D = degrees
    post = []
    post.append(_check_pairs('one-row-closed-form', (
            ({'n': n, 'r': r, 'l': l},
                    lambda n=n, r=r, l=l: D.d_onerow(n, r, l),
                    lambda n=n, r=r, l=l: D.d_onerow_closed(n, r, l))
            for n, r in _ranks(max_n, 2) for l in range(0, n - r + 1))))
    post.append(_check_pairs('row-column-duality', (
            ({'n': n, 'r': r, 'l': l},
                    lambda n=n, r=r, l=l: D.d_onerow(n, r, l),
                    lambda n=n, r=r, l=l: D.d_onecol(n, r, l))
            for n, r in _ranks(max_n) for l in range(1, n + 1))))
    post.append(_check_pairs('diagonal-closed-form', (
            ({'n': n, 'r': r, 's': s},
                    lambda n=n, r=r, s=s: D.d_diag(n, r, s),
                    lambda n=n, r=r, s=s: D.d_rows(n, r, [1] * s))
            for n, r in _ranks(max_n) for s in range(0, n + 1))))

    mixes = (([1], [2]), ([2], [2]), ([1, 1], [2]), ([], [2, 2]), ([2, 2], [2, 2]), ([2], [3]))
    post.append(_check_pairs('mixed-closed-form', (
            ({'n': n, 'r': r, 'rows': rows, 'cols': cols},
                    lambda n=n, r=r, rows=rows, cols=cols: D.d_mix(n, r, rows, cols),
                    lambda n=n, r=r, rows=rows, cols=cols: degree_for_pattern(n, r,
                            Pattern.from_shapes([Row(l) for l in rows] + [Col(m) for m in cols])))
            for rows, cols in mixes
            for n, r in _ranks(max_n, len(rows) + sum(cols))
            if sum(rows) + len(cols) <= n)))
    post.append(_check_pairs('corners-closed-form', (
            ({'n': n, 'r': r, 'g': g},
                    lambda n=n, r=r, g=g: D.d_corners(n, r, g),
                    lambda n=n, r=r, g=g: degree_from_blocks(
                            GrassmannContext.from_rank(n, r), (Corner(),) * g))
            for n, r in _ranks(max_n) for g in range(0, 4) if 2 * g <= n)))
    post.append(_check_pairs('rank-one-multiplicity', (
            ({'n': n, 'r': r},
                    lambda n=n, r=r: D.d_onerow(n, r, 1),
                    lambda n=n, r=r: chow.deg_sigma(n, n - r) - D.rank_one_multiplicity(n, r))
            for n, r in _ranks(max_n) if r < n)))
    post.append(_check_pairs('full-row', (
            ({'n': n, 'r': r},
                    lambda n=n, r=r: D.d_onerow(n, r, n - r),
                    lambda n=n, r=r: D.d_full_row(n, r))
            for n, r in _ranks(max_n) if r < n)))
    post.append(_check_pairs('vanishing-long-blocks', (
            ({'n': n, 'r': r, 'shape': str(shape)},
                    lambda n=n, r=r, shape=shape: degree_from_blocks(
                            GrassmannContext.from_rank(n, r), (shape,)),
                    lambda: 0)
            for n, r in _ranks(max_n)
            for length in range(n - r + 1, n + 1)
            for shape in (Row(length), Col(length)))))
    return post

def _check_pattern_invariance(max_n: int) -> CheckResult:
    found = []
    count = 0
    for label, pattern in pattern_corpus(max_n):
        try:
            shapes_of(pattern)
        except ErrorUnsupportedShape:
            continue
        for n in range(max(pattern.extent, 1), max_n + 1):
            # permutations of 1..n keep every variant inside the n x n box
            reverse = list(range(n, 0, -1))
            rotate = list(range(2, n + 1)) + [1]
            variants = (pattern.transpose(),
                    pattern.permute(reverse, rotate),
                    pattern.permute(rotate, reverse).transpose())
            for r in range(1, n + 1):
                base = degree_for_pattern(n, r, pattern)
                for variant in variants:
                    count += 1
                    other = degree_for_pattern(n, r, variant)
                    if other != base:
                        found.append({'pattern': label, 'variant': variant.to_cells(),
                                'n': n, 'r': r, 'left': str(base), 'right': str(other)})
    return CheckResult.from_counterexamples('pattern-invariance', found, count)

def cross_check(max_n: int = 5) -> VerifyReport:
    '''
    Run every invariant: engine against oracle, closed forms against the block integral, ring identities, symmetry of degrees, the binomial identity, and observed regularities.
    '''
    results: tp.List[CheckResult] = []
    steps = (
            lambda: [_check_whitney(max_n)],
            lambda: [_check_degree_consistency(max_n)],
            lambda: [_check_oracle_monomials(max_n)],
            lambda: _check_oracle_degrees(max_n),
            lambda: [_check_empty_pattern(max_n)],
            lambda: _closed_form_checks(max_n),
            lambda: [_check_pattern_invariance(max_n)],
            lambda: list(degrees.schubc_check(3, 7)),
            lambda: list(degrees.observed_checks()),
            )
    for step in steps:
        found = step()
        for result in found:
            logger.info('%s %s %s', result.status.value, result.name, result.detail)
        results.extend(found)
    return VerifyReport(results)
