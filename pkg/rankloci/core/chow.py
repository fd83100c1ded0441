'''
Exact arithmetic in the Chow ring of the Grassmannian G(k, n) of k-planes in n-space, in the basis of Schubert classes.

Conventions: c_i(S∨) is the Schubert class of the column partition (1^i), c_j(Q∨) is (-1)^j times the class of the row partition (j). Every product is truncated to the k × (n - k) box.
'''
import typing as tp
import logging
from collections import defaultdict
from itertools import combinations
from itertools import combinations_with_replacement
from fractions import Fraction
from functools import lru_cache
from types import MappingProxyType

from rankloci.core.util import PartsType
from rankloci.core.util import EMonomial
from rankloci.core.util import binomial
from rankloci.core.util import fraction_to_int
from rankloci.core.util import is_int
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorContextMismatch
from rankloci.core.exception import ErrorNotInvertible


logger = logging.getLogger(__name__)

SIGMA = 'σ'

#-------------------------------------------------------------------------------
class Partition(tuple):
    '''
    A weakly decreasing sequence of positive integers indexing a Schubert class; the empty partition denotes the unit class.
    '''
    __slots__ = ()

    def __new__(cls, parts: tp.Iterable[int] = ()) -> 'Partition':
        values = []
        for p in parts:
            if not is_int(p):
                raise ErrorPrecondition('partition parts must be integers', p)
            values.append(int(p))
        end = len(values)
        while end and values[end - 1] == 0:
            end -= 1
        values = values[:end]
        for idx, p in enumerate(values):
            if p < 0:
                raise ErrorPrecondition('partition parts must be nonnegative', tuple(values))
            if idx and p > values[idx - 1]:
                raise ErrorPrecondition('partition parts must be weakly decreasing', tuple(values))
        return tuple.__new__(cls, values)

    @classmethod
    def _from_canonical(cls, parts: tp.Iterable[int]) -> 'Partition':
        # no validation: caller guarantees a canonical, weakly decreasing tuple
        return tuple.__new__(cls, parts)

    def __repr__(self) -> str:
        return '<Partition {}>'.format(self.to_bracket())

    @property
    def size(self) -> int:
        return sum(self)

    def to_bracket(self) -> str:
        return '[' + ','.join(str(p) for p in self) + ']'

    def conjugate(self) -> 'Partition':
        if not self:
            return self
        return Partition._from_canonical(
                sum(1 for p in self if p > col) for col in range(self[0]))

    def padded(self, length: int) -> PartsType:
        return tuple(self) + (0,) * (length - len(self))


EMPTY_PARTITION = Partition()

def _canonical(parts: tp.Sequence[int]) -> Partition:
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return Partition._from_canonical(parts[:end])

#-------------------------------------------------------------------------------
class GrassmannContext:
    '''
    The Grassmannian G(k, n); k = n - r is the corank of the rank locus.
    '''
    __slots__ = ('k', 'n')

    @classmethod
    def from_rank(cls, n: int, r: int) -> 'GrassmannContext':
        return cls(n - r, n)

    def __init__(self, k: int, n: int) -> None:
        if not (is_int(k) and is_int(n)):
            raise ErrorPrecondition('k and n must be integers', k, n)
        if not 0 <= k <= n:
            raise ErrorPrecondition('require 0 <= k <= n', k, n)
        self.k = int(k)
        self.n = int(n)

    def __eq__(self, other: tp.Any) -> bool:
        if not isinstance(other, GrassmannContext):
            return NotImplemented
        return self.k == other.k and self.n == other.n

    def __hash__(self) -> int:
        return hash((GrassmannContext, self.k, self.n))

    def __repr__(self) -> str:
        return '<GrassmannContext G({},{})>'.format(self.k, self.n)

    @property
    def r(self) -> int:
        return self.n - self.k

    @property
    def width(self) -> int:
        '''Number of columns of the box.'''
        return self.n - self.k

    @property
    def dim(self) -> int:
        return self.k * (self.n - self.k)

    @property
    def box(self) -> Partition:
        return _canonical((self.width,) * self.k)

    def fits(self, parts: tp.Sequence[int]) -> bool:
        return len(parts) <= self.k and (not parts or parts[0] <= self.width)


#-------------------------------------------------------------------------------
class ChowElement:
    '''
    A sparse integer combination of Schubert classes of one Grassmannian. Instances are immutable and hashable.
    '''
    __slots__ = ('_context', '_terms', '_hash')

    @classmethod
    def _from_terms(cls,
            context: GrassmannContext,
            terms: tp.Dict[Partition, int],
            ) -> 'ChowElement':
        # terms are taken as owned: canonical keys inside the box, no zero coefficients
        post = object.__new__(cls)
        post._context = context
        post._terms = terms
        post._hash = None
        return post

    @classmethod
    def zero(cls, context: GrassmannContext) -> 'ChowElement':
        return cls._from_terms(context, {})

    @classmethod
    def unit(cls, context: GrassmannContext, coefficient: int = 1) -> 'ChowElement':
        if not coefficient:
            return cls.zero(context)
        return cls._from_terms(context, {EMPTY_PARTITION: coefficient})

    @classmethod
    def from_partition(cls,
            context: GrassmannContext,
            parts: tp.Sequence[int],
            coefficient: int = 1,
            ) -> 'ChowElement':
        '''Return coefficient·σ_λ, or zero when λ does not fit the box.
        '''
        partition = Partition(parts)
        if not coefficient or not context.fits(partition):
            return cls.zero(context)
        return cls._from_terms(context, {partition: coefficient})

    def __init__(self,
            context: GrassmannContext,
            terms: tp.Optional[tp.Mapping[tp.Sequence[int], int]] = None,
            ) -> None:
        self._context = context
        self._hash = None
        self._terms = {}
        for parts, coef in (terms or {}).items():
            partition = Partition(parts)
            if not context.fits(partition):
                raise ErrorPrecondition('partition outside the box', partition, context)
            if not is_int(coef):
                raise ErrorPrecondition('coefficients must be integers', coef)
            value = self._terms.get(partition, 0) + int(coef)
            if value:
                self._terms[partition] = value
            else:
                self._terms.pop(partition, None)

    #---------------------------------------------------------------------------
    @property
    def context(self) -> GrassmannContext:
        return self._context

    @property
    def terms(self) -> tp.Mapping[Partition, int]:
        return MappingProxyType(self._terms)

    @property
    def constant(self) -> int:
        return self._terms.get(EMPTY_PARTITION, 0)

    def coefficient(self, parts: tp.Sequence[int]) -> int:
        return self._terms.get(_canonical(tuple(parts)), 0)

    def items(self) -> tp.List[tp.Tuple[Partition, int]]:
        '''Terms ordered by degree, then lexicographically by parts.
        '''
        return sorted(self._terms.items(), key=lambda item: (item[0].size, item[0]))

    def degree_part(self, degree: int) -> 'ChowElement':
        return self._from_terms(self._context,
                {p: c for p, c in self._terms.items() if p.size == degree})

    @property
    def min_degree(self) -> int:
        if not self._terms:
            return 0
        return min(p.size for p in self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    #---------------------------------------------------------------------------
    def _coerce(self, other: tp.Any) -> tp.Optional['ChowElement']:
        if isinstance(other, ChowElement):
            if other._context != self._context:
                raise ErrorContextMismatch('operands from different Grassmannians',
                        self._context, other._context)
            return other
        if is_int(other):
            return self.unit(self._context, int(other))
        return None

    def _combine(self, other: 'ChowElement', sign: int) -> 'ChowElement':
        terms = dict(self._terms)
        for p, c in other._terms.items():
            value = terms.get(p, 0) + sign * c
            if value:
                terms[p] = value
            else:
                terms.pop(p, None)
        return self._from_terms(self._context, terms)

    def __add__(self, other: tp.Any) -> 'ChowElement':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: tp.Any) -> 'ChowElement':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other: tp.Any) -> 'ChowElement':
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._combine(self, -1)

    def __neg__(self) -> 'ChowElement':
        return self._from_terms(self._context, {p: -c for p, c in self._terms.items()})

    def scale(self, scalar: int) -> 'ChowElement':
        if not scalar:
            return self.zero(self._context)
        return self._from_terms(self._context,
                {p: scalar * c for p, c in self._terms.items()})

    def __mul__(self, other: tp.Any) -> 'ChowElement':
        if is_int(other):
            return self.scale(int(other))
        if isinstance(other, ChowElement):
            return mul(self._context, self, other)
        return NotImplemented

    def __rmul__(self, other: tp.Any) -> 'ChowElement':
        if is_int(other):
            return self.scale(int(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> 'ChowElement':
        if not is_int(exponent) or exponent < 0:
            raise ErrorPrecondition('exponent must be a nonnegative integer', exponent)
        post = self.unit(self._context)
        base = self
        while exponent:
            if exponent & 1:
                post = mul(self._context, post, base)
            exponent >>= 1
            if exponent:
                base = mul(self._context, base, base)
        return post

    def __eq__(self, other: tp.Any) -> bool:
        if isinstance(other, ChowElement):
            return self._context == other._context and self._terms == other._terms
        if is_int(other):
            if not other:
                return not self._terms
            return self._terms == {EMPTY_PARTITION: other}
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._context, frozenset(self._terms.items())))
        return self._hash

    #---------------------------------------------------------------------------
    def to_text(self) -> str:
        '''Render as a signed combination, for example "3·σ[1,1] - σ[2]"; the unit class is "1".
        '''
        if not self._terms:
            return '0'
        parts = []
        for idx, (partition, coef) in enumerate(self.items()):
            magnitude = abs(coef)
            if not partition:
                body = str(magnitude)
            elif magnitude == 1:
                body = SIGMA + partition.to_bracket()
            else:
                body = '{}·{}{}'.format(magnitude, SIGMA, partition.to_bracket())
            if idx == 0:
                parts.append(body if coef > 0 else '-' + body)
            else:
                parts.append(('+ ' if coef > 0 else '- ') + body)
        return ' '.join(parts)

    def __repr__(self) -> str:
        return '<ChowElement G({},{}) {}>'.format(
                self._context.k, self._context.n, self.to_text())

    def __str__(self) -> str:
        return self.to_text()


#-------------------------------------------------------------------------------
# special classes

def special_s(ctx: GrassmannContext, i: int) -> ChowElement:
    '''c_i(S∨) = σ_(1^i); zero outside 0 <= i <= k.
    '''
    if i < 0 or i > ctx.k:
        return ChowElement.zero(ctx)
    return ChowElement.from_partition(ctx, (1,) * i)

def special_q(ctx: GrassmannContext, j: int) -> ChowElement:
    '''c_j(Q∨) = (-1)^j σ_(j); zero outside 0 <= j <= n - k.
    '''
    if j < 0 or j > ctx.width:
        return ChowElement.zero(ctx)
    return ChowElement.from_partition(ctx, (j,), -1 if j % 2 else 1)

def total_s(ctx: GrassmannContext) -> ChowElement:
    return ChowElement._from_terms(ctx,
            {Partition._from_canonical((1,) * i): 1 for i in range(ctx.k + 1)
            if ctx.fits((1,) * i)})

def total_q(ctx: GrassmannContext) -> ChowElement:
    terms = {}
    for j in range(ctx.width + 1):
        if ctx.fits((j,) if j else ()):
            terms[_canonical((j,))] = -1 if j % 2 else 1
    return ChowElement._from_terms(ctx, terms)

@lru_cache(maxsize=None)
def total_s_power(ctx: GrassmannContext, exponent: int) -> ChowElement:
    '''c(S∨)^exponent, memoized per context.
    '''
    if exponent < 0:
        raise ErrorPrecondition('exponent must be nonnegative', exponent)
    base = total_s(ctx)
    post = ChowElement.unit(ctx)
    for _ in range(exponent):
        post = mul(ctx, base, post)
    return post

def basis(ctx: GrassmannContext) -> tp.Tuple[Partition, ...]:
    '''All partitions in the box, by degree then lexicographically.
    '''
    found = [_canonical(tuple(reversed(parts)))
            for parts in combinations_with_replacement(range(ctx.width + 1), ctx.k)]
    if not found:
        found = [EMPTY_PARTITION]
    return tuple(sorted(found, key=lambda p: (p.size, p)))

#-------------------------------------------------------------------------------
# Pieri rules

def _validate_in_box(ctx: GrassmannContext, parts: tp.Sequence[int]) -> Partition:
    partition = parts if isinstance(parts, Partition) else Partition(parts)
    if not ctx.fits(partition):
        raise ErrorPrecondition('partition outside the box', partition, ctx)
    return partition

@lru_cache(maxsize=None)
def _pieri_row(k: int, width: int, parts: Partition, j: int) -> tp.Tuple[Partition, ...]:
    padded = parts.padded(k)
    found = []

    def extend(row: int, remaining: int, prefix: tp.Tuple[int, ...]) -> None:
        if row == k:
            if remaining == 0:
                found.append(_canonical(prefix))
            return
        lower = padded[row]
        upper = width if row == 0 else padded[row - 1]
        for value in range(lower, min(upper, lower + remaining) + 1):
            extend(row + 1, remaining - (value - lower), prefix + (value,))

    extend(0, j, ())
    return tuple(found)

@lru_cache(maxsize=None)
def _pieri_col(k: int, width: int, parts: Partition, i: int) -> tp.Tuple[Partition, ...]:
    padded = parts.padded(k)
    found = []
    for rows in combinations(range(k), i):
        grown = list(padded)
        for row in rows:
            grown[row] += 1
        if grown and grown[0] > width:
            continue
        if all(grown[row] <= grown[row - 1] for row in rows if row):
            found.append(_canonical(tuple(grown)))
    return tuple(found)

def pieri_row(ctx: GrassmannContext,
        parts: tp.Sequence[int],
        j: int) -> tp.FrozenSet[Partition]:
    '''All μ in the box with μ/λ a horizontal strip of size j.
    '''
    partition = _validate_in_box(ctx, parts)
    if not 0 <= j <= ctx.width:
        raise ErrorPrecondition('row index out of range', j, ctx)
    return frozenset(_pieri_row(ctx.k, ctx.width, partition, j))

def pieri_col(ctx: GrassmannContext,
        parts: tp.Sequence[int],
        i: int) -> tp.FrozenSet[Partition]:
    '''All μ in the box with μ/λ a vertical strip of size i.
    '''
    partition = _validate_in_box(ctx, parts)
    if not 0 <= i <= ctx.k:
        raise ErrorPrecondition('column index out of range', i, ctx)
    return frozenset(_pieri_col(ctx.k, ctx.width, partition, i))

#-------------------------------------------------------------------------------
# multiplication

@lru_cache(maxsize=None)
def schur_to_elementary(k: int, parts: Partition) -> tp.Tuple[tp.Tuple[EMonomial, int], ...]:
    '''
    Expand s_λ as a polynomial in e_1..e_k with the dual Jacobi-Trudi determinant det[e_{λ'_i - i + j}]. Terms with e_m, m > k, vanish. Monomials are sorted tuples of indices.
    '''
    conj = parts.conjugate()
    size = len(conj)
    # states: mask of used columns -> polynomial
    states: tp.Dict[int, tp.Dict[EMonomial, int]] = {0: {(): 1}}
    for row in range(size):
        following: tp.Dict[int, tp.Dict[EMonomial, int]] = defaultdict(dict)
        for mask, poly in states.items():
            for col in range(size):
                bit = 1 << col
                if mask & bit:
                    continue
                m = conj[row] - row + col
                if m < 0 or m > k:
                    continue
                # inversions: rows already placed in columns to the right
                sign = -1 if bin(mask >> (col + 1)).count('1') % 2 else 1
                target = following[mask | bit]
                for mono, coef in poly.items():
                    key = mono if m == 0 else tuple(sorted(mono + (m,)))
                    value = target.get(key, 0) + sign * coef
                    if value:
                        target[key] = value
                    else:
                        target.pop(key, None)
        states = following
    post = states.get((1 << size) - 1, {})
    return tuple(sorted(post.items()))

def _apply_elementary(k: int,
        width: int,
        terms: tp.Dict[Partition, int],
        i: int,
        ) -> tp.Dict[Partition, int]:
    post: tp.Dict[Partition, int] = {}
    for partition, coef in terms.items():
        for grown in _pieri_col(k, width, partition, i):
            value = post.get(grown, 0) + coef
            if value:
                post[grown] = value
            else:
                post.pop(grown)
    return post

def mul(ctx: GrassmannContext, a: ChowElement, b: ChowElement) -> ChowElement:
    '''
    Product in the Chow ring. The factor with fewer terms is rewritten in the special classes c_i(S∨), which are then applied to the other factor by iterated vertical-strip Pieri steps over a trie of shared monomial prefixes.
    '''
    if a._context != ctx or b._context != ctx:
        raise ErrorContextMismatch('operands from different Grassmannians',
                a._context, b._context, ctx)
    if not a or not b:
        return ChowElement.zero(ctx)
    if len(a) > len(b):
        a, b = b, a

    k, width, dim = ctx.k, ctx.width, ctx.dim
    floor = b.min_degree

    e_poly: tp.Dict[EMonomial, int] = defaultdict(int)
    for partition, coef in a._terms.items():
        if partition.size + floor > dim:
            continue
        for mono, c in schur_to_elementary(k, partition):
            e_poly[mono] += coef * c

    trie: tp.Dict[EMonomial, tp.Dict[Partition, int]] = {(): b._terms}

    def reach(mono: EMonomial) -> tp.Dict[Partition, int]:
        found = trie.get(mono)
        if found is None:
            found = _apply_elementary(k, width, reach(mono[:-1]), mono[-1])
            trie[mono] = found
        return found

    post: tp.Dict[Partition, int] = {}
    # descending indices prune out-of-box growth earliest
    for mono in sorted(e_poly, key=lambda m: tuple(reversed(m)), reverse=True):
        coef = e_poly[mono]
        if not coef:
            continue
        for partition, value in reach(tuple(reversed(mono))).items():
            total = post.get(partition, 0) + coef * value
            if total:
                post[partition] = total
            else:
                post.pop(partition)
    return ChowElement._from_terms(ctx, post)

def inverse(ctx: GrassmannContext, a: ChowElement) -> ChowElement:
    '''
    Inverse of an element with constant term ±1, by the finite Neumann series; positive-degree classes are nilpotent.
    '''
    unit = a.constant
    if unit not in (1, -1):
        raise ErrorNotInvertible('constant term must be 1 or -1', unit)
    # a = unit·(1 + nilpotent)
    nilpotent = a.scale(unit) - 1
    step = -nilpotent
    term = ChowElement.unit(ctx)
    post = ChowElement.unit(ctx)
    for power in range(1, ctx.dim + 1):
        term = mul(ctx, term, step)
        if not term:
            logger.debug('neumann series for %r terminated at %d', ctx, power)
            break
        post = post + term
    return post.scale(unit)

#-------------------------------------------------------------------------------
# integration

def integral(ctx: GrassmannContext, a: ChowElement) -> int:
    '''Coefficient of the class of a point.
    '''
    return a._terms.get(ctx.box, 0)

def complement(ctx: GrassmannContext, parts: tp.Sequence[int]) -> Partition:
    '''The dual partition (n-k-λ_k, ..., n-k-λ_1) in the box.
    '''
    partition = _validate_in_box(ctx, parts)
    padded = partition.padded(ctx.k)
    return _canonical(tuple(ctx.width - p for p in reversed(padded)))

def integral_product(ctx: GrassmannContext, a: ChowElement, b: ChowElement) -> int:
    '''∫ a·b through the duality pairing of Schubert classes; no product is formed.
    '''
    if a._context != ctx or b._context != ctx:
        raise ErrorContextMismatch('operands from different Grassmannians',
                a._context, b._context, ctx)
    if len(a) > len(b):
        a, b = b, a
    dim = ctx.dim
    width = ctx.width
    k = ctx.k
    post = 0
    for partition, coef in a._terms.items():
        if dim - partition.size < b.min_degree:
            continue
        dual = _canonical(tuple(width - p for p in reversed(partition.padded(k))))
        other = b._terms.get(dual)
        if other:
            post += coef * other
    return post

def deg_sigma(n: int, k: int) -> int:
    '''Degree of the locus of n × n matrices of corank at least k: Π_{i<k} C(n+i,k)/C(k+i,k).
    '''
    if not 0 <= k <= n:
        raise ErrorPrecondition('require 0 <= k <= n', n, k)
    value = Fraction(1)
    for i in range(k):
        value *= Fraction(binomial(n + i, k), binomial(k + i, k))
    return fraction_to_int(value)

def clear_caches() -> None:
    '''Drop memoized Pieri kernels, Jacobi-Trudi expansions and powers of c(S∨).
    '''
    for func in (total_s_power, _pieri_row, _pieri_col, schur_to_elementary):
        func.cache_clear()
