'''
Grassmann classes Σ of the elementary block shapes, and their combination over the blocks of a pattern through (1 - Σ_S) = Π (1 - Σ_block).
'''
import typing as tp
import logging
from functools import lru_cache

from rankloci.core.util import binomial
from rankloci.core import chow
from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.chow import special_s
from rankloci.core.chow import special_q
from rankloci.core.chow import total_s
from rankloci.core.chow import inverse
from rankloci.core.chow import mul
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import ShapeKind
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorUnsupportedShape


logger = logging.getLogger(__name__)

ShapesType = tp.Sequence[BlockShape]

#-------------------------------------------------------------------------------
class GrassmannClass:
    '''
    A Grassmann class together with the shapes it was built from.
    '''
    __slots__ = ('value', 'shapes')

    def __init__(self, value: ChowElement, shapes: tp.Iterable[BlockShape] = ()) -> None:
        self.value = value
        self.shapes = tuple(shapes)

    @property
    def context(self) -> GrassmannContext:
        return self.value.context

    @property
    def constant(self) -> int:
        return self.value.constant

    def one_minus(self) -> ChowElement:
        return 1 - self.value

    def __eq__(self, other: tp.Any) -> bool:
        if isinstance(other, GrassmannClass):
            return self.value == other.value
        return self.value == other

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        label = ', '.join(str(s) for s in self.shapes) or 'empty'
        return '<GrassmannClass {} {}>'.format(label, self.value.to_text())

    def to_text(self) -> str:
        return self.value.to_text()


#-------------------------------------------------------------------------------
def _q_combination(ctx: GrassmannContext,
        weight: tp.Callable[[int], int],
        ) -> ChowElement:
    '''Σ_j weight(j)·c_j(Q∨) over 0 <= j <= r.
    '''
    post = ChowElement.zero(ctx)
    for j in range(ctx.r + 1):
        w = weight(j)
        if w:
            post = post + special_q(ctx, j).scale(w)
    return post

def sigma_row(ctx: GrassmannContext, length: int) -> GrassmannClass:
    '''
    ℓ entries in one row: Σ = c(Q∨)·(c_{k-ℓ+1} + ... + c_k); out-of-range indices contribute nothing.
    '''
    if length < 1:
        raise ErrorPrecondition('row length must be at least 1', length)
    k = ctx.k
    top = ChowElement.zero(ctx)
    for i in range(max(k - length + 1, 0), k + 1):
        top = top + special_s(ctx, i)
    cq = _q_combination(ctx, lambda j: 1)
    return GrassmannClass(mul(ctx, cq, top), (BlockShape.row(length),))

def sigma_col(ctx: GrassmannContext, length: int) -> GrassmannClass:
    '''
    m entries in one column: Σ = Σ_{i=0}^{r} C(m-1+k+i, m-1)·c_i(Q∨)·c_k.
    '''
    if length < 1:
        raise ErrorPrecondition('column length must be at least 1', length)
    k = ctx.k
    weighted = _q_combination(ctx, lambda i: binomial(length - 1 + k + i, length - 1))
    return GrassmannClass(mul(ctx, weighted, special_s(ctx, k)),
            (BlockShape.col(length),))

def sigma_corner(ctx: GrassmannContext) -> GrassmannClass:
    '''
    Three entries of a 2 × 2 box: Σ = (k c_k + c_{k-1})/c + (c_k² - Σ_i i c_i c_k)/c², with c = c(S∨).
    '''
    k = ctx.k
    c_k = special_s(ctx, k)
    inv = inverse(ctx, total_s(ctx))
    inv_sq = mul(ctx, inv, inv)

    linear = c_k.scale(k) + special_s(ctx, k - 1)
    weighted = ChowElement.zero(ctx)
    for i in range(1, k + 1):
        weighted = weighted + special_s(ctx, i).scale(i)
    quadratic = mul(ctx, c_k, c_k - weighted)

    value = mul(ctx, linear, inv) + mul(ctx, quadratic, inv_sq)
    return GrassmannClass(value, (BlockShape.corner(),))

def sigma_square(ctx: GrassmannContext) -> GrassmannClass:
    '''
    A full 2 × 2 box, as the sum of three parts:

        - Σ_{i,j=0}^{r} C(2k+i+j+3, 3) c_i(Q∨) c_j(Q∨) c_k²
        + Σ_{j=0}^{r} c_j(Q∨) (2 c_k + (k+j) c_{k-1})
        + Σ_{i=0}^{k} Σ_{u,v,w=0}^{r} (2C(i,3) - 2(k-u+v+w+1)C(i,2) + (k-u+v+w+2)(2k+v+w+1)C(i,1)) c_u(Q∨) c_v(Q∨) c_w(Q∨) c_{k-i} c_k²

    with all Chern classes c_i of S∨ unless marked.
    '''
    k, r = ctx.k, ctx.r
    c_k = special_s(ctx, k)
    c_k_sq = mul(ctx, c_k, c_k)
    q = [special_q(ctx, j) for j in range(r + 1)]

    # pairs[s] = Σ_{v+w=s} q_v q_w
    pairs = [ChowElement.zero(ctx) for _ in range(2 * r + 1)]
    for v in range(r + 1):
        for w in range(r + 1):
            pairs[v + w] = pairs[v + w] + mul(ctx, q[v], q[w])

    first = ChowElement.zero(ctx)
    for i in range(r + 1):
        for j in range(r + 1):
            first = first + mul(ctx, q[i], q[j]).scale(binomial(2 * k + i + j + 3, 3))
    first = -mul(ctx, first, c_k_sq)

    second = ChowElement.zero(ctx)
    for j in range(r + 1):
        inner = c_k.scale(2) + special_s(ctx, k - 1).scale(k + j)
        second = second + mul(ctx, q[j], inner)

    # triples[(u, s)] = q_u · Σ_{v+w=s} q_v q_w
    triples = {}
    for u in range(r + 1):
        for s in range(2 * r + 1):
            if pairs[s]:
                triples[(u, s)] = mul(ctx, q[u], pairs[s])

    third = ChowElement.zero(ctx)
    for i in range(1, k + 1):
        weighted = ChowElement.zero(ctx)
        for (u, s), triple in triples.items():
            coef = (2 * binomial(i, 3)
                    - 2 * (k - u + s + 1) * binomial(i, 2)
                    + (k - u + s + 2) * (2 * k + s + 1) * binomial(i, 1))
            if coef and triple:
                weighted = weighted + triple.scale(coef)
        third = third + mul(ctx, weighted, special_s(ctx, k - i))
    third = mul(ctx, third, c_k_sq)

    return GrassmannClass(first + second + third, (BlockShape.square(),))

#-------------------------------------------------------------------------------
@lru_cache(maxsize=None)
def sigma_for_shape(ctx: GrassmannContext, shape: BlockShape) -> GrassmannClass:
    if not isinstance(shape, BlockShape):
        raise ErrorUnsupportedShape('not a block shape: {!r}'.format(shape), ())
    logger.debug('computing Σ for %s on %r', shape, ctx)
    if shape.kind is ShapeKind.ROW:
        return sigma_row(ctx, shape.size)
    if shape.kind is ShapeKind.COL:
        return sigma_col(ctx, shape.size)
    if shape.kind is ShapeKind.CORNER:
        return sigma_corner(ctx)
    if shape.kind is ShapeKind.SQUARE:
        return sigma_square(ctx)
    raise ErrorUnsupportedShape('unsupported shape {}'.format(shape), ())

@lru_cache(maxsize=None)
def _one_minus_sorted(ctx: GrassmannContext,
        shapes: tp.Tuple[BlockShape, ...],
        ) -> ChowElement:
    post = ChowElement.unit(ctx)
    for shape in shapes:
        factor = sigma_for_shape(ctx, shape).one_minus()
        post = mul(ctx, post, factor)
        if not post:
            break
    return post

def one_minus_sigma_blocks(ctx: GrassmannContext, shapes: ShapesType) -> ChowElement:
    '''
    The product Π (1 - Σ_block) over the given shapes; 1 for no shapes.
    '''
    for shape in shapes:
        if not isinstance(shape, BlockShape):
            raise ErrorUnsupportedShape('not a block shape: {!r}'.format(shape), ())
    ordered = tuple(sorted(shapes, key=BlockShape.sort_key))
    return _one_minus_sorted(ctx, ordered)

def sigma_blocks(ctx: GrassmannContext, shapes: ShapesType) -> GrassmannClass:
    '''Grassmann class of a pattern made of the given blocks; 0 for no blocks.
    '''
    return GrassmannClass(1 - one_minus_sigma_blocks(ctx, shapes), shapes)

def clear_caches() -> None:
    '''Drop memoized block classes and the ring caches they rest on.
    '''
    sigma_for_shape.cache_clear()
    _one_minus_sorted.cache_clear()
    chow.clear_caches()
