import typing as tp

from hypothesis import strategies as st

from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.chow import basis
from rankloci.core.patterns import Pattern
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import shapes_of
from rankloci.core.exception import ErrorUnsupportedShape

MAX_N = 6
MAX_COEFFICIENT = 5


#-------------------------------------------------------------------------------
# Grassmannians and ring elements

def get_context(max_n: int = MAX_N, min_k: int = 0) -> st.SearchStrategy:
    return st.integers(min_value=max(min_k, 1), max_value=max_n).flatmap(
            lambda n: st.builds(GrassmannContext,
                    st.integers(min_value=min(min_k, n), max_value=n),
                    st.just(n)))

def get_element(context: GrassmannContext,
        max_terms: int = 6,
        ) -> st.SearchStrategy:
    '''
    An element with small integer coefficients over a subset of the Schubert basis.
    '''
    partitions = basis(context)
    return st.dictionaries(
            st.sampled_from(partitions),
            st.integers(min_value=-MAX_COEFFICIENT, max_value=MAX_COEFFICIENT),
            max_size=max_terms,
            ).map(lambda terms: ChowElement(context, terms))

def get_context_and_elements(count: int,
        max_n: int = MAX_N,
        min_k: int = 0,
        ) -> st.SearchStrategy:
    return get_context(max_n, min_k).flatmap(
            lambda ctx: st.tuples(st.just(ctx), *(get_element(ctx) for _ in range(count))))

#-------------------------------------------------------------------------------
# patterns

def get_shape() -> st.SearchStrategy:
    return st.one_of(
            st.integers(min_value=1, max_value=4).map(BlockShape.row),
            st.integers(min_value=2, max_value=4).map(BlockShape.col),
            st.just(BlockShape.corner()),
            st.just(BlockShape.square()),
            )

def get_shapes(max_size: int = 3) -> st.SearchStrategy:
    return st.lists(get_shape(), max_size=max_size).map(tuple)

def get_pattern(max_n: int = 5, max_size: int = 6) -> st.SearchStrategy:
    cell = st.tuples(
            st.integers(min_value=1, max_value=max_n),
            st.integers(min_value=1, max_value=max_n))
    return st.frozensets(cell, max_size=max_size).map(Pattern)

def _is_supported(pattern: Pattern) -> bool:
    try:
        shapes_of(pattern)
    except ErrorUnsupportedShape:
        return False
    return True

def get_supported_pattern(max_n: int = 5, max_size: int = 6) -> st.SearchStrategy:
    return get_pattern(max_n, max_size).filter(_is_supported)

def get_permutation(n: int) -> st.SearchStrategy:
    return st.permutations(list(range(1, n + 1)))
