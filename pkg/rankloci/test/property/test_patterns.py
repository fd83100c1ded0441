import unittest
import random

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from rankloci.core.patterns import Pattern
from rankloci.core.patterns import decompose
from rankloci.core.patterns import shapes_of
from rankloci.core.patterns import transpose
from rankloci.core.degrees import degree_for_pattern
from rankloci.core.classes import one_minus_sigma_blocks
from rankloci.core.classes import sigma_for_shape
from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.chow import mul

from rankloci.test.property.strategies import get_pattern
from rankloci.test.property.strategies import get_supported_pattern
from rankloci.test.property.strategies import get_permutation
from rankloci.test.property.strategies import get_shapes
from rankloci.test.property.strategies import get_context
from rankloci.test.test_case import TestCase


class TestUnit(TestCase):

    @given(get_pattern())
    def test_decompose_partitions_cells(self, pattern: Pattern) -> None:
        blocks = decompose(pattern)
        cells = [cell for block in blocks for cell in block.cells]
        self.assertEqual(len(cells), len(pattern))
        self.assertEqual(frozenset(cells), pattern.cells)
        # distinct blocks share no row and no column
        for i, a in enumerate(blocks):
            for b in blocks[i + 1:]:
                self.assertFalse(a.rows & b.rows)
                self.assertFalse(a.columns & b.columns)

    @given(get_supported_pattern())
    def test_transpose_shapes(self, pattern: Pattern) -> None:
        expected = sorted(s.transpose() for s in shapes_of(pattern))
        self.assertEqual(sorted(shapes_of(transpose(pattern))), expected)

    @given(get_pattern())
    def test_grid_cells_agree(self, pattern: Pattern) -> None:
        self.assertEqual(Pattern.from_array(pattern.to_array(5)), pattern)

    @settings(deadline=None, max_examples=40)
    @given(get_supported_pattern(max_n=4, max_size=4),
            get_permutation(4),
            get_permutation(4),
            st.integers(min_value=1, max_value=4))
    def test_degree_permutation_invariant(self,
            pattern: Pattern,
            rows: list,
            cols: list,
            r: int,
            ) -> None:
        self.assertEqual(degree_for_pattern(4, r, pattern),
                degree_for_pattern(4, r, pattern.permute(rows, cols)))
        self.assertEqual(degree_for_pattern(4, r, pattern),
                degree_for_pattern(4, r, pattern.transpose()))

    @settings(deadline=None)
    @given(get_shapes(), st.randoms(), get_context(max_n=7))
    def test_block_order_invariant(self,
            shapes: tuple,
            rand: random.Random,
            ctx: GrassmannContext,
            ) -> None:
        order = list(shapes)
        rand.shuffle(order)
        post = ChowElement.unit(ctx)
        for shape in order:
            post = mul(ctx, post, sigma_for_shape(ctx, shape).one_minus())
        self.assertEqual(post, one_minus_sigma_blocks(ctx, shapes))

    @settings(deadline=None, max_examples=30)
    @given(get_supported_pattern(max_n=4, max_size=5))
    def test_degree_nonnegative(self, pattern: Pattern) -> None:
        for r in range(1, 5):
            self.assertTrue(degree_for_pattern(4, r, pattern) >= 0)


if __name__ == '__main__':
    unittest.main()
