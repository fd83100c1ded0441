import unittest

import numpy as np

from rankloci.core.patterns import Pattern
from rankloci.core.patterns import Block
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import ShapeKind
from rankloci.core.patterns import parse_grid
from rankloci.core.patterns import parse_cells
from rankloci.core.patterns import decompose
from rankloci.core.patterns import classify
from rankloci.core.patterns import shapes_of
from rankloci.core.patterns import transpose
from rankloci.core.golden import LADDER_CORNERS
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorPatternParse
from rankloci.core.exception import ErrorUnsupportedShape

from rankloci.test.test_case import TestCase


CORNER = Pattern(((1, 1), (1, 2), (2, 1)))


class TestUnit(TestCase):

    def test_block_shape_a(self) -> None:
        self.assertEqual(BlockShape.col(1), BlockShape.row(1))
        self.assertEqual(BlockShape.row(3).transpose(), BlockShape.col(3))
        self.assertEqual(BlockShape.corner().transpose(), BlockShape.corner())
        self.assertEqual(BlockShape.col(4).extent, (4, 1))
        self.assertEqual(str(BlockShape.square()), 'Square')
        self.assertEqual(str(BlockShape.col(2)), 'Col(2)')

    def test_block_shape_b(self) -> None:
        with self.assertRaises(ErrorPrecondition):
            BlockShape.row(0)
        with self.assertRaises(ErrorPrecondition):
            BlockShape.col(2.0)

    #---------------------------------------------------------------------------

    def test_pattern_a(self) -> None:
        p = Pattern(((2, 1), (1, 1), (1, 2)))
        self.assertEqual(p, CORNER)
        self.assertEqual(hash(p), hash(CORNER))
        self.assertEqual(p.sorted_cells(), ((1, 1), (1, 2), (2, 1)))
        self.assertEqual(p.extent, 2)
        self.assertEqual(len(Pattern()), 0)
        self.assertEqual(Pattern().extent, 0)
        self.assertIn((1, 2), p)

    def test_pattern_b(self) -> None:
        with self.assertRaises(ErrorPrecondition):
            Pattern(((0, 1),))
        with self.assertRaises(ErrorPrecondition):
            Pattern(((1, 1), (1, 1)))
        with self.assertRaises(ErrorPrecondition):
            Pattern(((1, 1, 1),))

    def test_pattern_validate_a(self) -> None:
        self.assertIs(CORNER.validate(2), CORNER)
        with self.assertRaises(ErrorPrecondition):
            CORNER.validate(1)

    def test_pattern_from_shapes_a(self) -> None:
        p = Pattern.from_shapes((BlockShape.row(2), BlockShape.col(2), BlockShape.corner()))
        self.assertEqual(p.sorted_cells(),
                ((1, 1), (1, 2), (2, 3), (3, 3), (4, 4), (4, 5), (5, 4)))
        self.assertEqual(shapes_of(p),
                (BlockShape.row(2), BlockShape.col(2), BlockShape.corner()))

    def test_pattern_to_grid_a(self) -> None:
        self.assertEqual(CORNER.to_grid(), 'XX\nX.')
        self.assertEqual(CORNER.to_grid(3), 'XX.\nX..\n...')
        self.assertEqual(parse_grid(LADDER_CORNERS.to_grid()), LADDER_CORNERS)

    def test_pattern_to_array_a(self) -> None:
        a = CORNER.to_array(3)
        self.assertEqual(a.dtype, np.dtype(bool))
        self.assertFalse(a.flags.writeable)
        self.assertEqual(a.sum(), 3)
        self.assertEqual(Pattern.from_array(a), CORNER)

    def test_pattern_to_cells_a(self) -> None:
        self.assertEqual(CORNER.to_cells(), '1,1;1,2;2,1')
        self.assertEqual(Pattern().to_cells(), '')
        self.assertEqual(repr(Pattern()), '<Pattern empty>')

    def test_pattern_permute_a(self) -> None:
        post = CORNER.permute((2, 1), (1, 2))
        self.assertEqual(post, Pattern(((2, 1), (2, 2), (1, 1))))
        self.assertEqual(shapes_of(post), (BlockShape.corner(),))
        empty = Pattern()
        self.assertIs(empty.permute((), ()), empty)

    def test_pattern_permute_b(self) -> None:
        with self.assertRaises(ErrorPrecondition):
            CORNER.permute((1, 1), (1, 2))
        with self.assertRaises(ErrorPrecondition):
            CORNER.permute((1,), (1, 2))

    #---------------------------------------------------------------------------

    def test_parse_grid_a(self) -> None:
        self.assertEqual(parse_grid('XX.\nX..'), CORNER)
        self.assertEqual(parse_grid('X..\n.X.\n..X'), Pattern(((1, 1), (2, 2), (3, 3))))
        self.assertEqual(parse_grid(''), Pattern())

    def test_parse_grid_b(self) -> None:
        # comment lines do not count as rows
        self.assertEqual(parse_grid('# corner\nxx\nx.'), CORNER)

    def test_parse_grid_c(self) -> None:
        with self.assertRaises(ErrorPatternParse) as cm:
            parse_grid('X.X\n.?.')
        self.assertEqual((cm.exception.line, cm.exception.column), (2, 2))

    def test_parse_grid_d(self) -> None:
        with open(self.get_test_input('corner.txt'), encoding='utf-8') as f:
            self.assertEqual(parse_grid(f.read()), CORNER)
        with open(self.get_test_input('three_corners.txt'), encoding='utf-8') as f:
            post = parse_grid(f.read())
        self.assertEqual(shapes_of(post), (BlockShape.corner(),) * 3)

    def test_parse_cells_a(self) -> None:
        self.assertEqual(parse_cells('1,1;1,2;2,1'), CORNER)
        self.assertEqual(parse_cells(' 1, 1 ; 2,1;1,2; '), CORNER)
        self.assertEqual(parse_cells(''), Pattern())

    def test_parse_cells_b(self) -> None:
        with self.assertRaises(ErrorPatternParse):
            parse_cells('1,1;1,1')
        with self.assertRaises(ErrorPatternParse):
            parse_cells('1,1;2')
        with self.assertRaises(ErrorPatternParse):
            parse_cells('0,1')
        with self.assertRaises(ErrorPatternParse) as cm:
            parse_cells('1,1;a,2')
        self.assertEqual(cm.exception.column, 5)

    #---------------------------------------------------------------------------

    def test_decompose_a(self) -> None:
        post = decompose(Pattern(((1, 1), (2, 2), (3, 3), (4, 4))))
        self.assertEqual(len(post), 4)
        self.assertTrue(all(len(b) == 1 for b in post))

    def test_decompose_b(self) -> None:
        post = decompose(LADDER_CORNERS)
        self.assertEqual([len(b) for b in post], [3, 3, 3])
        self.assertEqual([b.min_cell for b in post], [(1, 1), (3, 3), (5, 5)])

    def test_decompose_c(self) -> None:
        post = decompose(Pattern(((1, 1), (1, 3), (2, 2))))
        self.assertEqual(post, (Block(((1, 1), (1, 3))), Block(((2, 2),))))
        self.assertEqual(decompose(Pattern()), ())

    def test_decompose_d(self) -> None:
        # joined through a shared column only
        post = decompose(Pattern(((1, 1), (3, 1), (3, 4), (5, 6))))
        self.assertEqual([len(b) for b in post], [3, 1])

    def test_classify_a(self) -> None:
        self.assertEqual(classify(Block(((5, 2), (5, 3), (5, 4)))), BlockShape.row(3))
        self.assertEqual(classify(Block(((2, 7), (4, 7)))), BlockShape.col(2))
        self.assertEqual(classify(Block(((3, 3),))), BlockShape.row(1))

    def test_classify_b(self) -> None:
        # every three cells of a 2 x 2 box are a corner
        box = ((1, 1), (1, 2), (2, 1), (2, 2))
        for missing in box:
            block = Block(c for c in box if c != missing)
            self.assertEqual(block.shape, BlockShape.corner())
        self.assertEqual(classify(Block(box)), BlockShape.square())
        # spread rows and columns
        self.assertEqual(classify(Block(((2, 3), (2, 6), (5, 3)))), BlockShape.corner())

    def test_classify_c(self) -> None:
        with self.assertRaises(ErrorUnsupportedShape) as cm:
            classify(Block(((1, 1), (1, 2), (2, 2), (2, 3))))
        self.assertEqual(cm.exception.cells, ((1, 1), (1, 2), (2, 2), (2, 3)))
        with self.assertRaises(ErrorUnsupportedShape):
            classify(Block(((1, 1), (1, 2), (1, 3), (2, 1))))

    def test_transpose_a(self) -> None:
        row = Pattern.from_shapes((BlockShape.row(3),))
        self.assertEqual(shapes_of(transpose(row)), (BlockShape.col(3),))
        self.assertEqual(shapes_of(transpose(CORNER)), (BlockShape.corner(),))
        self.assertEqual(transpose(Pattern()), Pattern())
        self.assertEqual(transpose(transpose(LADDER_CORNERS)), LADDER_CORNERS)
        self.assertEqual(Block(((1, 2),)).transpose(), Block(((2, 1),)))

    def test_shape_kind_a(self) -> None:
        self.assertEqual(ShapeKind('corner'), ShapeKind.CORNER)
        self.assertEqual(BlockShape.row(2).sort_key(), ('row', 2))


if __name__ == '__main__':
    unittest.main()
