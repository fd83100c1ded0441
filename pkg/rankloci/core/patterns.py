'''
Entry sets S of n × n matrices, their decomposition into blocks sharing no rows or columns, and classification of blocks into shapes with known Grassmann classes.
'''
import typing as tp
from enum import Enum

import numpy as np

from rankloci.core.util import CellType
from rankloci.core.util import CellsInitializer
from rankloci.core.util import DTYPE_BOOL
from rankloci.core.util import is_int
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorUnsupportedShape
from rankloci.core.exception import ErrorPatternParse


GRID_MEMBER = frozenset('Xx')
GRID_EMPTY = frozenset('. ')
GRID_COMMENT = '#'
CELL_DELIMITER = ';'
COORD_DELIMITER = ','

#-------------------------------------------------------------------------------
class ShapeKind(str, Enum):
    ROW = 'row'
    COL = 'col'
    CORNER = 'corner'
    SQUARE = 'square'


class BlockShape(tp.NamedTuple):
    '''
    An elementary block: Row(ℓ), Col(m) with m >= 2, Corner, or Square. Use the constructors, which normalize Col(1) to Row(1).
    '''
    kind: ShapeKind
    size: int

    @classmethod
    def row(cls, length: int) -> 'BlockShape':
        if not is_int(length) or length < 1:
            raise ErrorPrecondition('row length must be at least 1', length)
        return cls(ShapeKind.ROW, int(length))

    @classmethod
    def col(cls, length: int) -> 'BlockShape':
        if not is_int(length) or length < 1:
            raise ErrorPrecondition('column length must be at least 1', length)
        if length == 1:
            return cls(ShapeKind.ROW, 1)
        return cls(ShapeKind.COL, int(length))

    @classmethod
    def corner(cls) -> 'BlockShape':
        return cls(ShapeKind.CORNER, 3)

    @classmethod
    def square(cls) -> 'BlockShape':
        return cls(ShapeKind.SQUARE, 4)

    def transpose(self) -> 'BlockShape':
        if self.kind is ShapeKind.ROW:
            return self.col(self.size)
        if self.kind is ShapeKind.COL:
            return self.row(self.size)
        return self

    @property
    def extent(self) -> tp.Tuple[int, int]:
        '''Rows and columns spanned.'''
        if self.kind is ShapeKind.ROW:
            return 1, self.size
        if self.kind is ShapeKind.COL:
            return self.size, 1
        return 2, 2

    def sort_key(self) -> tp.Tuple[str, int]:
        return (self.kind.value, self.size)

    def __str__(self) -> str:
        if self.kind is ShapeKind.ROW:
            return 'Row({})'.format(self.size)
        if self.kind is ShapeKind.COL:
            return 'Col({})'.format(self.size)
        return self.kind.value.capitalize()

#-------------------------------------------------------------------------------
class Pattern:
    '''
    A set S of matrix entries as 1-based (row, column) cells, independent of any ambient n.
    '''
    __slots__ = ('_cells',)

    @classmethod
    def from_shapes(cls, shapes: tp.Iterable[BlockShape]) -> 'Pattern':
        '''Lay out blocks down the diagonal so that no two share a row or column.
        '''
        cells = []
        row, col = 1, 1
        for shape in shapes:
            if shape.kind is ShapeKind.ROW:
                cells.extend((row, col + i) for i in range(shape.size))
            elif shape.kind is ShapeKind.COL:
                cells.extend((row + i, col) for i in range(shape.size))
            elif shape.kind is ShapeKind.CORNER:
                cells.extend(((row, col), (row, col + 1), (row + 1, col)))
            elif shape.kind is ShapeKind.SQUARE:
                cells.extend(((row, col), (row, col + 1), (row + 1, col), (row + 1, col + 1)))
            else:
                raise ErrorUnsupportedShape('no layout for shape', ())
            rows, cols = shape.extent
            row += rows
            col += cols
        return cls(cells)

    @classmethod
    def from_array(cls, array: np.ndarray) -> 'Pattern':
        rows, cols = np.nonzero(array)
        return cls(zip((rows + 1).tolist(), (cols + 1).tolist()))

    def __init__(self, cells: CellsInitializer = ()) -> None:
        found = set()
        for cell in cells:
            if len(cell) != 2 or not all(is_int(v) for v in cell):
                raise ErrorPrecondition('cells must be pairs of integers', cell)
            cell = (int(cell[0]), int(cell[1]))
            if cell[0] < 1 or cell[1] < 1:
                raise ErrorPrecondition('cell coordinates are 1-based', cell)
            if cell in found:
                raise ErrorPrecondition('duplicate cell', cell)
            found.add(cell)
        self._cells = frozenset(found)

    #---------------------------------------------------------------------------
    @property
    def cells(self) -> tp.FrozenSet[CellType]:
        return self._cells

    def sorted_cells(self) -> tp.Tuple[CellType, ...]:
        return tuple(sorted(self._cells))

    @property
    def rows(self) -> tp.FrozenSet[int]:
        return frozenset(r for r, _ in self._cells)

    @property
    def columns(self) -> tp.FrozenSet[int]:
        return frozenset(c for _, c in self._cells)

    @property
    def extent(self) -> int:
        '''Largest coordinate; the smallest n the pattern fits.'''
        if not self._cells:
            return 0
        return max(max(cell) for cell in self._cells)

    def __len__(self) -> int:
        return len(self._cells)

    def __iter__(self) -> tp.Iterator[CellType]:
        return iter(self.sorted_cells())

    def __contains__(self, cell: tp.Any) -> bool:
        return cell in self._cells

    def __eq__(self, other: tp.Any) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return self._cells == other._cells

    def __hash__(self) -> int:
        return hash((Pattern, self._cells))

    def __repr__(self) -> str:
        return '<Pattern {}>'.format(format_cells(self.sorted_cells()) or 'empty')

    #---------------------------------------------------------------------------
    def validate(self, n: int) -> 'Pattern':
        '''Raise if any coordinate exceeds n; return self.
        '''
        for cell in self.sorted_cells():
            if cell[0] > n or cell[1] > n:
                raise ErrorPrecondition('cell outside the {n}x{n} matrix'.format(n=n), cell)
        return self

    def transpose(self) -> 'Pattern':
        return Pattern((c, r) for r, c in self._cells)

    def permute(self,
            row_order: tp.Sequence[int],
            col_order: tp.Sequence[int],
            ) -> 'Pattern':
        '''
        Move row i to row_order[i - 1] and column j to col_order[j - 1]; orders are 1-based permutations at least as long as the pattern's extent.
        '''
        if not self._cells:
            return self
        rows_map = np.asarray(row_order)
        cols_map = np.asarray(col_order)
        for order in (rows_map, cols_map):
            if sorted(order.tolist()) != list(range(1, len(order) + 1)):
                raise ErrorPrecondition('not a permutation', order.tolist())
        cells = np.array(self.sorted_cells())
        if cells[:, 0].max() > len(rows_map) or cells[:, 1].max() > len(cols_map):
            raise ErrorPrecondition('permutation shorter than the pattern extent')
        return Pattern(zip(
                rows_map[cells[:, 0] - 1].tolist(),
                cols_map[cells[:, 1] - 1].tolist()))

    def to_array(self, n: int) -> np.ndarray:
        self.validate(n)
        array = np.zeros((n, n), dtype=DTYPE_BOOL)
        for r, c in self._cells:
            array[r - 1, c - 1] = True
        array.flags.writeable = False
        return array

    def to_grid(self, n: tp.Optional[int] = None) -> str:
        n = self.extent if n is None else n
        array = self.to_array(n)
        return '\n'.join(''.join('X' if v else '.' for v in row) for row in array)

    def to_cells(self) -> str:
        return format_cells(self.sorted_cells())


#-------------------------------------------------------------------------------
class Block:
    '''
    A connected component of a pattern under the relation of sharing a row or a column.
    '''
    __slots__ = ('cells', 'rows', 'columns')

    def __init__(self, cells: CellsInitializer) -> None:
        self.cells = frozenset(cells)
        self.rows = frozenset(r for r, _ in self.cells)
        self.columns = frozenset(c for _, c in self.cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __eq__(self, other: tp.Any) -> bool:
        if not isinstance(other, Block):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash((Block, self.cells))

    def __repr__(self) -> str:
        return '<Block {}>'.format(format_cells(sorted(self.cells)))

    @property
    def min_cell(self) -> CellType:
        return min(self.cells)

    @property
    def shape(self) -> BlockShape:
        return classify(self)

    def transpose(self) -> 'Block':
        return Block((c, r) for r, c in self.cells)


#-------------------------------------------------------------------------------
# parsing

def format_cells(cells: tp.Iterable[CellType]) -> str:
    return CELL_DELIMITER.join('{},{}'.format(r, c) for r, c in cells)

def parse_grid(text: str) -> Pattern:
    '''
    Read a grid where X or x marks a member and '.' or space an empty entry. Lines starting with '#' are comments and do not count as rows.
    '''
    cells = []
    row = 0
    for line_idx, line in enumerate(text.splitlines(), start=1):
        if line.lstrip().startswith(GRID_COMMENT):
            continue
        row += 1
        for col_idx, char in enumerate(line, start=1):
            if char in GRID_MEMBER:
                cells.append((row, col_idx))
            elif char not in GRID_EMPTY:
                raise ErrorPatternParse('illegal character {!r}'.format(char),
                        line_idx, col_idx)
    return Pattern(cells)

def _parse_coordinate(token: str, line: int, column: int) -> int:
    token = token.strip()
    if not token.isdigit():
        raise ErrorPatternParse('expected a positive integer, found {!r}'.format(token),
                line, column)
    value = int(token)
    if value < 1:
        raise ErrorPatternParse('coordinates are 1-based', line, column)
    return value

def parse_cells(text: str) -> Pattern:
    '''
    Read a cell list "r,c;r,c;...". Empty segments are skipped; duplicates are rejected.
    '''
    cells = []
    seen = set()
    for line_idx, line in enumerate(text.splitlines() or [''], start=1):
        offset = 0
        for segment in line.split(CELL_DELIMITER):
            column = offset + 1
            offset += len(segment) + 1
            if not segment.strip():
                continue
            coords = segment.split(COORD_DELIMITER)
            if len(coords) != 2:
                raise ErrorPatternParse('expected "row,column", found {!r}'.format(segment.strip()),
                        line_idx, column)
            cell = (_parse_coordinate(coords[0], line_idx, column),
                    _parse_coordinate(coords[1], line_idx, column + len(coords[0]) + 1))
            if cell in seen:
                raise ErrorPatternParse('duplicate cell {},{}'.format(*cell), line_idx, column)
            seen.add(cell)
            cells.append(cell)
    return Pattern(cells)

#-------------------------------------------------------------------------------
# decomposition

class _UnionFind:
    __slots__ = ('_parent',)

    def __init__(self) -> None:
        self._parent: tp.Dict[tp.Hashable, tp.Hashable] = {}

    def find(self, node: tp.Hashable) -> tp.Hashable:
        parent = self._parent.setdefault(node, node)
        if parent != node:
            parent = self.find(parent)
            self._parent[node] = parent
        return parent

    def union(self, a: tp.Hashable, b: tp.Hashable) -> None:
        root_a, root_b = self.find(a), self.find(b)
        if root_a != root_b:
            self._parent[root_b] = root_a


def decompose(pattern: Pattern) -> tp.Tuple[Block, ...]:
    '''
    Split into connected components, where cells sharing a row or a column are adjacent; blocks are ordered by their minimal cell.
    '''
    uf = _UnionFind()
    for r, c in pattern.cells:
        uf.union(('r', r), ('c', c))
    groups: tp.Dict[tp.Hashable, tp.List[CellType]] = {}
    for cell in pattern.sorted_cells():
        groups.setdefault(uf.find(('r', cell[0])), []).append(cell)
    blocks = [Block(cells) for cells in groups.values()]
    return tuple(sorted(blocks, key=lambda b: b.min_cell))

def classify(block: Block) -> BlockShape:
    '''
    Map a block to its elementary shape; any 3 cells of a 2 × 2 box are a Corner.
    '''
    count = len(block.cells)
    if not count:
        raise ErrorUnsupportedShape('empty block', ())
    if len(block.rows) == 1:
        return BlockShape.row(count)
    if len(block.columns) == 1:
        return BlockShape.col(count)
    if len(block.rows) == 2 and len(block.columns) == 2:
        if count == 3:
            return BlockShape.corner()
        if count == 4:
            return BlockShape.square()
    raise ErrorUnsupportedShape('unsupported block shape', block.cells)

def shapes_of(pattern: Pattern) -> tp.Tuple[BlockShape, ...]:
    return tuple(classify(b) for b in decompose(pattern))

def transpose(pattern: Pattern) -> Pattern:
    return pattern.transpose()
