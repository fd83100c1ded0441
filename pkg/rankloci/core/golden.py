'''
Published degree tables, used as expected values by the test suite and by the verify command.
'''
import typing as tp
import logging

from rankloci.core.patterns import Pattern
from rankloci.core.patterns import BlockShape
from rankloci.core.degrees import degree_for_pattern
from rankloci.core.degrees import d_diag
from rankloci.core.degrees import d_onerow
from rankloci.core.report import CheckResult


logger = logging.getLogger(__name__)

Row = BlockShape.row
Col = BlockShape.col
Corner = BlockShape.corner
Square = BlockShape.square

#-------------------------------------------------------------------------------
# patterns drawn in the source tables

# three corners on and below the diagonal
LADDER_CORNERS = Pattern((
        (1, 1), (2, 1), (2, 2),
        (3, 3), (4, 3), (4, 4),
        (5, 5), (6, 5), (6, 6),
        ))

# corner, column of two, row of two, corner
MIXED_BLOCKS = Pattern((
        (1, 1), (2, 1), (2, 2),
        (3, 3), (4, 3),
        (5, 4), (5, 5),
        (6, 6), (7, 6), (7, 7),
        ))

# column of two, row of two, corner, square
LADDER_WITH_SQUARE = Pattern((
        (1, 1), (2, 1),
        (3, 2), (3, 3),
        (4, 4), (5, 4), (5, 5),
        (6, 6), (6, 7), (7, 6), (7, 7),
        ))

#-------------------------------------------------------------------------------
class GoldenRow(tp.NamedTuple):
    name: str
    n_values: tp.Tuple[int, ...]
    r_values: tp.Tuple[int, ...]
    compute: tp.Callable[[int, int], int]
    expected: tp.Tuple[int, ...]

    @property
    def max_n(self) -> int:
        return max(self.n_values)

    def points(self) -> tp.Iterator[tp.Tuple[int, int, int]]:
        return zip(self.n_values, self.r_values, self.expected)

    def evaluate(self) -> tp.Tuple[int, ...]:
        return tuple(self.compute(n, r) for n, r in zip(self.n_values, self.r_values))

    def check(self) -> CheckResult:
        counterexamples = []
        for (n, r, expected), found in zip(self.points(), self.evaluate()):
            if found != expected:
                counterexamples.append({'n': n, 'r': r,
                        'expected': str(expected), 'found': str(found)})
        return CheckResult.from_counterexamples('golden:' + self.name,
                counterexamples, len(self.expected))


def _pattern(pattern: Pattern) -> tp.Callable[[int, int], int]:
    return lambda n, r: degree_for_pattern(n, r, pattern)

def _shapes(*shapes: BlockShape) -> tp.Callable[[int, int], int]:
    return _pattern(Pattern.from_shapes(shapes))

def _table(name: str,
        n: int,
        compute: tp.Callable[[int, int], int],
        expected: tp.Sequence[int],
        ) -> GoldenRow:
    '''A per-rank table for r = 1..n.'''
    return GoldenRow(name, (n,) * n, tuple(range(1, n + 1)), compute, tuple(expected))

def _sequence(name: str,
        n_start: int,
        corank: int,
        compute: tp.Callable[[int, int], int],
        expected: tp.Sequence[int],
        ) -> GoldenRow:
    '''Values at r = n - corank for consecutive n.'''
    n_values = tuple(range(n_start, n_start + len(expected)))
    return GoldenRow(name, n_values, tuple(n - corank for n in n_values),
            compute, tuple(expected))

def _diagonal(n: int, r: int) -> int:
    return d_diag(n, r, n)

def _onerow(length: int) -> tp.Callable[[int, int], int]:
    return lambda n, r: d_onerow(n, r, length)

#-------------------------------------------------------------------------------

GOLDEN_ROWS: tp.Tuple[GoldenRow, ...] = (
        _table('one-row-3', 7, _shapes(Row(3)),
                (896, 15582, 11172, 490, 0, 0, 0)),
        _table('rows-3-2-1-1', 7, _shapes(Row(3), Row(2), Row(1), Row(1)),
                (887, 13957, 5990, 35, 0, 0, 0)),
        _table('corner-7', 7, _shapes(Corner()),
                (912, 17303, 15218, 1001, 6, 0, 0)),
        _table('corner-8', 8, _shapes(Corner()),
                (3418, 217007, 592956, 118188, 2548, 7, 0, 0)),
        _table('three-corners', 7, _pattern(LADDER_CORNERS),
                (888, 13395, 4078, 2, 0, 0, 0)),
        _table('square-7', 7, _shapes(Square()),
                (887, 14701, 9478, 371, 1, 0, 0)),
        _table('mixed-blocks', 7, _pattern(MIXED_BLOCKS),
                (886, 12967, 3102, 0, 0, 0, 0)),
        _table('ladder-with-square', 7, _pattern(LADDER_WITH_SQUARE),
                (861, 10701, 1424, 0, 0, 0, 0)),
        _table('rows-2-2-cols-2-2', 6, _shapes(Row(2), Row(2), Col(2), Col(2)),
                (228, 734, 8, 0, 0, 0)),
        GoldenRow('diagonal-4', (4,), (2,), _diagonal, (2,)),
        GoldenRow('diagonal-9', (9,), (6,), _diagonal, (42,)),
        GoldenRow('full-diagonal', (1, 4, 9, 16), (0, 2, 6, 12), _diagonal,
                (1, 2, 42, 24024)),
        _sequence('benzenoid-b2', 3, 2, _shapes(),
                (6, 20, 50, 105, 196, 336, 540, 825, 1210, 1716)),
        _sequence('benzenoid-b3', 4, 3, _shapes(Row(1)),
                (19, 155, 805, 3136, 9996, 27468, 67320, 150645, 313027, 611611)),
        _sequence('corank-3-row-0', 3, 3, _onerow(0),
                (1, 20, 175, 980, 4116, 14112, 41580, 108900)),
        _sequence('corank-3-row-1', 3, 3, _onerow(1),
                (1, 19, 155, 805, 3136, 9996, 27468, 67320)),
        _sequence('corank-3-row-2', 3, 3, _onerow(2),
                (1, 16, 110, 490, 1666, 4704, 11592, 25740)),
        _sequence('corank-3-row-3', 3, 3, _onerow(3),
                (1, 10, 50, 175, 490, 1176, 2520, 4950)),
        _sequence('corank-3-diagonal-5', 5, 3, _shapes(*(Row(1),) * 5),
                (85, 295, 771, 1681, 3235, 5685, 9325)),
        _sequence('corank-3-rows-2-3', 5, 3, _shapes(Row(2), Row(3)),
                (25, 65, 140, 266, 462, 750, 1155)),
        _sequence('corank-3-row-2-col-2', 4, 3, _shapes(Row(2), Col(2)),
                (12, 60, 200, 525, 1176, 2352, 4320)),
        _sequence('corank-3-row-2-col-3', 4, 3, _shapes(Row(2), Col(3)),
                (6, 20, 50, 105, 196, 336, 540)),
        _sequence('corank-3-corner', 3, 3, _shapes(Corner()),
                (1, 14, 84, 330, 1001, 2548, 5712)),
        _sequence('corank-3-square', 3, 3, _shapes(Square()),
                (1, 10, 46, 146, 371, 812, 1596, 2892)),
        _sequence('corank-4-three-squares', 6, 4, _shapes(Square(), Square(), Square()),
                (105, 336, 825, 1716, 3185, 5440)),
        )

def golden_rows(max_n: tp.Optional[int] = None) -> tp.Tuple[GoldenRow, ...]:
    '''Rows whose largest n does not exceed max_n; all rows when max_n is None.
    '''
    if max_n is None:
        return GOLDEN_ROWS
    return tuple(row for row in GOLDEN_ROWS if row.max_n <= max_n)

def golden_checks(max_n: tp.Optional[int] = None) -> tp.Tuple[CheckResult, ...]:
    post = []
    for row in golden_rows(max_n):
        logger.debug('golden row %s', row.name)
        post.append(row.check())
    return tuple(post)
