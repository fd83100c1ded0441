import typing as tp

import rankloci as rl
from rankloci.core.classes import clear_caches
from rankloci.core.golden import LADDER_CORNERS
from rankloci.core.golden import MIXED_BLOCKS

from rankloci.performance.perf_test import PerfTest

#-------------------------------------------------------------------------------

class SampleData:

    _store: tp.Dict[str, tp.Any] = {}

    @classmethod
    def create(cls) -> None:
        F = rl.Pattern.from_shapes
        cls._store['corner'] = F((rl.BlockShape.corner(),))
        cls._store['square'] = F((rl.BlockShape.square(),))
        cls._store['row_3'] = F((rl.BlockShape.row(3),))
        cls._store['ladder'] = LADDER_CORNERS
        cls._store['mixed'] = MIXED_BLOCKS
        cls._store['diagonal_16'] = F((rl.BlockShape.row(1),) * 16)

    @classmethod
    def get(cls, key: str) -> tp.Any:
        return cls._store[key]


#-------------------------------------------------------------------------------
# every engine call starts from empty caches

class CornerTable7(PerfTest):
    NUMBER = 5

    @staticmethod
    def engine() -> None:
        clear_caches()
        post = rl.degree_table(7, SampleData.get('corner'))
        assert post.to_list() == [912, 17303, 15218, 1001, 6, 0, 0]

    @staticmethod
    def closed() -> None:
        post = [rl.d_corners(7, r, 1) for r in range(1, 8)]
        assert post == [912, 17303, 15218, 1001, 6, 0, 0]


class CornerTable8(PerfTest):
    NUMBER = 2

    @staticmethod
    def engine() -> None:
        clear_caches()
        post = rl.degree_table(8, SampleData.get('corner'))
        assert post[3] == 592956

    @staticmethod
    def closed() -> None:
        clear_caches()
        post = [rl.d_corners(8, r, 1) for r in range(1, 9)]
        assert post[2] == 592956


class ThreeCornersDegree(PerfTest):
    NUMBER = 20

    @staticmethod
    def engine() -> None:
        clear_caches()
        assert rl.degree_for_pattern(7, 2, SampleData.get('ladder')) == 13395

    @staticmethod
    def closed() -> None:
        clear_caches()
        assert rl.d_corners(7, 2, 3) == 13395


class SquareTable7(PerfTest):
    NUMBER = 2

    @staticmethod
    def engine() -> None:
        clear_caches()
        post = rl.degree_table(7, SampleData.get('square'))
        assert post.to_list() == [887, 14701, 9478, 371, 1, 0, 0]


class MixedBlocksTable7(PerfTest):
    NUMBER = 2

    @staticmethod
    def engine() -> None:
        clear_caches()
        post = rl.degree_table(7, SampleData.get('mixed'))
        assert post[2] == 12967


class OneRowTable7(PerfTest):
    NUMBER = 5

    @staticmethod
    def engine() -> None:
        clear_caches()
        post = rl.degree_table(7, SampleData.get('row_3'))
        assert post[3] == 11172

    @staticmethod
    def closed() -> None:
        # defined for r <= n - 3 only
        post = [rl.d_onerow_closed(7, r, 3) for r in range(1, 5)]
        assert post == [896, 15582, 11172, 490]


class FullDiagonal16(PerfTest):
    NUMBER = 1

    @staticmethod
    def engine() -> None:
        clear_caches()
        assert rl.degree_for_pattern(16, 12, SampleData.get('diagonal_16')) == 24024

    @staticmethod
    def closed() -> None:
        clear_caches()
        assert rl.d_diag(16, 12, 16) == 24024


class Verify4(PerfTest):
    NUMBER = 1

    @staticmethod
    def engine() -> None:
        clear_caches()
        assert rl.cross_check(4).passed
