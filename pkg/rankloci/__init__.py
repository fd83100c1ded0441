from rankloci.core.util import PartsType
from rankloci.core.util import CellType
from rankloci.core.util import binomial

from rankloci.core.exception import ErrorRankLoci
from rankloci.core.exception import ErrorPrecondition
from rankloci.core.exception import ErrorContextMismatch
from rankloci.core.exception import ErrorNotInvertible
from rankloci.core.exception import ErrorUnsupportedShape
from rankloci.core.exception import ErrorPatternParse
from rankloci.core.exception import ErrorInternalConsistency

from rankloci.core.config import EngineConfig
from rankloci.core.config import EngineConfigs
from rankloci.core.config import ConfigActive

from rankloci.core.chow import Partition
from rankloci.core.chow import GrassmannContext
from rankloci.core.chow import ChowElement
from rankloci.core.chow import special_s
from rankloci.core.chow import special_q
from rankloci.core.chow import total_s
from rankloci.core.chow import total_q
from rankloci.core.chow import total_s_power
from rankloci.core.chow import basis
from rankloci.core.chow import pieri_row
from rankloci.core.chow import pieri_col
from rankloci.core.chow import mul
from rankloci.core.chow import inverse
from rankloci.core.chow import integral
from rankloci.core.chow import integral_product
from rankloci.core.chow import complement
from rankloci.core.chow import deg_sigma

from rankloci.core.patterns import ShapeKind
from rankloci.core.patterns import BlockShape
from rankloci.core.patterns import Pattern
from rankloci.core.patterns import Block
from rankloci.core.patterns import parse_grid
from rankloci.core.patterns import parse_cells
from rankloci.core.patterns import decompose
from rankloci.core.patterns import classify
from rankloci.core.patterns import shapes_of
from rankloci.core.patterns import transpose

from rankloci.core.classes import GrassmannClass
from rankloci.core.classes import sigma_row
from rankloci.core.classes import sigma_col
from rankloci.core.classes import sigma_corner
from rankloci.core.classes import sigma_square
from rankloci.core.classes import sigma_blocks
from rankloci.core.classes import one_minus_sigma_blocks

from rankloci.core.degrees import DegreeTable
from rankloci.core.degrees import degree_from_blocks
from rankloci.core.degrees import degree_for_pattern
from rankloci.core.degrees import degree_table
from rankloci.core.degrees import d_onerow
from rankloci.core.degrees import d_onerow_closed
from rankloci.core.degrees import d_onecol
from rankloci.core.degrees import d_rows
from rankloci.core.degrees import d_diag
from rankloci.core.degrees import d_mix
from rankloci.core.degrees import d_corners
from rankloci.core.degrees import rank_one_multiplicity
from rankloci.core.degrees import d_full_row
from rankloci.core.degrees import schubc_check

from rankloci.core.report import CheckStatus
from rankloci.core.report import CheckResult
from rankloci.core.report import VerifyReport

from rankloci.core.oracle import SpecialPolynomial
from rankloci.core.oracle import oracle_integral
from rankloci.core.oracle import oracle_degree
from rankloci.core.oracle import cross_check

from rankloci.core.display import DisplayFormats
from rankloci.core.display import DisplayConfig
from rankloci.core.display import DisplayConfigs
from rankloci.core.display import Display
from rankloci.core.display import OutputDocument


__version__ = '0.1.0'
