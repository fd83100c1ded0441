import typing as tp
import math
from fractions import Fraction
from functools import reduce
import operator

import numpy as np


DTYPE_OBJECT = np.dtype(object)
DTYPE_BOOL = np.dtype(bool)

#-------------------------------------------------------------------------------
# for type hinting

PartsType = tp.Tuple[int, ...]
CellType = tp.Tuple[int, int]
CellsInitializer = tp.Iterable[CellType]
IntegerSequence = tp.Sequence[int]

# an exponent vector over the special classes e_1..e_k, stored as sorted indices
EMonomial = tp.Tuple[int, ...]

INT_TYPES = (int, np.integer)

#-------------------------------------------------------------------------------
# utility

def immutable_filter(src_array: np.ndarray) -> np.ndarray:
    '''Pass an immutable array; otherwise, return an immutable copy of the provided array.
    '''
    if src_array.flags.writeable:
        dst_array = src_array.copy()
        dst_array.flags.writeable = False
        return dst_array
    return src_array # keep it as is

def object_array(values: tp.Iterable[tp.Any]) -> np.ndarray:
    '''Return an immutable 1D object array; integers are kept as Python ints.
    '''
    values = list(values)
    array = np.empty(len(values), dtype=DTYPE_OBJECT)
    for idx, v in enumerate(values):
        array[idx] = v
    array.flags.writeable = False
    return array

def binomial(a: int, b: int) -> int:
    '''Binomial coefficient with the zero convention: 0 when b < 0, a < 0, or b > a.
    '''
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)

def product(values: tp.Iterable[tp.Any], start: tp.Any = 1) -> tp.Any:
    return reduce(operator.mul, values, start)

def fraction_to_int(value: Fraction) -> int:
    '''Collapse an exact rational that must be integral.
    '''
    if value.denominator != 1:
        raise ArithmeticError('non-integral result', value)
    return value.numerator

def is_int(value: tp.Any) -> bool:
    return isinstance(value, INT_TYPES) and not isinstance(value, bool)
