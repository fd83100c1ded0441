import typing as tp


class ErrorRankLoci(RuntimeError):
    '''
    Base of every error raised deliberately by rankloci.
    '''

class ErrorPrecondition(ErrorRankLoci, ValueError):
    '''
    An argument is outside the domain of an operation.
    '''

class ErrorContextMismatch(ErrorRankLoci):
    '''
    Operands belong to the Chow rings of different Grassmannians.
    '''

class ErrorNotInvertible(ErrorRankLoci):
    '''
    The constant term of an element is not a unit of the integers.
    '''

class ErrorUnsupportedShape(ErrorRankLoci):
    '''
    A block of a pattern has no known Grassmann class.
    '''
    def __init__(self, msg: str, cells: tp.Iterable[tp.Tuple[int, int]] = ()) -> None:
        self.cells = tuple(sorted(cells))
        super().__init__(msg, self.cells)

    def __str__(self) -> str:
        cells = ';'.join('{},{}'.format(r, c) for r, c in self.cells)
        return '{}: {}'.format(self.args[0], cells)

class ErrorPatternParse(ErrorRankLoci):
    '''
    Malformed grid or cell-list input; line and column are 1-based.
    '''
    def __init__(self, msg: str, line: int, column: int) -> None:
        self.line = line
        self.column = column
        super().__init__(msg, line, column)

    def __str__(self) -> str:
        return '{} (line {}, column {})'.format(self.args[0], self.line, self.column)

class ErrorInternalConsistency(ErrorRankLoci):
    '''
    A computed value contradicts a mathematical invariant.
    '''
