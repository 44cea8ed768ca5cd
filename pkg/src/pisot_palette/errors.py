"""Exception hierarchy shared by the library and the CLI.

Every error carries a stable ``code`` used as the CLI exit status and in the
machine-readable error JSON.
"""


class PaletteError(Exception):
    code = 1


class NotComplex(PaletteError):
    code = 10


class NotPisotUnit(PaletteError):
    code = 11


class DivisionByZero(PaletteError, ZeroDivisionError):
    code = 12


class OutOfRange(PaletteError):
    code = 13


class WindowViolation(PaletteError):
    code = 14


class DigitBudgetExceeded(PaletteError):
    code = 15


class Collinear(PaletteError):
    code = 16


class UnboundedCell(PaletteError):
    code = 17


class InconsistentPartition(PaletteError):
    code = 18


class InvalidRange(PaletteError):
    code = 19


class AlphabetTooSmall(PaletteError):
    code = 20


class WrongBase(PaletteError):
    code = 21


class BudgetExceeded(PaletteError):
    code = 22


class ParseError(PaletteError):
    code = 23

    def __init__(self, message, position=None):
        super().__init__(message if position is None else f"{message} at position {position}")
        self.position = position


class ExponentOutOfRange(ParseError):
    code = 24
