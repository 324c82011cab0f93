"""Exception hierarchy; each class carries the CLI exit status it maps to."""


class KummerError(Exception):
    exit_code = 5


class InvalidInputError(KummerError, ValueError):
    exit_code = 2


class ParseError(InvalidInputError):
    def __init__(self, msg, pos=None):
        self.pos = pos
        if pos is not None:
            msg = "%s at position %d" % (msg, pos)
        super().__init__(msg)


class NotAUnitError(InvalidInputError, ZeroDivisionError):
    pass


class HypothesisError(KummerError):
    """The input violates a standing hypothesis (e.g. non-integral special fiber)."""

    exit_code = 3


class PrecisionError(KummerError, ArithmeticError):
    exit_code = 4


class InexactDivisionError(KummerError, ArithmeticError):
    """A division that must be exact by construction was not."""

    exit_code = 5


class InvariantError(KummerError, AssertionError):
    exit_code = 5
