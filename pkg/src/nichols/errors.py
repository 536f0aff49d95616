"""Exception types raised by the engine."""


class NicholsError(Exception):
    """Base class for all errors raised by this package."""


class DivisionByZero(NicholsError, ZeroDivisionError):
    pass


class IncompatibleOrder(NicholsError, ValueError):
    pass


class InternalMismatch(NicholsError, AssertionError):
    """Two independent computations of the same quantity disagree."""


class LetterOutOfRange(NicholsError, IndexError):
    pass


class NotInvertible(NicholsError, ValueError):
    pass


class YangBaxterViolation(NicholsError, ValueError):
    def __init__(self, witness):
        super().__init__(f"braid relation fails on basis vector {witness}")
        self.witness = witness


class NotACharacter(NicholsError, ValueError):
    pass


class NotInClass(NicholsError, ValueError):
    pass


class NotDiagonal(NicholsError, TypeError):
    pass


class DegreeTooLarge(NicholsError):
    def __init__(self, degree, size, cap):
        super().__init__(f"degree {degree}: block of {size} columns exceeds cap {cap}")
        self.degree = degree
        self.size = size
        self.cap = cap


class NotIFinite(NicholsError):
    """No Cartan entry exists for the pair (i, j)."""

    def __init__(self, i, j):
        super().__init__(f"braiding is not {i + 1}-finite at ({i + 1}, {j + 1})")
        self.i = i
        self.j = j


class NotInAPlus(NicholsError, ValueError):
    pass


class NoConstructionPath(NicholsError, ValueError):
    pass


class NoMatch(NicholsError):
    pass


class SpecError(NicholsError, ValueError):
    """A braiding spec or job description could not be parsed."""
