"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by twistalg."""


class LatticeError(AlgebraError):
    pass


class NotALattice(LatticeError):
    def __init__(self, pair, kind):
        self.pair = pair
        self.kind = kind
        super().__init__(f"elements {pair[0]} and {pair[1]} have no {kind}")


class NotBounded(LatticeError):
    pass


class CycleInOrder(LatticeError):
    pass


class SignatureMismatch(AlgebraError):
    pass


class SizeBound(AlgebraError):
    pass


class DenseCharacterizationMismatch(AlgebraError):
    pass


class PositiveCharacterizationMismatch(AlgebraError):
    pass


class NotASubalgebra(AlgebraError):
    pass


class ProjectionNotOnto(AlgebraError):
    pass


class NotAnIFilter(AlgebraError):
    def __init__(self, filterset):
        self.filterset = filterset
        super().__init__(filterset.describe())


class NotACongruence(AlgebraError):
    pass


class MultipleCenters(AlgebraError):
    pass


class NotBijective(AlgebraError):
    pass


class TheoremViolation(AlgebraError):
    """A property that holds for every algebra of the claimed variety failed.

    Only reachable from inputs that slipped past the variety checkers.
    """


class ParseError(AlgebraError):
    def __init__(self, message, line=None, col=None):
        self.message = message
        self.line = line
        self.col = col
        if line is None:
            super().__init__(message)
        else:
            super().__init__(f"{line}:{col}: {message}")


class UnknownElement(ParseError):
    pass


class ArityMismatch(ParseError):
    pass


class DuplicateOp(ParseError):
    pass
