"""Exception hierarchy shared by all modules."""


class RealSelfDualError(Exception):
    """Base class for every error raised by this package."""


class InvalidParameter(RealSelfDualError, ValueError):
    pass


class UnsupportedCase(InvalidParameter):
    pass


class SymmetryViolation(RealSelfDualError, ValueError):
    pass


class NonDivisible(RealSelfDualError, ValueError):
    pass


class RankMismatch(RealSelfDualError, ValueError):
    pass


class InexactDivision(RealSelfDualError, ArithmeticError):
    pass


class PairingError(RealSelfDualError, ValueError):
    pass


class GoldenDataError(RealSelfDualError):
    pass
