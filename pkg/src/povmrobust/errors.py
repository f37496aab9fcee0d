"""Exception types raised across the package."""


class PovmRobustError(Exception):
    """Base class for all errors raised by this package."""


class NotSquare(PovmRobustError):
    pass


class NotHermitian(PovmRobustError):
    pass


class NotPsd(PovmRobustError):
    """An operator that should be positive semidefinite is not.

    Carries the outcome index when raised during POVM validation.
    """

    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class CompletenessViolation(PovmRobustError):
    """POVM elements do not sum to the identity within tolerance."""

    def __init__(self, message, deviation=None):
        super().__init__(message)
        self.deviation = deviation


class InvalidDistribution(PovmRobustError):
    pass


class NotOrthonormal(PovmRobustError):
    pass


class SizeMismatch(PovmRobustError):
    pass


class EtaOutOfRange(PovmRobustError):
    pass


class DimensionMismatch(PovmRobustError):
    pass


class DimensionOne(PovmRobustError):
    pass


class ShapeMismatch(PovmRobustError):
    pass


class InvalidPovm(PovmRobustError):
    pass


class InvalidEnsemble(PovmRobustError):
    pass


class InvalidState(PovmRobustError):
    pass


class InvalidJoint(PovmRobustError):
    pass


class InvalidGroup(PovmRobustError):
    pass


class SolverFailure(PovmRobustError):
    pass


class InfeasibleSubspace(PovmRobustError):
    pass


class WitnessSearchExhausted(PovmRobustError):
    pass


class UsageError(PovmRobustError):
    pass


class ParseError(PovmRobustError):
    def __init__(self, path, detail):
        super().__init__(f"{path}: {detail}")
        self.path = path
        self.detail = detail
