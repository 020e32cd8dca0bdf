"""Exception hierarchy. Every error carries a short machine-readable ``reason``."""


class FIdealError(Exception):
    reason = "error"
    exit_code = 1


class InvalidArgument(FIdealError, ValueError):
    reason = "invalid-argument"
    exit_code = 2


class UnsupportedIdeal(FIdealError, ValueError):
    """Ideal outside the supported class (zero ideal, unit ideal, degree-1 generators)."""

    reason = "unsupported-ideal"
    exit_code = 2


class TooLarge(FIdealError):
    reason = "too-large"
    exit_code = 2


class UndefinedBound(FIdealError, ValueError):
    reason = "undefined-bound"
    exit_code = 2


class StructurallyImpossible(FIdealError):
    """C(n, d) is odd, so no ideal with C(n, d)/2 generators of degree d exists."""

    reason = "structurally-impossible"
    exit_code = 3


class ConstructionFailed(FIdealError):
    reason = "construction-failed"
    exit_code = 4
