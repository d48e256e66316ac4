"""Exception types shared across the package."""


class ZeroHeckeError(Exception):
    """Base class; the CLI maps these to exit codes."""


class VerificationFailure(ZeroHeckeError):
    """A computed object failed a property it is guaranteed to have."""


class TheoremViolation(VerificationFailure):
    pass


class UnsupportedPattern(ZeroHeckeError, ValueError):
    pass


class RankMismatch(ZeroHeckeError, ValueError):
    pass


class NotDemipotent(ZeroHeckeError):
    pass


class NonAperiodic(ZeroHeckeError):
    pass


class SizeLimit(ZeroHeckeError, ValueError):
    pass


class NotIdempotent(ZeroHeckeError, ValueError):
    pass


class NotSemilattice(ZeroHeckeError, ValueError):
    pass


class NotComparable(ZeroHeckeError, ValueError):
    pass


class InvalidExtension(ZeroHeckeError, ValueError):
    pass


class InvalidElement(ZeroHeckeError, ValueError):
    pass


class LengthBudgetExceeded(ZeroHeckeError):
    pass


class ShapeTooTall(ZeroHeckeError, ValueError):
    pass


class TypeMismatch(ZeroHeckeError, ValueError):
    pass


class DomainError(ZeroHeckeError, ValueError):
    pass


class InadmissibleParameters(ZeroHeckeError, ValueError):
    pass
