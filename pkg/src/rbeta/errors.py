"""Exception types shared across the library."""


class RBetaError(Exception):
    """Base class for all library errors."""


class PoleError(RBetaError):
    """Evaluation requested at (or too close to) a gamma-type pole."""


class BranchCutError(RBetaError):
    """Evaluation requested on a branch cut."""


class DomainError(RBetaError):
    """Argument outside the operation's domain."""


class IllFormedSpec(RBetaError):
    """A series/integrand spec violates its well-definedness rules."""


class DivergentError(RBetaError):
    """The requested series diverges (or is undefined) at this argument."""


class ToleranceNotReached(RBetaError):
    """Summation/acceleration stalled above the requested tolerance."""


class NotReducible(RBetaError):
    """No denominator parameter equals 1, so no one-sided reduction exists."""


class ConstraintViolation(RBetaError):
    """A closed form's convergence/validity constraint fails."""


class OutsideAnnulus(RBetaError):
    """Series argument outside the absolute-convergence annulus."""


class MarginViolation(RBetaError):
    """Integrability margin for a classical integrand fails."""


class AnnulusViolation(RBetaError):
    """Parameter-product annulus condition for a q-integrand fails."""


class StripViolation(RBetaError):
    """Frequency outside the analyticity strip of a q-Fourier transform."""
