"""Exception types shared across the package."""


class ReebHopfError(Exception):
    """Base class for all package-specific errors."""


class ModulusOrderError(ReebHopfError):
    """Deck-map moduli violate |lambda| >= |mu| > 1."""


class ResonanceConstraintError(ReebHopfError):
    """(lambda - mu**p) * tau != 0."""


class SearchBoundExceededError(ReebHopfError):
    """Resonance search lambda = mu**m would need m beyond the hard cap."""


class OriginExcludedError(ReebHopfError):
    """The deck map is not defined at the origin of C^2."""


class DegenerateError(ReebHopfError):
    """Boundary automorphism violates its nondegeneracy condition."""


class CaseMismatchError(ReebHopfError):
    """Operands belong to different classification cases."""


class NotExpandingError(ReebHopfError):
    """Holonomy fails phi' > 0 on the requested window."""


class MatchingFailureError(ReebHopfError):
    """Time-function interpolant lost monotonicity on the fundamental domain."""


class WindowExceededError(ReebHopfError):
    """Evaluation left the window covered by the time-function extension."""


class ZeroCouplingError(ReebHopfError):
    """Coupling constant is zero: the system decouples and is not solved here."""


class EquationViolatedError(ReebHopfError):
    """Input function does not satisfy the required functional equation."""


class DegreeBoundExceededError(ReebHopfError):
    """Coefficient slot lies beyond the supported degree bound."""


class WrongSolutionSpaceError(ReebHopfError):
    """Solution multiplier does not match the slot it is used in."""


class ResidualFailureError(ReebHopfError):
    """Constructed element failed its residual verification."""


class DimensionMismatchError(ReebHopfError):
    """Diagonal element dimensions do not match."""
