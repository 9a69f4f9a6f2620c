"""Exception hierarchy shared by all fusionscope modules."""


class FusionScopeError(Exception):
    """Base class for every error raised by fusionscope."""


class MalformedRingError(FusionScopeError, ValueError):
    """Structurally broken fusion data (index out of range, negative multiplicity, ...)."""


class AxiomViolationError(FusionScopeError):
    """The fusion data is well formed but breaks one of the ring axioms."""


class UsageError(FusionScopeError, ValueError):
    """An operation was called with incompatible arguments."""


class NotACharacterError(FusionScopeError, ValueError):
    """A generalized character with a negative coefficient was used as a character."""


class NotAGroupError(FusionScopeError, ValueError):
    """A multiplication table failed the group axioms."""


class ConsistencyError(FusionScopeError):
    """An internal cross-check failed. Should not happen on validated input."""


class ResourceLimitError(FusionScopeError):
    """An exponential search was refused or aborted because it exceeds its budget."""


class DegenerateSpectrumError(FusionScopeError):
    """No random combination of fusion matrices had a simple spectrum."""


class ConvergenceError(FusionScopeError):
    """A numerical solution did not satisfy the equations to the requested tolerance."""


class DerivationError(FusionScopeError):
    """The SU(2) constraint search found zero or several candidate decompositions."""


class InputError(FusionScopeError, ValueError):
    """Bad user-supplied data that is not fusion data proper (indicators, documents)."""
