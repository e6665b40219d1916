"""Exception types shared across the package.

Failures of mathematical preconditions get their own classes so that
tests can assert the precise failure mode.  A plain unsolvable linear
system is not an error (solve returns None); these exceptions mark
structural defects in the input data or certified-window violations.
"""


class ValidationError(ValueError):
    """Constructor rejected data that violates a structural axiom."""


class NotWellDefinedError(ValueError):
    """A map does not descend to the requested quotient."""


class NotInvertibleError(ValueError):
    """The Galois map is not bijective, so the bialgebroid is not Hopf."""

    def __init__(self, message, rank=None, dims=None):
        super().__init__(message)
        self.rank = rank
        self.dims = dims


class NotProjectiveError(ValueError):
    """No splitting exists, so the module is not projective."""


class NotDualityError(ValueError):
    """Ext against the ring does not concentrate in a single degree."""

    def __init__(self, message, degrees=None):
        super().__init__(message)
        self.degrees = degrees


class LiftFailedError(ValueError):
    """A chain-map lift was inconsistent (target not exact in range)."""


class WindowExceededError(ValueError):
    """A homological degree outside the certified window was requested."""


class DegreeOverflowError(ValueError):
    """A normal-form computation exceeded its certified degree bound."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound
