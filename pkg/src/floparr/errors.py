"""Exception types shared across the package.

The command line front end maps these onto stable exit codes, so new
failure modes should get their own class here rather than a bare
ValueError.
"""


class FloparrError(Exception):
    """Base class for every error this package raises deliberately."""


class InvalidType(FloparrError):
    """Family outside {A, D, E}, rank out of bounds, or bad node ids."""


class EmptySurvivingSet(FloparrError):
    """Every node was contracted; no coordinates survive."""


class MixedKinds(FloparrError):
    """Product of a central and a windowed arrangement, or unequal radii."""


class WindowTooSmall(FloparrError):
    """No generic probe point fits inside the window."""


class UnknownChamber(FloparrError):
    """Chamber id outside the enumerated graph."""


class NonComposable(FloparrError):
    """Paths or words whose endpoints do not match up."""


class Unreachable(FloparrError):
    """No positive path between the requested chambers."""


class Overflow(FloparrError):
    """An enumeration exceeded its configured cap."""


class MissingEdgeAssignment(FloparrError):
    """A representation check needs a group element for every edge."""


class BaseMismatch(FloparrError):
    """Groupoid words compared from different base chambers or endpoints."""


class NotRankTwo(FloparrError):
    """Plotting is defined for two-dimensional arrangements only."""
