"""Exception types raised by the solvers."""


class HODeltaError(Exception):
    """Base class for numerical failures in this package."""


class DomainError(HODeltaError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """Gamma evaluated within the pole guard of a non-positive integer."""


class BracketError(HODeltaError):
    """No sign change was found where one is guaranteed."""


class QuadratureError(HODeltaError):
    """Adaptive quadrature exhausted its interval budget."""


class NonUnimodalError(HODeltaError):
    """Window refinement hit a window boundary twice in a row."""
