"""Exception types shared across the package."""


class WavemodelError(Exception):
    """Base class for all package errors."""


class UnsupportedSuperpositionError(WavemodelError):
    """Raised when a per-component evaluator receives a multi-mode model."""


class WrongKindError(WavemodelError):
    """Raised when an operation receives the wrong particle kind."""


class InvalidGridError(WavemodelError):
    """Raised for grid parameters below the supported minimum."""


class UnknownEquationError(WavemodelError):
    """Raised for an unrecognized equation identifier."""


class OrderUndefinedError(WavemodelError):
    """Raised when a residual sits at the round-off floor and no
    convergence order can be extrapolated."""


class SuperluminalBoostError(WavemodelError):
    """Raised for boost speeds at or above the vacuum light speed."""


class DegenerateFrameError(WavemodelError):
    """Raised when the velocity-addition denominator vanishes."""


class RelativisticRecoilError(WavemodelError):
    """Raised when the recoil-speed formula is applied outside its
    low-velocity domain of validity."""


class OutOfDomainError(WavemodelError):
    """Raised for positions outside a sampled potential profile."""


class ConfigError(WavemodelError):
    """Raised for invalid CLI/config input."""
