"""Exception types shared across the package."""


class ZblabError(Exception):
    """Base class for package-specific errors."""


class ZeroEnergyMode(ZblabError):
    """A mode with omega = 0 was requested (massless k = 0 is forbidden)."""


class ZeroMomentum(ZblabError):
    """An operation requiring |k| > 0 was called at k = 0."""


class TooLarge(ZblabError):
    """A construction exceeds the desk-scale size guard."""


class UnknownDof(ZblabError):
    """A degree of freedom is not present in the mode registry."""


class UnresolvedPacket(ZblabError):
    """Wave packet cannot be represented on the grid (width or Nyquist)."""


class InsufficientSamples(ZblabError):
    """Trajectory sampling is too short or irregular for spectral analysis."""


class UnsupportedFormat(ZblabError):
    """Unknown diagram output format requested."""


class NonPositiveRadius(ZblabError):
    """Scenario radii must be finite and strictly positive."""


class ConfigError(ZblabError):
    """Invalid or incomplete run configuration."""
