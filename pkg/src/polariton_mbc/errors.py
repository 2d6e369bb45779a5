"""Typed exceptions shared across the package."""


class PolaritonError(Exception):
    """Base class for domain errors raised by this package."""


class StopBandError(PolaritonError):
    """A propagating-wave quantity was requested inside the stop band."""


class ResonanceScanError(PolaritonError):
    """The resonance scan could not resolve or bracket the requested roots."""


class PeakExtractionError(PolaritonError):
    """A spectral peak could not be isolated on the given grid."""


class BranchError(PolaritonError):
    """The requested dispersion branch has no solution for this query."""


class StepSizeError(PolaritonError):
    """A finite-difference step is unusable for the wave being resolved."""


class ConfigError(PolaritonError):
    """Malformed configuration file, key, or value."""


class ToleranceError(PolaritonError):
    """A numerical self-check exceeded its configured tolerance."""
