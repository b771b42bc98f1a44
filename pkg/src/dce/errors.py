"""Exception types shared across the package."""


class DceError(Exception):
    """Base class for all package errors."""


class DimensionError(DceError, ValueError):
    """A matrix or grid has an incompatible shape for the requested operation."""


class InfeasibleConfigError(DceError, ValueError):
    """A configuration violates a feasibility bound (e.g. the NMSE threshold)."""


class NumericalError(DceError, RuntimeError):
    """A numerical routine failed to converge or produced a degenerate result."""
