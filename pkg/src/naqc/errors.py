"""Exception types raised across the package."""


class NAQCError(Exception):
    """Base class for all errors raised by :mod:`naqc`."""


class NotHermitian(NAQCError, ValueError):
    pass


class NoConvergence(NAQCError, RuntimeError):
    pass


class NotADistribution(NAQCError, ValueError):
    pass


class InvalidState(NAQCError, ValueError):
    """Matrix fails the density-matrix checks (Hermitian, unit trace, PSD)."""


class DimensionMismatch(NAQCError, ValueError):
    pass


class UnsupportedDimension(NAQCError, ValueError):
    """Dimension outside the supported set (primes only for MUB-based code)."""


class WrongDimension(NAQCError, ValueError):
    """Operation is defined for two-qubit states only."""


class NotAPermutation(NAQCError, ValueError):
    pass
