"""Exception types shared across the package.

The CLI maps any of these to exit code 1 (numerical failure); bad
arguments are reported by argparse itself with exit code 2.
"""


class KawaharaError(Exception):
    """Base class for all package errors."""


class DimensionMismatchError(KawaharaError, ValueError):
    """Operands have incompatible truncation orders or shapes."""


class DomainError(KawaharaError, ValueError):
    """A parameter lies outside the admissible range of a routine."""


class ConvergenceError(KawaharaError, RuntimeError):
    """An iteration failed to converge; carries the last residual norm."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class DegenerateSpectrumError(KawaharaError, RuntimeError):
    """The critical eigenvalue cluster could not be classified."""


class DiscretizationError(KawaharaError, RuntimeError):
    """A finite-difference grid is too coarse for the requested accuracy."""


class StiffnessError(KawaharaError, RuntimeError):
    """The adaptive integrator underflowed its step size."""


class NoOrbitError(KawaharaError, RuntimeError):
    """Shooting failed to locate an orbit; carries the final mismatch."""

    def __init__(self, message, mismatch=None):
        super().__init__(message)
        self.mismatch = mismatch
