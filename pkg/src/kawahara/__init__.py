"""Traveling waves of the Kawahara equation and their transverse spectra.

Subpackages by task:

* :mod:`kawahara.fourier` -- truncated Fourier series arithmetic;
* :mod:`kawahara.periodic` -- small periodic waves (expansion + Newton);
* :mod:`kawahara.spectra` -- operator pencils, critical eigenvalues,
  Bloch sweeps and cutoff-sequence ratios;
* :mod:`kawahara.solitary` -- the reversible traveling-wave system and
  homoclinic-to-periodic shooting;
* :mod:`kawahara.evolution` -- linearized transverse dynamics;
* :mod:`kawahara.cli` -- the ``kawahara`` command-line front end.
"""

from .errors import (
    ConvergenceError,
    DegenerateSpectrumError,
    DimensionMismatchError,
    DiscretizationError,
    DomainError,
    KawaharaError,
    NoOrbitError,
    StiffnessError,
)
from .fourier import TruncatedFourierSeries, convolve, differentiate, evaluate
from .periodic import (
    PeriodicWave,
    k0,
    residual,
    residual_sup,
    solve_periodic_wave,
    speed_derivative_check,
    stokes_divisor,
    stokes_expansion,
)
from .spectra import (
    OperatorMatrix,
    SpectrumReport,
    assemble,
    bloch_sweep,
    critical_eigenvalue,
    spectrum,
    weyl_ratios,
    witness_scan,
)
from .solitary import (
    SolitaryProfile,
    integrate,
    leading_core,
    linear_eigenvalues,
    ode_rhs,
    resonance_coefficients,
    shoot_solitary,
)
from .evolution import EvolutionResult, evolve_linear, growth_curve, reduced_generator

__version__ = "0.1.0"

__all__ = [
    "ConvergenceError",
    "DegenerateSpectrumError",
    "DimensionMismatchError",
    "DiscretizationError",
    "DomainError",
    "KawaharaError",
    "NoOrbitError",
    "StiffnessError",
    "TruncatedFourierSeries",
    "convolve",
    "differentiate",
    "evaluate",
    "PeriodicWave",
    "k0",
    "residual",
    "residual_sup",
    "solve_periodic_wave",
    "speed_derivative_check",
    "stokes_divisor",
    "stokes_expansion",
    "OperatorMatrix",
    "SpectrumReport",
    "assemble",
    "bloch_sweep",
    "critical_eigenvalue",
    "spectrum",
    "weyl_ratios",
    "witness_scan",
    "SolitaryProfile",
    "integrate",
    "leading_core",
    "linear_eigenvalues",
    "ode_rhs",
    "resonance_coefficients",
    "shoot_solitary",
    "EvolutionResult",
    "evolve_linear",
    "growth_curve",
    "reduced_generator",
    "__version__",
]
