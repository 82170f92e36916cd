"""Small periodic traveling waves of the Kawahara equation.

A wave of speed c is phi(x) = p(k x) with p a 2*pi-periodic profile
solving

    k^4 p'''' + k^2 p'' - c p + p^2/2 = 0,

normalized so that the cos(z) amplitude of p equals a*c, where a is the
amplitude parameter.  Two constructions are provided and cross-checked:

* ``stokes_expansion`` -- the explicit small-amplitude expansion through
  second order in a, with the wavenumber correction k = k0 + k2 a^2;
* ``solve_periodic_wave`` -- a Fourier-Galerkin Newton iteration in the
  real even cosine subspace, taking the expansion as initial guess.

Both live in an empirical smallness box |a| <= 0.5, |c| <= 0.2 inside
which the Newton solve converges and coefficients decay geometrically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionMismatchError, DomainError
from .fourier import TruncatedFourierSeries, convolve, differentiate, evaluate, sup_norm

#: empirical smallness box for the wave family
A_MAX = 0.5
C_MAX = 0.2

_MAX_NEWTON_ITERATIONS = 25


def k0(c):
    """Zero-amplitude wavenumber: sqrt((1 + sqrt(1 + 4c)) / 2).

    This is the positive root of k^4 - k^2 - c = 0, i.e. the wavenumber
    at which the linear dispersion relation closes at the first harmonic.
    """
    if c <= -0.25:
        raise DomainError(f"speed c={c} must exceed -1/4")
    return math.sqrt((1.0 + math.sqrt(1.0 + 4.0 * c)) / 2.0)


def stokes_divisor(n, c):
    """Divisor X_n = k0^4 n^4 - k0^2 n^2 - c appearing in the expansion.

    Nonzero for n >= 2 (it vanishes identically at n = 1, which is what
    forces the wavenumber correction).
    """
    if n < 2:
        raise DomainError(f"divisor defined for n >= 2, got n={n}")
    k0sq = (1.0 + math.sqrt(1.0 + 4.0 * c)) / 2.0
    if c <= -0.25:
        raise DomainError(f"speed c={c} must exceed -1/4")
    return k0sq * k0sq * n**4 - k0sq * n**2 - c


def mean_c_derivative(a):
    """Zero-mode amplitude of d(profile)/dc at c = 0: 1 - sqrt(1 - a^2/2)."""
    return 1.0 - math.sqrt(1.0 - 0.5 * a * a)


@dataclass(frozen=True)
class PeriodicWave:
    """A periodic traveling wave phi(x) = p(k x).

    ``profile`` is the real even series for p; ``residual_norm`` is the
    sup norm of the wave ODE residual actually measured for this object.
    """

    a: float
    c: float
    k: float
    profile: TruncatedFourierSeries
    source: str
    residual_norm: float

    def evaluate(self, x):
        """Physical profile phi(x) = p(k x)."""
        return np.real(evaluate(self.profile, self.k * np.asarray(x, dtype=float)))

    def to_dict(self):
        return {
            "a": self.a,
            "c": self.c,
            "k": self.k,
            "source": self.source,
            "residual_norm": self.residual_norm,
            "profile": self.profile.to_dict(),
        }

    @classmethod
    def from_dict(cls, data):
        profile = TruncatedFourierSeries.from_dict(
            data["profile"], is_real=True, is_even=True
        )
        return cls(
            a=float(data["a"]),
            c=float(data["c"]),
            k=float(data["k"]),
            profile=profile,
            source=str(data["source"]),
            residual_norm=float(data["residual_norm"]),
        )


def _require_box(a, c):
    if abs(a) > A_MAX or abs(c) > C_MAX:
        raise DomainError(
            f"(a, c) = ({a}, {c}) outside the smallness box "
            f"|a| <= {A_MAX}, |c| <= {C_MAX}"
        )


def residual(wave):
    """Wave ODE residual k^4 p'''' + k^2 p'' - c p + p*p/2 as a series."""
    p = wave.profile
    out = (
        wave.k**4 * differentiate(p, 4)
        + wave.k**2 * differentiate(p, 2)
        + (-wave.c) * p
        + 0.5 * convolve(p, p)
    )
    return out


def residual_sup(wave):
    """Sup norm of the wave ODE residual over an oversampled grid."""
    return sup_norm(residual(wave))


def stokes_expansion(a, c, order=2, N=16):
    """Small-amplitude expansion of the wave, truncated at the given order.

    order 1:  p = a c (cos z + a p1),             k = k0
    order 2:  p = a c (cos z + a p1 + a^2 p2),    k = k0 + k2 a^2

    with p1 = 1/4 - c/(4 X2) cos 2z, p2 = c^2/(8 X2 X3) cos 3z and
    k2 (4 k0^3 - 2 k0) = -c/4 + c^2/(8 X2).
    """
    _require_box(a, c)
    if order not in (1, 2):
        raise DomainError(f"expansion order must be 1 or 2, got {order}")
    if N < 3:
        raise DomainError("need N >= 3 to hold the expansion modes")
    base = k0(c)
    if c == 0.0 or a == 0.0:
        # the family degenerates to the zero profile with k = k0(c)
        profile = TruncatedFourierSeries.zero(N)
        return PeriodicWave(a, c, base if c != 0.0 else 1.0, profile,
                            f"stokes({order})", 0.0)
    X2 = stokes_divisor(2, c)
    X3 = stokes_divisor(3, c)
    b = np.zeros(N + 1)
    b[1] = a * c
    b[0] = a * c * a * 0.25
    b[2] = a * c * a * (-c / (4.0 * X2))
    if order == 2:
        b[3] = a * c * a * a * (c * c / (8.0 * X2 * X3))
        k2 = (-c / 4.0 + c * c / (8.0 * X2)) / (4.0 * base**3 - 2.0 * base)
        k = base + k2 * a * a
    else:
        k = base
    profile = TruncatedFourierSeries.from_cosines(N, b)
    wave = PeriodicWave(a, c, k, profile, f"stokes({order})", 0.0)
    return PeriodicWave(a, c, k, profile, f"stokes({order})", residual_sup(wave))


def _cosine_basis_column(p_series, m, N):
    """Cosine components of p * cos(m z), via the truncated convolution."""
    unit = np.zeros(N + 1)
    unit[m] = 1.0
    e_m = TruncatedFourierSeries.from_cosines(N, unit)
    return convolve(p_series, e_m).cosine_amplitudes()


def solve_periodic_wave(a, c, N=32, tol=1e-11, with_history=False):
    """Fourier-Galerkin Newton solve for the periodic wave.

    Unknowns are the cosine amplitudes b_q for q in {0} u {2..N} plus the
    wavenumber k; the cos(z) amplitude is pinned to a*c and the cos(z)
    residual equation determines k.  The initial guess is the order-2
    expansion.  Raises ConvergenceError after 25 iterations.
    """
    _require_box(a, c)
    if N < 16:
        raise DomainError(f"need truncation N >= 16, got {N}")
    if a == 0.0 or c == 0.0:
        profile = TruncatedFourierSeries.zero(N)
        wave = PeriodicWave(a, c, k0(c), profile, "newton", 0.0)
        return (wave, [0.0]) if with_history else wave

    seed = stokes_expansion(a, c, order=2, N=N)
    b = seed.profile.cosine_amplitudes()
    k = seed.k
    free = [0] + list(range(2, N + 1))  # rows/columns; b_1 stays pinned
    history = []

    def assemble(bvec, kval):
        profile = TruncatedFourierSeries.from_cosines(N, bvec)
        wave = PeriodicWave(a, c, kval, profile, "newton", 0.0)
        res = residual(wave)
        return profile, res

    polished = False
    for _ in range(_MAX_NEWTON_ITERATIONS):
        profile, res = assemble(b, k)
        r_all = res.cosine_amplitudes().real
        res_norm = sup_norm(res)
        history.append(res_norm)
        if res_norm <= tol:
            if polished:
                break
            polished = True  # one extra step drives coefficients to the floor
        # rows: residual components for q in free, then the q = 1 equation
        rhs = -np.concatenate([r_all[free], [r_all[1]]])
        n_unknowns = len(free) + 1
        jac = np.zeros((n_unknowns, n_unknowns))
        q_arr = np.arange(N + 1, dtype=float)
        lin_diag = k**4 * q_arr**4 - k**2 * q_arr**2 - c
        for col, m in enumerate(free):
            column = _cosine_basis_column(profile, m, N)
            column[m] += lin_diag[m]
            jac[:-1, col] = column[free]
            jac[-1, col] = column[1]
        dk_series = (4.0 * k**3) * differentiate(profile, 4) + (
            2.0 * k
        ) * differentiate(profile, 2)
        dk_col = dk_series.cosine_amplitudes().real
        jac[:-1, -1] = dk_col[free]
        jac[-1, -1] = dk_col[1]
        try:
            step = np.linalg.solve(jac, rhs)
        except np.linalg.LinAlgError as exc:
            raise ConvergenceError(
                f"singular Newton system at (a, c) = ({a}, {c})", res_norm
            ) from exc
        b[free] += step[:-1]
        k += step[-1]
    else:
        raise ConvergenceError(
            f"Newton did not reach tol={tol} in {_MAX_NEWTON_ITERATIONS} "
            f"iterations at (a, c) = ({a}, {c}); last residual {history[-1]:.3e}",
            history[-1],
        )

    profile = TruncatedFourierSeries.from_cosines(N, b)
    wave = PeriodicWave(a, c, k, profile, "newton", 0.0)
    wave = PeriodicWave(a, c, k, profile, "newton", residual_sup(wave))
    return (wave, history) if with_history else wave


def speed_derivative_check(a, h=1e-4, N=32, tol=1e-12, bound_constant=5.0):
    """Finite-difference check of the c-derivatives of the family at c = 0.

    Central differences at c = +-h of the Newton wave are compared with
    the closed forms d(k^2)/dc = 1 - q(a) and d(p)/dc = a cos z + q(a),
    where q(a) = 1 - sqrt(1 - a^2/2).  Passes when both deviations are
    below ``bound_constant * h**2``.
    """
    if not (0.0 < abs(a) <= 0.3):
        raise DomainError(f"amplitude a={a} outside (0, 0.3]")
    if not (1e-5 <= h <= 1e-3):
        raise DomainError(f"step h={h} outside [1e-5, 1e-3]")
    plus = solve_periodic_wave(a, h, N=N, tol=tol)
    minus = solve_periodic_wave(a, -h, N=N, tol=tol)
    dk2 = (plus.k**2 - minus.k**2) / (2.0 * h)
    q = mean_c_derivative(a)
    dk2_target = 1.0 - q
    dp = (plus.profile.cosine_amplitudes() - minus.profile.cosine_amplitudes()) / (
        2.0 * h
    )
    dp_target = np.zeros_like(dp)
    dp_target[0] = q
    dp_target[1] = a
    bound = bound_constant * h * h
    report = {
        "a": a,
        "h": h,
        "dk2_measured": dk2,
        "dk2_target": dk2_target,
        "dk2_error": abs(dk2 - dk2_target),
        "mode0_measured": dp[0],
        "mode0_target": q,
        "cos1_measured": dp[1],
        "cos1_target": a,
        "profile_error": float(np.max(np.abs(dp - dp_target))),
        "bound": bound,
    }
    report["passes"] = report["dk2_error"] <= bound and report["profile_error"] <= bound
    return report
