"""Truncated Fourier series on [0, 2*pi).

This is the coefficient substrate for wave profiles, operators and
residuals.  A series stores modes q = -N..N in a dense complex array
(array index 0 corresponds to mode -N).  Products are Cauchy
convolutions truncated back to |q| <= N, which is exactly the Galerkin
projection the wave solvers rely on.  No fast transforms: N stays small
(<= 256) and the O(N^2) product keeps the truncation semantics exact.

Values are immutable after construction and safe to share across
workers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, DomainError

#: largest supported truncation order
MAX_ORDER = 256

_FLAG_TOL = 1e-12


@dataclass(frozen=True)
class TruncatedFourierSeries:
    """Fourier coefficients c_q, q = -N..N, of a 2*pi-periodic function.

    Parameters
    ----------
    N : int
        Truncation order; 2N+1 coefficients are stored.
    coeffs : ndarray
        Complex coefficients ordered from mode -N to mode +N.
    is_real, is_even : bool
        Advisory symmetry flags: ``is_real`` asserts c_{-q} = conj(c_q),
        ``is_even`` asserts c_{-q} = c_q.  They are re-checked on
        construction in debug builds and propagated conservatively.
    """

    N: int
    coeffs: np.ndarray
    is_real: bool = False
    is_even: bool = False

    def __post_init__(self):
        if not (0 <= self.N <= MAX_ORDER):
            raise DomainError(f"truncation order N={self.N} outside [0, {MAX_ORDER}]")
        coeffs = np.array(self.coeffs, dtype=complex)
        if coeffs.shape != (2 * self.N + 1,):
            raise DimensionMismatchError(
                f"expected {2 * self.N + 1} coefficients for N={self.N}, "
                f"got shape {coeffs.shape}"
            )
        coeffs.setflags(write=False)
        object.__setattr__(self, "coeffs", coeffs)
        if __debug__:
            scale = max(float(np.max(np.abs(coeffs))), 1.0)
            if self.is_real:
                defect = np.max(np.abs(coeffs[::-1].conj() - coeffs))
                assert defect <= _FLAG_TOL * scale, (
                    f"is_real flag violated (defect {defect:.3e})"
                )
            if self.is_even:
                defect = np.max(np.abs(coeffs[::-1] - coeffs))
                assert defect <= _FLAG_TOL * scale, (
                    f"is_even flag violated (defect {defect:.3e})"
                )

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, N):
        return cls(N, np.zeros(2 * N + 1, dtype=complex), is_real=True, is_even=True)

    @classmethod
    def from_modes(cls, N, modes, is_real=False, is_even=False):
        """Build a series from a {mode: coefficient} mapping."""
        coeffs = np.zeros(2 * N + 1, dtype=complex)
        for q, value in modes.items():
            if abs(q) > N:
                raise DimensionMismatchError(f"mode {q} exceeds truncation {N}")
            coeffs[q + N] = value
        return cls(N, coeffs, is_real=is_real, is_even=is_even)

    @classmethod
    def from_cosines(cls, N, amplitudes):
        """Build a real even series from cosine amplitudes b_0..b_M.

        The function is b_0 + sum_{q>=1} b_q cos(q z), so modes +-q each
        receive b_q / 2.
        """
        amplitudes = np.asarray(amplitudes, dtype=float)
        if amplitudes.ndim != 1 or amplitudes.size > N + 1:
            raise DimensionMismatchError(
                f"need at most {N + 1} cosine amplitudes, got {amplitudes.shape}"
            )
        coeffs = np.zeros(2 * N + 1, dtype=complex)
        coeffs[N] = amplitudes[0]
        for q in range(1, amplitudes.size):
            coeffs[N + q] = amplitudes[q] / 2
            coeffs[N - q] = amplitudes[q] / 2
        return cls(N, coeffs, is_real=True, is_even=True)

    @classmethod
    def from_samples(cls, N, values):
        """Recover coefficients from samples on an equispaced grid.

        ``values[j]`` must be f(2*pi*j/M) with M >= 2N+1; the discrete
        transform is exact for functions band-limited to |q| <= N.
        """
        values = np.asarray(values, dtype=complex)
        M = values.size
        if M < 2 * N + 1:
            raise DimensionMismatchError(f"need at least {2 * N + 1} samples, got {M}")
        fhat = np.fft.fft(values) / M
        coeffs = np.zeros(2 * N + 1, dtype=complex)
        coeffs[N:] = fhat[: N + 1]
        coeffs[:N] = fhat[M - N:]
        return cls(N, coeffs)

    # -- accessors ---------------------------------------------------

    def mode(self, q):
        """Coefficient of e^{i q z}; zero outside the truncation."""
        if abs(q) > self.N:
            return 0.0 + 0.0j
        return complex(self.coeffs[q + self.N])

    def cosine_amplitude(self, q):
        """Amplitude of cos(q z): c_q + c_{-q} for q >= 1, c_0 for q = 0."""
        if q == 0:
            return complex(self.mode(0))
        return complex(self.mode(q) + self.mode(-q))

    def cosine_amplitudes(self):
        """All cosine amplitudes b_0..b_N as a real array (real-even series)."""
        b = np.empty(self.N + 1)
        b[0] = self.coeffs[self.N].real
        b[1:] = 2 * self.coeffs[self.N + 1:].real
        return b

    # -- algebra -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedFourierSeries):
            return NotImplemented
        if other.N != self.N:
            raise DimensionMismatchError(f"truncation mismatch: {self.N} vs {other.N}")
        return TruncatedFourierSeries(
            self.N,
            self.coeffs + other.coeffs,
            is_real=self.is_real and other.is_real,
            is_even=self.is_even and other.is_even,
        )

    def __sub__(self, other):
        if not isinstance(other, TruncatedFourierSeries):
            return NotImplemented
        return self + (-1.0) * other

    def __mul__(self, scalar):
        if not np.isscalar(scalar):
            return NotImplemented
        value = complex(scalar)
        return TruncatedFourierSeries(
            self.N,
            self.coeffs * value,
            is_real=self.is_real and value.imag == 0.0,
            is_even=self.is_even,
        )

    __rmul__ = __mul__

    # -- serialization -----------------------------------------------

    def to_dict(self):
        """JSON form: {"N": ..., "re": [...], "im": [...]}, modes -N..N."""
        return {
            "N": int(self.N),
            "re": [float(v) for v in self.coeffs.real],
            "im": [float(v) for v in self.coeffs.imag],
        }

    @classmethod
    def from_dict(cls, data, is_real=False, is_even=False):
        coeffs = np.asarray(data["re"], dtype=float) + 1j * np.asarray(
            data["im"], dtype=float
        )
        return cls(int(data["N"]), coeffs, is_real=is_real, is_even=is_even)


def convolve(f, g):
    """Truncated product of two series sharing the same truncation order.

    Returns the Cauchy convolution with modes |q| > N dropped.  Realness
    and evenness flags propagate (real*real -> real, even*even -> even).
    """
    if f.N != g.N:
        raise DimensionMismatchError(f"truncation mismatch: {f.N} vs {g.N}")
    full = np.convolve(f.coeffs, g.coeffs)
    mid = full[f.N: 3 * f.N + 1]
    return TruncatedFourierSeries(
        f.N,
        mid,
        is_real=f.is_real and g.is_real,
        is_even=f.is_even and g.is_even,
    )


def differentiate(f, m, gamma=0.0):
    """Apply (d/dz + i*gamma)^m modewise: c_q -> (i (q + gamma))^m c_q.

    For gamma = 0 realness is preserved and evenness is preserved iff m
    is even.  Orders m in 1..6 are supported.
    """
    if m not in (1, 2, 3, 4, 5, 6):
        raise DomainError(f"derivative order m={m} outside 1..6")
    q = np.arange(-f.N, f.N + 1)
    symbol = (1j * (q + gamma)) ** m
    if gamma == 0.0:
        return TruncatedFourierSeries(
            f.N,
            symbol * f.coeffs,
            is_real=f.is_real,
            is_even=f.is_even and m % 2 == 0,
        )
    return TruncatedFourierSeries(f.N, symbol * f.coeffs)


def evaluate(f, z):
    """Evaluate sum_q c_q e^{i q z} at a point or array of points."""
    z = np.asarray(z, dtype=float)
    q = np.arange(-f.N, f.N + 1)
    phases = np.exp(1j * np.multiply.outer(z, q))
    out = phases @ f.coeffs
    return out if out.ndim else complex(out)


def sup_norm(f, oversample=4):
    """Max of |f| over an equispaced grid of ``oversample*N + 4`` points."""
    z = np.linspace(0.0, 2 * np.pi, oversample * f.N + 4, endpoint=False)
    return float(np.max(np.abs(evaluate(f, z))))
