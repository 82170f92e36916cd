"""Central finite-difference stencils on uniform grids.

Weights come from Fornberg's recursion, so any (derivative order,
accuracy order) pair is available from one routine.  Stencils are used
where a function lives on a plain grid rather than in Fourier space:
the localized-perturbation operator checks and the residual test on
shot solitary-wave profiles.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError


def fornberg_weights(x, x0, m):
    """Weights w such that sum_j w[j] f(x[j]) ~ f^{(m)}(x0).

    Standard Fornberg recursion on arbitrary nodes ``x``.
    """
    x = np.asarray(x, dtype=float)
    n = x.size
    if m >= n:
        raise DomainError(f"need more than {m} nodes for derivative order {m}")
    weights = np.zeros((n, m + 1))
    weights[0, 0] = 1.0
    c1 = 1.0
    for i in range(1, n):
        c2 = 1.0
        previous_row = weights[i - 1].copy()  # row i builds on the pre-update row
        for j in range(i):
            c3 = x[i] - x[j]
            c2 *= c3
            for k in range(min(i, m), -1, -1):
                prev = weights[j, k - 1] if k > 0 else 0.0
                weights[j, k] = ((x[i] - x0) * weights[j, k] - k * prev) / c3
        for k in range(min(i, m), -1, -1):
            prev = previous_row[k - 1] if k > 0 else 0.0
            weights[i, k] = c1 / c2 * (k * prev - (x[i - 1] - x0) * previous_row[k])
        c1 = c2
    return weights[:, m]


def central_weights(m, accuracy=6):
    """Centered stencil (offsets, weights) for d^m/dx^m at the given accuracy.

    The returned weights still need division by h^m.  Width follows the
    usual rule: m + accuracy - 1 points for even m, m + accuracy for odd.
    """
    width = m + accuracy - 1 if m % 2 == 0 else m + accuracy
    half = (width - 1) // 2
    offsets = np.arange(-half, half + 1)
    return offsets, fornberg_weights(offsets.astype(float), 0.0, m)


def apply_derivative(values, h, m, accuracy=6):
    """Apply a centered d^m/dx^m stencil to samples on a uniform grid.

    Near the ends the centered stencil would reach outside the array;
    those entries are returned as zero, so callers must keep the support
    of their data away from the boundary.
    """
    values = np.asarray(values, dtype=float)
    offsets, w = central_weights(m, accuracy)
    half = int(offsets[-1])
    out = np.zeros_like(values)
    acc = np.zeros(values.size - 2 * half)
    for off, weight in zip(offsets, w):
        acc += weight * values[half + off: values.size - half + off]
    out[half:values.size - half] = acc / h**m
    return out
