"""Continuum harmonic oscillator eigenfunctions, used as the limit oracle.

psi_n(s) = (2^n n! sqrt(pi))^(-1/2) H_n(s) exp(-s^2/2), generated directly in
normalized form:

    psi_{n+1} = (2 s psi_n - sqrt(2n) psi_{n-1}) / sqrt(2(n+1))

so every intermediate stays of order one and no factorial ever appears.
Derivatives are taken analytically through psi_n' = sqrt(2n) psi_{n-1} - s psi_n.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np


def psi_table(n_max: int, s) -> np.ndarray:
    """Rows psi_0(s) .. psi_{n_max}(s) on the given grid."""
    n_max = int(n_max)
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    s = np.atleast_1d(np.asarray(s, dtype=float))
    out = np.empty((n_max + 1, s.size))
    out[0] = math.pi ** -0.25 * np.exp(-0.5 * s * s)
    if n_max >= 1:
        out[1] = math.sqrt(2.0) * s * out[0]
    for n in range(1, n_max):
        out[n + 1] = (2.0 * s * out[n] - math.sqrt(2.0 * n) * out[n - 1]) / math.sqrt(
            2.0 * (n + 1)
        )
    return out


def eval_psi(n: int, s):
    """psi_n evaluated at a scalar or array argument."""
    n = int(n)
    if n < 0:
        raise ValueError("n must be non-negative")
    scalar = np.isscalar(s)
    values = psi_table(n, s)[n]
    return float(values[0]) if scalar else values


def psi_derivative(n: int, s):
    """Analytic first derivative sqrt(2n) psi_{n-1} - s psi_n."""
    n = int(n)
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    table = psi_table(max(n, 1), s_arr)
    lower = table[n - 1] if n >= 1 else np.zeros_like(s_arr)
    values = math.sqrt(2.0 * n) * lower - s_arr * table[n]
    return float(values[0]) if np.isscalar(s) else values


def schrodinger_residual(n: int, s) -> float:
    """Max residual of -psi'' + s^2 psi - (2n+1) psi on the grid.

    The second derivative is assembled analytically from lower rows, so the
    residual probes the recurrence algebra rather than a finite difference.
    """
    n = int(n)
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    table = psi_table(max(n, 2), s_arr)
    psi = table[n]
    below1 = table[n - 1] if n >= 1 else np.zeros_like(s_arr)
    below2 = table[n - 2] if n >= 2 else np.zeros_like(s_arr)
    second = (
        math.sqrt(4.0 * n * (n - 1)) * below2
        - 2.0 * s_arr * math.sqrt(2.0 * n) * below1
        + (s_arr * s_arr - 1.0) * psi
    )
    return float(np.abs(-second + s_arr * s_arr * psi - (2 * n + 1) * psi).max())


class HermiteRecurrenceResiduals(NamedTuple):
    algebraic: float
    derivative: float


def recurrence_residual(n: int, s_grid, h: float = 1e-5) -> HermiteRecurrenceResiduals:
    """Residuals of the two defining relations on a grid.

    ``algebraic`` checks 2 s psi_n = sqrt(2(n+1)) psi_{n+1} + sqrt(2n) psi_{n-1}
    exactly (up to roundoff).  ``derivative`` checks
    2 psi_n' = sqrt(2n) psi_{n-1} - sqrt(2(n+1)) psi_{n+1} with the derivative
    taken by a central difference of step h, so it carries an O(h^2) floor.
    """
    n = int(n)
    s = np.atleast_1d(np.asarray(s_grid, dtype=float))
    table = psi_table(n + 1, s)
    below = table[n - 1] if n >= 1 else np.zeros_like(s)
    above = table[n + 1]
    algebraic = float(
        np.abs(
            2.0 * s * table[n]
            - math.sqrt(2.0 * (n + 1)) * above
            - math.sqrt(2.0 * n) * below
        ).max()
    )
    centered = (eval_psi(n, s + h) - eval_psi(n, s - h)) / (2.0 * h)
    derivative = float(
        np.abs(
            2.0 * centered - (math.sqrt(2.0 * n) * below - math.sqrt(2.0 * (n + 1)) * above)
        ).max()
    )
    return HermiteRecurrenceResiduals(algebraic=algebraic, derivative=derivative)


def ladder_apply(which: str, n: int, s):
    """Apply the continuum ladder operator (s -+ d/ds)/sqrt(2) to psi_n.

    ``which`` is "raise" or "lower"; the result equals sqrt(n+1) psi_{n+1}
    or sqrt(n) psi_{n-1} respectively, and is evaluated from the analytic
    derivative so no step size enters.
    """
    n = int(n)
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    psi = eval_psi(n, s_arr)
    dpsi = psi_derivative(n, s_arr)
    if which == "raise":
        values = (s_arr * psi - dpsi) / math.sqrt(2.0)
    elif which == "lower":
        values = (s_arr * psi + dpsi) / math.sqrt(2.0)
    else:
        raise ValueError(f'which must be "raise" or "lower", got {which!r}')
    return float(values[0]) if np.isscalar(s) else values


def gram_matrix(n_max: int, half_width: float | None = None, samples: int = 4001) -> np.ndarray:
    """Trapezoidal Gram matrix of psi_0 .. psi_{n_max}.

    The default window extends ten units beyond the classical turning point
    of the highest level, where the integrand has long since collapsed, so
    the quadrature error is dominated by the trapezoidal rule itself.
    """
    n_max = int(n_max)
    if half_width is None:
        half_width = math.sqrt(2.0 * n_max + 1.0) + 10.0
    s = np.linspace(-half_width, half_width, int(samples))
    table = psi_table(n_max, s)
    return np.trapezoid(table[:, None, :] * table[None, :, :], s, axis=2)
