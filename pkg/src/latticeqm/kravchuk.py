"""Kravchuk polynomials on the binomial weight and the orthogonal d-tables.

The polynomials k_n(x) for n = 0..N are orthogonal on the sites x = 0..N with
weight rho(x) = binom(N,x) p^x q^(N-x), q = 1 - p.  Attaching sqrt(rho) and
dividing by the norm gives an orthonormal (N+1) x (N+1) table; with the
checkerboard sign (-1)^(n+x) it becomes the rotation d-table of order j = N/2
at angle beta, where p = sin^2(beta/2).

Two independent construction routes are kept deliberately separate:

* ``build_kravchuk`` runs the defining three-term recurrence in the degree.
  That route is definitional and accurate for low degrees and for moderate p,
  but loses digits on full tables at large N when p is far from 1/2.
* ``build_wigner_d`` diagonalizes the Jacobi matrix of the same recurrence.
  The columns come out orthonormal to machine precision in every regime; only
  their overall signs are left free by the eigensolver, and those are anchored
  as described in ``build_wigner_d``.
* ``wigner_d_direct`` evaluates the classical finite sum for each entry in
  exact rational arithmetic.  It shares nothing with the other two routes and
  serves as the oracle they are both tested against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np


def binomial_weights(N: int, p: float) -> np.ndarray:
    """Binomial weights rho(x) = binom(N,x) p^x q^(N-x), x = 0..N.

    Evaluated in log space so large N stays finite; the weights sum to one.
    """
    N = int(N)
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly between 0 and 1, got {p}")
    x = np.arange(N + 1)
    log_binom = (
        math.lgamma(N + 1)
        - np.array([math.lgamma(v + 1) + math.lgamma(N - v + 1) for v in x])
    )
    return np.exp(log_binom + x * math.log(p) + (N - x) * math.log(1.0 - p))


@dataclass(frozen=True)
class KravchukFamily:
    """Kravchuk values, weights and norms for one (N, p).

    ``values[n, x]`` is k_n(x) for n = 0..n_max, x = 0..N, generated by the
    three-term recurrence with k_0 = 1.  ``norms[n]`` is the weighted norm
    sqrt(sum_x rho(x) k_n(x)^2).
    """

    N: int
    p: float
    values: np.ndarray
    weights: np.ndarray
    norms: np.ndarray

    @property
    def q(self) -> float:
        return 1.0 - self.p

    @property
    def n_max(self) -> int:
        return self.values.shape[0] - 1


def build_kravchuk(N: int, p: float, n_max: int | None = None) -> KravchukFamily:
    """Generate Kravchuk polynomial values by the degree recurrence.

    (n+1) k_{n+1}(x) = ((x - N p) - n (q - p)) k_n(x) - p q (N - n + 1) k_{n-1}(x)

    starting from k_0 = 1 and k_1 = x - N p.  ``n_max`` defaults to N (the
    full square table).  The recurrence is exact as written but accumulates
    cancellation on high degrees at large N when p is far from 1/2; callers
    needing full tables in that regime should use ``build_wigner_d``.
    """
    weights = binomial_weights(N, p)  # validates N and p
    N = int(N)
    p = float(p)
    q = 1.0 - p
    if n_max is None:
        n_max = N
    n_max = int(n_max)
    if not 0 <= n_max <= N:
        raise ValueError(f"n_max must lie in 0..{N}, got {n_max}")

    x = np.arange(N + 1, dtype=float)
    values = np.empty((n_max + 1, N + 1))
    values[0] = 1.0
    if n_max >= 1:
        values[1] = x - N * p
    for n in range(1, n_max):
        values[n + 1] = (
            ((x - N * p) - n * (q - p)) * values[n]
            - p * q * (N - n + 1) * values[n - 1]
        ) / (n + 1)

    norms = np.sqrt(np.sum(weights * values**2, axis=1))
    return KravchukFamily(N=N, p=p, values=values, weights=weights, norms=norms)


def orthonormal_functions(family: KravchukFamily) -> np.ndarray:
    """Rows phi_n(x) = sqrt(rho(x)) k_n(x) / ||k_n||, orthonormal over x."""
    return np.sqrt(family.weights) * family.values / family.norms[:, None]


# ----------------------------------------------------------------------
# d-tables
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class WignerDMatrix:
    """Orthogonal rotation table of order j = N/2 at angle beta.

    ``table[n, x]`` corresponds to row index m = j - n and column index
    m' = j - x, so the (0, 0) corner carries cos(beta/2)^N.  The sign
    convention keeps that corner positive.  ``oracle_resolved_columns``
    counts how many column signs had to be anchored against the direct
    summation oracle instead of an edge entry (see ``build_wigner_d``).
    """

    N: int
    beta: float
    table: np.ndarray
    oracle_resolved_columns: int

    @property
    def j(self) -> float:
        return 0.5 * self.N

    @property
    def p(self) -> float:
        return math.sin(0.5 * self.beta) ** 2


def _validate_angle(beta: float) -> float:
    beta = float(beta)
    if not 0.0 < beta < math.pi:
        raise ValueError(f"beta must lie strictly between 0 and pi, got {beta}")
    return beta


def build_wigner_d(N: int, beta: float) -> WignerDMatrix:
    """Assemble the full d-table through the Jacobi matrix of the recurrence.

    The orthonormal Kravchuk functions at p = sin^2(beta/2) satisfy a
    symmetric three-term recurrence in the degree; its Jacobi matrix has the
    sites as simple eigenvalues and the table columns as eigenvectors.
    Diagonalizing keeps every column orthonormal to machine precision where
    running the recurrence forward would lose all digits (large N with p far
    from 1/2).

    The eigensolver leaves one sign per column undetermined.  Each sign is
    resolved once at build time, in order of preference: from the top entry
    of the column (positive in this convention), from the bottom entry
    (known checkerboard sign) when the top is below threshold, and by one
    oracle evaluation at the column's largest entry when both edges are
    negligible.  The count of oracle fallbacks is recorded on the result.
    """
    beta = _validate_angle(beta)
    N = int(N)
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    p = math.sin(0.5 * beta) ** 2
    q = 1.0 - p
    spq = math.sqrt(p * q)

    n = np.arange(N + 1, dtype=float)
    diagonal = n * (q - p) / spq
    off = np.sqrt((n[:-1] + 1.0) * (N - n[:-1]))
    J = np.diag(diagonal) + np.diag(off, 1) + np.diag(off, -1)
    lam, vec = np.linalg.eigh(J)

    expected = (n - N * p) / spq
    grid_defect = float(np.abs(lam - expected).max())
    if grid_defect > 1e-8 * max(1.0, float(np.abs(expected).max())):
        raise RuntimeError(
            f"Jacobi eigenvalues missed the site grid by {grid_defect:.3e}"
        )

    threshold = 1e-13 * max(N, 1)
    parity = np.where(np.arange(N + 1) % 2 == 0, 1.0, -1.0)
    fallbacks = 0
    signs = np.ones(N + 1)
    for x in range(N + 1):
        col = vec[:, x]
        if abs(col[0]) > threshold:
            # true top entry is sqrt(rho(x)) > 0
            signs[x] = 1.0 if col[0] > 0 else -1.0
        elif abs(col[-1]) > threshold:
            # true bottom entry is (-1)^(N+x) sqrt(rho(N-x))
            signs[x] = parity[N] * parity[x] * (1.0 if col[-1] > 0 else -1.0)
        else:
            r = int(np.argmax(np.abs(col)))
            target = parity[r] * parity[x] * wigner_d_entry(N, beta, r, x)
            signs[x] = 1.0 if target * col[r] > 0 else -1.0
            fallbacks += 1

    phi = vec * signs
    table = parity[:, None] * phi * parity[None, :]
    return WignerDMatrix(N=N, beta=beta, table=table, oracle_resolved_columns=fallbacks)


def wigner_d_entry(N: int, beta: float, n: int, x: int) -> float:
    """One d-table entry from the classical finite sum, cancellation-free.

    The alternating sum is factored as a polynomial in tan^2(beta/2) and
    evaluated in exact rational arithmetic, then recombined with the positive
    prefactor in log space.  Accuracy is limited only by the rounding of the
    inputs, not by the (often catastrophic) cancellation between terms.
    """
    beta = _validate_angle(beta)
    N, n, x = int(N), int(n), int(x)
    if not (0 <= n <= N and 0 <= x <= N):
        raise ValueError(f"indices must lie in 0..{N}, got n={n}, x={x}")
    c = math.cos(0.5 * beta)
    s = math.sin(0.5 * beta)

    s_min = max(0, n - x)
    s_max = min(N - x, n)
    t = Fraction(s) ** 2 / Fraction(c) ** 2
    total = Fraction(0)
    t_power = Fraction(1)
    for idx in range(s_min, s_max + 1):
        den = (
            math.factorial(N - x - idx)
            * math.factorial(idx)
            * math.factorial(x - n + idx)
            * math.factorial(n - idx)
        )
        term = t_power / den
        if (idx - s_min) % 2 == 1:
            term = -term
        total += term
        t_power *= t
    if total == 0:
        return 0.0

    lead = -1.0 if (x - n + s_min) % 2 == 1 else 1.0
    sign = lead * (1.0 if total > 0 else -1.0)
    log_pref = 0.5 * (
        math.lgamma(n + 1)
        + math.lgamma(N - n + 1)
        + math.lgamma(x + 1)
        + math.lgamma(N - x + 1)
    )
    a0 = N - (x - n) - 2 * s_min  # power of cos(beta/2)
    b0 = (x - n) + 2 * s_min      # power of sin(beta/2)
    log_mag = (
        log_pref
        + a0 * math.log(c)
        + b0 * math.log(s)
        + math.log(abs(total.numerator))
        - math.log(total.denominator)
    )
    return sign * math.exp(log_mag)


def wigner_d_direct(N: int, beta: float) -> np.ndarray:
    """Full d-table from the entrywise direct summation oracle."""
    N = int(N)
    out = np.empty((N + 1, N + 1))
    for n in range(N + 1):
        for x in range(N + 1):
            out[n, x] = wigner_d_entry(N, beta, n, x)
    return out


class RecurrenceResiduals(NamedTuple):
    three_term: float
    shift: float


def recurrence_residuals(D: WignerDMatrix) -> RecurrenceResiduals:
    """Max-norm residuals of the two exact contiguity relations of the table.

    ``three_term`` couples rows n-1, n, n+1 within one column:

        ((N p - x) + n (q - p)) / sqrt(p q) d[n,x]
            = sqrt(n (N-n+1)) d[n-1,x] + sqrt((N-n)(n+1)) d[n+1,x]

    ``shift`` moves along a row and trades it against the same row couple:

        sqrt((N-x)(x+1)) d[n,x+1] - sqrt(x(N-x+1)) d[n,x-1]
            = sqrt(n (N-n+1)) d[n-1,x] - sqrt((N-n)(n+1)) d[n+1,x]

    Out-of-range neighbours carry zero coefficients, so both relations are
    checked on the whole table at once.
    """
    N = D.N
    p = D.p
    q = 1.0 - p
    spq = math.sqrt(p * q)
    T = D.table
    n = np.arange(N + 1, dtype=float)
    x = np.arange(N + 1, dtype=float)

    up = np.sqrt(n * (N - n + 1.0))          # couples to row n-1
    down = np.sqrt((N - n) * (n + 1.0))      # couples to row n+1
    row_prev = np.vstack([np.zeros(N + 1), T[:-1]])
    row_next = np.vstack([T[1:], np.zeros(N + 1)])

    coeff = ((N * p - x)[None, :] + (n * (q - p))[:, None]) / spq
    three_term = float(
        np.abs(coeff * T - (up[:, None] * row_prev + down[:, None] * row_next)).max()
    )

    a = np.sqrt((N - x) * (x + 1.0))         # couples to column x+1
    b = np.sqrt(x * (N - x + 1.0))           # couples to column x-1
    col_next = np.hstack([T[:, 1:], np.zeros((N + 1, 1))])
    col_prev = np.hstack([np.zeros((N + 1, 1)), T[:, :-1]])
    lhs = a[None, :] * col_next - b[None, :] * col_prev
    rhs = up[:, None] * row_prev - down[:, None] * row_next
    shift = float(np.abs(lhs - rhs).max())
    return RecurrenceResiduals(three_term=three_term, shift=shift)


def differential_relation_residual(
    D: WignerDMatrix, sign: int = +1, h_beta: float = 1e-5
) -> float:
    """Residual of the first-order angular relation, derivative by central difference.

    With m = j - n and m' = j - x the table satisfies

        +- d/dbeta d[n,x] + ((m' - m cos beta)/sin beta) d[n,x]
            = sqrt(n (N-n+1)) d[n-1,x]          for sign = +1
            = sqrt((N-n)(n+1)) d[n+1,x]         for sign = -1

    The beta derivative is approximated by a central difference with step
    ``h_beta``, so the returned residual is O(h_beta^2) rather than zero.
    """
    if sign not in (+1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    h = float(h_beta)
    if not 0.0 < h < min(D.beta, math.pi - D.beta):
        raise ValueError(f"h_beta={h} leaves the admissible angle range")

    upper = build_wigner_d(D.N, D.beta + h)
    lower = build_wigner_d(D.N, D.beta - h)
    dd = (upper.table - lower.table) / (2.0 * h)

    N = D.N
    j = 0.5 * N
    n = np.arange(N + 1, dtype=float)
    m = j - n
    mp = j - n  # same index set along columns
    coeff = (mp[None, :] - m[:, None] * math.cos(D.beta)) / math.sin(D.beta)
    T = D.table
    if sign > 0:
        row_prev = np.vstack([np.zeros(N + 1), T[:-1]])
        rhs = np.sqrt(n * (N - n + 1.0))[:, None] * row_prev
        lhs = dd + coeff * T
    else:
        row_next = np.vstack([T[1:], np.zeros(N + 1)])
        rhs = np.sqrt((N - n) * (n + 1.0))[:, None] * row_next
        lhs = -dd + coeff * T
    return float(np.abs(lhs - rhs).max())
