"""Finite oscillator on N+1 levels and its continuum limit.

The ladder coefficients

    lower_n = sqrt(n (N - n + 1) / N),   raise_n = sqrt((N - n)(n + 1) / N)

act on the level basis v_0 .. v_N; both chains terminate, so the whole
algebra lives on (N+1) x (N+1) matrices.  The commutator [A, A^dagger] is
diagonal with entries 1 - n/j (j = N/2) instead of the constant 1, and the
anticommutator gives energies (2n+1) - n^2/j in units of half a quantum.
Everything distorted by 1/j flows back to the continuum oscillator as N
grows; the checks in this module quantify that convergence on the rescaled
coordinate s_x = (x - N p) / sqrt(2 N p q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import hermite
from .kravchuk import build_kravchuk, orthonormal_functions


@dataclass(frozen=True)
class OscillatorModel:
    """Ladder coefficient tables for one finite oscillator."""

    N: int
    p: float
    energy_scale: float
    lower_coeff: np.ndarray  # lower_coeff[n] multiplies v_{n-1} in A v_n
    raise_coeff: np.ndarray  # raise_coeff[n] multiplies v_{n+1} in A^dagger v_n

    @property
    def j(self) -> float:
        return 0.5 * self.N

    @property
    def n_levels(self) -> int:
        return self.N + 1


def build_oscillator(N: int, p: float = 0.5, energy_scale: float = 1.0) -> OscillatorModel:
    N = int(N)
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    p = float(p)
    if not 0.0 < p < 1.0:
        raise ValueError(f"p must lie strictly between 0 and 1, got {p}")
    n = np.arange(N + 1, dtype=float)
    lower = np.sqrt(n * (N - n + 1.0) / N)
    raise_ = np.sqrt((N - n) * (n + 1.0) / N)
    return OscillatorModel(
        N=N, p=p, energy_scale=float(energy_scale), lower_coeff=lower, raise_coeff=raise_
    )


def annihilation_matrix(model: OscillatorModel) -> np.ndarray:
    """A in the level basis: superdiagonal of lowering coefficients."""
    return np.diag(model.lower_coeff[1:], k=1)


def creation_matrix(model: OscillatorModel) -> np.ndarray:
    """A^dagger, the exact transpose of A (all coefficients are real)."""
    return annihilation_matrix(model).T.copy()


def position_matrix(model: OscillatorModel) -> np.ndarray:
    """X = (A + A^dagger)/sqrt(2), a real symmetric tridiagonal matrix."""
    A = annihilation_matrix(model)
    return (A + A.T) / math.sqrt(2.0)


def hamiltonian_matrix(model: OscillatorModel) -> np.ndarray:
    """H = (energy scale) * (A A^dagger + A^dagger A) / 2."""
    A = annihilation_matrix(model)
    At = A.T
    return 0.5 * model.energy_scale * (A @ At + At @ A)


def commutator_spectrum(model: OscillatorModel) -> np.ndarray:
    """Diagonal of [A, A^dagger], computed from the matrices.

    The exact values are 1 - n/j; the deformation vanishes only as j grows.
    """
    A = annihilation_matrix(model)
    return np.diagonal(A @ A.T - A.T @ A).copy()


def energy_spectrum(model: OscillatorModel) -> np.ndarray:
    """Diagonal of A A^dagger + A^dagger A, the energies in units of hbar*omega/2.

    The exact values are (2n + 1) - n^2/j: equally spaced at the bottom,
    folded symmetrically around the middle level.
    """
    A = annihilation_matrix(model)
    return np.diagonal(A @ A.T + A.T @ A).copy()


@dataclass(frozen=True)
class PositionSpectrum:
    """Eigendecomposition of the position matrix.

    ``eigenvalues`` ascend and land on the uniform grid m'/sqrt(j) for
    m' = -j .. j, listed in ``m_prime``.  ``eigenvectors[:, i]`` belongs to
    ``eigenvalues[i]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    m_prime: np.ndarray


def position_spectrum(model: OscillatorModel) -> PositionSpectrum:
    lam, vec = np.linalg.eigh(position_matrix(model))
    m_prime = np.arange(model.N + 1, dtype=float) - model.j
    return PositionSpectrum(eigenvalues=lam, eigenvectors=vec, m_prime=m_prime)


def s_grid(N: int, p: float) -> tuple[np.ndarray, float]:
    """Rescaled coordinate s_x = (x - N p)/sqrt(2 N p q) and its spacing."""
    N = int(N)
    p = float(p)
    q = 1.0 - p
    spacing = 1.0 / math.sqrt(2.0 * N * p * q)
    x = np.arange(N + 1, dtype=float)
    return (x - N * p) * spacing, spacing


def _aligned_level_rows(N: int, p: float, n_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Orthonormal level rows rescaled to the s grid, signs matched to psi.

    Returns (s, g, psi) where g[n] = phi_n / sqrt(spacing) with the overall
    sign fixed at the grid point where psi_n is largest in magnitude.  Low
    rows of the recurrence stay accurate even at N in the hundreds, which is
    all the continuum checks ever ask for.
    """
    family = build_kravchuk(N, p, n_max=n_max)
    phi = orthonormal_functions(family)
    s, spacing = s_grid(N, p)
    psi = hermite.psi_table(n_max, s)
    g = phi / math.sqrt(spacing)
    for n in range(n_max + 1):
        anchor = int(np.argmax(np.abs(psi[n])))
        if g[n, anchor] * psi[n, anchor] < 0:
            g[n] = -g[n]
    return s, g, psi


@dataclass(frozen=True)
class ConvergenceTable:
    """Max deviation of the rescaled level profile from psi_n, per size."""

    level: int
    sizes: np.ndarray
    max_errors: np.ndarray
    fitted_order: float


def continuum_convergence(n: int, N_list, p: float = 0.5) -> ConvergenceTable:
    """Measure how fast level n approaches the continuum eigenfunction.

    For each N the orthonormal profile is rescaled by 1/sqrt(spacing) onto
    the s grid and compared pointwise with psi_n.  The fitted order is the
    least squares slope of log(error) against log(N), negated, so first
    order convergence reports a value near one.
    """
    n = int(n)
    if n < 0:
        raise ValueError("n must be non-negative")
    sizes = np.asarray(sorted(int(N) for N in N_list), dtype=int)
    if sizes.size < 2:
        raise ValueError("need at least two sizes to measure convergence")
    if sizes[0] <= n:
        raise ValueError(f"all sizes must exceed the level, got N={sizes[0]} for n={n}")
    errors = np.empty(sizes.size)
    for i, N in enumerate(sizes):
        _, g, psi = _aligned_level_rows(int(N), p, n)
        errors[i] = float(np.abs(g[n] - psi[n]).max())
    slope = np.polyfit(np.log(sizes.astype(float)), np.log(errors), 1)[0]
    return ConvergenceTable(level=n, sizes=sizes, max_errors=errors, fitted_order=float(-slope))


@dataclass(frozen=True)
class LadderLimitTable:
    """Errors of the rescaled ladder action against its continuum target."""

    level: int
    sizes: np.ndarray
    lower_errors: np.ndarray  # A v_n vs sqrt(n) psi_{n-1}
    raise_errors: np.ndarray  # A^dagger v_n vs sqrt(n+1) psi_{n+1}


def ladder_limit_check(n: int, N_list, p: float = 0.5) -> LadderLimitTable:
    """Compare A v_n and A^dagger v_n on the s grid with the continuum ladder.

    A v_n is lower_n times the level n-1 profile; rescaled it must approach
    sqrt(n) psi_{n-1}, and correspondingly for the raising side.  For n = 0
    the lowering error is identically zero because the chain terminates.
    """
    n = int(n)
    if n < 0:
        raise ValueError("n must be non-negative")
    sizes = np.asarray(sorted(int(N) for N in N_list), dtype=int)
    if sizes[0] <= n + 1:
        raise ValueError(f"all sizes must exceed n+1, got N={sizes[0]} for n={n}")
    lower_errors = np.empty(sizes.size)
    raise_errors = np.empty(sizes.size)
    for i, N in enumerate(sizes):
        model = build_oscillator(int(N), p)
        _, g, psi = _aligned_level_rows(int(N), p, n + 1)
        if n == 0:
            lower_errors[i] = 0.0
        else:
            lower_errors[i] = float(
                np.abs(model.lower_coeff[n] * g[n - 1] - math.sqrt(n) * psi[n - 1]).max()
            )
        raise_errors[i] = float(
            np.abs(model.raise_coeff[n] * g[n + 1] - math.sqrt(n + 1.0) * psi[n + 1]).max()
        )
    return LadderLimitTable(
        level=n, sizes=sizes, lower_errors=lower_errors, raise_errors=raise_errors
    )


class LimitRecurrenceResiduals(NamedTuple):
    three_term: float
    difference: float


def limit_recurrence_check(model: OscillatorModel, n: int) -> LimitRecurrenceResiduals:
    """Residuals of the two 1/N-corrected recurrences on the rescaled grid.

    three_term:
        2 (s_x + (2p-1) n / sqrt(2 N p q)) phi_n
            = sqrt(2(n+1)) sqrt(1 - n/N) phi_{n+1}
            + sqrt(2n) sqrt(1 - (n-1)/N) phi_{n-1}

    difference:
        sqrt(2 N p) ( sqrt((1 - x/N)(x+1)/(N p)) phi_n(x+1)
                      - sqrt((x/(N p))(1 - (x-1)/N)) phi_n(x-1) )
            = sqrt(2n (1 - (n-1)/N)) phi_{n-1}
            - sqrt(2(n+1)(1 - n/N)) phi_{n+1}

    Both are exact rearrangements of the defining recurrences, so the
    residuals sit at roundoff level for any N; as N grows the coefficients
    visibly flow to the continuum relations for 2 s psi_n and 2 psi_n'.
    """
    n = int(n)
    N = model.N
    p = model.p
    q = 1.0 - p
    if not 0 <= n < N:
        raise ValueError(f"need 0 <= n < N for the neighbour rows, got n={n}, N={N}")

    family = build_kravchuk(N, p, n_max=n + 1)
    phi = orthonormal_functions(family)
    s, _ = s_grid(N, p)
    below = phi[n - 1] if n >= 1 else np.zeros(N + 1)
    here = phi[n]
    above = phi[n + 1]

    shift = (2.0 * p - 1.0) * n / math.sqrt(2.0 * N * p * q)
    lhs_a = 2.0 * (s + shift) * here
    rhs_a = (
        math.sqrt(2.0 * (n + 1)) * math.sqrt(1.0 - n / N) * above
        + math.sqrt(2.0 * n) * math.sqrt(1.0 - (n - 1.0) / N) * below
    )
    three_term = float(np.abs(lhs_a - rhs_a).max())

    x = np.arange(N + 1, dtype=float)
    here_next = np.append(here[1:], 0.0)
    here_prev = np.insert(here[:-1], 0, 0.0)
    coeff_next = np.sqrt((1.0 - x / N) * (x + 1.0) / (N * p))
    coeff_prev = np.sqrt((x / (N * p)) * (1.0 - (x - 1.0) / N))
    lhs_b = math.sqrt(2.0 * N * p) * (coeff_next * here_next - coeff_prev * here_prev)
    rhs_b = (
        math.sqrt(2.0 * n * (1.0 - (n - 1.0) / N)) * below
        - math.sqrt(2.0 * (n + 1) * (1.0 - n / N)) * above
    )
    difference = float(np.abs(lhs_b - rhs_b).max())
    return LimitRecurrenceResiduals(three_term=three_term, difference=difference)
