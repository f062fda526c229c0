"""Plane waves on the tangent momentum grid.

The admissible momenta on an N-site lattice with spacing epsilon are

    k_m = (2/epsilon) * tan(pi*m/N),   m = 0 .. N-1,

and the matching normalized plane waves are geometric sequences in the
unimodular Cayley ratio (1 + i*eps*k/2) / (1 - i*eps*k/2), which collapses to
exp(2*pi*i*m/N) per step.  The basis is therefore exactly the discrete Fourier
basis, but the momentum labels are tangents rather than equally spaced values.
For even N the slot m = N/2 sits at the pole of the tangent; its column is the
alternating sequence (-1)^j and the momentum is recorded as an infinity marker.

Transforms are computed by direct summation against the stored table.  Sizes
of interest stay well below the point where an FFT would matter.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .lattice import BoundaryRule, DifferenceKind, LatticeState, apply_difference


@dataclass(frozen=True)
class PlaneWaveBasis:
    """Momentum grid and orthonormal plane-wave table for one lattice.

    ``table[:, m]`` holds the normalized plane wave for momentum ``momenta[m]``.
    ``momenta`` contains ``inf`` at the singular slot when N is even.
    """

    n_sites: int
    epsilon: float
    momenta: np.ndarray
    table: np.ndarray

    @property
    def singular_column(self) -> int | None:
        """Index of the tangent-pole column, or None when N is odd."""
        return self.n_sites // 2 if self.n_sites % 2 == 0 else None


def build_basis(N: int, epsilon: float) -> PlaneWaveBasis:
    """Construct momenta and basis table for an N-site lattice.

    Columns are built by cumulative products of the Cayley ratio, never by
    calling a transcendental power, so each column is a true geometric
    sequence in floating point.
    """
    N = int(N)
    if N < 1:
        raise ValueError(f"N must be a positive integer, got {N}")
    eps = float(epsilon)
    if not eps > 0.0:
        raise ValueError(f"epsilon must be positive, got {epsilon!r}")

    m = np.arange(N)
    k = (2.0 / eps) * np.tan(np.pi * m / N)
    ratio = (1.0 + 0.5j * eps * k) / (1.0 - 0.5j * eps * k)
    if N % 2 == 0:
        # tangent pole: mark the momentum, the step ratio is exactly -1
        k[N // 2] = np.inf
        ratio[N // 2] = -1.0

    steps = np.ones((N, N), dtype=complex)
    steps[1:, :] = np.broadcast_to(ratio, (N - 1, N))
    table = np.cumprod(steps, axis=0) / np.sqrt(N)
    return PlaneWaveBasis(n_sites=N, epsilon=eps, momenta=k, table=table)


def _check_state(basis: PlaneWaveBasis, f: LatticeState) -> None:
    if f.n_sites != basis.n_sites:
        raise ValueError(f"state has {f.n_sites} sites, basis expects {basis.n_sites}")
    if f.epsilon != basis.epsilon:
        raise ValueError(f"state spacing {f.epsilon} differs from basis spacing {basis.epsilon}")


def forward_transform(basis: PlaneWaveBasis, f: LatticeState) -> np.ndarray:
    """Coefficients a_m = <plane wave m, f> in the summation inner product."""
    _check_state(basis, f)
    return basis.table.conj().T @ f.amplitudes


def inverse_transform(basis: PlaneWaveBasis, coefficients: np.ndarray) -> LatticeState:
    """Reassemble the state sum_m a_m * (column m)."""
    a = np.asarray(coefficients, dtype=complex)
    if a.shape != (basis.n_sites,):
        raise ValueError(f"expected {basis.n_sites} coefficients, got shape {a.shape}")
    return LatticeState(basis.table @ a, basis.epsilon)


def momentum_apply(basis: PlaneWaveBasis, f: LatticeState) -> LatticeState:
    """Forward-difference momentum operator P = -(i/epsilon) * Delta, periodic."""
    _check_state(basis, f)
    d = apply_difference(DifferenceKind.FORWARD, f, BoundaryRule.PERIODIC)
    return LatticeState(-1j / basis.epsilon * d.amplitudes, basis.epsilon)


def momentum_eigenvalues(basis: PlaneWaveBasis) -> np.ndarray:
    """Eigenvalue of P on each basis column: k_m / (1 - i*eps*k_m/2).

    Complex for k_m != 0 because the forward difference is not self-adjoint.
    The singular column is an eigenvector too, with eigenvalue 2i/epsilon
    (the pole limit), which is what this returns at that slot.
    """
    eps = basis.epsilon
    lam = np.empty(basis.n_sites, dtype=complex)
    sc = basis.singular_column
    for m, k in enumerate(basis.momenta):
        if sc is not None and m == sc:
            lam[m] = 2j / eps
        else:
            lam[m] = k / (1.0 - 0.5j * eps * k)
    return lam


def momentum_apply_symmetric(basis: PlaneWaveBasis, f: LatticeState) -> LatticeState:
    """Self-adjoint symmetrized momentum -(i/2eps)(f_{j+1} - f_{j-1}), periodic.

    This is an extension beyond the forward-difference operator: it is
    Hermitian under the summation inner product and shares the plane waves as
    eigenvectors, at the price of real eigenvalues sin(2*pi*m/N)/epsilon that
    fold the momentum axis.
    """
    _check_state(basis, f)
    v = f.amplitudes
    out = (np.roll(v, -1) - np.roll(v, 1)) * (-0.5j / basis.epsilon)
    return LatticeState(out, basis.epsilon)


def momentum_eigenvalues_symmetric(basis: PlaneWaveBasis) -> np.ndarray:
    """Real eigenvalues sin(2*pi*m/N)/epsilon of the symmetrized momentum."""
    m = np.arange(basis.n_sites)
    return np.sin(2.0 * np.pi * m / basis.n_sites) / basis.epsilon
