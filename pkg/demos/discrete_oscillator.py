#!/usr/bin/env python3
"""The finite oscillator: a ladder that tops out.

With N + 1 levels the commutator [A, A+] is no longer the identity; its
eigenvalues slide linearly from +1 at the bottom of the ladder to -1 at
the top, and the energies fold symmetrically about the middle.
"""

import math

import numpy as np

from latticeqm import (
    annihilation_matrix,
    build_oscillator,
    build_wigner_d,
    commutator_spectrum,
    energy_spectrum,
    position_matrix,
    position_spectrum,
)


def main():
    print("N = 6 ladder")
    model = build_oscillator(6)
    comm = commutator_spectrum(model)
    energy = energy_spectrum(model)
    print(f"  {'n':>2} {'[A,A+]':>9} {'energy/(hw/2)':>14}")
    for n in range(7):
        print(f"  {n:>2} {comm[n]:>9.4f} {energy[n]:>14.4f}")
    print(f"  commutator trace {comm.sum():+.2e} (exact cancellation)")

    print()
    print("Position operator X = (A + A+)/sqrt(2), N = 6")
    spec = position_spectrum(build_oscillator(6))
    grid = np.sort(spec.m_prime / math.sqrt(3.0))
    print(f"  eigenvalues  {np.round(np.sort(spec.eigenvalues), 6)}")
    print(f"  m'/sqrt(j)   {np.round(grid, 6)}")

    print()
    print("Quarter-turn rotation columns diagonalize X (N = 12)")
    model = build_oscillator(12)
    X = position_matrix(model)
    D = build_wigner_d(12, math.pi / 2)
    lam = (model.j - np.arange(13)) / math.sqrt(model.j)
    worst = max(
        np.abs(X @ D.table[:, x] - lam[x] * D.table[:, x]).max() for x in range(13)
    )
    print(f"  worst eigenvector residual {worst:.3e}")

    print()
    print("The chain terminates at both ends")
    A = annihilation_matrix(model)
    print(f"  |A e_0|   = {np.abs(A @ np.eye(13)[0]).max():.1f}")
    print(f"  |A+ e_12| = {np.abs(A.T @ np.eye(13)[12]).max():.1f}")


if __name__ == "__main__":
    main()
