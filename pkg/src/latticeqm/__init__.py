"""Quantum mechanics on a discrete space and time lattice.

Lattice states with difference operators, the tangent-grid plane wave basis,
unitary Cayley propagation with its Heisenberg difference schemes, finite
oscillators built on Kravchuk polynomials and rotation d-tables, and the
continuum oscillator eigenfunctions used as the limit oracle.
"""

from .lattice import (
    BoundaryRule,
    DifferenceKind,
    LatticeState,
    apply_difference,
    inner_product,
    position_apply,
)
from .planewave import (
    PlaneWaveBasis,
    build_basis,
    forward_transform,
    inverse_transform,
    momentum_apply,
    momentum_apply_symmetric,
    momentum_eigenvalues,
    momentum_eigenvalues_symmetric,
)
from .cayley import (
    CayleyPropagator,
    IdentityCheck,
    SchemeResiduals,
    build_propagator,
    check_hermitian,
    evolution_operator,
    evolution_operator_residual,
    evolve_state,
    evolve_trajectory,
    heisenberg_evolve,
    heisenberg_scheme_residuals,
    involution_identities,
    state_residual,
)
from .kravchuk import (
    KravchukFamily,
    RecurrenceResiduals,
    WignerDMatrix,
    binomial_weights,
    build_kravchuk,
    build_wigner_d,
    differential_relation_residual,
    orthonormal_functions,
    recurrence_residuals,
    wigner_d_direct,
    wigner_d_entry,
)
from .oscillator import (
    ConvergenceTable,
    LadderLimitTable,
    LimitRecurrenceResiduals,
    OscillatorModel,
    PositionSpectrum,
    annihilation_matrix,
    build_oscillator,
    commutator_spectrum,
    continuum_convergence,
    creation_matrix,
    energy_spectrum,
    hamiltonian_matrix,
    ladder_limit_check,
    limit_recurrence_check,
    position_matrix,
    position_spectrum,
    s_grid,
)
from .hermite import (
    HermiteRecurrenceResiduals,
    eval_psi,
    gram_matrix,
    ladder_apply,
    psi_derivative,
    psi_table,
    recurrence_residual,
    schrodinger_residual,
)
from .report import CheckRow, VerificationReport, export_report
from .cli import RunConfig, build_verification_report, run

__version__ = "0.1.0"

__all__ = [
    "BoundaryRule",
    "DifferenceKind",
    "LatticeState",
    "apply_difference",
    "inner_product",
    "position_apply",
    "PlaneWaveBasis",
    "build_basis",
    "forward_transform",
    "inverse_transform",
    "momentum_apply",
    "momentum_apply_symmetric",
    "momentum_eigenvalues",
    "momentum_eigenvalues_symmetric",
    "CayleyPropagator",
    "IdentityCheck",
    "SchemeResiduals",
    "build_propagator",
    "check_hermitian",
    "evolution_operator",
    "evolution_operator_residual",
    "evolve_state",
    "evolve_trajectory",
    "heisenberg_evolve",
    "heisenberg_scheme_residuals",
    "involution_identities",
    "state_residual",
    "KravchukFamily",
    "RecurrenceResiduals",
    "WignerDMatrix",
    "binomial_weights",
    "build_kravchuk",
    "build_wigner_d",
    "differential_relation_residual",
    "orthonormal_functions",
    "recurrence_residuals",
    "wigner_d_direct",
    "wigner_d_entry",
    "ConvergenceTable",
    "LadderLimitTable",
    "LimitRecurrenceResiduals",
    "OscillatorModel",
    "PositionSpectrum",
    "annihilation_matrix",
    "build_oscillator",
    "commutator_spectrum",
    "continuum_convergence",
    "creation_matrix",
    "energy_spectrum",
    "hamiltonian_matrix",
    "ladder_limit_check",
    "limit_recurrence_check",
    "position_matrix",
    "position_spectrum",
    "s_grid",
    "HermiteRecurrenceResiduals",
    "eval_psi",
    "gram_matrix",
    "ladder_apply",
    "psi_derivative",
    "psi_table",
    "recurrence_residual",
    "schrodinger_residual",
    "CheckRow",
    "VerificationReport",
    "export_report",
    "RunConfig",
    "build_verification_report",
    "run",
]
