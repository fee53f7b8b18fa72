"""Pseudo-Hermitian quadratic model toolkit.

A non-Hermitian Hamiltonian built from first-order operators
b = A(x) d/dx + B(x) is conjugated to Hermitian Sturm-Liouville form by a
similarity map, reduced to Schroedinger form along two independent routes,
and solved in closed form for two shape-invariant potential families.  A
finite-difference eigensolver acts as the independent oracle for every
closed form; the verification module runs the full identity suite.
"""

from .errors import (
    ComplexExponentError,
    ComplexSpectrumError,
    DegenerateParameterError,
    DomainError,
    InvalidConfigError,
    NoBoundStateError,
    NotShapeInvariantError,
    SingularityError,
    SingularLevelError,
    SwansonError,
)
from .jacobi import jacobi_eval, jacobi_value
from .model import (
    CoefficientTriple,
    OperatorProfile,
    SwansonParams,
    chi_potential,
    hamiltonian_coeffs,
    rho_map,
    u_bar_eff,
    u_eff,
    y_of_x,
)
from .numerics import (
    BandedOperator,
    Grid,
    TridiagonalSymmetric,
    build_H_matrix,
    convergence_order,
    discretize_schrodinger,
    eta_norm,
    generalized_eigenvalues,
    pseudo_hermiticity_residual,
    richardson,
    solve_sym_tridiag_eigs,
)
from .potentials import (
    JacobiExponents,
    RosenMorseConfig,
    ScreenedConfig,
    rm_epsilon_level,
    rm_match_parameters,
    rm_profile,
    rm_reduced_potential,
    rm_spectrum,
    rm_spectrum_value,
    rm_wavefunction,
    screened_match_parameters,
    screened_profile,
    screened_reduced_potential,
    screened_spectrum,
    screened_wavefunction,
)
from .susy import (
    ParameterSequence,
    SuperpotentialParams,
    build_parameter_sequence,
    ladder_wavefunction,
    parameter_step,
    partner_potentials,
    shape_invariance_remainder,
    spectrum_from_shape_invariance,
    superpotential_eval,
)
from .verify import VerificationReport, verify_rosen_morse, verify_screened

__version__ = "0.1.0"
