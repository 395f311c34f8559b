"""Exact solutions of -a/r + br + cr^2 in any dimension, with verification.

The library constructs the closed-form ground solutions of the radial
problem on its coupling-constraint surface, generates the excited-level
hierarchy, and checks every claim against two independent oracles: a
polynomial-ansatz reduction (``qes``) and a finite-difference eigensolver
(``numerics``).  The ``pcoulomb`` command line exposes solve / verify /
oracle / eig / sweep.
"""

from .model import (
    DimensionSpec,
    LaurentForm,
    PhysicalParams,
    PotentialParams,
    classify_regime,
    dimension_reduce,
    effective_potential,
)
from .susy import (
    ClosedFormState,
    ShapeInvarianceComparison,
    Superpotential,
    ladder_apply,
    lowering_apply,
    partner_potentials,
    perturbation_residual,
    riccati_image,
    riccati_residual,
    shape_invariance_compare,
    superpotential_from_state,
)
from .exact import (
    ConstraintViolation,
    EnergyBreakdown,
    GroundSolution,
    SpectrumLevel,
    constraint_a,
    constraint_b,
    constraint_residual,
    coulomb_ground,
    dual_view_check,
    ground_state,
    hierarchy_states,
    level_superpotential,
    oscillator_view_ground,
    perturbation_ground_coulomb,
    spectrum,
)
from .qes import (
    OracleSolution,
    oracle_reduce,
    oracle_state,
    qes_constraint_polynomial,
    qes_solve,
)
from .numerics import (
    GridFunction,
    RadialGrid,
    build_grid,
    eigen_lowest,
    evaluate_state,
    h_residual,
    hamiltonian_apply,
    normalize,
    overlap,
    sturm_count,
)
from .tolerances import DEFAULT_TOLS, Tolerances

__version__ = "0.1.0"

__all__ = [
    "DimensionSpec",
    "LaurentForm",
    "PhysicalParams",
    "PotentialParams",
    "classify_regime",
    "dimension_reduce",
    "effective_potential",
    "ClosedFormState",
    "ShapeInvarianceComparison",
    "Superpotential",
    "ladder_apply",
    "lowering_apply",
    "partner_potentials",
    "perturbation_residual",
    "riccati_image",
    "riccati_residual",
    "shape_invariance_compare",
    "superpotential_from_state",
    "ConstraintViolation",
    "EnergyBreakdown",
    "GroundSolution",
    "SpectrumLevel",
    "constraint_a",
    "constraint_b",
    "constraint_residual",
    "coulomb_ground",
    "dual_view_check",
    "ground_state",
    "hierarchy_states",
    "level_superpotential",
    "oscillator_view_ground",
    "perturbation_ground_coulomb",
    "spectrum",
    "OracleSolution",
    "oracle_reduce",
    "oracle_state",
    "qes_constraint_polynomial",
    "qes_solve",
    "GridFunction",
    "RadialGrid",
    "build_grid",
    "eigen_lowest",
    "evaluate_state",
    "h_residual",
    "hamiltonian_apply",
    "normalize",
    "overlap",
    "sturm_count",
    "DEFAULT_TOLS",
    "Tolerances",
    "__version__",
]
