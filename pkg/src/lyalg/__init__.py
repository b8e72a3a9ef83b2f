"""Exact computations with Lie-Yamaguti algebras and their universal coacting algebras."""

__version__ = "0.1.0"

from .algebra import (  # noqa: E402
    CommAlgebra,
    InputError,
    LYAlgebra,
    LYError,
    LYLinearMap,
    abelian,
    current_algebra,
    from_leibniz,
    from_lie,
    from_malcev,
    heisenberg,
    sl2,
    truncated_polynomials,
    validate_lya,
)
from .hopf import antipode_check, hopf_envelope, universal_coaction  # noqa: E402
from .poly import Ideal, Polynomial, VarSet, buchberger, ideal_contains, normal_form  # noqa: E402
from .rep import (  # noqa: E402
    LYModule,
    factor_through,
    induced_module,
    self_module,
    universal_module_presentation,
    validate_module,
    verify_matrix_point,
    zero_module,
)
from .symmetry import (  # noqa: E402
    FiniteAbelianGroup,
    Grading,
    automorphism_equivalence_check,
    enumerate_diagonal_gradings,
    grading_to_point,
    point_from_matrix,
    point_to_grading,
)
from .universal import (  # noqa: E402
    bialgebra_structure,
    check_symmetric_quotient,
    phi_map,
    presentation,
    psi_forward,
    psi_inverse,
    verify_coideal,
    verify_comodule,
    verify_point,
)

__all__ = [
    "__version__",
    "CommAlgebra",
    "InputError",
    "LYAlgebra",
    "LYError",
    "LYLinearMap",
    "abelian",
    "current_algebra",
    "from_leibniz",
    "from_lie",
    "from_malcev",
    "heisenberg",
    "sl2",
    "truncated_polynomials",
    "validate_lya",
    "LYModule",
    "factor_through",
    "induced_module",
    "self_module",
    "universal_module_presentation",
    "validate_module",
    "verify_matrix_point",
    "zero_module",
    "FiniteAbelianGroup",
    "Grading",
    "automorphism_equivalence_check",
    "enumerate_diagonal_gradings",
    "grading_to_point",
    "point_from_matrix",
    "point_to_grading",
    "bialgebra_structure",
    "check_symmetric_quotient",
    "phi_map",
    "presentation",
    "psi_forward",
    "psi_inverse",
    "verify_coideal",
    "verify_comodule",
    "verify_point",
    "antipode_check",
    "hopf_envelope",
    "universal_coaction",
    "Ideal",
    "Polynomial",
    "VarSet",
    "buchberger",
    "ideal_contains",
    "normal_form",
]
