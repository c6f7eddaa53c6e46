"""Exact structure theory for finite-dimensional Malcev algebras."""
from .algebra import (
    Algebra,
    Element,
    ValidationReport,
    adjoint_matrix,
    bracket,
    direct_sum,
    jacobian,
    quotient_algebra,
    validate,
)
from . import catalog
from .catalog import parse, serialize
from .delta import delta_element, delta_operator, delta_span, lie_closure_check
from .ideals import (
    DecompositionContext,
    IdealHandle,
    check_annihilation,
    coprime_product_check,
    correspondence_check,
    decompose,
    ideal_generated_by,
    ideal_product,
    is_i_ideal,
    is_ideal,
    j_ideal,
    j_minimality_check,
    j_nucleus,
    product_counterexample_search,
)
from .linalg import Matrix, Subspace, rref_span
from .weights import (
    adjoint_action,
    is_nilpotent_subalgebra,
    lift_weight_spaces,
    weight_decomposition,
)

__version__ = "0.1.0"
