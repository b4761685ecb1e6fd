"""Exact computations around the stable reduction of three point covers.

Finite-field arithmetic, the Cartier operator on cyclic covers, special
deformation data, the Hasse polynomial and supersingular Legendre curves,
the PSL_2(p) action on the good components of X(2p), p-adic disk radii and
tame field degrees, and the shape of the reduction graph.
"""

from .cartier import (
    CyclicCoverDifferential,
    PlaneDifferential,
    cartier_cyclic,
    cartier_eigenvalue,
    cartier_plane,
    is_exact,
    is_logarithmic,
)
from .deformation import (
    Signature,
    SpecialDeformationDatum,
    sdd_differential,
    sdd_is_special,
    sdd_s3_transform,
    sdd_search,
    sdd_validate,
)
from .field import (
    FieldElement,
    FiniteField,
    Polynomial,
    RationalFunction,
    binom_mod_p,
    build_field,
    poly_roots,
    pth_root,
)
from .graph import ComponentNode, ReductionGraph, graph_from_datum, graph_validate_special_shape
from .modular import (
    build_x2p_datum,
    hasse_polynomial,
    is_supersingular_by_count,
    legendre_hasse_invariant,
    supersingular_lambda_set,
    verify_x2p_theorem,
)
from .padic import (
    INF,
    ValQ,
    disk_exponent,
    in_supersingular_disk,
    in_too_supersingular_disk,
    katz_consistency_check,
    modular_field_degree,
    tame_degree_bound,
)
from .psl2 import (
    CurvePoint,
    PSL2Element,
    act_on_point,
    curve_genus,
    psl2_compose,
    psl2_enumerate,
    verify_action_axioms,
)

__version__ = "0.1.0"
