"""mmpkit: exact-arithmetic toolkit for surface singularities, toric
cones, and the classical surface minimal model program."""

from .dualgraph import (
    Boundary,
    BoundaryComponent,
    BoundaryPoint,
    DiscrepancyReport,
    DualGraph,
    EdgePoint,
    FreePoint,
    SingularityClass,
    Vertex,
    blowup_vertex,
    check_contractible,
    detect_du_val,
    discrepancies,
)
from .kodaira import (
    KappaEstimate,
    PairClass,
    classify_pair_on_curve,
    curve_kappa,
    curve_plurigenus,
    estimate_kappa,
    fano_pair_on_p1_check,
    plane_curve_genus,
    riemann_roch_curve,
)
from .linalg import (
    integer_kernel,
    is_negative_definite,
    primitive,
    smith_normal_form,
    solve_exact,
)
from .surface import (
    MmpOutcome,
    MmpStep,
    MmpTrace,
    SurfaceLattice,
    adjunction_genus,
    castelnuovo_contract,
    cone_rays_rank2,
    enumerate_minus_one_classes,
    is_ample_kleiman,
    is_nef,
    make_blowup_p2,
    make_quadric,
    pushforward_class,
    riemann_roch_surface,
    run_classical_mmp,
)
from .toric import (
    Cone,
    ConeClass,
    ToricClassification,
    classify_cone,
    cone_from_rays,
    facets,
    lattice_points_at_or_below_one,
    q_gorenstein_functional,
    toric_discrepancy,
)

__version__ = "0.1.0"

__all__ = [
    "Boundary",
    "BoundaryComponent",
    "BoundaryPoint",
    "Cone",
    "ConeClass",
    "DiscrepancyReport",
    "DualGraph",
    "EdgePoint",
    "FreePoint",
    "KappaEstimate",
    "MmpOutcome",
    "MmpStep",
    "MmpTrace",
    "PairClass",
    "SingularityClass",
    "SurfaceLattice",
    "ToricClassification",
    "Vertex",
    "adjunction_genus",
    "blowup_vertex",
    "castelnuovo_contract",
    "check_contractible",
    "classify_cone",
    "classify_pair_on_curve",
    "cone_from_rays",
    "cone_rays_rank2",
    "curve_kappa",
    "curve_plurigenus",
    "detect_du_val",
    "discrepancies",
    "enumerate_minus_one_classes",
    "estimate_kappa",
    "facets",
    "fano_pair_on_p1_check",
    "integer_kernel",
    "is_ample_kleiman",
    "is_negative_definite",
    "is_nef",
    "lattice_points_at_or_below_one",
    "make_blowup_p2",
    "make_quadric",
    "plane_curve_genus",
    "primitive",
    "pushforward_class",
    "q_gorenstein_functional",
    "riemann_roch_curve",
    "riemann_roch_surface",
    "run_classical_mmp",
    "smith_normal_form",
    "solve_exact",
    "toric_discrepancy",
]
