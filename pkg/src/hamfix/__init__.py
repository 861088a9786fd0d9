"""Exact fixed-point data toolkit for Hamiltonian circle actions.

Everything is computed in exact rational arithmetic: localization integrals
of equivariant Chern classes, the canonical module basis and its integrality
filters, labeled isotropy multigraphs with their decision procedures, and
the complete classification pipeline for 6-dimensional actions whose even
Betti numbers are all one.
"""

from .laurent import LaurentPoly, SurfaceClass, elementary_symmetric, surface_inverse_euler
from .fixeddata import (
    FixedPointData,
    IsolatedFixedPoint,
    SurfaceFixedComponent,
    betti_numbers,
    check_gamma_order,
    check_index_bound,
    check_index_order,
    derive_invariants,
    reverse_action,
)
from .localization import (
    ChernWord,
    EquivariantClass,
    abbv_integrate,
    chern_number,
    chi_y_chern,
    chi_y_fixed,
    restrict_chern,
    restrict_omega,
    vanishing_suite,
)
from .cohomology import (
    BasisClass,
    ChernVector,
    RingPresentation,
    canonical_basis,
    dual_basis,
    express_in_basis,
    integrality_check,
    ring_presentation,
    sphere_pushforward,
    total_chern,
)
from .multigraph import (
    LabeledMultigraph,
    classify_multigraph,
    classify_simple,
    check_compatibility,
    enumerate_graphs,
    twoedges_facts,
    weights_from_graph,
)
from .consistency import ellipsoid_volume_ratio, reduced_space_classes, wu_check
from .classifier import (
    Verdict,
    case_c_data,
    case_d_data,
    classify,
    cp3_data,
    enumerate_and_classify,
    fourdim_euler_check,
    gras_data,
    multiedge_family_data,
    verify_surface_equations,
)

__version__ = "0.1.0"

__all__ = [
    "LaurentPoly",
    "SurfaceClass",
    "elementary_symmetric",
    "surface_inverse_euler",
    "FixedPointData",
    "IsolatedFixedPoint",
    "SurfaceFixedComponent",
    "betti_numbers",
    "check_gamma_order",
    "check_index_bound",
    "check_index_order",
    "derive_invariants",
    "reverse_action",
    "ChernWord",
    "EquivariantClass",
    "abbv_integrate",
    "chern_number",
    "chi_y_chern",
    "chi_y_fixed",
    "restrict_chern",
    "restrict_omega",
    "vanishing_suite",
    "BasisClass",
    "ChernVector",
    "RingPresentation",
    "canonical_basis",
    "dual_basis",
    "express_in_basis",
    "integrality_check",
    "ring_presentation",
    "sphere_pushforward",
    "total_chern",
    "LabeledMultigraph",
    "classify_multigraph",
    "classify_simple",
    "check_compatibility",
    "enumerate_graphs",
    "twoedges_facts",
    "weights_from_graph",
    "ellipsoid_volume_ratio",
    "reduced_space_classes",
    "wu_check",
    "Verdict",
    "case_c_data",
    "case_d_data",
    "classify",
    "cp3_data",
    "enumerate_and_classify",
    "fourdim_euler_check",
    "gras_data",
    "multiedge_family_data",
    "verify_surface_equations",
]
