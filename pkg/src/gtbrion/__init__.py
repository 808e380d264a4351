"""Irreducible gl_n characters three ways: Gelfand-Tsetlin lattice points,
Weyl's character formula, and Brion's theorem over the vertex cones of the
Gelfand-Tsetlin polytope.  All arithmetic is exact."""

from .algebra import (
    EvaluationError,
    Exponent,
    LaurentPolynomial,
    Permutation,
    PoleError,
    UniPoly,
    UniRational,
    eval_at_one,
    format_rational,
    laurent_eval,
    uni_rational_sum,
    uni_reduce,
)
from .brion import (
    apply_F,
    brion_character,
    brion_limit_character,
    brion_t_space,
    component_contribution,
    grouped_contribution,
    sample_perturbation,
    sample_t_point,
    sample_x_point,
    verify_degbri,
    vertex_contribution,
    weyl_character,
    weyl_summand,
)
from .cones import (
    Cone,
    HalfOpenSimplicialCone,
    NonGenericPointError,
    SigmaTerm,
    component_rays,
    half_open_triangulate,
    sigma_terms,
    simplicial_vertex_rays,
    tangent_cone,
)
from .patterns import (
    NotDominantError,
    PatternCapError,
    enumerate_patterns,
    is_dominant,
    is_regular,
    schur_eval,
    schur_polynomial,
    weight_of,
    weyl_dimension,
)
from .polytope import (
    GammaGraph,
    OrdinarySubgraph,
    PolytopeVertex,
    enumerate_vertices,
    gamma_graph,
    is_simplicial,
    make_vertex,
    orbit,
    project_vertex,
    vertex_permutation,
)

__version__ = "0.1.0"

__all__ = [
    "EvaluationError",
    "Exponent",
    "LaurentPolynomial",
    "Permutation",
    "PoleError",
    "UniPoly",
    "UniRational",
    "eval_at_one",
    "format_rational",
    "laurent_eval",
    "uni_rational_sum",
    "uni_reduce",
    "apply_F",
    "brion_character",
    "brion_limit_character",
    "brion_t_space",
    "component_contribution",
    "grouped_contribution",
    "sample_perturbation",
    "sample_t_point",
    "sample_x_point",
    "verify_degbri",
    "vertex_contribution",
    "weyl_character",
    "weyl_summand",
    "Cone",
    "HalfOpenSimplicialCone",
    "NonGenericPointError",
    "SigmaTerm",
    "component_rays",
    "half_open_triangulate",
    "sigma_terms",
    "simplicial_vertex_rays",
    "tangent_cone",
    "NotDominantError",
    "PatternCapError",
    "enumerate_patterns",
    "is_dominant",
    "is_regular",
    "schur_eval",
    "schur_polynomial",
    "weight_of",
    "weyl_dimension",
    "GammaGraph",
    "OrdinarySubgraph",
    "PolytopeVertex",
    "enumerate_vertices",
    "gamma_graph",
    "is_simplicial",
    "make_vertex",
    "orbit",
    "project_vertex",
    "vertex_permutation",
]
