"""Soft set toolkit: Type-1/Type-2 algebra, distance/entropy/similarity
measures, an empirical axiom lab, and a profile-based decision engine."""

from .core import (
    DisjointnessClass,
    EquivalenceWitness,
    SoftSetError,
    TraceSets,
    TypeOneSoftSet,
    TypeTwoSoftSet,
    Universe,
    ValidationError,
    are_equivalent,
    classify_disjointness,
    is_deterministic_t1,
    is_deterministic_t2,
    make_absolute,
    make_null,
    t1_contains,
    t1_intersection,
    t1_union,
    t1ss,
    t2_contains,
    t2_intersection,
    t2_union,
    t2ss,
    trace_sets,
    validate_t1ss,
    validate_t2ss,
)
from .measures import (
    Measure,
    ParameterScoreProfile,
    distance,
    distance_similarity,
    entropy,
    entropy_similarity,
    euclidean,
    matrix_distance,
    mean_similarity,
    norm_euclidean,
    param_distance,
    similarity_profile,
    t2_matrix_distance,
    t2_norm_matrix_distance,
    t2_norm_param_distance,
    t2_param_distance,
)

__version__ = "0.1.0"

__all__ = [
    "DisjointnessClass",
    "EquivalenceWitness",
    "Measure",
    "ParameterScoreProfile",
    "SoftSetError",
    "TraceSets",
    "TypeOneSoftSet",
    "TypeTwoSoftSet",
    "Universe",
    "ValidationError",
    "are_equivalent",
    "classify_disjointness",
    "distance",
    "distance_similarity",
    "entropy",
    "entropy_similarity",
    "euclidean",
    "is_deterministic_t1",
    "is_deterministic_t2",
    "make_absolute",
    "make_null",
    "matrix_distance",
    "mean_similarity",
    "norm_euclidean",
    "param_distance",
    "similarity_profile",
    "t1_contains",
    "t1_intersection",
    "t1_union",
    "t1ss",
    "t2_contains",
    "t2_intersection",
    "t2_matrix_distance",
    "t2_norm_matrix_distance",
    "t2_norm_param_distance",
    "t2_param_distance",
    "t2_union",
    "t2ss",
    "trace_sets",
    "validate_t1ss",
    "validate_t2ss",
    "__version__",
]
