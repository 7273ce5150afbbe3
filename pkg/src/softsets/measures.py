"""Distance, entropy and similarity measures for soft sets.

Scale conventions:

* The unnormalized distances are exact non-negative integers.
* Normalized distances, entropy and all similarity values are exact
  ``fractions.Fraction`` values; only the two Euclidean-style distances are
  floats (they involve square roots).
* Degenerate divisors are defined away rather than raised: a normalized
  distance over parameter-empty operands is 0, the Jaccard ratio of two empty
  images is 1, and the entropy of an image-free structure is 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from . import kernels
from .core import (
    TypeOneSoftSet,
    TypeTwoSoftSet,
    WrongMeasureArityError,
    _require_same_universe,
    t2_intersection,
    t2_union,
)
from .encode import encode_t1, encode_t2, t1_pair_context, t2_pair_context


class Measure(Enum):
    """Closed catalogue of distance measures, keyed by their CLI tokens."""

    EUCLIDEAN = "e"
    NORM_EUCLIDEAN = "q"
    PARAM_T1 = "dp"
    MATRIX_T1 = "dm"
    PARAM_T2 = "Dp"
    MATRIX_T2 = "Dm"
    NORM_PARAM_T2 = "NDp"
    NORM_MATRIX_T2 = "NDm"

    @property
    def is_t2(self) -> bool:
        return self in (
            Measure.PARAM_T2,
            Measure.MATRIX_T2,
            Measure.NORM_PARAM_T2,
            Measure.NORM_MATRIX_T2,
        )

    @property
    def is_normalized(self) -> bool:
        return self in (Measure.NORM_PARAM_T2, Measure.NORM_MATRIX_T2)


@dataclass(frozen=True)
class ParameterScoreProfile:
    """Per-primary-parameter similarity scores over the union of primaries."""

    scores: dict[str, Fraction]

    def __post_init__(self) -> None:
        for v in self.scores.values():
            if not 0 <= v <= 1:
                raise ValueError(f"profile score {v} outside [0, 1]")

    def __getitem__(self, param: str) -> Fraction:
        return self.scores[param]

    def as_decimals(self, places: int = 3) -> dict[str, str]:
        return {k: f"{float(v):.{places}f}" for k, v in sorted(self.scores.items())}


# ---- Type-1 distances -------------------------------------------------------

def euclidean(a: TypeOneSoftSet, b: TypeOneSoftSet) -> float:
    """Parameter symmetric difference plus the l2 norm of per-parameter image
    differences.  Violates the triangle inequality; kept for classification."""
    _require_same_universe(a, b)
    ctx = t1_pair_context(a, b)
    sym, ss = kernels.t1_e_parts(encode_t1(a, ctx), encode_t1(b, ctx), ctx)
    return sym + math.sqrt(ss)


def norm_euclidean(a: TypeOneSoftSet, b: TypeOneSoftSet) -> float:
    """Size-normalized variant of :func:`euclidean`; 0 when both parameter
    sets are empty.  Also violates the triangle inequality."""
    _require_same_universe(a, b)
    ctx = t1_pair_context(a, b)
    sym, up, cn, cd = kernels.t1_q_parts(encode_t1(a, ctx), encode_t1(b, ctx), ctx)
    if up == 0:
        return 0.0
    return sym / math.sqrt(up) + math.sqrt(cn / cd)


def euclidean_parts(a: TypeOneSoftSet, b: TypeOneSoftSet) -> tuple[int, int]:
    """Exact integer components (s, t) with value s + sqrt(t)."""
    _require_same_universe(a, b)
    ctx = t1_pair_context(a, b)
    return kernels.t1_e_parts(encode_t1(a, ctx), encode_t1(b, ctx), ctx)


def norm_euclidean_parts(
    a: TypeOneSoftSet, b: TypeOneSoftSet
) -> tuple[int, int, int, int]:
    """Exact components (s, u, n, d) with value s/sqrt(u) + sqrt(n/d)."""
    _require_same_universe(a, b)
    ctx = t1_pair_context(a, b)
    return kernels.t1_q_parts(encode_t1(a, ctx), encode_t1(b, ctx), ctx)


def param_distance(a: TypeOneSoftSet, b: TypeOneSoftSet) -> int:
    """Symmetric-difference count of parameter sets plus that of the image
    footprints (union of all images per side)."""
    _require_same_universe(a, b)
    ctx = t1_pair_context(a, b)
    return kernels.t1_dp(encode_t1(a, ctx), encode_t1(b, ctx), ctx)


def matrix_distance(a: TypeOneSoftSet, b: TypeOneSoftSet) -> int:
    """Parameter symmetric difference plus the Hamming distance of the full
    indicator matrices, absent parameters reading as all-zero rows."""
    _require_same_universe(a, b)
    ctx = t1_pair_context(a, b)
    return kernels.t1_dm(encode_t1(a, ctx), encode_t1(b, ctx), ctx)


# ---- Type-2 distances -------------------------------------------------------

def t2_param_distance(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> int:
    """Symmetric differences of the primary sets, the underlying sets, and
    the element footprints, summed."""
    _require_same_universe(f, g)
    ctx = t2_pair_context(f, g)
    return kernels.t2_dp(encode_t2(f, ctx), encode_t2(g, ctx), ctx)


def t2_matrix_distance(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> int:
    """Set terms as in :func:`t2_param_distance` plus the indicator Hamming
    distance restricted to shared primary and shared underlying parameters."""
    _require_same_universe(f, g)
    ctx = t2_pair_context(f, g)
    return kernels.t2_dm(encode_t2(f, ctx), encode_t2(g, ctx), ctx)


def _norm_divisor(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> int:
    nx = len(f.universe)
    pu = len(set(f.primary) | set(g.primary))
    eu = len(set(f.underlying) | set(g.underlying))
    return nx * pu * eu


def t2_norm_param_distance(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> Fraction:
    div = _norm_divisor(f, g)
    if div == 0:
        return Fraction(0)
    return Fraction(t2_param_distance(f, g), div)


def t2_norm_matrix_distance(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> Fraction:
    div = _norm_divisor(f, g)
    if div == 0:
        return Fraction(0)
    return Fraction(t2_matrix_distance(f, g), div)


_T1_DISTANCES = {
    Measure.EUCLIDEAN: euclidean,
    Measure.NORM_EUCLIDEAN: norm_euclidean,
    Measure.PARAM_T1: param_distance,
    Measure.MATRIX_T1: matrix_distance,
}

_T2_DISTANCES = {
    Measure.PARAM_T2: t2_param_distance,
    Measure.MATRIX_T2: t2_matrix_distance,
    Measure.NORM_PARAM_T2: t2_norm_param_distance,
    Measure.NORM_MATRIX_T2: t2_norm_matrix_distance,
}


def distance(measure: Measure, a, b):
    """Evaluate any catalogued distance; operands must match its arity."""
    if measure.is_t2:
        if not (isinstance(a, TypeTwoSoftSet) and isinstance(b, TypeTwoSoftSet)):
            raise WrongMeasureArityError(f"{measure.value} expects Type-2 soft sets")
        return _T2_DISTANCES[measure](a, b)
    if not (isinstance(a, TypeOneSoftSet) and isinstance(b, TypeOneSoftSet)):
        raise WrongMeasureArityError(f"{measure.value} expects Type-1 soft sets")
    return _T1_DISTANCES[measure](a, b)


# ---- Entropy ----------------------------------------------------------------

def entropy(f: TypeTwoSoftSet) -> Fraction:
    """Ambiguity of element-to-parameter assignment via trace-set sizes.

    1 for the null and absolute shapes (and anything with no occupied image);
    0 exactly when every element appears under exactly one primary and one
    underlying parameter.
    """
    ctx = t2_pair_context(f, f)
    is_null, is_abs, star_sum, dstar_sum = kernels.t2_entropy_parts(
        encode_t2(f, ctx), ctx
    )
    total = star_sum + dstar_sum
    if is_null or is_abs or total == 0:
        return Fraction(1)
    return 1 - Fraction(2 * len(f.universe), total)


# ---- Similarity -------------------------------------------------------------

def similarity_profile(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> ParameterScoreProfile:
    """Per-primary-parameter mean Jaccard scores over the primary union.

    A shared primary scores the average image Jaccard ratio over its shared
    underlying parameters, spread over the underlying-parameter union; a
    one-sided primary (or one without shared underlying parameters) scores 0,
    so disjoint structures yield an all-zero profile.
    """
    _require_same_universe(f, g)
    ctx = t2_pair_context(f, g)
    parts = kernels.t2_salpha_parts(encode_t2(f, ctx), encode_t2(g, ctx), ctx)
    scores = {ctx.primary[i]: Fraction(n, d) for i, (n, d) in enumerate(parts)}
    return ParameterScoreProfile(scores)


def mean_similarity(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> Fraction:
    """Profile scores summed over shared primaries, divided by the size of
    the primary union; 0 when no primary is shared."""
    _require_same_universe(f, g)
    ctx = t2_pair_context(f, g)
    n, d = kernels.t2_sm_parts(encode_t2(f, ctx), encode_t2(g, ctx), ctx)
    return Fraction(n, d)


def distance_similarity(f: TypeTwoSoftSet, g: TypeTwoSoftSet, measure: Measure):
    """1 / (1 + D) for any Type-2 distance measure D."""
    if not measure.is_t2:
        raise WrongMeasureArityError(
            f"distance similarity needs a Type-2 measure, got {measure.value!r}"
        )
    d = _T2_DISTANCES[measure](f, g)
    return 1 / (1 + (Fraction(d) if isinstance(d, int) else d))


def entropy_similarity(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> Fraction:
    """1 minus the entropy gap between the union and the intersection."""
    _require_same_universe(f, g)
    return 1 - abs(entropy(t2_union(f, g)) - entropy(t2_intersection(f, g)))
