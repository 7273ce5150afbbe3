"""Value types and algebra for Type-1 and Type-2 soft sets.

A Type-1 soft set maps each parameter of a finite parameter set to a subset
of a shared universe.  A Type-2 soft set maps each *primary* parameter to a
whole Type-1 soft set over its own *underlying* parameter set; the union of
the per-parameter underlying sets is the underlying set of the structure.

All values are immutable and canonically ordered (labels stored sorted), so
equality, hashing and serialization are deterministic.  Every operation is a
pure function of its inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping, Optional


# --------------------------------------------------------------------------
# Errors
# --------------------------------------------------------------------------

class SoftSetError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SoftSetError):
    """A raw structure failed validation."""


class DuplicateLabelError(ValidationError):
    pass


class EmptyUniverseError(ValidationError):
    pass


class ImageOutsideUniverseError(ValidationError):
    pass


class MissingImageError(ValidationError):
    pass


class InconsistentUniverseError(ValidationError):
    pass


class UniverseMismatchError(SoftSetError):
    """Two operands do not share the same universe."""


class ElementNotInUniverseError(SoftSetError):
    pass


class WrongMeasureArityError(SoftSetError):
    """A Type-1 measure id was supplied where a Type-2 id is required."""


class SearchBudgetExceededError(SoftSetError):
    pass


class NoCandidatesError(SoftSetError):
    pass


def _check_labels(labels: Iterable[str], what: str) -> tuple[str, ...]:
    out = []
    seen = set()
    for lab in labels:
        if not isinstance(lab, str) or not lab:
            raise ValidationError(f"{what} labels must be non-empty strings, got {lab!r}")
        if lab in seen:
            raise DuplicateLabelError(f"duplicate {what} label {lab!r}")
        seen.add(lab)
        out.append(lab)
    return tuple(sorted(out))


# --------------------------------------------------------------------------
# Types
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Universe:
    """Ordered finite ground set of element labels."""

    elements: tuple[str, ...]

    def __post_init__(self) -> None:
        elems = _check_labels(self.elements, "universe")
        if not elems:
            raise EmptyUniverseError("universe must contain at least one element")
        object.__setattr__(self, "elements", elems)

    def __contains__(self, label: str) -> bool:
        return label in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def subset(self, items: Iterable[str]) -> frozenset[str]:
        """Validate and freeze a subset of this universe."""
        out = frozenset(items)
        stray = out - set(self.elements)
        if stray:
            raise ImageOutsideUniverseError(
                f"elements {sorted(stray)} are not in the universe"
            )
        return out


@dataclass(frozen=True)
class TypeOneSoftSet:
    """A pair (parameter set, total map parameter -> subset of the universe)."""

    universe: Universe
    params: tuple[str, ...]
    images: tuple[frozenset[str], ...]

    def image(self, param: str) -> frozenset[str]:
        try:
            return self.images[self.params.index(param)]
        except ValueError:
            raise KeyError(param) from None

    def as_dict(self) -> dict[str, frozenset[str]]:
        return dict(zip(self.params, self.images))

    def element_union(self) -> frozenset[str]:
        """Union of all images (the structure's footprint in the universe)."""
        out: frozenset[str] = frozenset()
        for img in self.images:
            out |= img
        return out

    @property
    def is_empty(self) -> bool:
        """No parameters at all (the empty soft set)."""
        return not self.params

    @property
    def is_null(self) -> bool:
        """Every image is empty (vacuously true without parameters)."""
        return all(not img for img in self.images)

    @property
    def is_absolute(self) -> bool:
        """Every image equals the whole universe (vacuously true without parameters)."""
        full = frozenset(self.universe.elements)
        return all(img == full for img in self.images)


@dataclass(frozen=True)
class TypeTwoSoftSet:
    """Primary parameters, each carrying a Type-1 soft set over the same universe."""

    universe: Universe
    primary: tuple[str, ...]
    inners: tuple[TypeOneSoftSet, ...]
    underlying: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        union: set[str] = set()
        for inner in self.inners:
            union.update(inner.params)
        object.__setattr__(self, "underlying", tuple(sorted(union)))

    def inner(self, param: str) -> TypeOneSoftSet:
        try:
            return self.inners[self.primary.index(param)]
        except ValueError:
            raise KeyError(param) from None

    def as_dict(self) -> dict[str, dict[str, frozenset[str]]]:
        return {a: inner.as_dict() for a, inner in zip(self.primary, self.inners)}

    def element_union(self) -> frozenset[str]:
        out: frozenset[str] = frozenset()
        for inner in self.inners:
            out |= inner.element_union()
        return out

    @property
    def is_empty(self) -> bool:
        return not self.primary

    @property
    def is_null(self) -> bool:
        return all(inner.is_null for inner in self.inners)

    @property
    def is_absolute(self) -> bool:
        return all(inner.is_absolute for inner in self.inners)


class DisjointnessClass(Enum):
    DISJOINT = "disjoint"
    WEAKLY_DISJOINT = "weakly-disjoint"
    ELEMENTWISE_DISJOINT = "elementwise-disjoint"
    OVERLAPPING = "overlapping"


@dataclass(frozen=True)
class TraceSets:
    """For one element x: the primary / underlying parameters under which x appears."""

    star: frozenset[str]
    double_star: frozenset[str]


@dataclass(frozen=True)
class EquivalenceWitness:
    """Label bijections preserving every element's trace sets."""

    psi: dict[str, str]
    gamma: dict[str, str]


# --------------------------------------------------------------------------
# Validation
# --------------------------------------------------------------------------

def validate_t1ss(
    universe: Universe | Iterable[str],
    assignments: Mapping[str, Iterable[str]],
    params: Optional[Iterable[str]] = None,
) -> TypeOneSoftSet:
    """Validate a raw (universe, parameter -> items) structure.

    When an explicit parameter list is supplied, every listed parameter must
    have an assignment.  Images may be empty; they are canonicalized to
    frozen subsets of the universe.
    """
    uni = universe if isinstance(universe, Universe) else Universe(tuple(universe))
    plist = _check_labels(assignments.keys(), "parameter")
    if params is not None:
        declared = _check_labels(params, "parameter")
        missing = set(declared) - set(plist)
        if missing:
            raise MissingImageError(f"parameters {sorted(missing)} have no image")
        extra = set(plist) - set(declared)
        if extra:
            raise ValidationError(f"assignments for undeclared parameters {sorted(extra)}")
        plist = declared
    images = tuple(uni.subset(assignments[p]) for p in plist)
    return TypeOneSoftSet(uni, plist, images)


def validate_t2ss(
    universe: Universe | Iterable[str],
    primary: Mapping[str, Mapping[str, Iterable[str]] | TypeOneSoftSet],
) -> TypeTwoSoftSet:
    """Validate a raw (universe, primary parameter -> inner assignment) structure."""
    uni = universe if isinstance(universe, Universe) else Universe(tuple(universe))
    plist = _check_labels(primary.keys(), "primary parameter")
    inners = []
    for a in plist:
        raw = primary[a]
        if isinstance(raw, TypeOneSoftSet):
            if raw.universe != uni:
                raise InconsistentUniverseError(
                    f"inner soft set at {a!r} is defined over a different universe"
                )
            inners.append(raw)
        else:
            inners.append(validate_t1ss(uni, raw))
    return TypeTwoSoftSet(uni, plist, tuple(inners))


def t1ss(universe, assignments) -> TypeOneSoftSet:
    """Shorthand constructor used throughout tests and fixtures."""
    return validate_t1ss(universe, assignments)


def t2ss(universe, primary) -> TypeTwoSoftSet:
    """Shorthand constructor used throughout tests and fixtures."""
    return validate_t2ss(universe, primary)


def _require_same_universe(a, b) -> None:
    if a.universe != b.universe:
        raise UniverseMismatchError("operands are defined over different universes")


# --------------------------------------------------------------------------
# Type-1 algebra
# --------------------------------------------------------------------------

def t1_union(a: TypeOneSoftSet, b: TypeOneSoftSet) -> TypeOneSoftSet:
    """Pointwise union over the union of parameter sets (absent side counts empty)."""
    _require_same_universe(a, b)
    da, db = a.as_dict(), b.as_dict()
    params = tuple(sorted(set(a.params) | set(b.params)))
    images = tuple(da.get(p, frozenset()) | db.get(p, frozenset()) for p in params)
    return TypeOneSoftSet(a.universe, params, images)


def t1_intersection(a: TypeOneSoftSet, b: TypeOneSoftSet) -> TypeOneSoftSet:
    """Restricted intersection: the empty soft set when no parameters are shared."""
    _require_same_universe(a, b)
    shared = tuple(sorted(set(a.params) & set(b.params)))
    da, db = a.as_dict(), b.as_dict()
    images = tuple(da[p] & db[p] for p in shared)
    return TypeOneSoftSet(a.universe, shared, images)


def t1_contains(a: TypeOneSoftSet, b: TypeOneSoftSet, mode: str = "subset") -> bool:
    """Whether b extends a: parameter inclusion plus a per-image relation.

    ``mode="subset"`` requires image(a) to be contained in image(b) on every
    parameter of a; ``mode="equality"`` requires the images to coincide there.
    """
    _require_same_universe(a, b)
    if mode not in ("subset", "equality"):
        raise ValueError(f"unknown containment mode {mode!r}")
    db = b.as_dict()
    for p, img in zip(a.params, a.images):
        if p not in db:
            return False
        if mode == "subset":
            if not img <= db[p]:
                return False
        elif img != db[p]:
            return False
    return True


def is_deterministic_t1(a: TypeOneSoftSet) -> bool:
    """Images cover the universe and are pairwise disjoint."""
    total = sum(len(img) for img in a.images)
    return total == len(a.universe) and len(a.element_union()) == total


# --------------------------------------------------------------------------
# Type-2 algebra
# --------------------------------------------------------------------------

def t2_union(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> TypeTwoSoftSet:
    """One-sided primaries are copied; shared primaries take the inner union."""
    _require_same_universe(f, g)
    df, dg = dict(zip(f.primary, f.inners)), dict(zip(g.primary, g.inners))
    primary = tuple(sorted(set(f.primary) | set(g.primary)))
    inners = []
    for a in primary:
        if a in df and a in dg:
            inners.append(t1_union(df[a], dg[a]))
        else:
            inners.append(df[a] if a in df else dg[a])
    return TypeTwoSoftSet(f.universe, primary, tuple(inners))


def t2_intersection(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> TypeTwoSoftSet:
    """Inner intersection over shared primaries; empty when none are shared.

    A shared primary whose inner parameter sets are disjoint keeps an inner
    soft set with no parameters (it is not dropped from the result).
    """
    _require_same_universe(f, g)
    df, dg = dict(zip(f.primary, f.inners)), dict(zip(g.primary, g.inners))
    primary = tuple(sorted(set(f.primary) & set(g.primary)))
    inners = tuple(t1_intersection(df[a], dg[a]) for a in primary)
    return TypeTwoSoftSet(f.universe, primary, inners)


def t2_contains(f: TypeTwoSoftSet, g: TypeTwoSoftSet, mode: str = "subset") -> bool:
    _require_same_universe(f, g)
    dg = dict(zip(g.primary, g.inners))
    for a, inner in zip(f.primary, f.inners):
        if a not in dg or not t1_contains(inner, dg[a], mode):
            return False
    return True


def classify_disjointness(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> DisjointnessClass:
    """Symmetric four-way classification of how two structures overlap.

    Checked in order: no shared primaries; shared primaries but disjoint
    per-parameter underlying sets; globally shared underlying labels with
    only null inner intersections; anything else overlaps.
    """
    _require_same_universe(f, g)
    shared = set(f.primary) & set(g.primary)
    if not shared:
        return DisjointnessClass.DISJOINT
    df, dg = dict(zip(f.primary, f.inners)), dict(zip(g.primary, g.inners))
    if all(not (set(df[a].params) & set(dg[a].params)) for a in shared):
        return DisjointnessClass.WEAKLY_DISJOINT
    if set(f.underlying) & set(g.underlying) and all(
        t1_intersection(df[a], dg[a]).is_null for a in shared
    ):
        return DisjointnessClass.ELEMENTWISE_DISJOINT
    return DisjointnessClass.OVERLAPPING


def is_deterministic_t2(f: TypeTwoSoftSet) -> bool:
    """Four conditions: primary/underlying label disjointness, pairwise
    disjoint underlying sets (making cross-intersections null), per-parameter
    pairwise disjoint images, and total coverage of the universe."""
    if set(f.primary) & set(f.underlying):
        return False
    for i1, i2 in itertools.combinations(f.inners, 2):
        if set(i1.params) & set(i2.params):
            return False
    for inner in f.inners:
        sizes = sum(len(img) for img in inner.images)
        if sizes != len(inner.element_union()):
            return False
    return f.element_union() == frozenset(f.universe.elements)


def trace_sets(f: TypeTwoSoftSet, x: str) -> TraceSets:
    """The primary / underlying parameters under which element x appears."""
    if x not in f.universe:
        raise ElementNotInUniverseError(f"element {x!r} is not in the universe")
    star = set()
    double_star = set()
    for a, inner in zip(f.primary, f.inners):
        for b, img in zip(inner.params, inner.images):
            if x in img:
                star.add(a)
                double_star.add(b)
    return TraceSets(frozenset(star), frozenset(double_star))


def make_null(
    universe: Universe | Iterable[str],
    primary_params: Iterable[str],
    underlying_assignment: Mapping[str, Iterable[str]],
) -> TypeTwoSoftSet:
    """Build the structure of the given shape whose images are all empty."""
    return _make_constant(universe, primary_params, underlying_assignment, empty=True)


def make_absolute(
    universe: Universe | Iterable[str],
    primary_params: Iterable[str],
    underlying_assignment: Mapping[str, Iterable[str]],
) -> TypeTwoSoftSet:
    """Build the structure of the given shape whose images all equal the universe."""
    return _make_constant(universe, primary_params, underlying_assignment, empty=False)


def _make_constant(universe, primary_params, underlying_assignment, empty: bool):
    uni = universe if isinstance(universe, Universe) else Universe(tuple(universe))
    fill: tuple[str, ...] = () if empty else uni.elements
    plist = _check_labels(primary_params, "primary parameter")
    spec = {}
    for a in plist:
        unders = _check_labels(underlying_assignment.get(a, ()), "underlying parameter")
        spec[a] = {b: fill for b in unders}
    return validate_t2ss(uni, spec)


# --------------------------------------------------------------------------
# Equivalence
# --------------------------------------------------------------------------

def _primary_signature(f: TypeTwoSoftSet) -> dict[str, frozenset[str]]:
    """Per primary parameter: the set of elements appearing under it."""
    return {a: inner.element_union() for a, inner in zip(f.primary, f.inners)}


def _underlying_signature(f: TypeTwoSoftSet) -> dict[str, frozenset[str]]:
    """Per underlying parameter: the elements it selects under any primary."""
    sig: dict[str, frozenset[str]] = {b: frozenset() for b in f.underlying}
    for inner in f.inners:
        for b, img in zip(inner.params, inner.images):
            sig[b] |= img
    return sig


def _match_by_signature(
    sig_a: dict[str, frozenset[str]], sig_b: dict[str, frozenset[str]]
) -> Optional[dict[str, str]]:
    """Bijection mapping labels with identical signatures, if counts allow one."""
    if len(sig_a) != len(sig_b):
        return None
    groups_a: dict[frozenset[str], list[str]] = {}
    groups_b: dict[frozenset[str], list[str]] = {}
    for lab, s in sig_a.items():
        groups_a.setdefault(s, []).append(lab)
    for lab, s in sig_b.items():
        groups_b.setdefault(s, []).append(lab)
    if set(groups_a) != set(groups_b):
        return None
    mapping: dict[str, str] = {}
    for s, labs in groups_a.items():
        other = groups_b[s]
        if len(labs) != len(other):
            return None
        mapping.update(zip(sorted(labs), sorted(other)))
    return mapping


def are_equivalent(
    f: TypeTwoSoftSet, g: TypeTwoSoftSet
) -> Optional[EquivalenceWitness]:
    """Search for label bijections preserving every element's trace sets.

    A primary bijection is trace-preserving exactly when matched labels select
    the same elements, and likewise for underlying labels, so the search
    reduces to matching labels by their element signatures; the two bijections
    are independent.  Returns a canonical witness (sorted within signature
    groups) or None.
    """
    _require_same_universe(f, g)
    psi = _match_by_signature(_primary_signature(f), _primary_signature(g))
    if psi is None:
        return None
    gamma = _match_by_signature(_underlying_signature(f), _underlying_signature(g))
    if gamma is None:
        return None
    return EquivalenceWitness(psi, gamma)


def verify_equivalence_witness(
    f: TypeTwoSoftSet, g: TypeTwoSoftSet, witness: EquivalenceWitness
) -> bool:
    """Check the bijections against the trace sets of every element."""
    if sorted(witness.psi) != sorted(f.primary) or sorted(witness.psi.values()) != sorted(g.primary):
        return False
    if sorted(witness.gamma) != sorted(f.underlying) or sorted(witness.gamma.values()) != sorted(g.underlying):
        return False
    for x in f.universe.elements:
        tf, tg = trace_sets(f, x), trace_sets(g, x)
        if frozenset(witness.psi[a] for a in tf.star) != tg.star:
            return False
        if frozenset(witness.gamma[b] for b in tf.double_star) != tg.double_star:
            return False
    return True
