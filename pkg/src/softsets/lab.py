"""Empirical axiom lab: enumerate small soft-set spaces, scan them against
the metric / entropy / similarity axiom systems, and report per-axiom
verdicts with minimal replayable witnesses.

Verdict statuses:

* ``holds-on-space``  -- no violation, and every pair/triple within the
  searched space was checked exhaustively;
* ``holds-on-sample`` -- no violation, but at least one scan was sampled
  because it exceeded the configured caps;
* ``fails``           -- a witness was found (it replays bit-exactly through
  the measures module).

The searched space always includes a small corpus of shipped seed instances
(the worked-example fixtures) alongside the instances enumerated within the
requested bounds; seed blocks are scanned first, so known counterexamples
surface deterministically even when the enumerated scan must be sampled.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels, measures
from .core import (
    SoftSetError,
    TypeOneSoftSet,
    TypeTwoSoftSet,
    Universe,
    are_equivalent,
    is_deterministic_t2,
    t1ss,
    t2_contains,
    t2ss,
)
from .encode import (
    EncodedT1,
    EncodedT2,
    T1Context,
    T2Context,
    decode_t1,
    decode_t2,
    enc_t2_contains,
    enc_t2_intersection,
    enc_t2_union,
    encode_t1,
    encode_t2,
)
from .io import load_fixture
from .measures import Measure

_FLOAT_EPS = 1e-9  # slack for triangle checks on square-root valued measures

_LEVELS = ("none", "quasi-metric", "semi-metric", "pseudo-metric", "metric")
_LEVEL_AXIOMS = (("M1", "M2"), ("M3",), ("M4",), ("M5",))


class BoundsTooLargeError(SoftSetError):
    pass


class NotAViolationError(SoftSetError):
    pass


@dataclass(frozen=True)
class SearchBounds:
    """Size and budget limits for one lab run.

    Exhaustive mode enumerates every instance over the canonical universe of
    each size up to ``max_universe`` with parameter pools of the given sizes;
    random mode draws ``trials`` instances at size ``max_universe`` from
    ``seed``.  Pair/triple scans that would exceed the caps fall back to
    seeded sampling and downgrade the verdict status to ``holds-on-sample``.
    """

    max_universe: int = 2
    max_primary: int = 2
    max_underlying: int = 2
    mode: str = "exhaustive"
    trials: int = 20_000
    seed: int = 0
    pair_cap: int = 10_000_000
    triple_cap: int = 400_000_000
    instance_cap: int = 100_000

    def __post_init__(self) -> None:
        if self.max_universe < 1 or self.max_primary < 0 or self.max_underlying < 0:
            raise ValueError("bounds must be non-negative (universe at least 1)")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class Witness:
    """A concrete instance tuple violating one axiom for one target."""

    axiom_id: str
    target: str  # measure token, "Em", "sm", "profile", "sd:<token>", "se"
    instances: tuple
    details: dict = field(default_factory=dict)
    mode: str = "subset"


@dataclass(frozen=True)
class AxiomVerdict:
    axiom_id: str
    status: str  # holds-on-space | holds-on-sample | fails
    witness: Optional[Witness] = None
    checked: int = 0

    def __post_init__(self) -> None:
        assert (self.status == "fails") == (self.witness is not None)


@dataclass(frozen=True)
class MetricClassification:
    """Highest attained level of the cumulative metric hierarchy plus the
    per-axiom verdicts (including the normalization bound for normalized
    measures)."""

    measure: Measure
    level: str
    verdicts: dict[str, AxiomVerdict]


# ---------------------------------------------------------------------------
# Instance counting and enumeration
# ---------------------------------------------------------------------------

def count_t1(nx: int, n_params: int) -> int:
    """Number of Type-1 soft sets over a size-nx universe and a parameter
    pool of the given size (every subset of the pool, every image map)."""
    return (1 + 2**nx) ** n_params


def count_t2(nx: int, n_primary: int, n_underlying: int) -> int:
    return (1 + count_t1(nx, n_underlying)) ** n_primary


def _elements(nx: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, nx + 1))


def _labels(n: int, prefix: str) -> tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def _iter_encoded_t1(nx: int, n_params: int) -> Iterator[EncodedT1]:
    """Canonical order: parameter masks ascending; within a mask, image
    assignments ascending with later slots varying fastest."""
    n_images = 2**nx
    for amask in range(2**n_params):
        slots = [i for i in range(n_params) if (amask >> i) & 1]
        for combo in itertools.product(range(n_images), repeat=len(slots)):
            images = [0] * n_params
            for slot, img in zip(slots, combo):
                images[slot] = img
            yield EncodedT1(amask, tuple(images))


def _iter_encoded_t2(nx: int, n_primary: int, n_underlying: int) -> Iterator[EncodedT2]:
    inner_pool = list(_iter_encoded_t1(nx, n_underlying))
    empty_row = tuple([0] * n_underlying)
    for amask in range(2**n_primary):
        slots = [i for i in range(n_primary) if (amask >> i) & 1]
        for combo in itertools.product(range(len(inner_pool)), repeat=len(slots)):
            emasks = [0] * n_primary
            images: list[tuple[int, ...]] = [empty_row] * n_primary
            for slot, idx in zip(slots, combo):
                inner = inner_pool[idx]
                emasks[slot] = inner.amask
                images[slot] = inner.images
            yield EncodedT2(amask, tuple(emasks), tuple(images))


def random_t1(rng: random.Random, nx: int, n_params: int) -> EncodedT1:
    amask = rng.getrandbits(n_params) if n_params else 0
    images = tuple(
        rng.getrandbits(nx) if (amask >> i) & 1 else 0 for i in range(n_params)
    )
    return EncodedT1(amask, images)


def random_t2(rng: random.Random, nx: int, n_primary: int, n_underlying: int) -> EncodedT2:
    amask = rng.getrandbits(n_primary) if n_primary else 0
    emasks = []
    images = []
    for i in range(n_primary):
        if (amask >> i) & 1:
            inner = random_t1(rng, nx, n_underlying)
            emasks.append(inner.amask)
            images.append(inner.images)
        else:
            emasks.append(0)
            images.append(tuple([0] * n_underlying))
    return EncodedT2(amask, tuple(emasks), tuple(images))


def enumerate_t1(bounds: SearchBounds) -> Iterator[TypeOneSoftSet]:
    """Deterministic stream of Type-1 soft sets over the canonical universe
    of size ``max_universe``; random mode draws ``trials`` reproducible
    instances instead."""
    ctx = T1Context(_elements(bounds.max_universe), _labels(bounds.max_primary, "a"))
    if bounds.mode == "random":
        rng = random.Random(bounds.seed)
        for _ in range(bounds.trials):
            yield decode_t1(random_t1(rng, ctx.nx, ctx.np), ctx)
        return
    total = count_t1(ctx.nx, ctx.np)
    if total > bounds.instance_cap:
        raise BoundsTooLargeError(
            f"{total} instances exceed the cap of {bounds.instance_cap}"
        )
    for enc in _iter_encoded_t1(ctx.nx, ctx.np):
        yield decode_t1(enc, ctx)


def enumerate_t2(bounds: SearchBounds) -> Iterator[TypeTwoSoftSet]:
    """Type-2 analogue of :func:`enumerate_t1` (inner soft sets nest the
    Type-1 enumeration per included primary slot)."""
    ctx = T2Context(
        _elements(bounds.max_universe),
        _labels(bounds.max_primary, "a"),
        _labels(bounds.max_underlying, "b"),
    )
    if bounds.mode == "random":
        rng = random.Random(bounds.seed)
        for _ in range(bounds.trials):
            yield decode_t2(random_t2(rng, ctx.nx, ctx.np, ctx.ne), ctx)
        return
    total = count_t2(ctx.nx, ctx.np, ctx.ne)
    if total > bounds.instance_cap:
        raise BoundsTooLargeError(
            f"{total} instances exceed the cap of {bounds.instance_cap}"
        )
    for enc in _iter_encoded_t2(ctx.nx, ctx.np, ctx.ne):
        yield decode_t2(enc, ctx)


# ---------------------------------------------------------------------------
# Blocks: same-universe instance groups scanned together
# ---------------------------------------------------------------------------

@dataclass
class _Block:
    ctx: T1Context | T2Context
    encs: list
    tag: str  # "seed" | "enumerated" | "random"


def _t1_block_from_values(values: Sequence[TypeOneSoftSet], tag: str) -> _Block:
    params: set[str] = set()
    for v in values:
        params.update(v.params)
    ctx = T1Context(values[0].universe.elements, tuple(sorted(params)))
    return _Block(ctx, [encode_t1(v, ctx) for v in values], tag)


def _t2_block_from_values(values: Sequence[TypeTwoSoftSet], tag: str) -> _Block:
    primary: set[str] = set()
    under: set[str] = set()
    for v in values:
        primary.update(v.primary)
        under.update(v.underlying)
    ctx = T2Context(values[0].universe.elements, tuple(sorted(primary)), tuple(sorted(under)))
    return _Block(ctx, [encode_t2(v, ctx) for v in values], tag)


def default_t1_seeds() -> tuple[TypeOneSoftSet, ...]:
    """Shipped counterexample corpus for Type-1 measures."""
    return (load_fixture("triangle_F"), load_fixture("triangle_G"), load_fixture("triangle_H"))


def default_t2_seeds() -> tuple[TypeTwoSoftSet, ...]:
    """Shipped worked-example corpus for Type-2 measures."""
    return (load_fixture("houses_F"), load_fixture("houses_G"), load_fixture("deterministic"))


def _group_by_universe(values: Sequence) -> list[list]:
    groups: dict[tuple[str, ...], list] = {}
    for v in values:
        groups.setdefault(v.universe.elements, []).append(v)
    return [groups[k] for k in sorted(groups)]


def _build_blocks(bounds: SearchBounds, is_t2: bool, seeds: Sequence) -> list[_Block]:
    blocks: list[_Block] = []
    for group in _group_by_universe(seeds):
        blocks.append(
            _t2_block_from_values(group, "seed")
            if is_t2
            else _t1_block_from_values(group, "seed")
        )
    if bounds.mode == "random":
        nx = bounds.max_universe
        rng = random.Random(bounds.seed)
        if is_t2:
            ctx = T2Context(
                _elements(nx),
                _labels(bounds.max_primary, "a"),
                _labels(bounds.max_underlying, "b"),
            )
            encs = [random_t2(rng, nx, ctx.np, ctx.ne) for _ in range(bounds.trials)]
        else:
            ctx = T1Context(_elements(nx), _labels(bounds.max_primary, "a"))
            encs = [random_t1(rng, nx, ctx.np) for _ in range(bounds.trials)]
        blocks.append(_Block(ctx, encs, "random"))
        return blocks
    total = 0
    for nx in range(1, bounds.max_universe + 1):
        total += (
            count_t2(nx, bounds.max_primary, bounds.max_underlying)
            if is_t2
            else count_t1(nx, bounds.max_primary)
        )
    if total > bounds.instance_cap:
        raise BoundsTooLargeError(
            f"{total} instances exceed the cap of {bounds.instance_cap}"
        )
    for nx in range(1, bounds.max_universe + 1):
        if is_t2:
            ctx = T2Context(
                _elements(nx),
                _labels(bounds.max_primary, "a"),
                _labels(bounds.max_underlying, "b"),
            )
            encs = list(_iter_encoded_t2(nx, ctx.np, ctx.ne))
        else:
            ctx = T1Context(_elements(nx), _labels(bounds.max_primary, "a"))
            encs = list(_iter_encoded_t1(nx, ctx.np))
        blocks.append(_Block(ctx, encs, "enumerated"))
    return blocks


def _block_arrays(block: _Block):
    """Pack a block into numpy arrays for the batch kernels."""
    n = len(block.encs)
    amasks = np.array([e.amask for e in block.encs], dtype=np.uint64)
    if isinstance(block.ctx, T1Context):
        imgs = np.array([list(e.images) for e in block.encs], dtype=np.uint64)
        return amasks, imgs.reshape(n, block.ctx.np)
    emasks = np.array([list(e.emasks) for e in block.encs], dtype=np.uint64)
    imgs = np.array(
        [[list(row) for row in e.images] for e in block.encs], dtype=np.uint64
    )
    return (
        amasks,
        emasks.reshape(n, block.ctx.np),
        imgs.reshape(n, block.ctx.np, block.ctx.ne),
    )


def _decode(block: _Block, idx: int):
    if isinstance(block.ctx, T1Context):
        return decode_t1(block.encs[idx], block.ctx)
    return decode_t2(block.encs[idx], block.ctx)


# ---------------------------------------------------------------------------
# Distance classification
# ---------------------------------------------------------------------------

def _distance_matrix(measure: Measure, block: _Block) -> np.ndarray:
    """Full pairwise value matrix for one block (int64, or float64 for the
    square-root / normalized measures)."""
    n = len(block.encs)
    nx = block.ctx.nx
    if measure in (Measure.PARAM_T1, Measure.MATRIX_T1):
        amasks, imgs = _block_arrays(block)
        out = np.zeros((n, n), dtype=np.int64)
        kernels.t1_matrix(measure.value, nx, amasks, imgs, out)
        return out
    if measure is Measure.EUCLIDEAN:
        amasks, imgs = _block_arrays(block)
        out = np.zeros((n, n), dtype=np.float64)
        kernels.t1_e_matrix(nx, amasks, imgs, out)
        return out
    if measure is Measure.NORM_EUCLIDEAN:
        amasks, imgs = _block_arrays(block)
        out = np.zeros((n, n), dtype=np.float64)
        kernels.t1_q_matrix(nx, amasks, imgs, out)
        return out
    amasks, emasks, imgs = _block_arrays(block)
    base = "Dp" if measure in (Measure.PARAM_T2, Measure.NORM_PARAM_T2) else "Dm"
    out = np.zeros((n, n), dtype=np.int64)
    kernels.t2_matrix(base, nx, amasks, emasks, imgs, out)
    if not measure.is_normalized:
        return out
    pcnt = np.zeros((n, n), dtype=np.int64)
    ecnt = np.zeros((n, n), dtype=np.int64)
    kernels.t2_union_counts(nx, amasks, emasks, pcnt, ecnt)
    div = nx * pcnt * ecnt
    nd = np.zeros((n, n), dtype=np.float64)
    np.divide(out, div, out=nd, where=div > 0)
    return nd


def _scalar_distance(measure: Measure, block: _Block, i: int, j: int):
    return measures.distance(measure, _decode(block, i), _decode(block, j))


def _first_violation_minplus(d: np.ndarray, eps: float):
    """Smallest (f, h) in row-major order whose entry exceeds the min-plus
    square of the matrix, with the minimizing middle index; None when the
    triangle inequality holds everywhere."""
    n = d.shape[0]
    if d.dtype == np.int64:
        best = np.full((n, n), np.iinfo(np.int64).max, dtype=np.int64)
    else:
        best = np.full((n, n), np.inf, dtype=np.float64)
    for g in range(n):
        np.minimum(best, d[:, g : g + 1] + d[g : g + 1, :], out=best)
    viol = d > (best if d.dtype == np.int64 else best + eps)
    if not viol.any():
        return None
    f, h = map(int, np.argwhere(viol)[0])
    g = int(np.argmin(d[f, :] + d[:, h]))
    return f, g, h


def _classify_block(measure: Measure, block: _Block, bounds: SearchBounds):
    """Scan one block; returns per-axiom first-witness index tuples, whether
    each scan was exhaustive, and how many combinations were checked."""
    n = len(block.encs)
    axioms = ["M1", "M2", "M3", "M4", "M5"] + (["d5"] if measure.is_normalized else [])
    witnesses: dict[str, Optional[tuple]] = {ax: None for ax in axioms}
    exhaustive: dict[str, bool] = {ax: True for ax in axioms}
    checked: dict[str, int] = {ax: 0 for ax in axioms}
    rng = random.Random(repr((bounds.seed, measure.value, block.tag, n)))
    use_matrix = n * n <= bounds.pair_cap and n <= 4000

    if use_matrix:
        d = _distance_matrix(measure, block)
        is_int = d.dtype == np.int64
        eye = np.eye(n, dtype=bool)
        for ax in ("M1", "M2", "M5"):
            checked[ax] = n * n
        checked["M4"] = n
        neg = np.argwhere(d < 0)
        if len(neg):
            witnesses["M1"] = tuple(map(int, neg[0]))
        asym = np.argwhere(d != d.T)
        if len(asym):
            witnesses["M2"] = tuple(map(int, asym[0]))
        diag = np.argwhere(np.diag(d) != 0)
        if len(diag):
            witnesses["M4"] = (int(diag[0][0]), int(diag[0][0]))
        for idx in np.argwhere((d == 0) & ~eye):
            i, j = map(int, idx)
            if block.encs[i] != block.encs[j]:  # random blocks may hold duplicates
                witnesses["M5"] = (i, j)
                break
        if measure.is_normalized:
            checked["d5"] = n * n
            over = np.argwhere(d > 1)
            if len(over):
                witnesses["d5"] = tuple(map(int, over[0]))
        if n**3 <= bounds.triple_cap:
            checked["M3"] = n**3
            witnesses["M3"] = _first_violation_minplus(d, _FLOAT_EPS)
        else:
            exhaustive["M3"] = False
            checked["M3"] = bounds.trials
            for _ in range(bounds.trials):
                f, g, h = (rng.randrange(n) for _ in range(3))
                lhs, rhs = d[f, h], d[f, g] + d[g, h]
                if lhs > (rhs if is_int else rhs + _FLOAT_EPS):
                    witnesses["M3"] = (f, g, h)
                    break
        if block.tag == "random":  # a sampled block never certifies the space
            exhaustive = {ax: False for ax in axioms}
        return witnesses, exhaustive, checked

    # sampled fallback for oversized blocks
    for ax in ("M1", "M2", "M3", "M5") + (("d5",) if measure.is_normalized else ()):
        exhaustive[ax] = False
        checked[ax] = bounds.trials
    checked["M4"] = n
    for i in range(n):
        if _scalar_distance(measure, block, i, i) != 0:
            witnesses["M4"] = (i, i)
            break
    for _ in range(bounds.trials):
        i, j = rng.randrange(n), rng.randrange(n)
        v = _scalar_distance(measure, block, i, j)
        if witnesses["M1"] is None and v < 0:
            witnesses["M1"] = (i, j)
        if witnesses["M2"] is None and v != _scalar_distance(measure, block, j, i):
            witnesses["M2"] = (i, j)
        if witnesses["M5"] is None and v == 0 and block.encs[i] != block.encs[j]:
            witnesses["M5"] = (i, j)
        if measure.is_normalized and witnesses["d5"] is None and v > 1:
            witnesses["d5"] = (i, j)
    for _ in range(bounds.trials):
        f, g, h = (rng.randrange(n) for _ in range(3))
        lhs = _scalar_distance(measure, block, f, h)
        rhs = _scalar_distance(measure, block, f, g) + _scalar_distance(
            measure, block, g, h
        )
        if lhs > (rhs + _FLOAT_EPS if isinstance(lhs, float) else rhs):
            witnesses["M3"] = (f, g, h)
            break
    exhaustive["M4"] = block.tag != "random"
    return witnesses, exhaustive, checked


def _value_str(v) -> str:
    return repr(v) if isinstance(v, float) else str(v)


def _witness_details(w: Witness) -> dict:
    """Measured values for a witness, recomputed from its current instances."""
    ax, target, inst = w.axiom_id, w.target, w.instances
    if ax.startswith("M") or ax == "d5":
        m = Measure(target)
        if ax == "M3":
            f, g, h = inst
            return {
                "d(f,g)": _value_str(measures.distance(m, f, g)),
                "d(g,h)": _value_str(measures.distance(m, g, h)),
                "d(f,h)": _value_str(measures.distance(m, f, h)),
            }
        return {"d": _value_str(measures.distance(m, inst[0], inst[1]))}
    if target == "Em":
        names = ("f", "g", "h")
        return {f"Em({names[k]})": str(measures.entropy(s)) for k, s in enumerate(inst)}
    if target == "profile":
        if len(inst) == 2:
            prof = measures.similarity_profile(inst[0], inst[1])
            return {"profile": {k: str(v) for k, v in sorted(prof.scores.items())}}
        return {}
    if len(inst) == 2:
        return {"value": str(similarity_value(target, inst[0], inst[1]))}
    f, g, h = inst
    return {
        "s(f,g)": str(similarity_value(target, f, g)),
        "s(g,h)": str(similarity_value(target, g, h)),
        "s(f,h)": str(similarity_value(target, f, h)),
    }


def classify_distance(
    measure: Measure,
    bounds: SearchBounds = SearchBounds(),
    seeds: Optional[Sequence] = None,
    minimize: bool = True,
) -> MetricClassification:
    """Classify one distance measure against the cumulative metric hierarchy
    over the bounded space plus the seed corpus.

    Normalized measures also receive a ``d5`` verdict (values bounded by 1).
    """
    if seeds is None:
        seeds = default_t2_seeds() if measure.is_t2 else default_t1_seeds()
    blocks = _build_blocks(bounds, measure.is_t2, seeds)
    axioms = ["M1", "M2", "M3", "M4", "M5"] + (["d5"] if measure.is_normalized else [])
    found: dict[str, Optional[Witness]] = {ax: None for ax in axioms}
    all_exhaustive = {ax: True for ax in axioms}
    totals = {ax: 0 for ax in axioms}
    for block in blocks:
        if not block.encs:
            continue
        wit, exh, cnt = _classify_block(measure, block, bounds)
        for ax in axioms:
            all_exhaustive[ax] &= exh[ax]
            totals[ax] += cnt[ax]
            if found[ax] is None and wit[ax] is not None:
                insts = tuple(_decode(block, i) for i in wit[ax])
                found[ax] = Witness(ax, measure.value, insts)
    verdicts = {}
    for ax in axioms:
        w = found[ax]
        if w is not None:
            if minimize:
                w = minimize_witness(w)
            w = replace(w, details=_witness_details(w))
            verdicts[ax] = AxiomVerdict(ax, "fails", w, totals[ax])
        else:
            status = "holds-on-space" if all_exhaustive[ax] else "holds-on-sample"
            verdicts[ax] = AxiomVerdict(ax, status, None, totals[ax])
    level = _LEVELS[0]
    for lvl, group in zip(_LEVELS[1:], _LEVEL_AXIOMS):
        # sampled scans cannot certify a level, only a full scan can
        if any(verdicts[ax].status != "holds-on-space" for ax in group):
            break
        level = lvl
    return MetricClassification(measure, level, verdicts)


# ---------------------------------------------------------------------------
# Violation predicates and witness replay
# ---------------------------------------------------------------------------

def similarity_value(target: str, f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> Fraction:
    """Evaluate a scalar similarity target ('sm', 'se' or 'sd:<measure>')."""
    if target == "sm":
        return measures.mean_similarity(f, g)
    if target == "se":
        return measures.entropy_similarity(f, g)
    if target.startswith("sd:"):
        return measures.distance_similarity(f, g, Measure(target[3:]))
    raise ValueError(f"unknown similarity target {target!r}")


def _chain_contained(f, g, h, mode: str) -> bool:
    return t2_contains(f, g, mode) and t2_contains(g, h, mode)


def violates(witness: Witness) -> bool:
    """Re-evaluate a witness through the measures module."""
    ax, target, inst, mode = (
        witness.axiom_id,
        witness.target,
        witness.instances,
        witness.mode,
    )
    if ax.startswith("M") or ax == "d5":
        m = Measure(target)
        if ax == "M1":
            return measures.distance(m, *inst) < 0
        if ax == "M2":
            return measures.distance(m, inst[0], inst[1]) != measures.distance(
                m, inst[1], inst[0]
            )
        if ax == "M3":
            f, g, h = inst
            lhs = measures.distance(m, f, h)
            rhs = measures.distance(m, f, g) + measures.distance(m, g, h)
            eps = _FLOAT_EPS if isinstance(lhs, float) else 0
            return lhs > rhs + eps
        if ax == "M4":
            return inst[0] == inst[1] and measures.distance(m, *inst) != 0
        if ax == "M5":
            return measures.distance(m, *inst) == 0 and inst[0] != inst[1]
        if ax == "d5":
            return measures.distance(m, *inst) > 1
    if target == "Em":
        if ax == "e1":
            (f,) = inst
            return (f.is_null or f.is_absolute) and measures.entropy(f) != 1
        if ax == "e2":
            f, g = inst
            return (
                t2_contains(f, g, mode)
                and not f.is_null
                and measures.entropy(f) > measures.entropy(g)
            )
        if ax == "e3":
            (f,) = inst
            return is_deterministic_t2(f) and measures.entropy(f) != 0
        if ax == "e4":
            f, g = inst
            return (
                are_equivalent(f, g) is not None
                and measures.entropy(f) != measures.entropy(g)
            )
    if target == "profile":
        f, g = inst[0], inst[1]
        pf = measures.similarity_profile(f, g)
        if ax == "s'1":
            return pf.scores != measures.similarity_profile(g, f).scores
        if ax == "s'2":
            return any(not 0 <= v <= 1 for v in pf.scores.values())
        if ax == "s'3":
            shared = set(f.primary) & set(g.primary)
            return any((f.inner(a) == g.inner(a)) != (pf[a] == 1) for a in shared)
        if ax == "s'4":
            f, g, h = inst
            if not _chain_contained(f, g, h, mode):
                return False
            pfh = measures.similarity_profile(f, h)
            pfg = measures.similarity_profile(f, g)
            pgh = measures.similarity_profile(g, h)
            return any(pfh[a] > min(pfg[a], pgh[a]) for a in f.primary)
        if ax == "s'5":
            return not (set(f.primary) & set(g.primary)) and any(
                v != 0 for v in pf.scores.values()
            )
    if ax == "s1":
        f, g = inst
        return similarity_value(target, f, g) != similarity_value(target, g, f)
    if ax == "s2":
        f, g = inst
        return not 0 <= similarity_value(target, f, g) <= 1
    if ax == "s3":
        f, g = inst
        return (f == g) != (similarity_value(target, f, g) == 1)
    if ax == "s4":
        f, g, h = inst
        return _chain_contained(f, g, h, mode) and similarity_value(
            target, f, h
        ) > min(similarity_value(target, f, g), similarity_value(target, g, h))
    raise ValueError(f"unknown axiom {ax!r} for target {target!r}")


def replay_witness(witness: Witness) -> bool:
    return violates(witness)


# ---------------------------------------------------------------------------
# Witness minimization
# ---------------------------------------------------------------------------

def _drop_universe_element(s, x: str):
    uni = Universe(tuple(e for e in s.universe.elements if e != x))
    if isinstance(s, TypeOneSoftSet):
        return t1ss(uni, {p: img - {x} for p, img in s.as_dict().items()})
    return t2ss(
        uni,
        {
            a: {b: img - {x} for b, img in inner.as_dict().items()}
            for a, inner in zip(s.primary, s.inners)
        },
    )


def _shrink_moves(s):
    """Single-step shrink candidates of one instance (universe unchanged)."""
    if isinstance(s, TypeOneSoftSet):
        d = s.as_dict()
        for p in s.params:
            yield t1ss(s.universe, {q: img for q, img in d.items() if q != p})
        for p, img in d.items():
            for x in sorted(img):
                yield t1ss(s.universe, {**d, p: img - {x}})
        return
    d = s.as_dict()
    for a in s.primary:
        yield t2ss(s.universe, {b: inner for b, inner in d.items() if b != a})
    for a, inner in d.items():
        for b in list(inner):
            yield t2ss(s.universe, {**d, a: {c: im for c, im in inner.items() if c != b}})
        for b, img in inner.items():
            for x in sorted(img):
                yield t2ss(s.universe, {**d, a: {**inner, b: img - {x}}})


def minimize_witness(witness: Witness) -> Witness:
    """Greedy shrink: drop universe elements, parameters and image elements
    while the instances keep violating the axiom.  The result is locally
    minimal; an input that does not violate raises NotAViolationError."""
    if not violates(witness):
        raise NotAViolationError("witness does not violate its axiom")
    current = witness
    changed = True
    while changed:
        changed = False
        inst = current.instances
        if len(inst[0].universe) > 1:
            for x in inst[0].universe.elements:
                cand = replace(
                    current, instances=tuple(_drop_universe_element(s, x) for s in inst)
                )
                if violates(cand):
                    current = cand
                    changed = True
                    break
            if changed:
                continue
        for i, s in enumerate(inst):
            for shrunk in _shrink_moves(s):
                cand = replace(
                    current, instances=inst[:i] + (shrunk,) + inst[i + 1 :]
                )
                if violates(cand):
                    current = cand
                    changed = True
                    break
            if changed:
                break
    return current


# ---------------------------------------------------------------------------
# Generators: chains, deterministic structures, permuted twins
# ---------------------------------------------------------------------------

def _random_subset(rng: random.Random, items: Sequence[str]) -> set[str]:
    return {x for x in items if rng.random() < 0.5}


def random_t1_value(rng: random.Random, nx: int = 4, n_params: int = 3) -> TypeOneSoftSet:
    ctx = T1Context(_elements(nx), _labels(n_params, "a"))
    return decode_t1(random_t1(rng, nx, n_params), ctx)


def random_t2_value(
    rng: random.Random, nx: int = 4, n_primary: int = 3, n_underlying: int = 3
) -> TypeTwoSoftSet:
    ctx = T2Context(_elements(nx), _labels(n_primary, "a"), _labels(n_underlying, "b"))
    return decode_t2(random_t2(rng, nx, n_primary, n_underlying), ctx)


def grow_t2(
    rng: random.Random,
    f: TypeTwoSoftSet,
    fresh_primary: Sequence[str] = (),
    fresh_underlying: Sequence[str] = (),
    enrich_images: bool = True,
) -> TypeTwoSoftSet:
    """A random superset of f under subset-mode containment: images may gain
    elements, inner sets may gain underlying parameters, and fresh primaries
    may appear."""
    elems = f.universe.elements
    spec: dict[str, dict] = {}
    for a, inner in zip(f.primary, f.inners):
        d = {
            b: (set(img) | _random_subset(rng, elems)) if enrich_images else set(img)
            for b, img in inner.as_dict().items()
        }
        for b in fresh_underlying:
            if b not in d and rng.random() < 0.4:
                d[b] = _random_subset(rng, elems)
        spec[a] = d
    for a in fresh_primary:
        if a not in spec and rng.random() < 0.4:
            spec[a] = {
                b: _random_subset(rng, elems)
                for b in fresh_underlying
                if rng.random() < 0.5
            }
    return t2ss(f.universe, spec)


def chain_t2(
    rng: random.Random,
    nx: int = 4,
    n_primary: int = 2,
    n_underlying: int = 2,
    fixed_skeleton: bool = False,
) -> tuple[TypeTwoSoftSet, TypeTwoSoftSet, TypeTwoSoftSet]:
    """A random containment chain f within g within h (subset mode).

    With ``fixed_skeleton=True`` all three share the same primary/underlying
    parameter shape and only the images grow (the regime in which the
    normalized distances stay exactly additive along the chain).
    """
    f = random_t2_value(rng, nx, n_primary, n_underlying)
    if fixed_skeleton:
        g = grow_t2(rng, f)
        h = grow_t2(rng, g)
        return f, g, h
    extra_a = _labels(n_primary + 2, "a")[n_primary:]
    extra_b = _labels(n_underlying + 2, "b")[n_underlying:]
    g = grow_t2(rng, f, extra_a[:1], extra_b[:1])
    h = grow_t2(rng, g, extra_a, extra_b)
    return f, g, h


def deterministic_t2(rng: random.Random, nx: int = 5) -> TypeTwoSoftSet:
    """Random structure that is deterministic by construction: a random
    partition of the universe, blocks distributed over fresh primary labels,
    one fresh underlying label per block."""
    elems = list(_elements(nx))
    rng.shuffle(elems)
    k = rng.randint(1, nx)
    cuts = sorted(rng.sample(range(1, nx), k - 1)) if k > 1 else []
    blocks = [elems[i:j] for i, j in zip([0] + cuts, cuts + [nx])]
    m = rng.randint(1, k)
    owner = list(range(m)) + [rng.randrange(m) for _ in range(k - m)]
    rng.shuffle(owner)
    spec: dict[str, dict] = {}
    for bi, (block, o) in enumerate(zip(blocks, owner)):
        spec.setdefault(f"a{o + 1}", {})[f"b{bi + 1}"] = block
    return t2ss(_elements(nx), spec)


def permuted_twin(
    rng: random.Random, f: TypeTwoSoftSet
) -> tuple[TypeTwoSoftSet, dict[str, str], dict[str, str]]:
    """Rename primary and underlying labels by random permutations; the twin
    is equivalent to f by construction."""
    pperm = list(f.primary)
    uperm = list(f.underlying)
    rng.shuffle(pperm)
    rng.shuffle(uperm)
    pmap = dict(zip(f.primary, pperm))
    umap = dict(zip(f.underlying, uperm))
    spec = {
        pmap[a]: {umap[b]: img for b, img in inner.as_dict().items()}
        for a, inner in zip(f.primary, f.inners)
    }
    return t2ss(f.universe, spec), pmap, umap


# ---------------------------------------------------------------------------
# Entropy axiom checks
# ---------------------------------------------------------------------------

def _entropy_from_parts(nx: int, parts) -> Fraction:
    is_null, is_abs, star, dstar = parts
    total = star + dstar
    if is_null or is_abs or total == 0:
        return Fraction(1)
    return 1 - Fraction(2 * nx, total)


def _verdict(ax: str, witness: Optional[Witness], exhaustive: bool, n: int, minimize: bool):
    if witness is not None:
        if minimize:
            witness = minimize_witness(witness)
        witness = replace(witness, details=_witness_details(witness))
        return AxiomVerdict(ax, "fails", witness, n)
    return AxiomVerdict(
        ax, "holds-on-space" if exhaustive else "holds-on-sample", None, n
    )


def check_entropy_axioms(
    bounds: SearchBounds = SearchBounds(),
    seeds: Optional[Sequence[TypeTwoSoftSet]] = None,
    mode: str = "subset",
    minimize: bool = True,
) -> list[AxiomVerdict]:
    """Verdicts for the four entropy axioms over the bounded space.

    The first axiom scans null/absolute-shaped instances; monotonicity scans
    containment pairs (skipping null starts, per the axiom); the determinism
    axiom scans deterministic instances plus generated random partitions;
    the equivalence axiom checks label-permuted twins.
    """
    if seeds is None:
        seeds = default_t2_seeds()
    blocks = _build_blocks(bounds, True, seeds)
    rng = random.Random(bounds.seed)
    verdicts: list[AxiomVerdict] = []
    space_exhaustive = all(b.tag != "random" for b in blocks)

    block_parts = [
        [kernels.t2_entropy_parts(enc, block.ctx) for enc in block.encs]
        for block in blocks
    ]
    block_vals = [
        [_entropy_from_parts(block.ctx.nx, p) for p in parts]
        for block, parts in zip(blocks, block_parts)
    ]

    # e1: null/absolute shapes evaluate to exactly 1
    wit = None
    n_checked = 0
    for block, parts, vals in zip(blocks, block_parts, block_vals):
        for i, p in enumerate(parts):
            if p[0] or p[1]:
                n_checked += 1
                if vals[i] != 1:
                    wit = Witness("e1", "Em", (_decode(block, i),), {"Em": str(vals[i])})
                    break
        if wit:
            break
    verdicts.append(_verdict("e1", wit, space_exhaustive, n_checked, minimize))

    # e2: monotone under containment for non-null starts
    wit = None
    n_checked = 0
    exhaustive = space_exhaustive
    for block, parts, vals in zip(blocks, block_parts, block_vals):
        n = len(block.encs)
        if n * n <= bounds.pair_cap:
            pair_iter = itertools.product(range(n), range(n))
            n_checked += n * n
        else:
            exhaustive = False
            pair_iter = ((rng.randrange(n), rng.randrange(n)) for _ in range(bounds.trials))
            n_checked += bounds.trials
        for i, j in pair_iter:
            if parts[i][0] or vals[i] <= vals[j]:
                continue
            if enc_t2_contains(block.encs[i], block.encs[j], mode):
                wit = Witness(
                    "e2",
                    "Em",
                    (_decode(block, i), _decode(block, j)),
                    {"Em(f)": str(vals[i]), "Em(g)": str(vals[j])},
                    mode,
                )
                break
        if wit:
            break
    verdicts.append(_verdict("e2", wit, exhaustive, n_checked, minimize))

    # e3: deterministic structures evaluate to exactly 0
    wit = None
    n_checked = 0
    for block, vals in zip(blocks, block_vals):
        for i in range(len(block.encs)):
            value = _decode(block, i)
            if not is_deterministic_t2(value):
                continue
            n_checked += 1
            if vals[i] != 0:
                wit = Witness("e3", "Em", (value,), {"Em": str(vals[i])})
                break
        if wit:
            break
    if wit is None:
        for _ in range(min(bounds.trials, 500)):
            value = deterministic_t2(rng, max(2, bounds.max_universe))
            n_checked += 1
            em = measures.entropy(value)
            if em != 0:
                wit = Witness("e3", "Em", (value,), {"Em": str(em)})
                break
    verdicts.append(_verdict("e3", wit, space_exhaustive, n_checked, minimize))

    # e4: label-permuted twins are equivalent with equal entropy
    wit = None
    n_checked = 0
    probed_all = space_exhaustive
    for block in blocks:
        step = 1 if len(block.encs) <= 1000 else len(block.encs) // 500
        probed_all &= step == 1
        for i in range(0, len(block.encs), step):
            value = _decode(block, i)
            twin, _, _ = permuted_twin(rng, value)
            n_checked += 1
            if are_equivalent(value, twin) is None or measures.entropy(
                value
            ) != measures.entropy(twin):
                wit = Witness("e4", "Em", (value, twin))
                break
        if wit:
            break
    verdicts.append(_verdict("e4", wit, probed_all, n_checked, minimize))
    return verdicts


# ---------------------------------------------------------------------------
# Similarity axiom checks
# ---------------------------------------------------------------------------

def _enc_similarity(target: str, block: _Block, a: EncodedT2, b: EncodedT2) -> Fraction:
    """Scalar similarity on encodings (fast path for the pair scans)."""
    ctx = block.ctx
    if target == "sm":
        return Fraction(*kernels.t2_sm_parts(a, b, ctx))
    if target == "se":
        eu = _entropy_from_parts(ctx.nx, kernels.t2_entropy_parts(enc_t2_union(a, b), ctx))
        ei = _entropy_from_parts(
            ctx.nx, kernels.t2_entropy_parts(enc_t2_intersection(a, b), ctx)
        )
        return 1 - abs(eu - ei)
    token = Measure(target[3:])
    if token in (Measure.PARAM_T2, Measure.NORM_PARAM_T2):
        d = kernels.t2_dp(a, b, ctx)
    else:
        d = kernels.t2_dm(a, b, ctx)
    if token.is_normalized:
        ea = eb = 0
        for m in a.emasks:
            ea |= m
        for m in b.emasks:
            eb |= m
        div = ctx.nx * (a.amask | b.amask).bit_count() * (ea | eb).bit_count()
        dval = Fraction(d, div) if div else Fraction(0)
    else:
        dval = Fraction(d)
    return 1 / (1 + dval)


def check_similarity_axioms(
    target: str,
    bounds: SearchBounds = SearchBounds(),
    seeds: Optional[Sequence[TypeTwoSoftSet]] = None,
    mode: str = "subset",
    minimize: bool = True,
    chains: int = 300,
) -> list[AxiomVerdict]:
    """Verdicts for one similarity target.

    ``profile`` checks the five per-parameter axioms (disjoint pairs must
    score all-zero); ``sm``, ``se`` and ``sd:<measure>`` check the four
    scalar axioms, with chain monotonicity evaluated over generated
    containment chains.
    """
    if target not in ("profile", "sm", "se") and not (
        target.startswith("sd:") and Measure(target[3:]).is_t2
    ):
        raise ValueError(f"unknown similarity target {target!r}")
    if seeds is None:
        seeds = default_t2_seeds()
    blocks = _build_blocks(bounds, True, seeds)
    rng = random.Random(bounds.seed)

    space_exhaustive = all(b.tag != "random" for b in blocks)
    prefix = "s'" if target == "profile" else "s"
    pair_axioms = [f"{prefix}1", f"{prefix}2", f"{prefix}3"] + (
        ["s'5"] if target == "profile" else []
    )
    found: dict[str, Optional[Witness]] = {ax: None for ax in pair_axioms}
    n_checked = 0
    exhaustive = space_exhaustive

    for block in blocks:
        n = len(block.encs)
        if n * n <= bounds.pair_cap:
            pair_iter = itertools.product(range(n), range(n))
            n_checked += n * n
        else:
            exhaustive = False
            pair_iter = ((rng.randrange(n), rng.randrange(n)) for _ in range(bounds.trials))
            n_checked += bounds.trials
        for i, j in pair_iter:
            a, b = block.encs[i], block.encs[j]
            if target == "profile":
                parts = kernels.t2_salpha_parts(a, b, block.ctx)
                if found["s'1"] is None and parts != kernels.t2_salpha_parts(
                    b, a, block.ctx
                ):
                    found["s'1"] = Witness("s'1", target, (_decode(block, i), _decode(block, j)))
                if found["s'2"] is None and any(
                    num < 0 or num > den for num, den in parts
                ):
                    found["s'2"] = Witness("s'2", target, (_decode(block, i), _decode(block, j)))
                if found["s'3"] is None:
                    shared = a.amask & b.amask
                    for s in range(block.ctx.np):
                        if not (shared >> s) & 1:
                            continue
                        inner_eq = (
                            a.emasks[s] == b.emasks[s] and a.images[s] == b.images[s]
                        )
                        num, den = parts[s]
                        if inner_eq != (num == den):
                            found["s'3"] = Witness(
                                "s'3", target, (_decode(block, i), _decode(block, j))
                            )
                            break
                if found["s'5"] is None and not (a.amask & b.amask) and any(
                    num != 0 for num, den in parts
                ):
                    found["s'5"] = Witness("s'5", target, (_decode(block, i), _decode(block, j)))
            else:
                v = _enc_similarity(target, block, a, b)
                if found[f"{prefix}1"] is None and v != _enc_similarity(
                    target, block, b, a
                ):
                    found[f"{prefix}1"] = Witness(
                        "s1", target, (_decode(block, i), _decode(block, j))
                    )
                if found[f"{prefix}2"] is None and not 0 <= v <= 1:
                    found[f"{prefix}2"] = Witness(
                        "s2", target, (_decode(block, i), _decode(block, j)),
                        {"value": str(v)},
                    )
                if found[f"{prefix}3"] is None and ((a == b) != (v == 1)):
                    found[f"{prefix}3"] = Witness(
                        "s3", target, (_decode(block, i), _decode(block, j)),
                        {"value": str(v)},
                    )
            if all(found[ax] is not None for ax in pair_axioms):
                break
        if all(found[ax] is not None for ax in pair_axioms):
            break

    # chain monotonicity over generated containment chains
    ax4 = f"{prefix}4"
    wit4 = None
    for _ in range(chains):
        f, g, h = chain_t2(rng, max(2, bounds.max_universe), 2, 2)
        cand = Witness(ax4, target, (f, g, h), {}, mode)
        if violates(cand):
            wit4 = cand
            break

    verdicts = []
    for ax in pair_axioms[:3]:
        verdicts.append(_verdict(ax, found[ax], exhaustive, n_checked, minimize))
    verdicts.append(_verdict(ax4, wit4, False, chains, minimize))
    if target == "profile":
        verdicts.append(_verdict("s'5", found["s'5"], exhaustive, n_checked, minimize))
    return verdicts
