"""Bitmask encodings of soft sets.

Measures and the axiom lab both work on a compact integer encoding: element
subsets become bitmasks over a fixed universe ordering, parameter sets become
bitmasks over a label pool, and a Type-2 structure becomes (primary mask,
per-slot underlying masks, per-slot image masks).  Cardinalities of unions,
intersections and symmetric differences are then single popcounts, which is
what the kernel backends exploit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import TypeOneSoftSet, TypeTwoSoftSet, Universe, t1ss, t2ss


def mask_of(labels, pool_index: dict[str, int]) -> int:
    m = 0
    for lab in labels:
        m |= 1 << pool_index[lab]
    return m


def labels_of(mask: int, pool: tuple[str, ...]) -> tuple[str, ...]:
    return tuple(pool[i] for i in range(len(pool)) if (mask >> i) & 1)


@dataclass(frozen=True)
class T1Context:
    """Label pools fixing the bit positions for a family of Type-1 soft sets."""

    elements: tuple[str, ...]
    params: tuple[str, ...]

    @property
    def nx(self) -> int:
        return len(self.elements)

    @property
    def np(self) -> int:
        return len(self.params)

    def element_index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def param_index(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.params)}


@dataclass(frozen=True)
class EncodedT1:
    amask: int
    images: tuple[int, ...]  # one slot per pool parameter; 0 outside amask


@dataclass(frozen=True)
class T2Context:
    elements: tuple[str, ...]
    primary: tuple[str, ...]
    underlying: tuple[str, ...]

    @property
    def nx(self) -> int:
        return len(self.elements)

    @property
    def np(self) -> int:
        return len(self.primary)

    @property
    def ne(self) -> int:
        return len(self.underlying)


@dataclass(frozen=True)
class EncodedT2:
    amask: int
    emasks: tuple[int, ...]  # per primary slot: mask of its underlying params
    images: tuple[tuple[int, ...], ...]  # per primary slot, per underlying slot


def t1_pair_context(a: TypeOneSoftSet, b: TypeOneSoftSet) -> T1Context:
    return T1Context(a.universe.elements, tuple(sorted(set(a.params) | set(b.params))))


def t2_pair_context(f: TypeTwoSoftSet, g: TypeTwoSoftSet) -> T2Context:
    return T2Context(
        f.universe.elements,
        tuple(sorted(set(f.primary) | set(g.primary))),
        tuple(sorted(set(f.underlying) | set(g.underlying))),
    )


def encode_t1(s: TypeOneSoftSet, ctx: T1Context) -> EncodedT1:
    eidx = ctx.element_index()
    pidx = ctx.param_index()
    images = [0] * ctx.np
    amask = 0
    for p, img in zip(s.params, s.images):
        amask |= 1 << pidx[p]
        images[pidx[p]] = mask_of(img, eidx)
    return EncodedT1(amask, tuple(images))


def decode_t1(enc: EncodedT1, ctx: T1Context) -> TypeOneSoftSet:
    uni = Universe(ctx.elements)
    assignments = {
        ctx.params[i]: labels_of(enc.images[i], ctx.elements)
        for i in range(ctx.np)
        if (enc.amask >> i) & 1
    }
    return t1ss(uni, assignments)


def encode_t2(f: TypeTwoSoftSet, ctx: T2Context) -> EncodedT2:
    eidx = {e: i for i, e in enumerate(ctx.elements)}
    aidx = {a: i for i, a in enumerate(ctx.primary)}
    bidx = {b: i for i, b in enumerate(ctx.underlying)}
    amask = 0
    emasks = [0] * ctx.np
    images = [[0] * ctx.ne for _ in range(ctx.np)]
    for a, inner in zip(f.primary, f.inners):
        i = aidx[a]
        amask |= 1 << i
        for b, img in zip(inner.params, inner.images):
            j = bidx[b]
            emasks[i] |= 1 << j
            images[i][j] = mask_of(img, eidx)
    return EncodedT2(amask, tuple(emasks), tuple(tuple(row) for row in images))


def decode_t2(enc: EncodedT2, ctx: T2Context) -> TypeTwoSoftSet:
    uni = Universe(ctx.elements)
    spec = {}
    for i in range(ctx.np):
        if not (enc.amask >> i) & 1:
            continue
        inner = {}
        for j in range(ctx.ne):
            if (enc.emasks[i] >> j) & 1:
                inner[ctx.underlying[j]] = labels_of(enc.images[i][j], ctx.elements)
        spec[ctx.primary[i]] = inner
    return t2ss(uni, spec)


# ---- operations on encodings (used by the axiom lab's bulk scans) ----------

def enc_t2_union(a: EncodedT2, b: EncodedT2) -> EncodedT2:
    np_ = len(a.emasks)
    ne = len(a.images[0]) if a.images else 0
    emasks = tuple(ea | eb for ea, eb in zip(a.emasks, b.emasks))
    images = tuple(
        tuple(a.images[i][j] | b.images[i][j] for j in range(ne)) for i in range(np_)
    )
    return EncodedT2(a.amask | b.amask, emasks, images)


def enc_t2_intersection(a: EncodedT2, b: EncodedT2) -> EncodedT2:
    amask = a.amask & b.amask
    np_ = len(a.emasks)
    ne = len(a.images[0]) if a.images else 0
    emasks = []
    images = []
    for i in range(np_):
        if (amask >> i) & 1:
            em = a.emasks[i] & b.emasks[i]
            emasks.append(em)
            images.append(
                tuple(
                    (a.images[i][j] & b.images[i][j]) if (em >> j) & 1 else 0
                    for j in range(ne)
                )
            )
        else:
            emasks.append(0)
            images.append(tuple([0] * ne))
    return EncodedT2(amask, tuple(emasks), tuple(images))


def enc_t2_contains(a: EncodedT2, b: EncodedT2, mode: str = "subset") -> bool:
    if a.amask & ~b.amask:
        return False
    np_ = len(a.emasks)
    for i in range(np_):
        if not (a.amask >> i) & 1:
            continue
        if a.emasks[i] & ~b.emasks[i]:
            return False
        row_a, row_b = a.images[i], b.images[i]
        em = a.emasks[i]
        j = 0
        while em:
            if em & 1:
                if mode == "subset":
                    if row_a[j] & ~row_b[j]:
                        return False
                elif row_a[j] != row_b[j]:
                    return False
            em >>= 1
            j += 1
    return True
