"""Pure-Python measure kernels over bitmask encodings.

Reference backend: works on arbitrary-precision ints, so it has no size
limits.  The compiled backend in ``_kernels_c`` mirrors these functions
bit-for-bit for operands that fit in 64-bit masks; ``kernels`` picks between
them per call.

Rational results are returned as reduced (numerator, denominator) pairs so
callers can build exact fractions without float round-off.
"""

from __future__ import annotations

from math import gcd, sqrt

BACKEND = "python"


def _fadd(n1: int, d1: int, n2: int, d2: int) -> tuple[int, int]:
    n = n1 * d2 + n2 * d1
    d = d1 * d2
    g = gcd(n, d)
    return n // g, d // g


# ---- Type-1 kernels --------------------------------------------------------

def t1_dp(amask, aimgs, bmask, bimgs) -> int:
    fa = 0
    for m in aimgs:
        fa |= m
    fb = 0
    for m in bimgs:
        fb |= m
    return (amask ^ bmask).bit_count() + (fa ^ fb).bit_count()


def t1_dm(amask, aimgs, bmask, bimgs) -> int:
    total = (amask ^ bmask).bit_count()
    for ma, mb in zip(aimgs, bimgs):
        total += (ma ^ mb).bit_count()
    return total


def t1_e_parts(amask, aimgs, bmask, bimgs) -> tuple[int, int]:
    """(|A xor B|, sum over shared params of |image diff| squared)."""
    ss = 0
    shared = amask & bmask
    j = 0
    while shared:
        if shared & 1:
            d = (aimgs[j] ^ bimgs[j]).bit_count()
            ss += d * d
        shared >>= 1
        j += 1
    return (amask ^ bmask).bit_count(), ss


def t1_q_parts(amask, aimgs, bmask, bimgs) -> tuple[int, int, int, int]:
    """(|A xor B|, |A or B|, chi numerator, chi denominator).

    chi sums |image diff|^2 / |image union| over shared parameters, with an
    empty union contributing 0.
    """
    num, den = 0, 1
    shared = amask & bmask
    j = 0
    while shared:
        if shared & 1:
            u = (aimgs[j] | bimgs[j]).bit_count()
            if u:
                d = (aimgs[j] ^ bimgs[j]).bit_count()
                num, den = _fadd(num, den, d * d, u)
        shared >>= 1
        j += 1
    return (amask ^ bmask).bit_count(), (amask | bmask).bit_count(), num, den


# ---- Type-2 kernels --------------------------------------------------------

def t2_dp(amask, aemasks, aimgs, bmask, bemasks, bimgs) -> int:
    ea = eb = fa = fb = 0
    for m in aemasks:
        ea |= m
    for m in bemasks:
        eb |= m
    for row in aimgs:
        for m in row:
            fa |= m
    for row in bimgs:
        for m in row:
            fb |= m
    return (
        (amask ^ bmask).bit_count()
        + (ea ^ eb).bit_count()
        + (fa ^ fb).bit_count()
    )


def t2_dm(amask, aemasks, aimgs, bmask, bemasks, bimgs) -> int:
    ea = eb = 0
    for m in aemasks:
        ea |= m
    for m in bemasks:
        eb |= m
    total = (amask ^ bmask).bit_count() + (ea ^ eb).bit_count()
    shared = amask & bmask
    i = 0
    while shared:
        if shared & 1:
            es = aemasks[i] & bemasks[i]
            ra, rb = aimgs[i], bimgs[i]
            j = 0
            while es:
                if es & 1:
                    total += (ra[j] ^ rb[j]).bit_count()
                es >>= 1
                j += 1
        shared >>= 1
        i += 1
    return total


def t2_entropy_parts(nx, amask, aemasks, aimgs) -> tuple[int, int, int, int]:
    """(is_null, is_absolute, sum of star sizes, sum of double-star sizes)."""
    full = (1 << nx) - 1
    is_null = 1
    is_abs = 1
    star_sum = 0
    ne = len(aimgs[0]) if aimgs else 0
    col = [0] * ne
    i = 0
    rest = amask
    while rest:
        if rest & 1:
            row_or = 0
            es = aemasks[i]
            j = 0
            while es:
                if es & 1:
                    m = aimgs[i][j]
                    row_or |= m
                    col[j] |= m
                    if m:
                        is_null = 0
                    if m != full:
                        is_abs = 0
                es >>= 1
                j += 1
            star_sum += row_or.bit_count()
        rest >>= 1
        i += 1
    dstar_sum = sum(m.bit_count() for m in col)
    return is_null, is_abs, star_sum, dstar_sum


def _salpha(ea, eb, ra, rb) -> tuple[int, int]:
    """Per-primary similarity: mean Jaccard over shared underlying params,
    spread over the union of underlying params; (0, 1) when none are shared.
    Two empty images count as fully similar."""
    es = ea & eb
    if not es:
        return 0, 1
    num, den = 0, 1
    j = 0
    while es:
        if es & 1:
            u = (ra[j] | rb[j]).bit_count()
            if u:
                num, den = _fadd(num, den, (ra[j] & rb[j]).bit_count(), u)
            else:
                num, den = _fadd(num, den, 1, 1)
        es >>= 1
        j += 1
    eu = (ea | eb).bit_count()
    den *= eu
    g = gcd(num, den)
    return num // g, den // g


def t2_salpha_parts(amask, aemasks, aimgs, bmask, bemasks, bimgs) -> list[tuple[int, int]]:
    """Per primary-pool slot: the per-parameter similarity score as (num, den).

    Slots outside the shared primary set score 0 (including one-sided ones).
    """
    out = []
    shared = amask & bmask
    for i in range(len(aemasks)):
        if (shared >> i) & 1:
            out.append(_salpha(aemasks[i], bemasks[i], aimgs[i], bimgs[i]))
        else:
            out.append((0, 1))
    return out


def t2_sm_parts(amask, aemasks, aimgs, bmask, bemasks, bimgs) -> tuple[int, int]:
    """Scalar similarity as a reduced fraction: the per-primary scores summed
    over shared primaries and divided by |primary union|; (0, 1) when no
    primary is shared."""
    shared = amask & bmask
    if not shared:
        return 0, 1
    num, den = 0, 1
    i = 0
    rest = shared
    while rest:
        if rest & 1:
            n2, d2 = _salpha(aemasks[i], bemasks[i], aimgs[i], bimgs[i])
            num, den = _fadd(num, den, n2, d2)
        rest >>= 1
        i += 1
    den *= (amask | bmask).bit_count()
    g = gcd(num, den)
    return num // g, den // g


# ---- Batch builders for the axiom lab --------------------------------------

def t1_matrix(mode: str, amasks, imgs, out) -> None:
    """Fill out[i, j] with the pairwise distance for an encoded instance block."""
    n = len(amasks)
    fn = t1_dp if mode == "dp" else t1_dm
    rows = [tuple(int(v) for v in imgs[i]) for i in range(n)]
    masks = [int(m) for m in amasks]
    for i in range(n):
        for j in range(n):
            out[i, j] = fn(masks[i], rows[i], masks[j], rows[j])


def t1_e_matrix(amasks, imgs, out) -> None:
    n = len(amasks)
    rows = [tuple(int(v) for v in imgs[i]) for i in range(n)]
    masks = [int(m) for m in amasks]
    for i in range(n):
        for j in range(n):
            sym, ss = t1_e_parts(masks[i], rows[i], masks[j], rows[j])
            out[i, j] = sym + sqrt(ss)


def t1_q_matrix(amasks, imgs, out) -> None:
    n = len(amasks)
    rows = [tuple(int(v) for v in imgs[i]) for i in range(n)]
    masks = [int(m) for m in amasks]
    for i in range(n):
        for j in range(n):
            sym, up, cn, cd = t1_q_parts(masks[i], rows[i], masks[j], rows[j])
            out[i, j] = (sym / sqrt(up) if up else 0.0) + sqrt(cn / cd)


def t2_matrix(mode: str, amasks, emasks, imgs, out) -> None:
    n = len(amasks)
    fn = t2_dp if mode == "Dp" else t2_dm
    ems = [tuple(int(v) for v in emasks[i]) for i in range(n)]
    ims = [tuple(tuple(int(v) for v in row) for row in imgs[i]) for i in range(n)]
    masks = [int(m) for m in amasks]
    for i in range(n):
        for j in range(n):
            out[i, j] = fn(masks[i], ems[i], ims[i], masks[j], ems[j], ims[j])


def t2_union_counts(amasks, emasks, pout, eout) -> None:
    """Fill |primary union| and |underlying union| counts for every pair."""
    n = len(amasks)
    masks = [int(m) for m in amasks]
    eunions = []
    for i in range(n):
        e = 0
        for v in emasks[i]:
            e |= int(v)
        eunions.append(e)
    for i in range(n):
        for j in range(n):
            pout[i, j] = (masks[i] | masks[j]).bit_count()
            eout[i, j] = (eunions[i] | eunions[j]).bit_count()
