# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled measure kernels over 64-bit mask encodings.

Mirrors ``_kernels_py`` bit-for-bit for operands that fit the compiled
limits (masks up to 64 bits; rational kernels up to 16-bit masks, where
exact int64 accumulation is provably overflow-free).  The dispatcher in
``kernels`` enforces those limits.
"""

from libc.math cimport sqrt
from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define POPCNT64(x) __builtin_popcountll(x)
    #else
    static int POPCNT64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int POPCNT64(unsigned long long x) nogil

BACKEND = "c"

ctypedef unsigned long long u64
ctypedef long long i64


cdef inline i64 _gcd(i64 a, i64 b) nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline void _fadd(i64 *num, i64 *den, i64 n2, i64 d2) nogil:
    cdef i64 n = num[0] * d2 + n2 * den[0]
    cdef i64 d = den[0] * d2
    cdef i64 g = _gcd(n if n >= 0 else -n, d)
    if g > 1:
        n //= g
        d //= g
    num[0] = n
    den[0] = d


# ---- Type-1 kernels --------------------------------------------------------

def t1_dp(amask, aimgs, bmask, bimgs):
    cdef u64 am = amask, bm = bmask, fa = 0, fb = 0
    cdef Py_ssize_t j
    for j in range(len(aimgs)):
        fa |= <u64> aimgs[j]
    for j in range(len(bimgs)):
        fb |= <u64> bimgs[j]
    return POPCNT64(am ^ bm) + POPCNT64(fa ^ fb)


def t1_dm(amask, aimgs, bmask, bimgs):
    cdef u64 am = amask, bm = bmask
    cdef i64 total = POPCNT64(am ^ bm)
    cdef Py_ssize_t j
    for j in range(len(aimgs)):
        total += POPCNT64((<u64> aimgs[j]) ^ (<u64> bimgs[j]))
    return total


def t1_e_parts(amask, aimgs, bmask, bimgs):
    cdef u64 am = amask, bm = bmask, shared = am & bm
    cdef i64 ss = 0, d
    cdef Py_ssize_t j
    for j in range(len(aimgs)):
        if (shared >> j) & 1:
            d = POPCNT64((<u64> aimgs[j]) ^ (<u64> bimgs[j]))
            ss += d * d
    return POPCNT64(am ^ bm), ss


def t1_q_parts(amask, aimgs, bmask, bimgs):
    cdef u64 am = amask, bm = bmask, shared = am & bm
    cdef i64 num = 0, den = 1, d, u
    cdef Py_ssize_t j
    for j in range(len(aimgs)):
        if (shared >> j) & 1:
            u = POPCNT64((<u64> aimgs[j]) | (<u64> bimgs[j]))
            if u:
                d = POPCNT64((<u64> aimgs[j]) ^ (<u64> bimgs[j]))
                _fadd(&num, &den, d * d, u)
    return POPCNT64(am ^ bm), POPCNT64(am | bm), num, den


# ---- Type-2 kernels --------------------------------------------------------

def t2_dp(amask, aemasks, aimgs, bmask, bemasks, bimgs):
    cdef u64 am = amask, bm = bmask, ea = 0, eb = 0, fa = 0, fb = 0
    cdef Py_ssize_t i, j
    cdef tuple row
    for i in range(len(aemasks)):
        ea |= <u64> aemasks[i]
        row = aimgs[i]
        for j in range(len(row)):
            fa |= <u64> row[j]
    for i in range(len(bemasks)):
        eb |= <u64> bemasks[i]
        row = bimgs[i]
        for j in range(len(row)):
            fb |= <u64> row[j]
    return POPCNT64(am ^ bm) + POPCNT64(ea ^ eb) + POPCNT64(fa ^ fb)


def t2_dm(amask, aemasks, aimgs, bmask, bemasks, bimgs):
    cdef u64 am = amask, bm = bmask, ea = 0, eb = 0, es, shared
    cdef i64 total
    cdef Py_ssize_t i, j
    cdef tuple ra, rb
    for i in range(len(aemasks)):
        ea |= <u64> aemasks[i]
    for i in range(len(bemasks)):
        eb |= <u64> bemasks[i]
    total = POPCNT64(am ^ bm) + POPCNT64(ea ^ eb)
    shared = am & bm
    for i in range(len(aemasks)):
        if (shared >> i) & 1:
            es = (<u64> aemasks[i]) & (<u64> bemasks[i])
            ra = aimgs[i]
            rb = bimgs[i]
            for j in range(len(ra)):
                if (es >> j) & 1:
                    total += POPCNT64((<u64> ra[j]) ^ (<u64> rb[j]))
    return total


def t2_entropy_parts(nx, amask, aemasks, aimgs):
    cdef u64 full = ((<u64> 1) << (<int> nx)) - 1
    cdef u64 am = amask, es, m, row_or
    cdef int is_null = 1, is_abs = 1
    cdef i64 star_sum = 0, dstar_sum = 0
    cdef Py_ssize_t i, j, ne = 0
    cdef u64 col[64]
    cdef tuple row
    if len(aimgs) > 0:
        ne = len(aimgs[0])
    for j in range(ne):
        col[j] = 0
    for i in range(len(aemasks)):
        if (am >> i) & 1:
            es = <u64> aemasks[i]
            row = aimgs[i]
            row_or = 0
            for j in range(ne):
                if (es >> j) & 1:
                    m = <u64> row[j]
                    row_or |= m
                    col[j] |= m
                    if m:
                        is_null = 0
                    if m != full:
                        is_abs = 0
            star_sum += POPCNT64(row_or)
    for j in range(ne):
        dstar_sum += POPCNT64(col[j])
    return is_null, is_abs, star_sum, dstar_sum


cdef void _salpha_c(u64 ea, u64 eb, tuple ra, tuple rb, i64 *num, i64 *den) except *:
    cdef u64 es = ea & eb
    cdef i64 u, g
    cdef Py_ssize_t j
    num[0] = 0
    den[0] = 1
    if not es:
        return
    for j in range(len(ra)):
        if (es >> j) & 1:
            u = POPCNT64((<u64> ra[j]) | (<u64> rb[j]))
            if u:
                _fadd(num, den, POPCNT64((<u64> ra[j]) & (<u64> rb[j])), u)
            else:
                _fadd(num, den, 1, 1)
    den[0] *= POPCNT64(ea | eb)
    g = _gcd(num[0], den[0])
    if g > 1:
        num[0] //= g
        den[0] //= g


def t2_salpha_parts(amask, aemasks, aimgs, bmask, bemasks, bimgs):
    cdef u64 shared = (<u64> amask) & (<u64> bmask)
    cdef i64 num, den
    cdef Py_ssize_t i
    out = []
    for i in range(len(aemasks)):
        if (shared >> i) & 1:
            _salpha_c(<u64> aemasks[i], <u64> bemasks[i], aimgs[i], bimgs[i], &num, &den)
            out.append((num, den))
        else:
            out.append((0, 1))
    return out


def t2_sm_parts(amask, aemasks, aimgs, bmask, bemasks, bimgs):
    cdef u64 am = amask, bm = bmask, shared = am & bm
    cdef i64 num = 0, den = 1, n2, d2, g
    cdef Py_ssize_t i
    if not shared:
        return 0, 1
    for i in range(len(aemasks)):
        if (shared >> i) & 1:
            _salpha_c(<u64> aemasks[i], <u64> bemasks[i], aimgs[i], bimgs[i], &n2, &d2)
            _fadd(&num, &den, n2, d2)
    den *= POPCNT64(am | bm)
    g = _gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    return num, den


# ---- Batch builders for the axiom lab --------------------------------------

def t1_matrix(mode, const u64[::1] amasks, const u64[:, ::1] imgs, i64[:, ::1] out):
    cdef Py_ssize_t n = amasks.shape[0], np_ = imgs.shape[1]
    cdef Py_ssize_t i, j, k
    cdef u64 fa, fb
    cdef i64 total
    cdef bint is_dp = (mode == "dp")
    with nogil:
        for i in range(n):
            for j in range(n):
                if is_dp:
                    fa = 0
                    fb = 0
                    for k in range(np_):
                        fa |= imgs[i, k]
                        fb |= imgs[j, k]
                    out[i, j] = POPCNT64(amasks[i] ^ amasks[j]) + POPCNT64(fa ^ fb)
                else:
                    total = POPCNT64(amasks[i] ^ amasks[j])
                    for k in range(np_):
                        total += POPCNT64(imgs[i, k] ^ imgs[j, k])
                    out[i, j] = total


def t1_e_matrix(const u64[::1] amasks, const u64[:, ::1] imgs, double[:, ::1] out):
    cdef Py_ssize_t n = amasks.shape[0], np_ = imgs.shape[1]
    cdef Py_ssize_t i, j, k
    cdef u64 shared
    cdef i64 ss, d
    with nogil:
        for i in range(n):
            for j in range(n):
                shared = amasks[i] & amasks[j]
                ss = 0
                for k in range(np_):
                    if (shared >> k) & 1:
                        d = POPCNT64(imgs[i, k] ^ imgs[j, k])
                        ss += d * d
                out[i, j] = POPCNT64(amasks[i] ^ amasks[j]) + sqrt(<double> ss)


def t1_q_matrix(const u64[::1] amasks, const u64[:, ::1] imgs, double[:, ::1] out):
    cdef Py_ssize_t n = amasks.shape[0], np_ = imgs.shape[1]
    cdef Py_ssize_t i, j, k
    cdef u64 shared
    cdef i64 num, den, d, u
    cdef int up, sym
    with nogil:
        for i in range(n):
            for j in range(n):
                shared = amasks[i] & amasks[j]
                num = 0
                den = 1
                for k in range(np_):
                    if (shared >> k) & 1:
                        u = POPCNT64(imgs[i, k] | imgs[j, k])
                        if u:
                            d = POPCNT64(imgs[i, k] ^ imgs[j, k])
                            _fadd(&num, &den, d * d, u)
                up = POPCNT64(amasks[i] | amasks[j])
                sym = POPCNT64(amasks[i] ^ amasks[j])
                out[i, j] = (sym / sqrt(<double> up) if up else 0.0) + sqrt(
                    (<double> num) / (<double> den)
                )


def t2_matrix(
    mode,
    const u64[::1] amasks,
    const u64[:, ::1] emasks,
    const u64[:, :, ::1] imgs,
    i64[:, ::1] out,
):
    cdef Py_ssize_t n = amasks.shape[0], np_ = emasks.shape[1], ne = imgs.shape[2]
    cdef Py_ssize_t i, j, p, q
    cdef u64 ea, eb, fa, fb, es, shared
    cdef i64 total
    cdef bint is_dp = (mode == "Dp")
    with nogil:
        for i in range(n):
            for j in range(n):
                ea = 0
                eb = 0
                for p in range(np_):
                    ea |= emasks[i, p]
                    eb |= emasks[j, p]
                total = POPCNT64(amasks[i] ^ amasks[j]) + POPCNT64(ea ^ eb)
                if is_dp:
                    fa = 0
                    fb = 0
                    for p in range(np_):
                        for q in range(ne):
                            fa |= imgs[i, p, q]
                            fb |= imgs[j, p, q]
                    total += POPCNT64(fa ^ fb)
                else:
                    shared = amasks[i] & amasks[j]
                    for p in range(np_):
                        if (shared >> p) & 1:
                            es = emasks[i, p] & emasks[j, p]
                            for q in range(ne):
                                if (es >> q) & 1:
                                    total += POPCNT64(imgs[i, p, q] ^ imgs[j, p, q])
                out[i, j] = total


def t2_union_counts(
    const u64[::1] amasks,
    const u64[:, ::1] emasks,
    i64[:, ::1] pout,
    i64[:, ::1] eout,
):
    cdef Py_ssize_t n = amasks.shape[0], np_ = emasks.shape[1]
    cdef Py_ssize_t i, j, p
    cdef u64 e
    cdef u64 *eunions = <u64 *> malloc(n * sizeof(u64))
    if eunions == NULL:
        raise MemoryError()
    try:
        with nogil:
            for i in range(n):
                e = 0
                for p in range(np_):
                    e |= emasks[i, p]
                eunions[i] = e
            for i in range(n):
                for j in range(n):
                    pout[i, j] = POPCNT64(amasks[i] | amasks[j])
                    eout[i, j] = POPCNT64(eunions[i] | eunions[j])
    finally:
        free(eunions)
