"""Backend selection for the measure kernels.

At import time the compiled extension is loaded when available; otherwise
everything runs on the pure-Python kernels.  Selection also happens per call:
the compiled integer kernels require all masks to fit 64 bits, and the
compiled rational kernels (normalized Euclidean, similarity) additionally
require 16-bit masks so their exact int64 accumulation cannot overflow.
Oversized operands silently take the pure path, which has no limits.

Set ``SOFTSETS_PURE=1`` in the environment to force the pure backend.
"""

from __future__ import annotations

import os

from . import _kernels_py as _py
from .encode import EncodedT1, EncodedT2, T1Context, T2Context

try:
    from . import _kernels_c as _c
except ImportError:  # extension not built
    _c = None

_FORCE_PURE = os.environ.get("SOFTSETS_PURE", "") not in ("", "0")

HAVE_COMPILED = _c is not None
INT_LIMIT = 64  # mask width for the compiled integer kernels
FRACTION_LIMIT = 16  # mask width for the compiled exact-rational kernels


def active_backend() -> str:
    if HAVE_COMPILED and not _FORCE_PURE:
        return "c"
    return "python"


def _int_backend(*dims: int):
    if _c is not None and not _FORCE_PURE and max(dims, default=0) <= INT_LIMIT:
        return _c
    return _py


def _frac_backend(*dims: int):
    if _c is not None and not _FORCE_PURE and max(dims, default=0) <= FRACTION_LIMIT:
        return _c
    return _py


# ---- scalar entry points ----------------------------------------------------

def t1_dp(a: EncodedT1, b: EncodedT1, ctx: T1Context) -> int:
    return _int_backend(ctx.nx, ctx.np).t1_dp(a.amask, a.images, b.amask, b.images)


def t1_dm(a: EncodedT1, b: EncodedT1, ctx: T1Context) -> int:
    return _int_backend(ctx.nx, ctx.np).t1_dm(a.amask, a.images, b.amask, b.images)


def t1_e_parts(a: EncodedT1, b: EncodedT1, ctx: T1Context) -> tuple[int, int]:
    return _int_backend(ctx.nx, ctx.np).t1_e_parts(a.amask, a.images, b.amask, b.images)


def t1_q_parts(a: EncodedT1, b: EncodedT1, ctx: T1Context) -> tuple[int, int, int, int]:
    return _frac_backend(ctx.nx, ctx.np).t1_q_parts(a.amask, a.images, b.amask, b.images)


def t2_dp(a: EncodedT2, b: EncodedT2, ctx: T2Context) -> int:
    k = _int_backend(ctx.nx, ctx.np, ctx.ne)
    return k.t2_dp(a.amask, a.emasks, a.images, b.amask, b.emasks, b.images)


def t2_dm(a: EncodedT2, b: EncodedT2, ctx: T2Context) -> int:
    k = _int_backend(ctx.nx, ctx.np, ctx.ne)
    return k.t2_dm(a.amask, a.emasks, a.images, b.amask, b.emasks, b.images)


def t2_entropy_parts(a: EncodedT2, ctx: T2Context) -> tuple[int, int, int, int]:
    return _int_backend(ctx.nx, ctx.np, ctx.ne).t2_entropy_parts(
        ctx.nx, a.amask, a.emasks, a.images
    )


def t2_salpha_parts(a: EncodedT2, b: EncodedT2, ctx: T2Context) -> list[tuple[int, int]]:
    k = _frac_backend(ctx.nx, ctx.np, ctx.ne)
    return k.t2_salpha_parts(a.amask, a.emasks, a.images, b.amask, b.emasks, b.images)


def t2_sm_parts(a: EncodedT2, b: EncodedT2, ctx: T2Context) -> tuple[int, int]:
    k = _frac_backend(ctx.nx, ctx.np, ctx.ne)
    return k.t2_sm_parts(a.amask, a.emasks, a.images, b.amask, b.emasks, b.images)


# ---- batch entry points (numpy blocks, used by the axiom lab) ---------------

def t1_matrix(mode: str, nx: int, amasks, imgs, out) -> None:
    _int_backend(nx, imgs.shape[1]).t1_matrix(mode, amasks, imgs, out)


def t1_e_matrix(nx: int, amasks, imgs, out) -> None:
    _int_backend(nx, imgs.shape[1]).t1_e_matrix(amasks, imgs, out)


def t1_q_matrix(nx: int, amasks, imgs, out) -> None:
    _frac_backend(nx, imgs.shape[1]).t1_q_matrix(amasks, imgs, out)


def t2_matrix(mode: str, nx: int, amasks, emasks, imgs, out) -> None:
    _int_backend(nx, emasks.shape[1], imgs.shape[2]).t2_matrix(
        mode, amasks, emasks, imgs, out
    )


def t2_union_counts(nx: int, amasks, emasks, pout, eout) -> None:
    _int_backend(nx, emasks.shape[1]).t2_union_counts(amasks, emasks, pout, eout)
