from __future__ import annotations

import random

import numpy as np
import pytest

from softsets import _kernels_py as kpy
from softsets import kernels
from softsets.lab import SearchBounds, _block_arrays, _build_blocks, random_t1, random_t2

kc = pytest.importorskip("softsets._kernels_c") if kernels.HAVE_COMPILED else None

pytestmark = pytest.mark.skipif(
    not kernels.HAVE_COMPILED, reason="compiled backend not built"
)


def _t1_pairs(rng, nx, pool, n):
    insts = [random_t1(rng, nx, pool) for _ in range(60)]
    return [(rng.choice(insts), rng.choice(insts)) for _ in range(n)]


def _t2_pairs(rng, nx, pool, n):
    insts = [random_t2(rng, nx, pool, pool) for _ in range(60)]
    return [(rng.choice(insts), rng.choice(insts)) for _ in range(n)]


class TestScalarParity:
    """The compiled backend must agree with the pure backend bit-for-bit."""

    def test_t1_kernels(self):
        rng = random.Random(1)
        for a, b in _t1_pairs(rng, 6, 5, 800):
            args = (a.amask, a.images, b.amask, b.images)
            assert kc.t1_dp(*args) == kpy.t1_dp(*args)
            assert kc.t1_dm(*args) == kpy.t1_dm(*args)
            assert kc.t1_e_parts(*args) == kpy.t1_e_parts(*args)
            assert tuple(kc.t1_q_parts(*args)) == tuple(kpy.t1_q_parts(*args))

    def test_t2_kernels(self):
        rng = random.Random(2)
        for a, b in _t2_pairs(rng, 5, 4, 400):
            args = (a.amask, a.emasks, a.images, b.amask, b.emasks, b.images)
            assert kc.t2_dp(*args) == kpy.t2_dp(*args)
            assert kc.t2_dm(*args) == kpy.t2_dm(*args)
            assert tuple(kc.t2_sm_parts(*args)) == tuple(kpy.t2_sm_parts(*args))
            assert list(kc.t2_salpha_parts(*args)) == list(kpy.t2_salpha_parts(*args))

    def test_entropy_parts(self):
        rng = random.Random(3)
        for a, _ in _t2_pairs(rng, 5, 4, 400):
            got = kc.t2_entropy_parts(5, a.amask, a.emasks, a.images)
            want = kpy.t2_entropy_parts(5, a.amask, a.emasks, a.images)
            assert tuple(got) == tuple(want)


class TestBatchParity:
    def test_t2_matrices_match(self):
        blocks = _build_blocks(SearchBounds(max_universe=2), True, [])
        block = blocks[-1]
        n = len(block.encs)
        amasks, emasks, imgs = _block_arrays(block)
        for mode in ("Dp", "Dm"):
            out_c = np.zeros((n, n), dtype=np.int64)
            out_py = np.zeros((n, n), dtype=np.int64)
            kc.t2_matrix(mode, amasks, emasks, imgs, out_c)
            kpy.t2_matrix(mode, amasks, emasks, imgs, out_py)
            assert np.array_equal(out_c, out_py)
        pc, ec = (np.zeros((n, n), dtype=np.int64) for _ in range(2))
        pp, ep = (np.zeros((n, n), dtype=np.int64) for _ in range(2))
        kc.t2_union_counts(amasks, emasks, pc, ec)
        kpy.t2_union_counts(amasks, emasks, pp, ep)
        assert np.array_equal(pc, pp) and np.array_equal(ec, ep)

    def test_t1_matrices_match(self):
        blocks = _build_blocks(SearchBounds(max_universe=2), False, [])
        block = blocks[-1]
        n = len(block.encs)
        amasks, imgs = _block_arrays(block)
        for mode in ("dp", "dm"):
            out_c = np.zeros((n, n), dtype=np.int64)
            out_py = np.zeros((n, n), dtype=np.int64)
            kc.t1_matrix(mode, amasks, imgs, out_c)
            kpy.t1_matrix(mode, amasks, imgs, out_py)
            assert np.array_equal(out_c, out_py)
        e_c = np.zeros((n, n), dtype=np.float64)
        e_py = np.zeros((n, n), dtype=np.float64)
        kc.t1_e_matrix(amasks, imgs, e_c)
        kpy.t1_e_matrix(amasks, imgs, e_py)
        assert np.array_equal(e_c, e_py)
        q_c = np.zeros((n, n), dtype=np.float64)
        q_py = np.zeros((n, n), dtype=np.float64)
        kc.t1_q_matrix(amasks, imgs, q_c)
        kpy.t1_q_matrix(amasks, imgs, q_py)
        assert np.array_equal(q_c, q_py)


class TestDispatch:
    def test_oversized_universe_takes_pure_path(self):
        # 70 elements exceed the 64-bit compiled limit; arbitrary-precision
        # masks must still work through the public measures
        from softsets.core import t1ss
        from softsets.measures import matrix_distance, param_distance

        labels = [f"x{i:02d}" for i in range(70)]
        a = t1ss(labels, {"p": labels[:40]})
        b = t1ss(labels, {"p": labels[30:]})
        assert param_distance(a, b) == len(labels) - 10
        assert matrix_distance(a, b) == 30 + 30

    def test_fraction_kernels_limited_to_16_bit_masks(self):
        # 20 shared underlying parameters exceed the compiled rational limit
        from softsets.core import t2ss
        from softsets.measures import mean_similarity

        labels = [f"x{i}" for i in range(1, 18)]
        inner = {f"b{i}": labels[: i % 5] for i in range(20)}
        f = t2ss(labels, {"a": inner})
        assert mean_similarity(f, f) == 1

    def test_force_pure_env(self, monkeypatch):
        import importlib

        monkeypatch.setenv("SOFTSETS_PURE", "1")
        import softsets.kernels as km

        importlib.reload(km)
        try:
            assert km.active_backend() == "python"
        finally:
            monkeypatch.delenv("SOFTSETS_PURE")
            importlib.reload(km)
