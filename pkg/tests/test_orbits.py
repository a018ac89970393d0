"""Tests for canonical forms and the equivalence decision procedure."""

import numpy as np
import pytest

from blochinv.errors import DegenerateSpectrum
from blochinv.groups import haar_so3, lmm_weyl_action_group, lmm_weyl_pair
from blochinv.linalg import norm_inf
from blochinv.orbits import (
    Verdict,
    decide_equiv_lmm,
    decide_equiv_sym,
    lmm_canonical,
    rel_dist,
    sym_canonical,
)


def gapped_descending(rng, low, high, gap):
    while True:
        vals = np.sort(rng.uniform(low, high, size=3))[::-1]
        if vals[0] - vals[1] > gap and vals[1] - vals[2] > gap:
            return vals


class TestLmmCanonical:
    def test_sign_reorder(self):
        form = lmm_canonical(np.diag([1.0, -1.0, 1.0]))
        np.testing.assert_allclose(form.diag, [1.0, 1.0, -1.0], atol=1e-14)
        assert form.degenerate  # all singular values coincide
        r1, r2 = form.witness
        target = r1 @ np.diag([1.0, -1.0, 1.0]) @ r2.T
        np.testing.assert_allclose(target, np.diag(form.diag), atol=1e-13)

    def test_zero(self):
        form = lmm_canonical(np.zeros((3, 3)))
        np.testing.assert_array_equal(form.diag, np.zeros(3))
        assert form.degenerate

    def test_synthetic_orbit(self):
        rng = np.random.default_rng(0)
        for _ in range(300):
            d = np.diag([3.0, 2.0, 1.0])
            c = haar_so3(rng) @ d @ haar_so3(rng).T
            form = lmm_canonical(c)
            np.testing.assert_allclose(form.diag, [3.0, 2.0, 1.0], atol=1e-9)
            assert not form.degenerate
            r1, r2 = form.witness
            assert norm_inf(r1 @ c @ r2.T - np.diag(form.diag)) < 1e-9

    def test_fixed_point(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            d = gapped_descending(rng, 0.2, 2.0, 1e-2)
            if rng.uniform() < 0.5:
                d = d.copy()
                d[2] = -d[2]
            form = lmm_canonical(np.diag(d))
            assert norm_inf(form.diag - d) < 1e-10

    def test_weyl_invariance(self):
        rng = np.random.default_rng(2)
        for _ in range(30):
            c = rng.uniform(-1, 1, size=(3, 3))
            base = lmm_canonical(c).diag
            for g in lmm_weyl_action_group():
                r1, r2 = lmm_weyl_pair(g)
                moved = lmm_canonical(r1 @ c @ r2.T).diag
                assert norm_inf(moved - base) < 1e-10


class TestSymCanonical:
    def test_even_flip_example(self):
        form = sym_canonical(np.array([-1.0, -2.0, 3.0]), np.diag([3.0, 2.0, 1.0]))
        np.testing.assert_array_equal(form.w, [1.0, 2.0, 3.0])
        np.testing.assert_array_equal(form.eigs, [3.0, 2.0, 1.0])
        assert norm_inf(form.witness @ np.diag([3.0, 2.0, 1.0]) @ form.witness.T
                        - np.diag(form.eigs)) < 1e-13

    def test_degenerate_raises(self):
        with pytest.raises(DegenerateSpectrum):
            sym_canonical(np.ones(3), np.eye(3))

    def test_orbit_property(self):
        rng = np.random.default_rng(3)
        v = np.array([0.7, -0.2, 1.3])
        a = np.diag([1.5, 0.3, -0.9])
        ref = sym_canonical(v, a)
        for _ in range(200):
            r = haar_so3(rng)
            form = sym_canonical(r @ v, r @ a @ r.T)
            assert norm_inf(form.w - ref.w) < 1e-8
            assert norm_inf(form.eigs - ref.eigs) < 1e-8

    def test_witness_lands_on_slice(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            lam = gapped_descending(rng, -2.0, 2.0, 1e-2)
            q = haar_so3(rng)
            a = q.T @ np.diag(lam) @ q
            v = rng.uniform(-1, 1, size=3)
            form = sym_canonical(v, a)
            assert norm_inf(form.witness @ a @ form.witness.T - np.diag(form.eigs)) < 1e-10
            assert norm_inf(form.witness @ v - form.w) < 1e-12

    def test_idempotent(self):
        rng = np.random.default_rng(5)
        for _ in range(100):
            lam = gapped_descending(rng, -2.0, 2.0, 1e-2)
            v = rng.uniform(-1, 1, size=3)
            form = sym_canonical(v, np.diag(lam))
            again = sym_canonical(form.w, np.diag(form.eigs))
            np.testing.assert_array_equal(again.w, form.w)
            np.testing.assert_array_equal(again.eigs, form.eigs)


class TestDecideLmm:
    def test_synthetic_equivalent(self):
        rng = np.random.default_rng(6)
        for _ in range(200):
            d = np.diag(gapped_descending(rng, 0.1, 2.0, 1e-2))
            ca = haar_so3(rng) @ d @ haar_so3(rng).T
            cb = haar_so3(rng) @ d @ haar_so3(rng).T
            verdict = decide_equiv_lmm(ca, cb)
            assert verdict.verdict is Verdict.EQUIVALENT
            r1, r2 = verdict.witness
            assert norm_inf(r1 @ ca @ r2.T - cb) < 1e-8

    def test_determinant_sign_separates(self):
        verdict = decide_equiv_lmm(np.diag([1.0, 2.0, 3.0]), np.diag([1.0, 2.0, -3.0]))
        assert verdict.verdict is Verdict.NOT_EQUIVALENT
        assert verdict.invariant_distance > 1.0

    def test_zero_is_indeterminate(self):
        verdict = decide_equiv_lmm(np.zeros((3, 3)), np.zeros((3, 3)))
        assert verdict.verdict is Verdict.INDETERMINATE
        assert verdict.invariant_distance == 0.0

    def test_independent_states_separate(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            ca = rng.uniform(-1, 1, size=(3, 3))
            cb = rng.uniform(-1, 1, size=(3, 3))
            assert decide_equiv_lmm(ca, cb).verdict is Verdict.NOT_EQUIVALENT


class TestDecideSym:
    def test_synthetic_equivalent(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            lam = gapped_descending(rng, -2.0, 2.0, 1e-2)
            w = rng.uniform(-1, 1, size=3)
            ra, rb = haar_so3(rng), haar_so3(rng)
            sa = (ra.T @ w, ra.T @ np.diag(lam) @ ra)
            sb = (rb.T @ w, rb.T @ np.diag(lam) @ rb)
            verdict = decide_equiv_sym(sa, sb)
            assert verdict.verdict is Verdict.EQUIVALENT
            r = verdict.witness
            assert norm_inf(r @ sa[0] - sb[0]) < 1e-8
            assert norm_inf(r @ sa[1] @ r.T - sb[1]) < 1e-8

    def test_scaling_v_separates(self):
        v = np.array([0.4, -0.8, 1.1])
        a = np.diag([3.0, 2.0, 1.0])
        assert decide_equiv_sym((v, a), (2.0 * v, a)).verdict is Verdict.NOT_EQUIVALENT

    def test_repeated_eigenvalues_indeterminate(self):
        v = np.array([0.2, 0.3, 0.4])
        assert decide_equiv_sym((v, np.eye(3)), (v, np.eye(3))).verdict is Verdict.INDETERMINATE

    def test_independent_states_separate(self):
        rng = np.random.default_rng(9)
        for _ in range(200):
            sa = (rng.uniform(-1, 1, 3), np.diag(gapped_descending(rng, -2, 2, 1e-2)))
            sb = (rng.uniform(-1, 1, 3), np.diag(gapped_descending(rng, -2, 2, 1e-2)))
            assert decide_equiv_sym(sa, sb).verdict is Verdict.NOT_EQUIVALENT


def test_rel_dist_metric():
    assert rel_dist([1.0], [1.0]) == 0.0
    assert rel_dist([0.0], [0.5]) == 0.5
    assert rel_dist([100.0], [101.0]) == pytest.approx(1.0 / 101.0)
