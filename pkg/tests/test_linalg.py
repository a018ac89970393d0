"""Tests for the fixed-size linear algebra kernel."""

import numpy as np
import pytest

from blochinv.errors import NotSymmetric
from blochinv.linalg import (
    charpoly3,
    dagger,
    det3,
    discriminant3,
    eig_sym3,
    is_hermitian,
    is_rotation,
    is_unitary,
    kron22,
    norm_inf,
    signed_svd3,
)


def random_symmetric(rng, scale=1.0):
    a = rng.uniform(-scale, scale, size=(3, 3))
    return 0.5 * (a + a.T)


class TestPredicates:
    def test_dagger(self):
        m = np.array([[1, 2j], [3, 4]], dtype=complex)
        np.testing.assert_array_equal(dagger(m), np.array([[1, 3], [-2j, 4]]))

    def test_hermitian(self):
        assert is_hermitian(np.array([[1.0, 2j], [-2j, 3.0]]))
        assert not is_hermitian(np.array([[1.0, 2j], [2j, 3.0]]))

    def test_unitary(self):
        assert is_unitary(np.eye(2))
        assert is_unitary(np.array([[0, 1], [1, 0]], dtype=complex))
        assert not is_unitary(2.0 * np.eye(2))

    def test_rotation(self):
        assert is_rotation(np.eye(3))
        assert not is_rotation(np.diag([1.0, 1.0, -1.0]))  # reflection

    def test_kron_convention(self):
        # Left factor is the slow index: (A x B)[2a+c, 2b+d] = A[a,b] B[c,d]
        a = np.array([[1, 2], [3, 4]], dtype=complex)
        b = np.array([[5, 6], [7, 8]], dtype=complex)
        k = kron22(a, b)
        assert k[0, 0] == 5 and k[2, 0] == 15 and k[1, 3] == 2 * 8

    def test_det3_matches_numpy(self):
        rng = np.random.default_rng(0)
        for _ in range(100):
            m = rng.uniform(-2, 2, size=(3, 3))
            assert abs(det3(m) - np.linalg.det(m)) < 1e-12 * max(1.0, abs(det3(m)))


class TestCharpoly:
    def test_identity(self):
        assert charpoly3(np.eye(3)) == (-3.0, 3.0, -1.0)

    def test_zero(self):
        assert charpoly3(np.zeros((3, 3))) == (0.0, 0.0, 0.0)

    def test_diag123(self):
        # (x-1)(x-2)(x-3) = x^3 - 6x^2 + 11x - 6
        assert charpoly3(np.diag([1.0, 2.0, 3.0])) == (-6.0, 11.0, -6.0)

    def test_agrees_with_direct_determinant(self):
        rng = np.random.default_rng(1)
        for _ in range(300):
            a = rng.uniform(-1, 1, size=(3, 3))
            c2, c1, c0 = charpoly3(a)
            for x in (0.0, 1.0, -1.0):
                direct = det3(x * np.eye(3) - a)
                poly = x**3 + c2 * x**2 + c1 * x + c0
                assert abs(direct - poly) <= 1e-12 * max(1.0, abs(direct))


class TestDiscriminant:
    def test_known_values(self):
        assert discriminant3(np.diag([1.0, 2.0, 3.0])) == pytest.approx(4.0, abs=1e-12)
        assert discriminant3(np.diag([0.0, 1.0, 4.0])) == pytest.approx(144.0, abs=1e-11)
        assert discriminant3(np.eye(3)) == 0.0

    def test_nonnegative_on_symmetric(self):
        # Real-rooted cubics have nonnegative discriminant.
        rng = np.random.default_rng(2)
        for _ in range(2000):
            assert discriminant3(random_symmetric(rng)) >= -1e-9


class TestEigSym3:
    def test_zero_matrix(self):
        eig = eig_sym3(np.zeros((3, 3)))
        np.testing.assert_array_equal(eig.eigenvalues, np.zeros(3))
        np.testing.assert_array_equal(eig.rotation, np.eye(3))

    def test_already_diagonal(self):
        eig = eig_sym3(np.diag([3.0, 2.0, 1.0]))
        np.testing.assert_array_equal(eig.eigenvalues, [3.0, 2.0, 1.0])
        np.testing.assert_array_equal(eig.rotation, np.eye(3))

    def test_diagonal_needs_sorting(self):
        eig = eig_sym3(np.diag([1.0, 2.0, 3.0]))
        np.testing.assert_array_equal(eig.eigenvalues, [3.0, 2.0, 1.0])
        # Rotation is a signed permutation with determinant +1.
        assert is_rotation(eig.rotation, tol=0.0)

    def test_block_example(self):
        # Eigenvalues of [[2,1,0],[1,2,0],[0,0,5]] are 5, 3, 1 by the
        # factorization of the 2x2 block plus the decoupled axis.
        a = np.array([[2.0, 1.0, 0.0], [1.0, 2.0, 0.0], [0.0, 0.0, 5.0]])
        eig = eig_sym3(a)
        np.testing.assert_allclose(eig.eigenvalues, [5.0, 3.0, 1.0], atol=1e-12)

    def test_rejects_asymmetric(self):
        with pytest.raises(NotSymmetric):
            eig_sym3(np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]))

    def test_properties_random(self):
        rng = np.random.default_rng(3)
        for _ in range(2000):
            a = random_symmetric(rng)
            eig = eig_sym3(a)
            scale = max(1.0, norm_inf(a))
            recon = eig.rotation @ a @ eig.rotation.T - np.diag(eig.eigenvalues)
            assert norm_inf(recon) <= 1e-10 * scale
            assert norm_inf(eig.rotation.T @ eig.rotation - np.eye(3)) <= 1e-12
            assert abs(det3(eig.rotation) - 1.0) <= 1e-12
            assert eig.eigenvalues[0] >= eig.eigenvalues[1] >= eig.eigenvalues[2]

    def test_eigenvalues_match_numpy(self):
        rng = np.random.default_rng(4)
        for _ in range(500):
            a = random_symmetric(rng)
            mine = eig_sym3(a).eigenvalues
            ref = np.linalg.eigvalsh(a)[::-1]
            np.testing.assert_allclose(mine, ref, atol=1e-12)

    def test_deterministic(self):
        a = random_symmetric(np.random.default_rng(5))
        e1 = eig_sym3(a)
        e2 = eig_sym3(a)
        np.testing.assert_array_equal(e1.eigenvalues, e2.eigenvalues)
        np.testing.assert_array_equal(e1.rotation, e2.rotation)

    def test_scale_robustness(self):
        # Tolerances are relative, so extreme but finite scales still meet
        # the reconstruction contract.
        rng = np.random.default_rng(8)
        for scale in (1e-8, 1e-3, 1e3, 1e8):
            for _ in range(50):
                a = random_symmetric(rng, scale=scale)
                eig = eig_sym3(a)
                recon = eig.rotation @ a @ eig.rotation.T - np.diag(eig.eigenvalues)
                assert norm_inf(recon) <= 1e-10 * max(1.0, norm_inf(a))
                assert abs(det3(eig.rotation) - 1.0) <= 1e-12

    def test_near_degenerate_still_orthogonal(self):
        rng = np.random.default_rng(9)
        for gap in (1e-6, 1e-10, 1e-14):
            for _ in range(50):
                lam = np.array([1.0 + gap, 1.0, -0.5])
                q, _ = np.linalg.qr(rng.standard_normal((3, 3)))
                a = q @ np.diag(lam) @ q.T
                a = 0.5 * (a + a.T)
                eig = eig_sym3(a)
                assert norm_inf(eig.rotation.T @ eig.rotation - np.eye(3)) <= 1e-12
                recon = eig.rotation @ a @ eig.rotation.T - np.diag(eig.eigenvalues)
                assert norm_inf(recon) <= 1e-10


class TestSignedSVD3:
    def test_identity(self):
        svd = signed_svd3(np.eye(3))
        np.testing.assert_array_equal(svd.diag, np.ones(3))
        np.testing.assert_allclose(svd.left, np.eye(3), atol=1e-15)
        np.testing.assert_allclose(svd.right, np.eye(3), atol=1e-15)

    def test_diagonal_sign_convention(self):
        svd = signed_svd3(np.diag([1.0, -1.0, 1.0]))
        np.testing.assert_allclose(svd.diag, [1.0, 1.0, -1.0], atol=1e-15)
        recon = svd.left @ np.diag(svd.diag) @ svd.right.T
        np.testing.assert_allclose(recon, np.diag([1.0, -1.0, 1.0]), atol=1e-14)

    def test_zero_and_rank_deficient(self):
        svd = signed_svd3(np.zeros((3, 3)))
        np.testing.assert_array_equal(svd.diag, np.zeros(3))
        assert is_rotation(svd.left) and is_rotation(svd.right)

        c = np.diag([2.0, 0.0, 0.0])
        svd = signed_svd3(c)
        np.testing.assert_allclose(svd.diag, [2.0, 0.0, 0.0], atol=1e-15)
        recon = svd.left @ np.diag(svd.diag) @ svd.right.T
        assert norm_inf(recon - c) <= 1e-14

        rank2 = np.outer([1.0, 2.0, 3.0], [0.5, -1.0, 2.0])
        svd = signed_svd3(rank2)
        recon = svd.left @ np.diag(svd.diag) @ svd.right.T
        assert norm_inf(recon - rank2) <= 1e-10 * max(1.0, norm_inf(rank2))

    def test_properties_random(self):
        rng = np.random.default_rng(6)
        for _ in range(2000):
            c = rng.uniform(-1, 1, size=(3, 3))
            svd = signed_svd3(c)
            scale = max(1.0, norm_inf(c))
            recon = svd.left @ np.diag(svd.diag) @ svd.right.T
            assert norm_inf(recon - c) <= 1e-10 * scale
            assert is_rotation(svd.left, tol=1e-11)
            assert is_rotation(svd.right, tol=1e-11)
            d = svd.diag
            assert d[0] >= d[1] >= abs(d[2]) and d[0] >= 0.0 and d[1] >= 0.0
            dc = det3(c)
            if abs(dc) > 1e-12:
                assert np.sign(d[0] * d[1] * d[2]) == np.sign(dc)

    def test_singular_values_match_numpy(self):
        rng = np.random.default_rng(7)
        for _ in range(500):
            c = rng.uniform(-1, 1, size=(3, 3))
            mine = np.abs(signed_svd3(c).diag)
            ref = np.linalg.svd(c, compute_uv=False)
            np.testing.assert_allclose(np.sort(mine)[::-1], ref, atol=1e-11)

    def test_structured_hostile_inputs(self):
        # Clustered, rank-deficient, unsorted-signed-diagonal and rescaled
        # inputs, each checked against the full contract. Singular values
        # are kept at 0 or above 1e-4: the one-sided normal-equation route
        # cannot resolve values between roundoff and sqrt(eps).
        rng = np.random.default_rng(10)
        spectra = [
            (1.0, 1.0, 1.0),
            (1.0, 1.0, 0.5),
            (1.0, 0.5, 0.5),
            (1.0, 1.0 - 1e-5, 0.3),
            (1.0, 0.5, 1e-4),
            (1.0, 0.5, 0.0),
            (1.0, 0.0, 0.0),
            (0.0, 0.0, 0.0),
            (1e4, 7.0, 3.0),
            (1e8, 5e7, 2e7),
            (1e-8, 1e-8, 1e-9),
        ]
        for spec_vals in spectra:
            for _ in range(20):
                d = np.array(spec_vals)
                signs = rng.choice([-1.0, 1.0], size=3)
                q1, _ = np.linalg.qr(rng.standard_normal((3, 3)))
                q2, _ = np.linalg.qr(rng.standard_normal((3, 3)))
                c = q1 @ np.diag(signs * d) @ q2.T
                svd = signed_svd3(c)
                scale = max(1.0, norm_inf(c))
                recon = svd.left @ np.diag(svd.diag) @ svd.right.T
                assert norm_inf(recon - c) <= 1e-10 * scale
                assert is_rotation(svd.left, tol=1e-11)
                assert is_rotation(svd.right, tol=1e-11)
                out = svd.diag
                assert out[0] >= out[1] >= abs(out[2])
                assert out[0] >= 0.0 and out[1] >= 0.0
                dc = det3(c)
                if abs(dc) > 1e-12 * scale**3:
                    assert np.sign(out[0] * out[1] * out[2]) == np.sign(dc)
