"""Group machinery: the covering map U(2) -> SO(3), the rotation-pair
action on Bloch matrices, the chiral octahedral group of signed
permutations, the effective residual group acting on diagonal correlation
matrices, and Haar sampling on SU(2)."""

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import NotUnitary
from .linalg import dagger, is_unitary, kron22, norm_inf
from .states import PAULI, BlochMatrix


def so3_of_u2(u, tol=1e-12):
    """Rotation induced by a 2x2 unitary on the Bloch ball.

    R_ij = Re tr(sigma_i U sigma_j U*) / 2 for i, j in {1,2,3}. This is a
    group homomorphism onto SO(3) and kills a global phase.

    Raises:
        NotUnitary: if U fails the unitarity check.
    """
    u = np.asarray(u, dtype=complex)
    if u.shape != (2, 2) or not is_unitary(u, tol=max(tol, 1e-12)):
        raise NotUnitary("input is not a 2x2 unitary within tolerance")
    ud = dagger(u)
    r = np.empty((3, 3))
    for j in range(3):
        conj = u @ PAULI[j + 1] @ ud
        for i in range(3):
            r[i, j] = 0.5 * np.einsum("ab,ba->", PAULI[i + 1], conj).real
    return r


def act_density(u1, u2, rho):
    """Conjugate a two-qubit state by the local unitary pair (U1, U2)."""
    g = kron22(u1, u2)
    return g @ np.asarray(rho, dtype=complex) @ dagger(g)


def act_bloch(r1, r2, bloch):
    """Rotation-pair action on Bloch coordinates:
    u -> R1 u, v -> R2 v, C -> R1 C R2^T."""
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    return BlochMatrix(u=r1 @ bloch.u, v=r2 @ bloch.v, C=r1 @ bloch.C @ r2.T)


@dataclass(frozen=True)
class SignedPerm:
    """Signed permutation of the three axes, kept in exact integers.

    As a matrix it sends e_j to signs[j] * e_perm[j], i.e. the matrix has
    entry signs[j] at row perm[j], column j.
    """

    perm: tuple
    signs: tuple

    def matrix(self):
        m = np.zeros((3, 3), dtype=int)
        for j in range(3):
            m[self.perm[j], j] = self.signs[j]
        return m

    def determinant(self):
        parity = 1
        p = self.perm
        for a in range(3):
            for b in range(a + 1, 3):
                if p[a] > p[b]:
                    parity = -parity
        return parity * self.signs[0] * self.signs[1] * self.signs[2]

    def sign_product(self):
        return self.signs[0] * self.signs[1] * self.signs[2]

    def apply(self, vec):
        out = np.zeros(3, dtype=np.asarray(vec).dtype)
        for j in range(3):
            out[self.perm[j]] = self.signs[j] * vec[j]
        return out

    def compose(self, other):
        """self after other, matching matrix multiplication."""
        perm = tuple(self.perm[other.perm[j]] for j in range(3))
        signs = tuple(other.signs[j] * self.signs[other.perm[j]] for j in range(3))
        return SignedPerm(perm=perm, signs=signs)


def identity_signed_perm():
    return SignedPerm(perm=(0, 1, 2), signs=(1, 1, 1))


def signed_permutations():
    """All 48 signed permutation matrices, in a fixed deterministic order."""
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((1, -1), repeat=3):
            out.append(SignedPerm(perm=perm, signs=signs))
    return out


def octahedral_group():
    """The 24 signed permutation matrices of determinant +1, the group of
    rotational symmetries of the octahedron."""
    return [g for g in signed_permutations() if g.determinant() == 1]


def lmm_weyl_action_group():
    """The 24 signed permutations with sign product +1.

    This is the effective group induced on diagonal 2-point matrices by
    rotation pairs (E1 P, E2 P) that normalize the diagonal slice: the
    permutation part is free and the entrywise sign pattern is the product
    of the two sign matrices, which forces an even number of flips.
    """
    return [g for g in signed_permutations() if g.sign_product() == 1]


def lmm_weyl_pair(sp):
    """Exact integer rotation pair (R1, R2), both of determinant +1,
    realizing the action diag(c) -> diag(sp.apply(c)) as R1 diag(c) R2^T.

    Requires sp.sign_product() == +1.
    """
    if sp.sign_product() != 1:
        raise ValueError("only even sign patterns are realized by rotation pairs")
    pm = np.zeros((3, 3), dtype=int)
    for j in range(3):
        pm[sp.perm[j], j] = 1
    parity = SignedPerm(perm=sp.perm, signs=(1, 1, 1)).determinant()
    e1 = np.ones(3, dtype=int)
    if parity == -1:
        e1[0] = -1
    # Entrywise, e1 * e2 must equal the sign pattern carried onto row perm[j].
    eta = np.empty(3, dtype=int)
    for j in range(3):
        eta[sp.perm[j]] = sp.signs[j]
    e2 = eta * e1
    r1 = np.diag(e1) @ pm
    r2 = np.diag(e2) @ pm
    return r1, r2


def lmm_normalizer_pairs():
    """All 96 pairs (E1 P, E2 P) of determinant +1 that map diagonal
    matrices to diagonal matrices under (R1, R2): C -> R1 C R2^T."""
    pairs = []
    for perm in itertools.permutations(range(3)):
        pm = np.zeros((3, 3), dtype=int)
        for j in range(3):
            pm[perm[j], j] = 1
        parity = SignedPerm(perm=perm, signs=(1, 1, 1)).determinant()
        sign_patterns = [
            np.array(s) for s in itertools.product((1, -1), repeat=3)
            if s[0] * s[1] * s[2] == parity
        ]
        for s1 in sign_patterns:
            for s2 in sign_patterns:
                pairs.append((np.diag(s1) @ pm, np.diag(s2) @ pm))
    return pairs


def haar_su2(seed):
    """Haar-random SU(2) element: a normalized pair of complex Gaussians
    placed in the standard special-unitary form."""
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    z = rng.standard_normal(4)
    a = complex(z[0], z[1])
    b = complex(z[2], z[3])
    n = math.sqrt(abs(a) ** 2 + abs(b) ** 2)
    a /= n
    b /= n
    return np.array([[a, -b.conjugate()], [b, a.conjugate()]])


def haar_so3(seed):
    """Haar-random rotation, pushed forward from SU(2) through the cover."""
    return so3_of_u2(haar_su2(seed))


def rotation_residual(r):
    """Deviation of a matrix from SO(3): max of |R^T R - I| and |det R - 1|."""
    r = np.asarray(r, dtype=float)
    g = norm_inf(r.T @ r - np.eye(3))
    d = abs(float(np.linalg.det(r)) - 1.0)
    return max(g, d)
