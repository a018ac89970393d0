"""Canonical forms on the diagonal slices and a constructive local-unitary
equivalence decision with explicit rotation witnesses.

Conventions fixed here (any transversal of the residual finite symmetry
works; these are branch-free to test):
  * locally maximally mixed states: diagonal entries d1 >= d2 >= |d3| with
    d1, d2 >= 0 and sign(d1 d2 d3) = sign(det C);
  * symmetric states: eigenvalues sorted strictly descending and the
    rotated 1-point vector made lexicographically greatest over the four
    even sign flips of the eigenbasis;
  * a witness always maps the FIRST argument's state onto the second's.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DegenerateSpectrum
from .invariants import lmm_invariants, sym_invariants
from .linalg import eig_sym3, norm_inf, signed_svd3

DEFAULT_TOL = 1e-8
TIE_TOL = 1e-10

# The stabilizer of a sorted distinct spectrum inside the rotation group:
# diagonal sign matrices with an even number of flips.
EVEN_SIGN_FLIPS = (
    (1.0, 1.0, 1.0),
    (1.0, -1.0, -1.0),
    (-1.0, 1.0, -1.0),
    (-1.0, -1.0, 1.0),
)


class Verdict(Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not_equivalent"
    INDETERMINATE = "indeterminate"


@dataclass
class LmmCanonicalForm:
    """Slice representative of a 2-point matrix: diag entries in the sign
    and order convention above, plus the rotation pair that moves the input
    onto diag(diag)."""

    diag: np.ndarray
    witness: tuple
    degenerate: bool


@dataclass
class SymCanonicalForm:
    """Slice representative of a symmetric state: sorted eigenvalues, the
    canonicalized 1-point vector, and the rotation that realizes them."""

    eigs: np.ndarray
    w: np.ndarray
    witness: np.ndarray


@dataclass
class EquivalenceVerdict:
    verdict: Verdict
    witness: object
    invariant_distance: float


def rel_dist(a, b):
    """max_i |a_i - b_i| / max(1, |a_i|, |b_i|), the uniform comparison
    metric used throughout the package."""
    a = np.atleast_1d(np.asarray(a, dtype=float))
    b = np.atleast_1d(np.asarray(b, dtype=float))
    den = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
    return float(np.max(np.abs(a - b) / den))


def lmm_canonical(c, tie_tol=TIE_TOL):
    """Canonical form of a 2-point matrix under rotation pairs.

    Always succeeds; the degenerate flag is set when singular values
    collide within tie_tol relative to scale, in which case the witness is
    no longer unique (the diagonal still is a complete orbit datum).
    """
    c = np.asarray(c, dtype=float)
    svd = signed_svd3(c)
    scale = max(1.0, float(svd.diag[0]))
    s = np.abs(svd.diag)
    degenerate = bool(s[0] - s[1] <= tie_tol * scale or s[1] - s[2] <= tie_tol * scale)
    witness = (svd.left.T.copy(), svd.right.T.copy())
    return LmmCanonicalForm(diag=svd.diag.copy(), witness=witness, degenerate=degenerate)


def sym_canonical(v, a, disc_tol=1e-12):
    """Canonical form of a symmetric state (v, A) under rotations.

    Raises:
        DegenerateSpectrum: if A has (near-)repeated eigenvalues; outside
        that locus the orbit has no slice-unique representative.
    """
    a = np.asarray(a, dtype=float)
    v = np.asarray(v, dtype=float)
    eig = eig_sym3(a)
    l0, l1, l2 = (float(t) for t in eig.eigenvalues)
    scale = max(1.0, norm_inf(a))
    disc = ((l0 - l1) ** 2 * (l0 - l2) ** 2) * ((l1 - l2) ** 2)
    if abs(disc) <= disc_tol * scale**6:
        raise DegenerateSpectrum("repeated eigenvalues; no canonical form")
    w0 = eig.rotation @ v
    best = None
    best_key = None
    for flips in EVEN_SIGN_FLIPS:
        cand = np.array(flips) * w0
        key = (float(cand[0]), float(cand[1]), float(cand[2]))
        if best is None or key > best_key:
            best = (cand, np.array(flips))
            best_key = key
    w, flips = best
    witness = flips[:, None] * eig.rotation
    return SymCanonicalForm(eigs=eig.eigenvalues.copy(), w=w, witness=witness)


def decide_equiv_lmm(c, m, tol=DEFAULT_TOL):
    """Decide whether two 2-point matrices lie on the same rotation-pair
    orbit.

    Invariant comparison is a fast reject; agreement is certified through
    canonical forms with a composed witness (R1, R2) such that
    R1 C R2^T = M, whose residual is checked inline. Inputs with colliding
    singular values yield INDETERMINATE.
    """
    c = np.asarray(c, dtype=float)
    m = np.asarray(m, dtype=float)
    dist = rel_dist(lmm_invariants(c).as_tuple(), lmm_invariants(m).as_tuple())
    if dist > tol:
        return EquivalenceVerdict(Verdict.NOT_EQUIVALENT, None, dist)
    ca = lmm_canonical(c)
    cb = lmm_canonical(m)
    if ca.degenerate or cb.degenerate:
        return EquivalenceVerdict(Verdict.INDETERMINATE, None, dist)
    diag_dist = rel_dist(ca.diag, cb.diag)
    if diag_dist > tol:
        return EquivalenceVerdict(Verdict.NOT_EQUIVALENT, None, max(dist, diag_dist))
    r1 = cb.witness[0].T @ ca.witness[0]
    r2 = cb.witness[1].T @ ca.witness[1]
    residual = norm_inf(r1 @ c @ r2.T - m)
    if residual <= 10.0 * tol * max(1.0, norm_inf(m)):
        return EquivalenceVerdict(Verdict.EQUIVALENT, (r1, r2), max(dist, diag_dist))
    return EquivalenceVerdict(Verdict.INDETERMINATE, None, max(dist, diag_dist))


def decide_equiv_sym(state_a, state_b, tol=DEFAULT_TOL, vec_tol=1e-12):
    """Decide whether two symmetric states (v, A) and (v', A') lie on the
    same rotation orbit.

    The six generating invariants are compared first; agreement on generic
    inputs is certified through canonical forms with a witness R such that
    (R v, R A R^T) = (v', A'). Degenerate spectra or vanishing 1-point
    vectors yield INDETERMINATE.
    """
    v1, a1 = (np.asarray(x, dtype=float) for x in state_a)
    v2, a2 = (np.asarray(x, dtype=float) for x in state_b)

    base1 = np.array([np.trace(a1), np.sum(a1 * a1), np.linalg.det(a1)])
    base2 = np.array([np.trace(a2), np.sum(a2 * a2), np.linalg.det(a2)])
    dist = rel_dist(base1, base2)
    if dist > tol:
        return EquivalenceVerdict(Verdict.NOT_EQUIVALENT, None, dist)

    try:
        ca = sym_canonical(v1, a1)
        cb = sym_canonical(v2, a2)
    except DegenerateSpectrum:
        return EquivalenceVerdict(Verdict.INDETERMINATE, None, dist)
    if norm_inf(v1) <= vec_tol or norm_inf(v2) <= vec_tol:
        return EquivalenceVerdict(Verdict.INDETERMINATE, None, dist)

    s1 = sym_invariants(v1, a1)
    s2 = sym_invariants(v2, a2)
    dist = max(dist, rel_dist(s1.as_tuple(), s2.as_tuple()))
    if dist > tol:
        return EquivalenceVerdict(Verdict.NOT_EQUIVALENT, None, dist)

    eig_dist = rel_dist(ca.eigs, cb.eigs)
    w_dist = rel_dist(ca.w, cb.w)
    if max(eig_dist, w_dist) > tol:
        return EquivalenceVerdict(
            Verdict.NOT_EQUIVALENT, None, max(dist, eig_dist, w_dist)
        )
    r = cb.witness.T @ ca.witness
    residual = max(
        norm_inf(r @ v1 - v2),
        norm_inf(r @ a1 @ r.T - a2),
    )
    scale = max(1.0, norm_inf(a2), norm_inf(v2))
    if residual <= 10.0 * tol * scale:
        return EquivalenceVerdict(Verdict.EQUIVALENT, r, dist)
    return EquivalenceVerdict(Verdict.INDETERMINATE, None, dist)
