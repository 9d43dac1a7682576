"""Wedderburn decomposition of a finite dimensional associative algebra.

The algebra is given by integer (or rational) structure constants with the
unit at basis index 0.  We find the primitive central idempotents
numerically at high working precision: the center is the nullspace of the
stacked commutator constraints, and the center splits by eigen-decomposing
multiplication by a random central element, interpolating spectral
projectors and recursing until every factor is one dimensional.

All spectral work runs through mpmath at the module default of 64
significant digits, which leaves a gap of forty-plus orders of magnitude
between genuine zeros and the smallest structural eigenvalues seen in
practice.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .errors import NotSemisimpleError, NumericalDegeneracyError, SchemaError

mp.mp.dps = max(mp.mp.dps, 64)

SPLIT_SEED = 0xC0FFEE
_MAX_SPLIT_ATTEMPTS = 8
_NULLSPACE_CUT = 1e-20
_EIGEN_GAP = 1e-7
_IDEM_TOL = 1e-9
_TRACE_ROUND_TOL = 1e-6


class AssocAlgebra:
    """Structure constants T[i, j, k]: coefficient of k in basis_i * basis_j."""

    def __init__(self, tensor):
        T = np.asarray(tensor)
        if T.ndim != 3 or T.shape[0] != T.shape[1] or T.shape[0] != T.shape[2]:
            raise SchemaError(f"structure tensor must be cubic, got {T.shape}")
        n = T.shape[0]
        eye = np.eye(n)
        if not (np.allclose(T[0], eye) and np.allclose(T[:, 0, :], eye)):
            raise SchemaError("basis element 0 must be a two-sided unit")
        self.tensor = T
        self.n = n
        # tr(L_a) = sum_i a_i * sum_k T[i, k, k]
        self._trace_vec = np.einsum("ijj->i", T)

    @classmethod
    def from_based_ring(cls, ring):
        return cls(ring.fusion)

    def unit(self):
        u = [mp.mpc(0)] * self.n
        u[0] = mp.mpc(1)
        return u

    def mult(self, a, b):
        out = [mp.mpc(0)] * self.n
        T = self.tensor
        for i in range(self.n):
            ai = a[i]
            if ai == 0:
                continue
            for j in range(self.n):
                bj = b[j]
                if bj == 0:
                    continue
                row = T[i, j]
                for k in np.nonzero(row)[0]:
                    out[int(k)] += ai * bj * int(row[k])
        return out

    def trace_left_mult(self, a):
        return sum(a[i] * int(t) for i, t in enumerate(self._trace_vec) if a[i] != 0)


def _inner(a, b):
    return sum(mp.conj(x) * y for x, y in zip(a, b))


def _norm(a):
    return mp.sqrt(mp.re(_inner(a, a)))


def _orthonormalize(vectors, drop_tol=1e-30):
    basis = []
    for v in vectors:
        w = [mp.mpc(x) for x in v]
        for b in basis:
            c = _inner(b, w)
            w = [wx - c * bx for wx, bx in zip(w, b)]
        nw = _norm(w)
        if nw > drop_tol:
            basis.append([wx / nw for wx in w])
    return basis


def center_basis(alg: AssocAlgebra) -> list:
    """Orthonormal basis of the center, via the nullspace of the stacked
    commutator constraints z * b_i - b_i * z = 0."""
    T = alg.tensor
    n = alg.n
    blocks = []
    for i in range(n):
        # rows (k), columns (j): coefficient of z_j in (z b_i - b_i z)_k
        blocks.append(T[:, i, :].T - T[i, :, :].T)
    C = np.concatenate(blocks, axis=0)
    G = C.T.conj() @ C if np.iscomplexobj(C) else C.T @ C
    E, Q = mp.eighe(mp.matrix(G.tolist()) * mp.mpc(1))
    lam_max = max(mp.re(e) for e in E)
    cut = _NULLSPACE_CUT * (1 + lam_max)
    out = []
    for idx in range(n):
        if mp.re(E[idx]) < cut:
            out.append([Q[i, idx] for i in range(n)])
    return out


def _cluster(values, gap=_EIGEN_GAP):
    vals = sorted(values, key=lambda z: (mp.re(z), mp.im(z)))
    clusters = [[vals[0]]]
    for v in vals[1:]:
        if abs(v - clusters[-1][-1]) < gap:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    # chain clustering along the sorted order can still leave two clusters
    # whose means are close; merge until all means are separated
    merged = True
    while merged and len(clusters) > 1:
        merged = False
        for a in range(len(clusters) - 1):
            ma = sum(clusters[a]) / len(clusters[a])
            mb = sum(clusters[a + 1]) / len(clusters[a + 1])
            if abs(ma - mb) < gap:
                clusters[a] += clusters.pop(a + 1)
                merged = True
                break
    return clusters


def central_idempotents(alg: AssocAlgebra, seed=SPLIT_SEED) -> list:
    """Primitive central idempotents as coefficient vectors.

    Raises NumericalDegeneracyError when no random central element manages
    to split a factor whose center is bigger than one dimensional, which is
    also what happens when the input algebra is not semisimple.
    """
    Z = center_basis(alg)
    queue = [alg.unit()]
    final = []
    while queue:
        e = queue.pop()
        ez = _orthonormalize([alg.mult(e, z) for z in Z])
        if len(ez) <= 1:
            final.append(e)
            continue
        split = None
        for attempt in range(_MAX_SPLIT_ATTEMPTS):
            rng = random.Random(seed + attempt)
            coeffs = [rng.randint(-9, 9) for _ in Z]
            w = [sum(c * z[i] for c, z in zip(coeffs, Z)) for i in range(alg.n)]
            we = alg.mult(e, w)
            k = len(ez)
            M = mp.zeros(k, k)
            for q in range(k):
                img = alg.mult(we, ez[q])
                for p in range(k):
                    M[p, q] = _inner(ez[p], img)
            eigenvalues = mp.eig(M, left=False, right=False)
            clusters = _cluster(eigenvalues)
            if len(clusters) < 2:
                continue
            means = [sum(c) / len(c) for c in clusters]
            idems = []
            ok = True
            for ci, lam in enumerate(means):
                v = list(e)
                for cj, lam2 in enumerate(means):
                    if cj == ci:
                        continue
                    vw = alg.mult(v, we)
                    scale = 1 / (lam - lam2)
                    v = [(a - lam2 * b) * scale for a, b in zip(vw, v)]
                vv = alg.mult(v, v)
                if max(abs(a - b) for a, b in zip(vv, v)) > _IDEM_TOL:
                    ok = False
                    break
                idems.append(v)
            if ok:
                split = idems
                break
        if split is None:
            raise NumericalDegeneracyError(
                "failed to split a central factor after "
                f"{_MAX_SPLIT_ATTEMPTS} seeded attempts; the algebra is "
                "degenerate or not semisimple")
        queue.extend(split)
    return final


@dataclass(frozen=True)
class BlockProfile:
    """One matrix block of the Wedderburn decomposition."""
    idempotent: tuple
    block_dim: int
    m: int


def _profile_key(b: BlockProfile):
    coeffs = tuple(
        (round(float(mp.re(c)), 9) + 0.0, round(float(mp.im(c)), 9) + 0.0)
        for c in b.idempotent)
    return (b.m, coeffs)


def block_profiles(alg: AssocAlgebra, seed=SPLIT_SEED) -> list:
    """Sorted block profiles: each primitive central idempotent with the
    dimension of its ideal and the matrix size m."""
    out = []
    for e in central_idempotents(alg, seed=seed):
        tr = alg.trace_left_mult(e)
        bd = int(mp.nint(mp.re(tr)))
        if abs(tr - bd) > _TRACE_ROUND_TOL:
            raise NumericalDegeneracyError(
                f"block dimension trace {complex(tr)} is not close to an integer")
        m = int(round(bd ** 0.5))
        if m * m != bd:
            raise NotSemisimpleError(
                f"block dimension {bd} is not a perfect square")
        out.append(BlockProfile(idempotent=tuple(e), block_dim=bd, m=m))
    out.sort(key=_profile_key)
    return out


def normalized_block_trace(alg: AssocAlgebra, block: BlockProfile, a):
    """Character of the block: (1/m) tr(L_{e a}) equals the irreducible
    trace of a in the m x m matrix factor."""
    ea = alg.mult(block.idempotent, a)
    return alg.trace_left_mult(ea) / block.m
