"""Correspondence between subrings of the condensed ring and invariant
subalgebras of the condensable algebra.

For each subring B of the module ring containing the local part, the
averaging idempotent e_B acts in every matrix block of the ideal cut out by
the condensation; its block ranks n'_b are the multiplicities of the
invariant subalgebra A^B as an ambient object.  The checks here are the
ones the correspondence forces: endpoints, strict order reversal, the
dimension formula dim(B) * d(A^B) * d(A) = dim(C), and self-duality of the
multiplicity vector.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from mpmath import mp

from .condense import CondensationBundle, SchurWeylReport, e_sub, schur_weyl
from .cyclotomic import as_mpc, exact_scalar
from .errors import NumericalDegeneracyError, TheoremViolationError
from .ring import element_product, enumerate_subrings

N_PRIME_TOL = 1e-6


def lattice(b: CondensationBundle) -> list:
    """All subrings of the module ring that contain the local part, as
    sorted index tuples.  Subject to the subring enumeration rank cap."""
    return enumerate_subrings(b.module_ring, must_contain=b.local)


def _sub_dim(b: CondensationBundle, sub) -> float:
    exact = [exact_scalar(v) for v in b.dA.values]
    if all(e is not None for e in exact):
        total = sum(exact[y] * exact[y] for y in sub)
        return float(as_mpc(total).real)
    return float(sum(as_mpc(b.dA[y]).real ** 2 for y in sub))


def _trivial_block(swr: SchurWeylReport) -> int:
    """The ideal block whose character is the dimension function itself:
    the block of the invariant subalgebra of the full module ring."""
    b = swr.bundle
    dv = [float(as_mpc(v).real) for v in b.dA.values]
    best, best_gap = None, None
    for bi, bp in enumerate(swr.blocks):
        if not swr.in_ideal[bi]:
            continue
        gap = sum(abs(complex(swr.characters[bi][y]) - dv[y])
                  for y in range(b.module_ring.rank))
        if best_gap is None or gap < best_gap:
            best, best_gap = bi, gap
    if best is None or best_gap > 1e-6 * b.module_ring.rank:
        raise TheoremViolationError(
            "no block carries the dimension character; the ideal cut by the "
            "algebra idempotent must contain the trivial block")
    return best


@dataclass(frozen=True)
class InvariantSubalgebra:
    """Block multiplicities of A^B for one subring B."""
    sub: tuple
    block_indices: tuple
    n_prime: tuple
    ambient_vector: tuple | None


def invariant_subalgebra(swr: SchurWeylReport, sub) -> InvariantSubalgebra:
    """Multiplicities n'_b = chi_b(e_B) of the invariant subalgebra.

    Each value must round to an integer between 0 and the block size; a
    fuzzy value is a numerical failure, an out-of-range one contradicts the
    correspondence.  When every ideal block is matched to an ambient simple
    the result is also expressed as an ambient multiplicity vector, which
    must be self-dual.
    """
    b = swr.bundle
    sub = tuple(sorted(int(i) for i in sub))
    evec = e_sub(b, sub)
    block_indices, n_prime = [], []
    for bi, bp in enumerate(swr.blocks):
        if not swr.in_ideal[bi]:
            continue
        val = swr.block_value(bi, evec)
        n = int(mp.nint(val.real))
        if abs(val - n) > N_PRIME_TOL:
            raise NumericalDegeneracyError(
                f"block multiplicity {complex(val)} for subring {sub} does "
                f"not round to an integer within {N_PRIME_TOL}")
        if not 0 <= n <= bp.m:
            raise TheoremViolationError(
                f"block multiplicity {n} outside [0, {bp.m}] for "
                f"subring {sub}")
        block_indices.append(bi)
        n_prime.append(n)

    vec = None
    if all(swr.matched[bi] is not None for bi in block_indices):
        v = [0] * b.ambient.rank
        for bi, n in zip(block_indices, n_prime):
            v[swr.matched[bi]] = n
        dual = b.ambient.dual
        for x in range(b.ambient.rank):
            if v[x] != v[dual[x]]:
                raise TheoremViolationError(
                    "invariant subalgebra is not self-dual: multiplicity "
                    f"{v[x]} at {b.ambient.labels[x]} vs {v[dual[x]]} at "
                    f"{b.ambient.labels[dual[x]]}")
        vec = tuple(v)
    return InvariantSubalgebra(sub=sub, block_indices=tuple(block_indices),
                               n_prime=tuple(n_prime), ambient_vector=vec)


@dataclass(frozen=True)
class GaloisEntry:
    sub: tuple
    n_prime: tuple
    ambient_vector: tuple | None
    d_invariant: float
    dim_sub: float
    residual: float


@dataclass(frozen=True)
class GaloisReport:
    bundle: CondensationBundle
    swr: SchurWeylReport
    entries: tuple
    trivial_block: int
    injective: bool
    collisions: tuple
    problems: tuple
    max_residual: float

    @property
    def ok(self) -> bool:
        return not self.problems

    def entry(self, sub) -> GaloisEntry:
        key = tuple(sorted(int(i) for i in sub))
        for e in self.entries:
            if e.sub == key:
                return e
        raise KeyError(f"no lattice entry for {key}")


def _block_dims(swr: SchurWeylReport, tol: float):
    """Ambient dimension attached to each ideal block: the matched simple's
    dimension, or the common dimension of all candidates at that block
    size.  None marks a block where no consistent dimension exists."""
    b = swr.bundle
    out = {}
    for bi, bp in enumerate(swr.blocks):
        if not swr.in_ideal[bi]:
            continue
        if swr.matched[bi] is not None:
            out[bi] = float(as_mpc(b.ambient.dims[swr.matched[bi]]).real)
            continue
        cand = [float(as_mpc(b.ambient.dims[x]).real)
                for x, n in enumerate(b.mult) if n == bp.m]
        if cand and max(cand) - min(cand) <= tol * max(1.0, max(cand)):
            out[bi] = cand[0]
        else:
            out[bi] = None
    return out


def verify_correspondence(b: CondensationBundle, tol: float = 1e-9,
                          swr: SchurWeylReport | None = None) -> GaloisReport:
    """Run the correspondence checks over the whole subring lattice.

    Fails are collected in the report rather than raised, except for the
    hard ones: a non-positive invariant dimension and the errors
    invariant_subalgebra itself raises.
    """
    if swr is None:
        swr = schur_weyl(b, tol=tol)
    subs = lattice(b)
    problems = []
    trivial = _trivial_block(swr)
    if swr.matched[trivial] is not None and swr.matched[trivial] != 0:
        problems.append(
            "trivial block is matched to "
            f"{b.ambient.labels[swr.matched[trivial]]}, not the unit")

    dim_c = float(as_mpc(b.ambient.global_dim()).real)
    d_alg = float(as_mpc(b.algebra.dim()).real)
    bdims = _block_dims(swr, tol)
    ideal_idx = tuple(bi for bi, f in enumerate(swr.in_ideal) if f)
    triv_pos = ideal_idx.index(trivial)

    entries = []
    for sub in subs:
        inv = invariant_subalgebra(swr, sub)
        if inv.n_prime[triv_pos] != 1:
            problems.append(
                f"subring {sub}: trivial-block multiplicity is "
                f"{inv.n_prime[triv_pos]}, not 1")
        d_inv = 0.0
        for bi, n in zip(inv.block_indices, inv.n_prime):
            if n == 0:
                continue
            if bdims[bi] is None:
                problems.append(
                    f"subring {sub}: no consistent ambient dimension for "
                    f"block {bi}; dimension formula skipped")
                d_inv = None
                break
            d_inv += n * bdims[bi]
        if d_inv is not None and d_inv <= tol:
            raise TheoremViolationError(
                f"invariant subalgebra of {sub} has non-positive "
                f"dimension {d_inv}")
        dim_sub = _sub_dim(b, sub)
        if d_inv is None:
            residual = float("nan")
        else:
            residual = abs(dim_sub * d_inv * d_alg - dim_c) / max(1.0, dim_c)
            if residual > tol:
                problems.append(
                    f"subring {sub}: dimension formula residual {residual:.3e}")
        entries.append(GaloisEntry(sub=sub, n_prime=inv.n_prime,
                                   ambient_vector=inv.ambient_vector,
                                   d_invariant=d_inv, dim_sub=dim_sub,
                                   residual=residual))

    by_sub = {e.sub: e for e in entries}
    local = tuple(sorted(b.local))
    full = tuple(range(b.module_ring.rank))
    ms = tuple(swr.blocks[bi].m for bi in ideal_idx)
    e_local = by_sub.get(local)
    if e_local is None:
        problems.append("lattice does not contain the local part")
    elif e_local.n_prime != ms:
        problems.append(
            f"local subring multiplicities {e_local.n_prime} differ from "
            f"block sizes {ms}")
    e_full = by_sub.get(full)
    if e_full is None:
        problems.append("lattice does not contain the full module ring")
    else:
        want = tuple(1 if i == triv_pos else 0
                     for i in range(len(e_full.n_prime)))
        if e_full.n_prime != want:
            problems.append(
                f"full module ring gives multiplicities {e_full.n_prime}, "
                "expected the unit alone")

    for i, ei in enumerate(entries):
        si = set(ei.sub)
        for ej in entries[i + 1:]:
            sj = set(ej.sub)
            if si < sj:
                small, big = ei, ej
            elif sj < si:
                small, big = ej, ei
            else:
                continue
            if small.d_invariant is None or big.d_invariant is None:
                continue
            if not big.d_invariant < small.d_invariant - tol:
                problems.append(
                    f"order reversal fails: {small.sub} < {big.sub} but "
                    f"d {small.d_invariant:g} !> {big.d_invariant:g}")
            if any(nb > ns for nb, ns in zip(big.n_prime, small.n_prime)):
                problems.append(
                    f"multiplicities not monotone: {small.sub} < {big.sub} "
                    f"but {big.n_prime} !<= {small.n_prime}")

    groups = {}
    for e in entries:
        groups.setdefault(e.n_prime, []).append(e.sub)
    collisions = tuple(tuple(v) for v in groups.values() if len(v) > 1)

    residuals = [e.residual for e in entries if e.residual == e.residual]
    return GaloisReport(bundle=b, swr=swr, entries=tuple(entries),
                        trivial_block=trivial,
                        injective=not collisions, collisions=collisions,
                        problems=tuple(problems),
                        max_residual=max(residuals) if residuals else 0.0)


# ---------------------------------------------------------------- quotients


@dataclass(frozen=True)
class GroupQuotient:
    """Cosets of the local part inside the module ring, with their
    normalized products.  ``table`` is a full group multiplication table
    when every product of normalized cosets is again a single normalized
    coset, else None; the pointed cosets always form a group."""
    cosets: tuple
    table: tuple | None
    pointed: tuple
    pointed_table: tuple
    residual: float

    @property
    def is_group(self) -> bool:
        return self.table is not None


def group_quotient(swr: SchurWeylReport, tol: float = 1e-9) -> GroupQuotient:
    b = swr.bundle
    ring = b.module_ring
    r = ring.rank
    parent = list(range(r))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        parent[find(i)] = find(j)

    for l in b.local:
        for y in range(r):
            for z in np.nonzero(ring.fusion[l, y])[0]:
                union(y, int(z))
    groups = {}
    for y in range(r):
        groups.setdefault(find(y), []).append(y)
    cosets = sorted((tuple(sorted(v)) for v in groups.values()),
                    key=lambda c: c[0])
    k = len(cosets)
    coset_of = {}
    for ci, c in enumerate(cosets):
        for y in c:
            coset_of[y] = ci

    dv = np.array([float(as_mpc(v).real) for v in b.dA.values])
    e1 = [float(as_mpc(c).real) for c in swr.e1]
    ebar = []
    for c in cosets:
        rep = c[0]
        vec = [0.0] * r
        vec[rep] = 1.0
        prod = element_product(ring, e1, vec)
        ebar.append(np.array([float(x) for x in prod]) / dv[rep])

    residual = 0.0
    coeffs = np.zeros((k, k, k))
    for i in range(k):
        for j in range(k):
            p = np.array([float(x) for x in
                          element_product(ring, list(ebar[i]), list(ebar[j]))])
            recon = np.zeros(r)
            for ci in range(k):
                num = float(p @ ebar[ci])
                den = float(ebar[ci] @ ebar[ci])
                c = num / den
                coeffs[i, j, ci] = c
                recon += c * ebar[ci]
            residual = max(residual, float(np.max(np.abs(p - recon))))
    if residual > tol:
        raise NumericalDegeneracyError(
            f"coset products do not decompose over cosets (residual "
            f"{residual:.3e})")

    def single_target(i, j):
        row = coeffs[i, j]
        hits = [ci for ci in range(k) if abs(row[ci] - 1.0) <= 1e-9]
        if len(hits) == 1 and all(abs(row[ci]) <= 1e-9
                                  for ci in range(k) if ci != hits[0]):
            return hits[0]
        return None

    table = []
    is_group = True
    for i in range(k):
        table.append(tuple(single_target(i, j) for j in range(k)))
        if any(t is None for t in table[-1]):
            is_group = False
    table = tuple(table) if is_group else None

    unit_coset = coset_of[0]
    pointed = []
    for i, c in enumerate(cosets):
        idual = coset_of[ring.dual[c[0]]]
        if single_target(i, idual) == unit_coset:
            pointed.append(i)
    pointed = tuple(pointed)
    ptable = []
    for i in pointed:
        row = []
        for j in pointed:
            t = single_target(i, j)
            if t is None or t not in pointed:
                raise TheoremViolationError(
                    "pointed cosets do not close under multiplication")
            row.append(t)
        ptable.append(tuple(row))
    return GroupQuotient(cosets=tuple(cosets), table=table, pointed=pointed,
                         pointed_table=tuple(ptable), residual=residual)


# ------------------------------------------------------------------- output


def _sub_name(b: CondensationBundle, sub) -> str:
    return "{" + ",".join(b.module_ring.labels[y] for y in sub) + "}"


def _invariant_name(b: CondensationBundle, entry: GaloisEntry) -> str:
    if entry.ambient_vector is None:
        return "blocks " + ",".join(str(n) for n in entry.n_prime)
    parts = []
    for x, n in enumerate(entry.ambient_vector):
        if n == 1:
            parts.append(b.ambient.labels[x])
        elif n > 1:
            parts.append(f"{n}*{b.ambient.labels[x]}")
    return " + ".join(parts) if parts else "0"


def hasse_dot(report: GaloisReport) -> str:
    """Hasse diagram of the lattice in DOT form, one node per subring
    annotated with its dimension and its invariant subalgebra."""
    b = report.bundle
    entries = report.entries
    n = len(entries)
    below = [[set(entries[i].sub) < set(entries[j].sub) for j in range(n)]
             for i in range(n)]
    lines = ["digraph lattice {", "  rankdir=BT;", "  node [shape=box];"]
    for i, e in enumerate(entries):
        d = "?" if e.d_invariant is None else f"{e.d_invariant:g}"
        label = (f"{_sub_name(b, e.sub)} (dim {e.dim_sub:g})"
                 f"\\ninv {_invariant_name(b, e)} (d {d})")
        lines.append(f'  n{i} [label="{label}"];')
    for i in range(n):
        for j in range(n):
            if not below[i][j]:
                continue
            if any(below[i][m] and below[m][j] for m in range(n)):
                continue
            lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def markdown_table(report: GaloisReport) -> str:
    b = report.bundle
    out = ["| subring | dim | invariant subalgebra | d | residual |",
           "|---|---|---|---|---|"]
    for e in report.entries:
        d = "?" if e.d_invariant is None else f"{e.d_invariant:g}"
        res = "n/a" if e.residual != e.residual else f"{e.residual:.2e}"
        out.append(f"| {_sub_name(b, e.sub)} | {e.dim_sub:g} "
                   f"| {_invariant_name(b, e)} | {d} | {res} |")
    return "\n".join(out) + "\n"
