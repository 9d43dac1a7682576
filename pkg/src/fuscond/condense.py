"""Condensable algebras and the commutant (Schur-Weyl) verification.

A condensation bundle packages everything we can know about condensing an
algebra A inside an ambient braided category C as finite data: the ambient
labels with dims and twists (and S-matrix or fusion ring when available),
the multiplicity vector n_x = [x, A], the fusion ring of the module
category C_A, its dimensions, the induction matrix, and which simples of
C_A are local.

The central verification: the ideal cut out by the local vacuum idempotent
e1 decomposes into matrix blocks whose sizes are exactly the nonzero n_x,
the complement is the kernel of the action on A, and each block is
identified by its character against the ambient S-matrix row of x.
"""
from __future__ import annotations

from dataclasses import dataclass

import mpmath as mp
import numpy as np

from .cyclotomic import as_mpc, exact_scalar
from .errors import (
    CapabilityError,
    NumericalDegeneracyError,
    SchemaError,
    TheoremViolationError,
    ValidationReport,
)
from .modular import ModularData, dims as modular_dims, verlinde
from .ring import BasedRing, DimVector, closure, element_product, fp_dims, validate
from .wedderburn import (
    SPLIT_SEED,
    AssocAlgebra,
    block_profiles,
    normalized_block_trace,
)

MATCH_ACCEPT = 1e-6
MATCH_REJECT = 1e-3


@dataclass(frozen=True, eq=False)
class Ambient:
    """What we know about the ambient category, at one of three levels:
    full modular data, fusion ring plus dims and twists, or a bare table of
    labels, dims and twists."""
    labels: tuple
    dual: tuple
    dims: DimVector
    twists: tuple | None = None
    ring: BasedRing | None = None
    modular: ModularData | None = None

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        r = len(labels)
        dual = tuple(int(i) for i in self.dual)
        object.__setattr__(self, "dual", dual)
        if sorted(dual) != list(range(r)) or any(dual[dual[i]] != i for i in range(r)):
            raise SchemaError("ambient dual map must be an involutive permutation")
        d = self.dims
        if not isinstance(d, DimVector):
            d = DimVector(values=tuple(d), source="given")
        object.__setattr__(self, "dims", d)
        if len(d) != r:
            raise SchemaError(f"need {r} ambient dims, got {len(d)}")
        if self.twists is not None:
            tw = tuple(self.twists)
            object.__setattr__(self, "twists", tw)
            if len(tw) != r:
                raise SchemaError(f"need {r} ambient twists, got {len(tw)}")
        if self.ring is not None and (self.ring.labels != labels
                                      or self.ring.dual != dual):
            raise SchemaError("ambient ring labels/dual disagree with the table")

    @classmethod
    def from_modular(cls, md: ModularData) -> "Ambient":
        return cls(labels=md.labels, dual=md.dual, dims=modular_dims(md),
                   twists=md.twists, ring=verlinde(md), modular=md)

    @classmethod
    def from_ring(cls, ring: BasedRing, dims, twists=None) -> "Ambient":
        if not isinstance(dims, DimVector):
            dims = DimVector(values=tuple(dims), source="given")
        return cls(labels=ring.labels, dual=ring.dual, dims=dims,
                   twists=twists, ring=ring)

    @classmethod
    def from_table(cls, labels, dual, dims, twists) -> "Ambient":
        return cls(labels=tuple(labels), dual=tuple(dual), dims=dims,
                   twists=tuple(twists))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def global_dim(self):
        exact = [exact_scalar(v) for v in self.dims.values]
        if all(e is not None for e in exact):
            return sum(e * e for e in exact)
        return sum(as_mpc(v).real ** 2 for v in self.dims.values)

    def character_row(self, x: int):
        """The pattern y -> S(x*, y)/d(x) as numeric values.

        With full modular data this is an S-matrix row.  With only a fusion
        ring, dims and twists it is recovered through the balancing
        identity S(a,b) = (1/(theta_a theta_b)) sum_c N[a,b,c] theta_c d_c,
        which is what the ribbon structure forces.  Returns None when
        neither route has enough data.
        """
        xs = self.dual[x]
        if self.modular is not None:
            s = self.modular.s
            dx = as_mpc(s[0][xs])
            return [as_mpc(s[xs][y]) / dx for y in range(self.rank)]
        if self.ring is not None and self.twists is not None:
            F = self.ring.fusion
            th = [as_mpc(t) for t in self.twists]
            dv = [as_mpc(v) for v in self.dims.values]
            dx = dv[xs]
            row = []
            for y in range(self.rank):
                tot = mp.mpc(0)
                for z in np.nonzero(F[xs, y])[0]:
                    tot += int(F[xs, y, z]) * th[int(z)] * dv[int(z)]
                row.append(tot / (th[xs] * th[y] * dx))
            return row
        return None

    def __repr__(self):
        kind = ("modular" if self.modular is not None
                else "ring" if self.ring is not None else "table")
        return f"Ambient(rank={self.rank}, kind={kind})"


@dataclass(frozen=True, eq=False)
class CondensableAlgebra:
    ambient: Ambient
    mult: tuple

    def __post_init__(self):
        mult = tuple(int(n) for n in self.mult)
        object.__setattr__(self, "mult", mult)
        if len(mult) != self.ambient.rank:
            raise SchemaError(
                f"mult vector has length {len(mult)}, ambient rank is "
                f"{self.ambient.rank}")

    def dim(self):
        exact = [exact_scalar(v) for v in self.ambient.dims.values]
        if all(e is not None for e in exact):
            return sum(n * e for n, e in zip(self.mult, exact))
        return sum(n * as_mpc(v).real for n, v in zip(self.mult, self.ambient.dims.values))


@dataclass(frozen=True, eq=False)
class CondensationBundle:
    algebra: CondensableAlgebra
    module_ring: BasedRing
    dA: DimVector
    induction: np.ndarray | None
    local: tuple

    def __post_init__(self):
        d = self.dA
        if not isinstance(d, DimVector):
            d = DimVector(values=tuple(d), source="given")
        object.__setattr__(self, "dA", d)
        s = self.module_ring.rank
        if len(d) != s:
            raise SchemaError(f"need {s} module dims, got {len(d)}")
        if self.induction is not None:
            M = np.asarray(self.induction)
            if M.shape != (self.ambient.rank, s):
                raise SchemaError(
                    f"induction matrix must be {self.ambient.rank} x {s}, "
                    f"got {M.shape}")
            if not np.issubdtype(M.dtype, np.integer) or (M < 0).any():
                raise SchemaError("induction multiplicities must be nonnegative integers")
            M = M.astype(np.int64)
            M.setflags(write=False)
            object.__setattr__(self, "induction", M)
        loc = tuple(sorted(int(i) for i in self.local))
        object.__setattr__(self, "local", loc)
        if len(set(loc)) != len(loc) or any(i < 0 or i >= s for i in loc):
            raise SchemaError("local must be a set of module-ring indices")

    @property
    def ambient(self) -> Ambient:
        return self.algebra.ambient

    @property
    def mult(self) -> tuple:
        return self.algebra.mult


def _near(a, b, tol):
    return abs(as_mpc(a) - as_mpc(b)) <= tol * max(1.0, abs(as_mpc(b)))


def check_bundle(b: CondensationBundle, tol=1e-9) -> ValidationReport:
    """Every necessary condition that finite data can see, as a report."""
    rep = ValidationReport()
    amb = b.ambient
    ring = b.module_ring
    rep.extend(validate(ring), prefix="module ring: ")

    mult = b.mult
    if any(n < 0 for n in mult):
        rep.add("algebra multiplicities must be nonnegative")
    if mult[0] != 1:
        rep.add(f"algebra is not connected: n_unit = {mult[0]}, need 1")
    for x, n in enumerate(mult):
        if n and mult[amb.dual[x]] != n:
            rep.add(f"algebra is not self-dual at {amb.labels[x]}: "
                    f"n = {n} but n_dual = {mult[amb.dual[x]]}")
    if amb.twists is not None:
        for x, n in enumerate(mult):
            if n and not _near(amb.twists[x], 1, tol):
                rep.add(f"twist of {amb.labels[x]} is not 1 but n_x = {n} > 0")

    dA_alg = as_mpc(b.algebra.dim()).real
    if dA_alg <= tol:
        rep.add(f"algebra dimension {float(dA_alg)} is not positive")
        return rep

    dim_c = as_mpc(amb.global_dim()).real
    dim_ca = sum(as_mpc(v).real ** 2 for v in b.dA.values)
    if not _near(dim_ca, dim_c / dA_alg, tol):
        rep.add(f"dim(C_A) = {float(dim_ca)} but dim(C)/d(A) = "
                f"{float(dim_c / dA_alg)}")
    dim_local = sum(as_mpc(b.dA[y]).real ** 2 for y in b.local)
    if not _near(dim_local, dim_c / dA_alg ** 2, tol):
        rep.add(f"dim(local) = {float(dim_local)} but dim(C)/d(A)^2 = "
                f"{float(dim_c / dA_alg ** 2)}")

    if not _near(b.dA[0], 1, tol):
        rep.add(f"module unit must have dimension 1, got {b.dA[0]}")
    fp = fp_dims(ring)
    da_f = b.dA.as_floats()
    if np.max(np.abs(da_f - fp.as_floats())) > 1e-8:
        rep.add("module dims deviate from the Perron-Frobenius dimensions")

    if 0 not in b.local:
        rep.add("local part must contain the unit")
    if closure(ring, b.local) != frozenset(b.local):
        rep.add("local part is not closed under fusion and duals")

    if b.induction is not None:
        M = b.induction
        if not np.array_equal(M[:, 0], np.asarray(mult)):
            rep.add("unit column of the induction matrix must equal the "
                    "algebra multiplicities")
        for x in range(amb.rank):
            lhs = sum(int(M[x, y]) * as_mpc(b.dA[y]).real for y in range(ring.rank))
            rhs = as_mpc(amb.dims[x]).real
            if not _near(lhs, rhs, tol):
                rep.add(f"induction adjunction fails at {amb.labels[x]}: "
                        f"sum M d_A = {float(lhs)}, d(x) = {float(rhs)}")
    return rep


def e_sub(b: CondensationBundle, sub) -> list:
    """The integral idempotent of a subring: (1/dim sub) sum d_A(Y) Y.

    Exact coefficients whenever dA is exact.  Verified idempotent under the
    module ring multiplication.
    """
    ring = b.module_ring
    sub = tuple(sorted(int(i) for i in sub))
    if closure(ring, sub) != frozenset(sub):
        raise SchemaError(f"{sub} is not a subring of the module ring")
    exact = [exact_scalar(v) for v in b.dA.values]
    if all(e is not None for e in exact):
        total = sum(exact[y] * exact[y] for y in sub)
        vec = [exact[y] / total if y in sub else 0 for y in range(ring.rank)]
    else:
        total = sum(as_mpc(b.dA[y]).real ** 2 for y in sub)
        vec = [as_mpc(b.dA[y]) / total if y in sub else mp.mpc(0)
               for y in range(ring.rank)]
    sq = element_product(ring, vec, vec)
    resid = max(abs(as_mpc(p) - as_mpc(v)) for p, v in zip(sq, vec))
    if resid > 1e-9:
        raise NumericalDegeneracyError(
            f"e_sub for {sub} failed the idempotent check, residual {float(resid)}")
    return vec


@dataclass(frozen=True, eq=False)
class SchurWeylReport:
    bundle: CondensationBundle
    alg: AssocAlgebra
    e1: tuple
    blocks: tuple
    in_ideal: tuple
    characters: tuple
    matched: tuple
    kernel_dim: int
    matching_skipped: bool
    notes: tuple

    def ideal_blocks(self):
        return [bp for bp, f in zip(self.blocks, self.in_ideal) if f]

    def matched_pairs(self):
        return [(i, x) for i, x in enumerate(self.matched) if x is not None]

    def block_value(self, bi: int, a) -> mp.mpc:
        """Irreducible character of block bi at the element a, computed
        from the per-basis character table by linearity."""
        row = self.characters[bi]
        tot = mp.mpc(0)
        for z, c in enumerate(a):
            if isinstance(c, (int, float)) and c == 0:
                continue
            tot += as_mpc(c) * row[z]
        return tot


def schur_weyl(b: CondensationBundle, tol=1e-9, seed=SPLIT_SEED) -> SchurWeylReport:
    """Decompose K(C_A), cut out the ideal of the local vacuum idempotent,
    and verify the commutant picture: ideal dimension sum n_x^2, block size
    multiset {n_x}, and (with enough ambient data) the block-to-x matching.
    """
    ring = b.module_ring
    amb = b.ambient
    alg = AssocAlgebra.from_based_ring(ring)
    notes = []

    e1 = e_sub(b, b.local)
    e1n = [as_mpc(c) for c in e1]
    for i in range(ring.rank):
        basis = [0] * ring.rank
        basis[i] = 1
        left = alg.mult(basis, e1n)
        right = alg.mult(e1n, basis)
        if max(abs(l - r) for l, r in zip(left, right)) > tol:
            raise TheoremViolationError(
                f"local vacuum idempotent does not commute with basis element "
                f"{ring.labels[i]}")

    blocks = block_profiles(alg, seed=seed)
    in_ideal = []
    for bp in blocks:
        prod = alg.mult(list(bp.idempotent), e1n)
        to_e = max(abs(p - c) for p, c in zip(prod, bp.idempotent))
        to_zero = max(abs(p) for p in prod)
        if to_e < tol:
            in_ideal.append(True)
        elif to_zero < tol:
            in_ideal.append(False)
        else:
            raise NumericalDegeneracyError(
                "a block idempotent is neither inside nor orthogonal to the "
                f"local ideal (residuals {float(to_e)}, {float(to_zero)})")

    ideal_dim = sum(bp.block_dim for bp, f in zip(blocks, in_ideal) if f)
    kernel_dim = ring.rank - ideal_dim
    n_sq = sum(n * n for n in b.mult)
    if ideal_dim != n_sq:
        raise TheoremViolationError(
            f"ideal dimension {ideal_dim} != sum of n_x^2 = {n_sq}; "
            "the bundle is not a commutant decomposition")
    got = sorted(bp.m for bp, f in zip(blocks, in_ideal) if f)
    want = sorted(n for n in b.mult if n > 0)
    if got != want:
        raise TheoremViolationError(
            f"block size multiset {got} != algebra multiplicity multiset {want}")
    notes.append(f"kernel_dim = {kernel_dim} = rank - sum n_x^2")
    notes.append(f"block sizes {got} match multiplicities")

    # irreducible character of every block at every basis element; all
    # later trace computations are linear combinations of these
    characters = []
    for bp in blocks:
        row = []
        for z in range(ring.rank):
            basis = [0] * ring.rank
            basis[z] = 1
            row.append(normalized_block_trace(alg, bp, basis))
        characters.append(tuple(row))
    characters = tuple(characters)

    matched = [None] * len(blocks)
    matching_skipped = True
    if b.induction is not None:
        patterns = {}
        for x, n in enumerate(b.mult):
            if n > 0:
                row = amb.character_row(x)
                if row is None:
                    patterns = None
                    break
                patterns[x] = row
        if patterns is not None:
            matching_skipped = False
            for bi, (bp, flag) in enumerate(zip(blocks, in_ideal)):
                if not flag:
                    continue
                chi = characters[bi]
                v = []
                for y in range(amb.rank):
                    tot = mp.mpc(0)
                    for z in np.nonzero(b.induction[y])[0]:
                        tot += int(b.induction[y, z]) * chi[int(z)]
                    v.append(tot / bp.m)
                scored = []
                for x, row in patterns.items():
                    if b.mult[x] != bp.m:
                        continue
                    d2 = sum(abs(a - p) ** 2 for a, p in zip(v, row))
                    scored.append((float(mp.sqrt(d2 / amb.rank)), x))
                scored.sort()
                if not scored:
                    continue
                best, x_best = scored[0]
                second = scored[1][0] if len(scored) > 1 else None
                if best < MATCH_ACCEPT and (second is None or second > MATCH_REJECT):
                    matched[bi] = x_best
                    notes.append(
                        f"block m={bp.m} matched {amb.labels[x_best]} "
                        f"(fit {best:.2e})")
                else:
                    notes.append(
                        f"block m={bp.m} left unmatched (best fit {best:.2e})")
            taken = [x for x in matched if x is not None]
            if len(set(taken)) != len(taken):
                raise TheoremViolationError(
                    "two blocks matched the same ambient simple; "
                    "Theorem blocks must be distinct")
    if matching_skipped:
        notes.append("matching skipped: needs induction plus ambient "
                     "S-matrix or fusion ring with twists")

    return SchurWeylReport(
        bundle=b, alg=alg, e1=tuple(e1), blocks=tuple(blocks),
        in_ideal=tuple(in_ideal), characters=characters,
        matched=tuple(matched), kernel_dim=kernel_dim,
        matching_skipped=matching_skipped, notes=tuple(notes))


def _resolve_x(swr: SchurWeylReport, x):
    if isinstance(x, str):
        x = swr.bundle.ambient.index(x)
    return int(x)


def indicator(swr: SchurWeylReport, x, a):
    """Character of the multiplicity space W_x at the element a of K(C_A):
    the normalized trace of a in the block matched to x.  At the unit this
    is n_x; on local elements it is n_x d_A; on an induction column alpha(y)
    it reproduces n_x S(x*, y)/d(x)."""
    xi = _resolve_x(swr, x)
    if swr.bundle.mult[xi] == 0:
        raise SchemaError(
            f"{swr.bundle.ambient.labels[xi]} does not occur in the algebra")
    for bi, xm in swr.matched_pairs():
        if xm == xi:
            return swr.block_value(bi, a)
    raise CapabilityError(
        "no block is matched to "
        f"{swr.bundle.ambient.labels[xi]}; matching needs ambient S-matrix "
        "(or ring with twists) plus the induction matrix")


@dataclass(frozen=True)
class CodegreeReport:
    entries: tuple
    residual: float
    report: ValidationReport

    @property
    def ok(self) -> bool:
        return self.report.ok


def codegree_check(swr: SchurWeylReport, tol=1e-9) -> CodegreeReport:
    """Formal codegree identity: phi_x = sum_Y chi_x(Y) Y*, built from the
    trace chi_x on the simple block module W_x, acts on W_x as the scalar
    dim(C)/(d(x) d(A)) and as zero on every other block, including the
    kernel.

    Without a block matching the expected scalar still makes sense whenever
    all candidate x with n_x = m share one dimension; that covers every
    bundled family.
    """
    b = swr.bundle
    ring = b.module_ring
    rep = ValidationReport()
    dim_c = as_mpc(b.ambient.global_dim()).real
    d_alg = as_mpc(b.algebra.dim()).real
    entries = []
    worst = 0.0
    for bi, (bp, flag) in enumerate(zip(swr.blocks, swr.in_ideal)):
        if not flag:
            continue
        if swr.matched[bi] is not None:
            xi = swr.matched[bi]
            dx = as_mpc(b.ambient.dims[xi]).real
            name = b.ambient.labels[xi]
        else:
            cand = [as_mpc(b.ambient.dims[x]).real
                    for x, n in enumerate(b.mult) if n == bp.m]
            if not cand or max(cand) - min(cand) > tol:
                rep.add(f"block {bi} (m={bp.m}): candidate dimensions differ, "
                        "cannot fix the expected codegree scalar")
                continue
            dx = cand[0]
            name = f"block[{bi}]"
        scalar = dim_c / (dx * d_alg)
        chi = swr.characters[bi]
        phi = [chi[ring.dual[z]] for z in range(ring.rank)]
        for bj, bp2 in enumerate(swr.blocks):
            val = swr.block_value(bj, phi) / bp2.m
            want = scalar if bj == bi else 0
            resid = float(abs(val - want))
            worst = max(worst, resid)
            if resid > tol:
                rep.add(
                    f"codegree of {name} acts on block {bj} as {complex(val)}, "
                    f"expected {complex(as_mpc(want))}")
        entries.append((name, float(scalar)))
    return CodegreeReport(entries=tuple(entries), residual=worst, report=rep)
