"""Fusion rings as integer structure tensors.

A based ring here is a free Z-module with a distinguished basis, the unit at
index 0, structure constants N[i, j, k] >= 0 giving the coefficient of basis
element k in the product i * j, and an involution ``dual`` on the basis.
Everything downstream (module categories, character theory, the invariant
lattice) consumes this shape.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cyclotomic import as_mpc
from .errors import CapabilityError, NumericalDegeneracyError, SchemaError, ValidationReport

SUBRING_RANK_CAP = 24
_MAX_REPORTED = 5


@dataclass(frozen=True, eq=False)
class BasedRing:
    labels: tuple[str, ...]
    fusion: np.ndarray
    dual: tuple[int, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        fusion = np.asarray(self.fusion)
        r = len(labels)
        if len(set(labels)) != r or any(not s for s in labels):
            raise SchemaError("labels must be distinct nonempty strings")
        if fusion.ndim != 3 or fusion.shape != (r, r, r):
            raise SchemaError(
                f"fusion tensor must have shape ({r}, {r}, {r}), got {fusion.shape}")
        if not np.issubdtype(fusion.dtype, np.integer):
            if not np.all(fusion == np.round(fusion)):
                raise SchemaError("fusion multiplicities must be integers")
        fusion = fusion.astype(np.int64)
        if (fusion < 0).any():
            raise SchemaError("fusion multiplicities must be nonnegative")
        fusion.setflags(write=False)
        object.__setattr__(self, "fusion", fusion)
        dual = tuple(int(i) for i in self.dual)
        object.__setattr__(self, "dual", dual)
        if sorted(dual) != list(range(r)):
            raise SchemaError("dual map must be a permutation of the basis")
        if any(dual[dual[i]] != i for i in range(r)):
            raise SchemaError("dual map must be an involution")
        if dual[0] != 0:
            raise SchemaError("the unit at index 0 must be self-dual")

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def unit(self) -> int:
        return 0

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def __repr__(self):
        return f"BasedRing(rank={self.rank}, labels={list(self.labels)})"


@dataclass(frozen=True)
class DimVector:
    """Basis dimensions together with where they came from.

    Values may be floats or exact scalars; total() is the global dimension
    sum of d_i^2 in whatever arithmetic the entries support.
    """
    values: tuple
    source: str = "given"

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def total(self):
        return sum(d * d for d in self.values)

    def as_floats(self) -> np.ndarray:
        out = np.empty(len(self.values), dtype=np.float64)
        for i, v in enumerate(self.values):
            if isinstance(v, float):
                out[i] = v
            else:
                out[i] = float(as_mpc(v).real)
        return out


def _offenders(mask, limit=_MAX_REPORTED):
    idx = np.argwhere(mask)
    shown = ", ".join(str(tuple(int(x) for x in row)) for row in idx[:limit])
    if len(idx) > limit:
        shown += f", and {len(idx) - limit} more"
    return shown


def validate(ring: BasedRing) -> ValidationReport:
    """Check the based-ring axioms and report every violation found."""
    rep = ValidationReport()
    F = ring.fusion
    r = ring.rank
    eye = np.eye(r, dtype=np.int64)

    bad = F[0] != eye
    if bad.any():
        rep.add(f"unit axiom fails on the left at (j, k): {_offenders(bad)}")
    bad = F[:, 0, :] != eye
    if bad.any():
        rep.add(f"unit axiom fails on the right at (i, k): {_offenders(bad)}")

    target = np.zeros((r, r), dtype=np.int64)
    for i in range(r):
        target[i, ring.dual[i]] = 1
    bad = F[:, :, 0] != target
    if bad.any():
        rep.add(f"duality axiom fails at (i, j): {_offenders(bad)}")

    d = np.array(ring.dual)
    G = F[np.ix_(d, d, d)].transpose(1, 0, 2)
    bad = F != G
    if bad.any():
        rep.add("transpose-duality fails at (i, j, k): " + _offenders(bad))

    Ff = F.astype(np.float64)
    lhs = np.tensordot(Ff, Ff, axes=([2], [0]))
    rhs = np.tensordot(Ff, Ff, axes=([2], [1])).transpose(2, 0, 1, 3)
    bad = lhs != rhs
    if bad.any():
        rep.add("associativity fails at (i, j, k, l): " + _offenders(bad))

    return rep


def fp_dims(ring: BasedRing, tol=1e-12, max_iter=10000) -> DimVector:
    """Perron-Frobenius dimensions by power iteration on the summed left
    multiplication matrix.  The matrix is primitive for any based ring that
    satisfies the axioms, so the iteration converges to the unique positive
    eigenvector; we normalize the unit component to 1.
    """
    M = ring.fusion.sum(axis=0).T.astype(np.float64)
    v = np.ones(ring.rank)
    v /= np.linalg.norm(v)
    for _ in range(max_iter):
        w = M @ v
        nw = np.linalg.norm(w)
        if nw == 0:
            raise NumericalDegeneracyError("power iteration collapsed to zero")
        w /= nw
        if np.max(np.abs(w - v)) < tol:
            v = w
            break
        v = w
    else:
        raise NumericalDegeneracyError(
            f"power iteration did not converge within {max_iter} steps")
    d = v / v[0]
    return DimVector(values=tuple(float(x) for x in d), source="perron")


def closure(ring: BasedRing, seed) -> frozenset:
    """Smallest subset containing the unit and the seed that is closed under
    fusion products and duals."""
    s = set(int(i) for i in seed)
    s.add(0)
    while True:
        idx = np.fromiter(sorted(s), dtype=np.int64)
        prods = np.nonzero(ring.fusion[np.ix_(idx, idx)].sum(axis=(0, 1)))[0]
        nxt = s | {int(k) for k in prods} | {ring.dual[i] for i in s}
        if nxt == s:
            return frozenset(s)
        s = nxt


def subring_generated(ring: BasedRing, generators) -> frozenset:
    return closure(ring, generators)


def enumerate_subrings(ring: BasedRing, must_contain=()) -> list:
    """All based subrings containing ``must_contain``, as sorted index tuples.

    Works by closure-driven search: grow each known subring by one extra
    basis element and close up.  Every subring of the given ring arises this
    way, so the enumeration is exhaustive.  Rings above the rank cap are
    refused rather than risking a combinatorial blowup.
    """
    if ring.rank > SUBRING_RANK_CAP:
        raise CapabilityError(
            f"subring enumeration supports rank <= {SUBRING_RANK_CAP}, "
            f"got {ring.rank}")
    base = closure(ring, must_contain)
    found = {base}
    stack = [base]
    while stack:
        s = stack.pop()
        for x in range(ring.rank):
            if x in s:
                continue
            t = closure(ring, s | {x})
            if t not in found:
                found.add(t)
                stack.append(t)
    return sorted((tuple(sorted(s)) for s in found), key=lambda t: (len(t), t))


def subring_dim(ring: BasedRing, subset, dims: DimVector | None = None):
    """Sum of d_i^2 over the subset."""
    if dims is None:
        dims = fp_dims(ring)
    return sum(dims[i] * dims[i] for i in subset)


def element_product(ring: BasedRing, a, b) -> list:
    """Product of two ring elements given as coefficient vectors.

    Coefficients may be ints, Fractions, exact cyclotomics or floats; the
    arithmetic stays in whatever the inputs support.
    """
    out = [0] * ring.rank
    F = ring.fusion
    for i, ai in enumerate(a):
        if isinstance(ai, (int, float)) and ai == 0:
            continue
        for j, bj in enumerate(b):
            if isinstance(bj, (int, float)) and bj == 0:
                continue
            nz = np.nonzero(F[i, j])[0]
            if nz.size:
                coef = ai * bj
                for k in nz:
                    out[int(k)] = out[int(k)] + coef * int(F[i, j, k])
    return out


def product_ring(a: BasedRing, b: BasedRing, sep=".") -> BasedRing:
    """Tensor product of two based rings: pairs of labels, products of
    structure constants.  Index (i, j) maps to i*b.rank + j."""
    labels = tuple(f"{la}{sep}{lb}" for la in a.labels for lb in b.labels)
    dual = tuple(a.dual[i] * b.rank + b.dual[j]
                 for i in range(a.rank) for j in range(b.rank))
    n = a.rank * b.rank
    fusion = np.einsum("ijk,abc->iajbkc", a.fusion, b.fusion).reshape(n, n, n)
    return BasedRing(labels=labels, fusion=fusion, dual=dual)


def group_ring(table, inverse=None, labels=None) -> BasedRing:
    """Based ring of a finite group given as a Cayley table with identity 0."""
    n = len(table)
    if any(table[0][i] != i or table[i][0] != i for i in range(n)):
        raise SchemaError("Cayley table must have the identity at index 0")
    F = np.zeros((n, n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            F[i, j, table[i][j]] = 1
    if inverse is None:
        inverse = [0] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == 0:
                    inverse[i] = j
    if labels is None:
        labels = tuple(f"g{i}" for i in range(n))
    return BasedRing(labels=tuple(labels), fusion=F, dual=tuple(inverse))
