"""Modular data: an unnormalized S-matrix plus ribbon twists.

Conventions: basis index 0 is the unit, the S-matrix is stored unnormalized
so that row 0 consists of the (positive) quantum dimensions with S[0][0] = 1,
and twists are roots of unity.  Entries are exact cyclotomics whenever the
caller has them; plain complex floats work too and all checks then run at
the numeric tolerance.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath as mp
import numpy as np

from .cyclotomic import Cyc, as_mpc, exact_scalar as _exact
from .errors import NumericalDegeneracyError, SchemaError, ValidationReport
from .ring import BasedRing, DimVector

TWIST_ORDER_CAP = 10000


def _conj(v):
    if isinstance(v, Cyc):
        return v.conj()
    if isinstance(v, (int, Fraction)):
        return v
    return as_mpc(v).conjugate()


@dataclass(frozen=True, eq=False)
class ModularData:
    labels: tuple[str, ...]
    dual: tuple[int, ...]
    s: tuple[tuple[object, ...], ...]
    twists: tuple[object, ...]

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        object.__setattr__(self, "labels", labels)
        r = len(labels)
        if len(set(labels)) != r or any(not s for s in labels):
            raise SchemaError("labels must be distinct nonempty strings")
        dual = tuple(int(i) for i in self.dual)
        object.__setattr__(self, "dual", dual)
        if sorted(dual) != list(range(r)) or any(dual[dual[i]] != i for i in range(r)):
            raise SchemaError("dual map must be an involutive permutation")
        if dual[0] != 0:
            raise SchemaError("the unit at index 0 must be self-dual")
        s = tuple(tuple(row) for row in self.s)
        object.__setattr__(self, "s", s)
        if len(s) != r or any(len(row) != r for row in s):
            raise SchemaError(f"s matrix must be {r} x {r}")
        twists = tuple(self.twists)
        object.__setattr__(self, "twists", twists)
        if len(twists) != r:
            raise SchemaError(f"need {r} twists, got {len(twists)}")

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def s_numeric(self):
        return [[as_mpc(v) for v in row] for row in self.s]

    def global_dim(self):
        return sum(v * _conj(v) for v in self.s[0])

    def reverse(self) -> "ModularData":
        """Same fusion with the braiding reversed: conjugate S and twists."""
        s = tuple(tuple(_conj(v) for v in row) for row in self.s)
        tw = tuple(_conj(t) for t in self.twists)
        return ModularData(labels=self.labels, dual=self.dual, s=s, twists=tw)

    def __repr__(self):
        return f"ModularData(rank={self.rank}, labels={list(self.labels)})"


def dims(md: ModularData) -> DimVector:
    return DimVector(values=tuple(md.s[0]), source="s-matrix")


def _is_root_of_unity(t, tol):
    te = _exact(t)
    if te is not None:
        n = te.order
        return (te ** (2 * n if n % 2 else n)) == 1
    tn = as_mpc(t)
    if abs(abs(tn) - 1) > tol:
        return False
    p = tn
    for _ in range(TWIST_ORDER_CAP):
        if abs(p - 1) < tol:
            return True
        p = p * tn
    return False


def validate(md: ModularData, tol=1e-9) -> ValidationReport:
    """Axioms for unnormalized pseudounitary modular data."""
    rep = ValidationReport()
    r = md.rank
    S = md.s_numeric()

    u = S[0][0]
    if abs(u - 1) > tol:
        rep.add(f"unit dimension S[0][0] must be 1, got {complex(u)}")
    for j in range(r):
        v = S[0][j]
        if abs(mp.im(v)) > tol or mp.re(v) <= tol:
            rep.add(f"dimension S[0][{j}] must be positive real, got {complex(v)}")
            if len(rep.problems) > 8:
                break

    bad = [(i, j) for i in range(r) for j in range(i + 1, r)
           if abs(S[i][j] - S[j][i]) > tol]
    if bad:
        rep.add(f"s matrix is not symmetric at {bad[:5]}")

    dim = sum(abs(v) ** 2 for v in S[0])
    if dim > tol:
        bad = []
        for i in range(r):
            for j in range(r):
                g = sum(S[i][t] * S[j][t].conjugate() for t in range(r))
                want = dim if i == j else 0
                if abs(g - want) > tol * max(1, dim):
                    bad.append((i, j))
        if bad:
            rep.add(f"S * conj(S)^T is not dim * identity at {bad[:5]}")

        bad = []
        for i in range(r):
            for j in range(r):
                g = sum(S[i][t] * S[t][j] for t in range(r))
                want = dim if md.dual[i] == j else 0
                if abs(g - want) > tol * max(1, dim):
                    bad.append((i, j))
        if bad:
            rep.add(f"S^2 does not implement the declared duality at {bad[:5]}")

    for j, t in enumerate(md.twists):
        if not _is_root_of_unity(t, tol):
            rep.add(f"twist {j} is not a root of unity (order cap {TWIST_ORDER_CAP})")

    return rep


def verlinde(md: ModularData, tol=1e-6) -> BasedRing:
    """Fusion ring recovered from the S-matrix.

    N[i][j][k] = (1/dim) sum_t S[i][t] S[j][t] conj(S[k][t]) / S[0][t],
    computed numerically at working precision and rounded; a residual above
    tol means the data was not modular to begin with.
    """
    r = md.rank
    S = md.s_numeric()
    dim = sum(abs(v) ** 2 for v in S[0])
    # ratios conj(S[k][t]) / S[0][t], reused across (i, j)
    ratio = [[S[k][t].conjugate() / S[0][t] for t in range(r)] for k in range(r)]
    F = np.zeros((r, r, r), dtype=np.int64)
    worst = 0.0
    for i in range(r):
        for j in range(i, r):
            row = [S[i][t] * S[j][t] for t in range(r)]
            for k in range(r):
                val = sum(row[t] * ratio[k][t] for t in range(r)) / dim
                n = int(mp.nint(mp.re(val)))
                err = abs(val - n)
                worst = max(worst, float(err))
                if err > tol:
                    raise NumericalDegeneracyError(
                        f"verlinde coefficient ({i},{j},{k}) = {complex(val)} "
                        f"is not close to an integer")
                if n < 0:
                    raise NumericalDegeneracyError(
                        f"verlinde coefficient ({i},{j},{k}) rounds to {n} < 0")
                F[i, j, k] = n
                F[j, i, k] = n
    return BasedRing(labels=md.labels, fusion=F, dual=md.dual)


def characters(md: ModularData) -> list:
    """Character table of the fusion ring: chi[x][y] = S[x][y] / S[0][x].

    Exact cyclotomic values whenever the S entries are exact; numeric
    otherwise.
    """
    r = md.rank
    out = []
    for x in range(r):
        dx = _exact(md.s[0][x])
        row = []
        for y in range(r):
            v = _exact(md.s[x][y])
            if dx is not None and v is not None and not dx.is_zero():
                row.append(v / dx)
            else:
                row.append(as_mpc(md.s[x][y]) / as_mpc(md.s[0][x]))
        out.append(row)
    return out


def central_idempotent(md: ModularData, x: int) -> list:
    """Coefficients of the central idempotent attached to character x,
    c[z] = d(x) / dim * S[x][dual(z)]."""
    r = md.rank
    exact_ok = all(_exact(v) is not None for row in md.s for v in row)
    if exact_ok:
        dim = sum(_exact(v) * _exact(v).conj() for v in md.s[0])
        dx = _exact(md.s[0][x])
        return [dx * _exact(md.s[x][md.dual[z]]) / dim for z in range(r)]
    S = md.s_numeric()
    dim = sum(abs(v) ** 2 for v in S[0])
    return [S[0][x] * S[x][md.dual[z]] / dim for z in range(r)]


def deligne(a: ModularData, b: ModularData, sep=".") -> ModularData:
    """Product theory: labels pair up, S entries and twists multiply."""
    labels = tuple(f"{la}{sep}{lb}" for la in a.labels for lb in b.labels)
    rb = b.rank
    dual = tuple(a.dual[i] * rb + b.dual[j]
                 for i in range(a.rank) for j in range(b.rank))
    s = tuple(
        tuple(a.s[i][k] * b.s[j][l]
              for k in range(a.rank) for l in range(b.rank))
        for i in range(a.rank) for j in range(b.rank))
    twists = tuple(a.twists[i] * b.twists[j]
                   for i in range(a.rank) for j in range(b.rank))
    return ModularData(labels=labels, dual=dual, s=s, twists=twists)
