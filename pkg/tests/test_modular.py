import numpy as np
import pytest

from fuscond.cyclotomic import Cyc, as_mpc
from fuscond.modular import (
    ModularData,
    central_idempotent,
    characters,
    deligne,
    dims,
    validate,
    verlinde,
)
from fuscond.ring import element_product, fp_dims, group_ring

from grouptables import cyclic


def toric_data(exact=True):
    one = Cyc.rational(1) if exact else 1.0
    s = [[1, 1, 1, 1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]]
    if exact:
        s = [[Cyc.rational(v) for v in row] for row in s]
    else:
        s = [[float(v) for v in row] for row in s]
    tw = (one, one, one, -one)
    return ModularData(labels=("1", "e", "m", "f"), dual=(0, 1, 2, 3),
                       s=tuple(tuple(r) for r in s), twists=tw)


def ising_data():
    r2 = Cyc.sqrt_int(2)
    one = Cyc.rational(1)
    s = ((one, one, r2), (one, one, -r2), (r2, -r2, Cyc.rational(0)))
    tw = (one, -one, Cyc.zeta(16))
    return ModularData(labels=("1", "p", "s"), dual=(0, 1, 2), s=s, twists=tw)


def klein_table():
    # 1, e, m, f with e*m = f
    return [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]


def test_toric_validates():
    rep = validate(toric_data())
    assert rep.ok, str(rep)
    rep = validate(toric_data(exact=False))
    assert rep.ok, str(rep)


def test_ising_validates():
    rep = validate(ising_data())
    assert rep.ok, str(rep)


def test_toric_verlinde_matches_klein_group():
    ring = verlinde(toric_data())
    oracle = group_ring(klein_table())
    assert np.array_equal(ring.fusion, oracle.fusion)
    assert ring.dual == (0, 1, 2, 3)
    ring_f = verlinde(toric_data(exact=False))
    assert np.array_equal(ring_f.fusion, oracle.fusion)


def test_ising_verlinde_frozen():
    ring = verlinde(ising_data())
    expected = np.zeros((3, 3, 3), dtype=np.int64)
    for j in range(3):
        expected[0, j, j] = expected[j, 0, j] = 1
    expected[1, 1, 0] = 1
    expected[1, 2, 2] = expected[2, 1, 2] = 1
    expected[2, 2, 0] = expected[2, 2, 1] = 1
    assert np.array_equal(ring.fusion, expected)


def test_characters_are_ring_homs():
    md = ising_data()
    ring = verlinde(md)
    chi = characters(md)
    for x in range(3):
        for i in range(3):
            for j in range(3):
                lhs = chi[x][i] * chi[x][j]
                rhs = sum(
                    int(ring.fusion[i, j, k]) * chi[x][k] for k in range(3)
                )
                assert lhs == rhs


def test_character_row_zero_is_dims():
    md = ising_data()
    chi = characters(md)
    d = fp_dims(verlinde(md))
    for y in range(3):
        assert abs(complex(as_mpc(chi[0][y])) - d[y]) < 1e-10


def test_central_idempotent_values():
    e_vac = central_idempotent(toric_data(), 0)
    quarter = Cyc.rational(1) / 4
    assert all(c == quarter for c in e_vac)
    e_sigma = central_idempotent(ising_data(), 2)
    half = Cyc.rational(1) / 2
    assert e_sigma[0] == half
    assert e_sigma[1] == -half
    assert e_sigma[2].is_zero()


def test_idempotents_orthogonal_complete():
    for md in (toric_data(), ising_data()):
        ring = verlinde(md)
        idems = [central_idempotent(md, x) for x in range(md.rank)]
        total = [sum(col) for col in zip(*idems)]
        assert complex(as_mpc(total[0])) == pytest.approx(1.0, abs=1e-12)
        for k in range(1, md.rank):
            assert abs(complex(as_mpc(total[k]))) < 1e-12
        for x in range(md.rank):
            for y in range(md.rank):
                prod = element_product(ring, idems[x], idems[y])
                want = idems[x] if x == y else [0] * md.rank
                for k in range(md.rank):
                    assert abs(complex(as_mpc(prod[k] - want[k]))) < 1e-9


def test_twist_must_be_root_of_unity():
    bad = ModularData(
        labels=("1", "e", "m", "f"), dual=(0, 1, 2, 3),
        s=toric_data(exact=False).s,
        twists=(1.0, 1.0, 1.0, complex(0.6, 0.8)))
    rep = validate(bad)
    assert not rep.ok
    assert any("twist" in p for p in rep.problems)


def test_negative_dim_rejected():
    s = [[1.0, -1.0], [-1.0, 1.0]]
    bad = ModularData(labels=("1", "x"), dual=(0, 1),
                      s=tuple(tuple(r) for r in s), twists=(1.0, 1.0))
    rep = validate(bad)
    assert not rep.ok
    assert any("positive" in p for p in rep.problems)


def test_symmetry_violation_reported():
    s = ((1.0, 1.0), (2.0, 1.0))
    bad = ModularData(labels=("1", "x"), dual=(0, 1), s=s, twists=(1.0, 1.0))
    rep = validate(bad)
    assert not rep.ok
    assert any("symmetric" in p for p in rep.problems)


def test_reverse_conjugates():
    md = ising_data()
    rev = md.reverse()
    assert validate(rev).ok
    assert rev.twists[2] == Cyc.zeta(16) ** 15
    assert rev.s[0][2] == md.s[0][2]  # real entries are fixed
    assert np.array_equal(verlinde(rev).fusion, verlinde(md).fusion)


def test_deligne_product():
    md = deligne(toric_data(), ising_data())
    assert md.rank == 12
    rep = validate(md)
    assert rep.ok, str(rep)
    d = dims(md)
    assert abs(complex(as_mpc(d.total())) - 16.0) < 1e-9
    # dims multiply
    dt = dims(toric_data())
    di = dims(ising_data())
    got = sorted(float(as_mpc(v).real) for v in d)
    want = sorted(float(as_mpc(a).real * as_mpc(b).real) for a in dt for b in di)
    assert np.allclose(got, want)


def test_unnormalized_scaling_rejected():
    # normalized (unitary) S rows have dim 1/2 here, row0 no longer the dims
    s = tuple(tuple(v * 0.5 for v in row) for row in toric_data(exact=False).s)
    bad = ModularData(labels=("1", "e", "m", "f"), dual=(0, 1, 2, 3), s=s,
                      twists=(1.0, 1.0, 1.0, -1.0))
    rep = validate(bad)
    assert not rep.ok


def test_verlinde_on_cyclic_group_data():
    # Z_3 modular data: S[j][k] = zeta_3^(j*k), twists theta_j = zeta_3^(j*j)
    z = Cyc.zeta(3)
    s = tuple(tuple(z ** (j * k) for k in range(3)) for j in range(3))
    md = ModularData(labels=("0", "1", "2"), dual=(0, 2, 1), s=s,
                     twists=(z ** 0, z, z))
    assert validate(md).ok, str(validate(md))
    ring = verlinde(md)
    oracle = group_ring(*cyclic(3))
    assert np.array_equal(ring.fusion, oracle.fusion)
