import mpmath as mp
import numpy as np
import pytest

from fuscond.condense import (
    Ambient,
    CondensableAlgebra,
    CondensationBundle,
    check_bundle,
    codegree_check,
    e_sub,
    indicator,
    schur_weyl,
)
from fuscond.cyclotomic import Cyc, as_mpc
from fuscond.errors import CapabilityError, TheoremViolationError
from fuscond.ring import BasedRing, group_ring
from fuscond.wedderburn import normalized_block_trace

from grouptables import cyclic
from test_modular import ising_data, toric_data


def toric_bundle(mult=(1, 1, 0, 0), ambient=None):
    if ambient is None:
        ambient = Ambient.from_modular(toric_data())
    module_ring = group_ring(*cyclic(2), labels=("1", "M"))
    induction = np.zeros((4, 2), dtype=np.int64)
    for x, y in ((0, 0), (1, 0), (2, 1), (3, 1)):
        induction[x, y] = 1
    return CondensationBundle(
        algebra=CondensableAlgebra(ambient=ambient, mult=tuple(mult)),
        module_ring=module_ring,
        dA=(1, 1),
        induction=induction,
        local=(0,),
    )


def trivial_toric_bundle():
    ambient = Ambient.from_modular(toric_data())
    return CondensationBundle(
        algebra=CondensableAlgebra(ambient=ambient, mult=(1, 0, 0, 0)),
        module_ring=ambient.ring,
        dA=(1, 1, 1, 1),
        induction=np.eye(4, dtype=np.int64),
        local=(0, 1, 2, 3),
    )


def vl_half_ambient():
    """Rank-5 orbifold-shaped ambient: invertibles 1, j, a 2-dim object m,
    and two twist sectors s+, s- of dimension sqrt(3)."""
    F = np.zeros((5, 5, 5), dtype=np.int64)
    one, j, m, sp, sm = range(5)
    for y in range(5):
        F[one, y, y] = F[y, one, y] = 1
    F[j, j, one] = 1
    F[j, m, m] = F[m, j, m] = 1
    F[j, sp, sm] = F[sp, j, sm] = 1
    F[j, sm, sp] = F[sm, j, sp] = 1
    F[m, m, one] = F[m, m, j] = F[m, m, m] = 1
    for s in (sp, sm):
        F[m, s, sp] = F[m, s, sm] = 1
        F[s, m, sp] = F[s, m, sm] = 1
    F[sp, sp, one] = F[sp, sp, m] = 1
    F[sm, sm, one] = F[sm, sm, m] = 1
    F[sp, sm, j] = F[sp, sm, m] = 1
    F[sm, sp, j] = F[sm, sp, m] = 1
    ring = BasedRing(labels=("1", "j", "m1", "s+", "s-"), fusion=F,
                     dual=(0, 1, 2, 3, 4))
    r3 = Cyc.sqrt_int(3)
    dims = (Cyc.rational(1), Cyc.rational(1), Cyc.rational(2), r3, r3)
    z8 = Cyc.zeta(8)
    twists = (Cyc.rational(1), Cyc.rational(1), Cyc.zeta(3), z8, -z8)
    return Ambient.from_ring(ring, dims, twists)


def ty_z3_ring():
    F = np.zeros((4, 4, 4), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            F[i, j, (i + j) % 3] = 1
    T = 3
    for i in range(3):
        F[i, T, T] = F[T, i, T] = 1
        F[T, T, i] = 1
    return BasedRing(labels=("1", "g", "g2", "T"), fusion=F, dual=(0, 2, 1, 3))


def ty_bundle():
    ambient = vl_half_ambient()
    r3 = Cyc.sqrt_int(3)
    induction = np.array(
        [[1, 0, 0, 0],
         [1, 0, 0, 0],
         [0, 1, 1, 0],
         [0, 0, 0, 1],
         [0, 0, 0, 1]], dtype=np.int64)
    return CondensationBundle(
        algebra=CondensableAlgebra(ambient=ambient, mult=(1, 1, 0, 0, 0)),
        module_ring=ty_z3_ring(),
        dA=(Cyc.rational(1), Cyc.rational(1), Cyc.rational(1), r3),
        induction=induction,
        local=(0, 1, 2),
    )


def test_toric_check_bundle_clean():
    rep = check_bundle(toric_bundle())
    assert rep.ok, str(rep)


def test_vl_ambient_validates():
    from fuscond.ring import validate
    amb = vl_half_ambient()
    assert validate(amb.ring).ok
    rep = check_bundle(ty_bundle())
    assert rep.ok, str(rep)


def test_toric_schur_weyl():
    swr = schur_weyl(toric_bundle())
    assert swr.kernel_dim == 0
    ideal = swr.ideal_blocks()
    assert sorted(b.m for b in ideal) == [1, 1]
    assert not swr.matching_skipped
    matched_labels = sorted(
        swr.bundle.ambient.labels[x] for x in swr.matched if x is not None)
    assert matched_labels == ["1", "e"]
    # the sign block is the one where M acts by -1
    for bi, x in swr.matched_pairs():
        val = normalized_block_trace(swr.alg, swr.blocks[bi], [0, 1])
        want = 1.0 if swr.bundle.ambient.labels[x] == "1" else -1.0
        assert abs(complex(val) - want) < 1e-12


def test_toric_indicators():
    swr = schur_weyl(toric_bundle())
    assert abs(complex(indicator(swr, "e", [0, 1])) + 1) < 1e-12
    assert abs(complex(indicator(swr, "e", [1, 0])) - 1) < 1e-12
    # induction column of m is M itself
    col = swr.bundle.induction[2]
    assert abs(complex(indicator(swr, "e", col)) + 1) < 1e-12
    # local elements scale by d_A
    assert abs(complex(indicator(swr, "1", [1, 0])) - 1) < 1e-12


def test_toric_codegrees():
    swr = schur_weyl(toric_bundle())
    cg = codegree_check(swr)
    assert cg.ok, str(cg.report)
    assert cg.residual < 1e-9
    assert sorted(v for _, v in cg.entries) == [2.0, 2.0]


def test_trivial_algebra_bundle():
    b = trivial_toric_bundle()
    rep = check_bundle(b)
    assert rep.ok, str(rep)
    swr = schur_weyl(b)
    assert swr.kernel_dim == 3
    ideal = swr.ideal_blocks()
    assert [x.m for x in ideal] == [1]
    (bi, x), = swr.matched_pairs()
    assert b.ambient.labels[x] == "1"
    cg = codegree_check(swr)
    assert cg.ok
    assert [round(v, 9) for _, v in cg.entries] == [4.0]


def test_ty_e_sub():
    b = ty_bundle()
    e1 = e_sub(b, (0, 1, 2))
    third = Cyc.rational(1) / 3
    assert e1[0] == third and e1[1] == third and e1[2] == third
    assert e1[3] == 0 or (isinstance(e1[3], Cyc) and e1[3].is_zero())
    unit = e_sub(b, (0,))
    assert unit[0] == 1 and all(
        c == 0 or (isinstance(c, Cyc) and c.is_zero()) for c in unit[1:])
    whole = e_sub(b, (0, 1, 2, 3))
    assert whole[0] == Cyc.rational(1) / 6


def test_ty_schur_weyl():
    swr = schur_weyl(ty_bundle())
    assert swr.kernel_dim == 2
    ideal = swr.ideal_blocks()
    assert sorted(x.m for x in ideal) == [1, 1]
    labels = sorted(
        swr.bundle.ambient.labels[x] for x in swr.matched if x is not None)
    assert labels == ["1", "j"]
    # block matched to the unit has chi(T) = +sqrt(3)
    for bi, x in swr.matched_pairs():
        val = normalized_block_trace(swr.alg, swr.blocks[bi], [0, 0, 0, 1])
        want = 3 ** 0.5 if swr.bundle.ambient.labels[x] == "1" else -(3 ** 0.5)
        assert abs(complex(val) - want) < 1e-10


def test_ty_codegrees():
    swr = schur_weyl(ty_bundle())
    cg = codegree_check(swr)
    assert cg.ok, str(cg.report)
    assert sorted(round(v, 9) for _, v in cg.entries) == [6.0, 6.0]


def test_indicator_trace_sum_identity():
    for bundle in (toric_bundle(), ty_bundle(), trivial_toric_bundle()):
        swr = schur_weyl(bundle)
        ring = bundle.module_ring
        e1 = [as_mpc(c) for c in swr.e1]
        for i in range(ring.rank):
            a = [0] * ring.rank
            a[i] = 1
            total = mp.mpc(0)
            for bi, x in swr.matched_pairs():
                n_x = bundle.mult[x]
                total += n_x * indicator(swr, x, a)
            e1a = swr.alg.mult(e1, a)
            rhs = swr.alg.trace_left_mult(e1a)
            assert abs(total - rhs) < 1e-9


def test_indicator_multiplicative_on_linear_blocks():
    swr = schur_weyl(ty_bundle())
    ring = swr.bundle.module_ring
    from fuscond.ring import element_product
    for bi, x in swr.matched_pairs():
        if swr.blocks[bi].m != 1:
            continue
        for i in range(ring.rank):
            for j in range(ring.rank):
                a = [0] * ring.rank
                a[i] = 1
                b = [0] * ring.rank
                b[j] = 1
                ab = element_product(ring, a, b)
                lhs = indicator(swr, x, [as_mpc(c) for c in ab])
                rhs = indicator(swr, x, a) * indicator(swr, x, b)
                assert abs(lhs - rhs) < 1e-9


def test_table_only_ambient_skips_matching():
    md = toric_data()
    ambient = Ambient.from_table(md.labels, md.dual, (1, 1, 1, 1),
                                 md.twists)
    b = toric_bundle(ambient=ambient)
    assert check_bundle(b).ok
    swr = schur_weyl(b)
    assert swr.matching_skipped
    assert swr.kernel_dim == 0
    assert all(x is None for x in swr.matched)
    with pytest.raises(CapabilityError):
        indicator(swr, "e", [0, 1])
    cg = codegree_check(swr)
    assert cg.ok, str(cg.report)
    assert sorted(v for _, v in cg.entries) == [2.0, 2.0]


def test_bad_local_violates_theorem():
    b = toric_bundle()
    bad = CondensationBundle(
        algebra=b.algebra, module_ring=b.module_ring, dA=b.dA,
        induction=b.induction, local=(0, 1))
    rep = check_bundle(bad)
    assert not rep.ok
    with pytest.raises(TheoremViolationError):
        schur_weyl(bad)


def test_bad_mult_violates_theorem():
    b = toric_bundle(mult=(1, 1, 1, 0))
    rep = check_bundle(b)
    assert not rep.ok
    with pytest.raises(TheoremViolationError):
        schur_weyl(b)


def test_twist_condition_checked():
    rep = check_bundle(toric_bundle(mult=(1, 0, 0, 1)))
    assert not rep.ok
    assert any("twist" in p for p in rep.problems)


def test_connectedness_checked():
    rep = check_bundle(toric_bundle(mult=(0, 1, 0, 0)))
    assert not rep.ok
    assert any("connected" in p for p in rep.problems)


def test_self_duality_checked():
    # Z_3 anyon data: dual(g) = g^2, so A = 1 + g alone cannot be an algebra
    z = Cyc.zeta(3)
    from fuscond.modular import ModularData
    md = ModularData(labels=("0", "1", "2"), dual=(0, 2, 1),
                     s=tuple(tuple(z ** (j * k) for k in range(3))
                             for j in range(3)),
                     twists=(z ** 0, z, z))
    ambient = Ambient.from_modular(md)
    b = CondensationBundle(
        algebra=CondensableAlgebra(ambient=ambient, mult=(1, 1, 0)),
        module_ring=ambient.ring, dA=(1, 1, 1), induction=None,
        local=(0, 1, 2))
    rep = check_bundle(b)
    assert not rep.ok
    assert any("self-dual" in p for p in rep.problems)
