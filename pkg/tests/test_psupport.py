"""Pipeline tests: specialization, reports, conicality, rank, char variety."""

from fractions import Fraction

import pytest

from pweyl import (
    CIdeal,
    DModuleSpec,
    FrobeniusTwist,
    LeftIdeal,
    WeylOp,
    characteristic_variety,
    dilate_fiber,
    generic_rank,
    is_conical,
    p_support,
    specialize_mod_p,
)
from pweyl.errors import BadPrime, EmptySupport, RingMismatch
from pweyl.psupport import SpecializationContext
from pweyl.rings import QQ, Zmod



def qq_gens(n=1):
    xs = [WeylOp.x(QQ, n, i) for i in range(n)]
    ds = [WeylOp.d(QQ, n, i) for i in range(n)]
    return xs, ds, WeylOp.one(QQ, n)


def const(q, n=1):
    return WeylOp.constant(QQ, n, Fraction(q))


def test_specialize_inverts_denominators():
    (x,), (d,), one = qq_gens()
    spec = DModuleSpec(1, (d - const(Fraction(1, 2)),))
    I = specialize_mod_p(spec, 3)
    F3 = Zmod(3)
    assert I.gens[0] == WeylOp.d(F3, 1, 0) - WeylOp.constant(F3, 1, 2)


def test_specialize_bad_prime():
    (x,), (d,), one = qq_gens()
    spec = DModuleSpec(1, (d - const(Fraction(1, 2)),))
    with pytest.raises(BadPrime) as exc:
        specialize_mod_p(spec, 2)
    assert exc.value.prime == 2 and exc.value.denominator == 2


def test_specialize_integer_coefficients_termwise():
    (x,), (d,), one = qq_gens()
    spec = DModuleSpec(1, (d + const(7) * x,))
    I = specialize_mod_p(spec, 7)
    F7 = Zmod(7)
    assert I.gens[0] == WeylOp.d(F7, 1, 0)  # the 7x term vanishes


def test_specialization_context():
    (x,), (d,), one = qq_gens()
    spec = DModuleSpec(1, (d - const(Fraction(1, 6)),))
    assert not SpecializationContext.analyze(spec, 2).good
    assert not SpecializationContext.analyze(spec, 3).good
    assert SpecializationContext.analyze(spec, 5).good


def test_spec_validation():
    (x,), (d,), one = qq_gens()
    with pytest.raises(ValueError):
        DModuleSpec(1, (WeylOp.zero(QQ, 1),))
    with pytest.raises(ValueError):
        DModuleSpec(2, (d,))
    with pytest.raises(RingMismatch):
        DModuleSpec(1, (d, WeylOp.d(Zmod(3), 1, 0)))


def report_for(gens, p, n=1, **kw):
    return p_support(DModuleSpec(n, tuple(gens)), p, **kw)


def test_report_polynomial_module_p3():
    (x,), (d,), one = qq_gens()
    r = report_for([d], 3)
    assert list(r.annihilator) == ["Xi1"]
    assert r.dimension == 1 and r.coisotropic and r.lagrangian and r.conical
    assert r.generic_rank == 3


def test_report_exponential_p3():
    (x,), (d,), one = qq_gens()
    r = report_for([d - one], 3)
    assert list(r.annihilator) == ["Xi1 - 1"]
    assert r.lagrangian and not r.conical
    assert r.generic_rank == 3


def test_report_gaussian_p2():
    (x,), (d,), one = qq_gens()
    r = report_for([d - x], 2)
    assert list(r.annihilator) == ["X1 + Xi1 + 1"]
    assert r.lagrangian and not r.conical


def test_report_euler_p5():
    (x,), (d,), one = qq_gens()
    r = report_for([x * d], 5)
    assert list(r.annihilator) == ["X1*Xi1"]
    assert r.dimension == 1 and r.lagrangian and r.conical


def test_report_unit_ideal():
    r = report_for([WeylOp.one(QQ, 1)], 3)
    assert r.dimension == -1
    assert not r.lagrangian
    assert r.generic_rank is None
    assert any("empty support" in note for note in r.notes)


def test_report_deterministic():
    (x,), (d,), one = qq_gens()
    a = report_for([d - x], 5, seed=0)
    b = report_for([d - x], 5, seed=0)
    assert a == b
    assert a.to_dict() == b.to_dict()


def test_lagrangian_requires_middle_dimension():
    # <x, d^3> is proper (the quotient has basis 1, d, d^2 at p = 3) but its
    # annihilator contains both X1 and Xi1, cutting the support to the origin
    (x,), (d,), one = qq_gens()
    r = report_for([x, d**3], 3)
    assert r.dimension == 0
    assert not r.lagrangian
    # the origin is not coisotropic: {Xi1, X1} = 1 misses the radical
    assert not r.coisotropic
    assert r.coisotropy_witness == {"pair": ["Xi1", "X1"], "bracket": "1"}


def twisted_ring(p, n=1):
    return FrobeniusTwist(p, n).twisted_ring


def test_is_conical_examples():
    R = twisted_ring(5)
    X, Xi = R.gens()
    assert is_conical(CIdeal.of([Xi]))
    assert not is_conical(CIdeal.of([Xi - R.one()]))
    assert is_conical(CIdeal.of([X * Xi]))


def test_dilation_witness_for_nonconical_support():
    # substituting Xi -> t*Xi moves the ideal (Xi - 1): concrete witness
    R = twisted_ring(5)
    X, Xi = R.gens()
    J = CIdeal.of([Xi - R.one()])
    g = dilate_fiber(Xi - R.one(), 2)
    assert g == Xi.scale(2) - R.one()
    assert not J.radical_contains(g)
    # while the conical ideal (X*Xi) is carried into itself
    J2 = CIdeal.of([X * Xi])
    assert J2.radical_contains(dilate_fiber(X * Xi, 2))


def test_generic_rank_values():
    F3 = Zmod(3)
    tw3 = FrobeniusTwist(3, 1)
    d3 = WeylOp.d(F3, 1, 0)
    I = LeftIdeal.of([d3])
    R = tw3.twisted_ring
    X, Xi = R.gens()
    ann = CIdeal.of([Xi])
    rr = generic_rank(I, tw3, ann, attempts=5, seed=0)
    assert rr.value == 3
    assert len(rr.samples) >= 3
    assert all(s.fiber_dim == 3 for s in rr.samples)

    F2 = Zmod(2)
    tw2 = FrobeniusTwist(2, 1)
    x2, d2 = WeylOp.x(F2, 1, 0), WeylOp.d(F2, 1, 0)
    I2 = LeftIdeal.of([d2 - x2])
    R2 = tw2.twisted_ring
    X2, Xi2 = R2.gens()
    ann2 = CIdeal.of([Xi2 + X2 + R2.one()])
    rr2 = generic_rank(I2, tw2, ann2, attempts=5, seed=0)
    assert rr2.value == 2


def test_generic_rank_empty_support():
    F3 = Zmod(3)
    tw = FrobeniusTwist(3, 1)
    I = LeftIdeal.of([WeylOp.one(F3, 1)])
    ann = CIdeal.of([tw.twisted_ring.one()])
    with pytest.raises(EmptySupport):
        generic_rank(I, tw, ann)


def test_airy_type_operator_p3():
    # in D/(d^2 - x): d^3 = d x = x d + 1, so d^6 = (x d + 1)^2 which
    # normal-orders to x^3 + 3 x d + 1 = x^3 + 1 mod 3
    (x,), (d,), one = qq_gens()
    r = report_for([d**2 - x], 3)
    assert list(r.annihilator) == ["Xi1^2 - X1 - 1"]
    assert r.dimension == 1 and r.lagrangian and not r.conical
    assert r.generic_rank == 3
    cv = characteristic_variety(DModuleSpec(1, (d**2 - x,)))
    assert [str(g) for g in cv.ideal.groebner_basis()] == ["xi1^2"]
    assert is_conical(cv.ideal)


def test_rank_with_multiplicity_two():
    # D/(x d^2) carries two copies of p at generic points: rank b*p with b = 2
    (x,), (d,), one = qq_gens()
    for p in (3, 5):
        r = report_for([x * d**2], p)
        assert r.generic_rank == 2 * p
        assert r.generic_rank % p == 0 and (r.generic_rank // p) % p != 0


def test_nonproduct_connection_in_two_variables():
    # d1 - x2 and d2 - x1 commute with each other's potential terms, so the
    # p-th powers obey the freshman's dream: Xi1 - X2 and Xi2 - X1 span the
    # annihilator, the Lagrangian graph of the differential of X1*X2
    xs, ds, one = qq_gens(2)
    spec = DModuleSpec(2, (ds[0] - xs[1], ds[1] - xs[0]))
    r = p_support(spec, 2, seed=0)
    assert sorted(r.annihilator) == ["X1 + Xi2", "X2 + Xi1"]
    assert r.dimension == 2 and r.lagrangian and not r.conical
    assert r.generic_rank == 4

    r3 = p_support(spec, 3, seed=0)
    assert sorted(r3.annihilator) == ["X1 - Xi2", "X2 - Xi1"]
    assert r3.annihilator_status == "stabilized(1)"
    assert r3.lagrangian


def test_three_variable_tensor_at_guard_boundary():
    # p = 2, n = 3 sits exactly at the rank-64 guard; still the exact route
    xs, ds, one = qq_gens(3)
    spec = DModuleSpec(3, (ds[0] - one, ds[1], ds[2] - xs[2]))
    r = p_support(spec, 2, seed=0)
    assert r.annihilator_status == "exact"
    assert sorted(r.annihilator) == ["X3 + Xi3 + 1", "Xi1 + 1", "Xi2"]
    assert r.dimension == 3 and r.lagrangian
    assert r.generic_rank == 8


def test_characteristic_variety_examples():
    (x,), (d,), one = qq_gens()
    cv = characteristic_variety(DModuleSpec(1, (d - one,)))
    assert [str(g) for g in cv.ideal.groebner_basis()] == ["xi1"]
    assert cv.dimension == 1 and cv.holonomic

    lam = const(Fraction(1, 2))
    cv = characteristic_variety(DModuleSpec(1, (x * d - lam,)))
    assert [str(g) for g in cv.ideal.groebner_basis()] == ["x1*xi1"]
    assert cv.dimension == 1

    cv = characteristic_variety(DModuleSpec(1, (x,)))
    assert [str(g) for g in cv.ideal.groebner_basis()] == ["x1"]
    assert cv.dimension == 1


def test_characteristic_variety_requires_rationals():
    d = WeylOp.d(Zmod(3), 1, 0)
    with pytest.raises(RingMismatch):
        characteristic_variety(DModuleSpec(1, (d,)))


def test_truncated_route_beyond_guard():
    xs, ds, one = qq_gens(2)
    spec = DModuleSpec(2, (ds[0] - one, ds[1]))
    r = p_support(spec, 3)
    assert r.annihilator_status.startswith("stabilized")
    assert r.dimension == 2 and r.lagrangian
    assert r.generic_rank is None
    assert any("exceeds guard" in note for note in r.notes)


def test_no_rank_option():
    (x,), (d,), one = qq_gens()
    r = report_for([d], 3, compute_rank=False)
    assert r.generic_rank is None
    assert any("not requested" in note for note in r.notes)
