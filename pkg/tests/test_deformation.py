import pytest

from stabred.cartier import is_logarithmic
from stabred.deformation import (
    MOBIUS_MAPS,
    Signature,
    SpecialDeformationDatum,
    canonical_tuple,
    normalizing_constant,
    sdd_differential,
    sdd_eigenvalue,
    sdd_is_special,
    sdd_s3_transform,
    sdd_search,
    sdd_validate,
)
from stabred.field import Polynomial, RationalFunction, build_field, poly_roots
from stabred.modular import build_x2p_datum, hasse_polynomial

F25 = build_field(5, 2)
F49 = build_field(7, 2)


def hasse_roots(p):
    F = build_field(p, 2)
    return tuple(poly_roots(hasse_polynomial(p).over(F)))


def test_validate_modular_pair():
    d = SpecialDeformationDatum(F25, hasse_roots(5), Signature([2, 2]), F25.one())
    assert sdd_validate(d).valid


def test_validate_reports_by_name():
    lams = hasse_roots(5)
    d = SpecialDeformationDatum(F25, lams, Signature([2, 3]), F25.one())
    assert "signature-sum" in sdd_validate(d).violations

    d = SpecialDeformationDatum(F49, (F49(0), F49(2), F49(4)), Signature([2, 2, 2]), F49.one())
    assert "lambdas-avoid-0-1" in sdd_validate(d).violations

    d = SpecialDeformationDatum(F49, (F49(2), F49(2), F49(4)), Signature([2, 2, 2]))
    assert {"lambdas-distinct", "squarefree"} <= set(sdd_validate(d).violations)

    d = SpecialDeformationDatum(F25, lams, Signature([2, 2]), F25.zero())
    assert sdd_validate(d).violations == ["c-nonzero"]

    d = SpecialDeformationDatum(F25, lams[:1], Signature([2, 2]))
    assert "length-mismatch" in sdd_validate(d).violations


def test_exponent_range_and_override():
    d = SpecialDeformationDatum(F25, (F25(2), F25(3), F25(4)), Signature([1, 1, 2]))
    assert "exponent-range" in sdd_validate(d).violations
    d = SpecialDeformationDatum(F25, (F25(2), F25(3), F25(4)), Signature([1, 1, 2]), allow_degenerate=True)
    assert sdd_validate(d).valid


def test_differential_modular_p5():
    d = build_x2p_datum(5)
    w = sdd_differential(d)
    t = Polynomial.t(F25)
    assert w.n == 2
    assert w.g == t**2 + 4 * t + 1
    assert w.m == 1
    assert w.h == RationalFunction(Polynomial(F25, [1]), t * (t - 1))
    assert d.c == 1


def test_differential_rejects_invalid():
    with pytest.raises(ValueError):
        sdd_differential(SpecialDeformationDatum(F25, hasse_roots(5), Signature([2, 2]), F25.zero()))


def test_differential_degree_p_minus_1_p7():
    d = SpecialDeformationDatum(F49, hasse_roots(7), Signature([2, 2, 2]), F49.one())
    w = sdd_differential(d)
    phi = hasse_polynomial(7).over(F49)
    assert w.n == 6 and w.m == 1
    assert w.g == phi**2


def test_is_special_examples():
    assert sdd_is_special(build_x2p_datum(5))
    # the same configuration in the degree p-1 presentation
    d = SpecialDeformationDatum(F25, hasse_roots(5), Signature([2, 2]), F25.one())
    assert sdd_is_special(d)
    # 2, 3 are not roots of Phi_5, whatever c is
    for c in [None] + [x for x in F25 if x]:
        d = SpecialDeformationDatum(F25, (F25(2), F25(3)), Signature([2, 2]), c)
        assert not sdd_is_special(d)


def test_dt_is_not_special():
    F = build_field(5, 1)
    from stabred.cartier import CyclicCoverDifferential

    assert not is_logarithmic(CyclicCoverDifferential.on_line(RationalFunction(Polynomial(F, [1]))))


def test_normalizing_constant():
    F = build_field(7, 1)
    assert normalizing_constant(F(1)) is not None
    # gamma = 3: need c^6 = 3^7 = 3 in F_7, impossible (c^6 = 1)
    assert normalizing_constant(F(3)) is None
    # in F_49 the 6th powers are the elements of order dividing 8; 3 has order 6
    assert normalizing_constant(F49(3)) is None
    gamma = F49.gen() ** 6
    c = normalizing_constant(gamma)
    assert c is not None and c ** 6 == gamma ** 7


def test_search_p5_finds_hasse_pair():
    res = sdd_search(5, (2, 2), 2)
    assert hasse_roots(5) in res.tuples
    assert res.candidates == 23 * 22 // 2
    for tup in res.tuples:
        d = SpecialDeformationDatum(F25, tup, res.signature)
        assert sdd_validate(d).valid and sdd_is_special(d)


def test_search_single_exponent():
    res = sdd_search(5, (4,), 1)
    assert res.candidates == 3
    F5 = build_field(5, 1)
    for tup in res.tuples:
        assert sdd_is_special(SpecialDeformationDatum(F5, tup, Signature([4])))

    res3 = sdd_search(3, (2,), 1)
    assert res3.candidates == 1
    F3 = build_field(3, 1)
    expected = [(F3(2),)] if sdd_is_special(SpecialDeformationDatum(F3, (F3(2),), Signature([2]))) else []
    assert res3.tuples == expected


def test_search_rejects_bad_input():
    with pytest.raises(ValueError, match="signature sum"):
        sdd_search(5, (2, 3), 1)
    with pytest.raises(ValueError, match="bound"):
        sdd_search(23, (2,) * 11, 3)
    with pytest.raises(ValueError, match="bound"):
        sdd_search(23, (2,) * 11, 2)


def test_search_deterministic():
    a = sdd_search(5, (2, 2), 2).to_json()
    b = sdd_search(5, (2, 2), 2).to_json()
    assert a == b


def test_search_unequal_exponents():
    # unequal exponents: each configuration assigns distinct points
    res = sdd_search(7, (4, 2), 1)
    F7 = build_field(7, 1)
    assert res.signature.a == (4, 2)
    assert res.candidates == 5 * 4
    for tup in res.tuples:
        assert len(set(tup)) == 2
        assert sdd_is_special(SpecialDeformationDatum(F7, tup, res.signature))


@pytest.mark.parametrize("sig", [(2, 2), (4,)])
def test_search_s3_stable(sig):
    res = sdd_search(5, sig, 2)
    found = set(res.tuples)
    for tup in res.tuples:
        d = SpecialDeformationDatum(F25, tup, res.signature)
        for name in ("1-t", "1/t"):
            moved = sdd_s3_transform(d, name)
            assert canonical_tuple(moved.lambdas, res.signature) in found


def test_s3_transform_examples():
    d = build_x2p_datum(5)
    assert sdd_s3_transform(d, "id") == d
    moved = sdd_s3_transform(d, "1-t")
    assert set(moved.lambdas) == {1 - x for x in d.lambdas}
    assert sdd_is_special(moved)
    twice = sdd_s3_transform(sdd_s3_transform(d, "1/t"), "1/t")
    assert twice == d
    with pytest.raises(ValueError):
        sdd_s3_transform(d, "t^2")


@pytest.mark.parametrize("name", sorted(MOBIUS_MAPS))
def test_s3_preserves_specialness_in_search_mode(name):
    d = SpecialDeformationDatum(F49, hasse_roots(7), Signature([2, 2, 2]))
    assert sdd_is_special(sdd_s3_transform(d, name))


@pytest.mark.parametrize("p", [5, 7, 11, 13, 17, 19, 23])
def test_modular_datum_eigenvalue_one(p):
    d = build_x2p_datum(p)
    assert sdd_eigenvalue(d) == 1
    assert sdd_is_special(d)


def test_signature_parse():
    assert Signature.parse("2,2,2").a == (2, 2, 2)
    assert str(Signature([4, 2])) == "4,2"
    with pytest.raises(ValueError):
        Signature([2, 2]).check(7)
