import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stabred.cartier import (
    CyclicCoverDifferential,
    PlaneDifferential,
    cartier_cyclic,
    cartier_eigenvalue,
    cartier_plane,
    cartier_polynomial,
    exact_differential,
    is_exact,
    is_logarithmic,
    log_differential,
)
from stabred.field import Polynomial, RationalFunction, build_field

from strategies import polynomials, rational_functions

F25 = build_field(5, 2)
F49 = build_field(7, 2)


def rf(x):
    return RationalFunction.lift(x.field, x) if isinstance(x, Polynomial) else x


def line(u):
    return CyclicCoverDifferential.on_line(rf(u))


def test_monomial_formula():
    # C(t^(pj+p-1) dt) = t^j dt; every other monomial is killed
    for F in (build_field(5, 1), F25, F49):
        p = F.p
        t = Polynomial.t(F)
        for e in range(4 * p):
            image = cartier_polynomial(t**e)
            if e % p == p - 1:
                assert image == t ** ((e - p + 1) // p)
            else:
                assert image.is_zero()


def test_semilinear_in_constants():
    t = Polynomial.t(F25)
    a = F25.gen()
    image = cartier_polynomial(t**4 * a)
    assert image == Polynomial(F25, [a ** 5])  # a^(1/5) = a^5 in F_25


def test_plane_examples():
    F = build_field(5, 1)
    t = Polynomial.t(F)
    one = Polynomial(F, [1])
    assert cartier_plane(PlaneDifferential(RationalFunction(one))).is_zero()
    assert cartier_plane(PlaneDifferential(RationalFunction(t**4))) == PlaneDifferential(RationalFunction(one))
    for p in (3, 5, 7, 11):
        Fp = build_field(p, 1)
        tp = Polynomial.t(Fp)
        dt_t = PlaneDifferential(RationalFunction(Polynomial(Fp, [1]), tp))
        assert cartier_plane(dt_t) == dt_t


def test_cyclic_shift_n_equals_p_minus_1():
    F = F49
    t = Polynomial.t(F)
    g = (t - 2) ** 3 * (t - 3) ** 3
    h = RationalFunction(Polynomial(F, [1]), t * (t - 1))
    w = CyclicCoverDifferential(6, g, 1, h)
    image = cartier_cyclic(w)
    assert image.m == 1
    assert image.h == cartier_plane(PlaneDifferential(h / RationalFunction(g))).u


def test_cyclic_shift_n_equals_r():
    p, r = 7, 3
    t = Polynomial.t(F49)
    g = t**3 + 2 * t**2 + 2 * t + 1
    h = RationalFunction(Polynomial(F49, [1]), t * (t - 1))
    w = CyclicCoverDifferential(r, g, 1, h)
    image = cartier_cyclic(w)
    assert image.m == 1
    assert image.h == cartier_plane(PlaneDifferential(h / RationalFunction(g) ** 2)).u


def test_cyclic_m_zero_is_plane_case():
    t = Polynomial.t(F25)
    g = t**2 + 4 * t + 1
    h = RationalFunction(t**9 + 3 * t, t - 2)
    w = CyclicCoverDifferential(2, g, 0, h)
    image = cartier_cyclic(w)
    assert image.m == 0
    assert image.h == cartier_plane(PlaneDifferential(h)).u


def test_cyclic_rejects_degree_divisible_by_p():
    t = Polynomial.t(F25)
    with pytest.raises(ValueError):
        CyclicCoverDifferential(5, t, 1, RationalFunction(t))


def test_eigenvalue_examples():
    F = build_field(5, 1)
    t = Polynomial.t(F)
    assert cartier_eigenvalue(line(RationalFunction(Polynomial(F, [1]), t))) == 1
    assert cartier_eigenvalue(line(Polynomial(F, [1]))) == 0
    # t dt -> 0 as well; t^4 dt -> dt is not proportional
    assert cartier_eigenvalue(line(t**4)) is None


def test_eigenvalue_omega0_p7():
    t = Polynomial.t(F49)
    g = t**3 + 2 * t**2 + 2 * t + 1
    w = CyclicCoverDifferential(3, g, 1, RationalFunction(Polynomial(F49, [1]), t * (t - 1)))
    assert cartier_eigenvalue(w) == 1


def test_logarithmic_and_exact_examples():
    F = build_field(5, 1)
    t = Polynomial.t(F)
    one = Polynomial(F, [1])
    assert is_logarithmic(line(RationalFunction(one, t * (t - 1))))
    assert not is_logarithmic(line(one))
    assert is_exact(line(one))
    assert not is_exact(line(RationalFunction(one, t)))
    for p in (5, 7, 11):
        Fp = build_field(p, 1)
        tp = Polynomial.t(Fp)
        assert not is_exact(line(tp ** (p - 1)))

    tt = Polynomial.t(F25)
    w = CyclicCoverDifferential(2, tt**2 + 4 * tt + 1, 1,
                                RationalFunction(Polynomial(F25, [1]), tt * (tt - 1)))
    assert is_logarithmic(w)


def test_dt_over_t_t_minus_1_is_dlog():
    # dt/(t(t-1)) = du/u for u = (t-1)/t
    F = build_field(7, 1)
    t = Polynomial.t(F)
    u = RationalFunction(t - 1, t)
    assert log_differential(u).u == RationalFunction(Polynomial(F, [1]), t * (t - 1))


# ---------------------------------------------------------------------------
# operator properties


@pytest.mark.parametrize("F", [F25, F49], ids=["F25", "F49"])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_kernel_contains_exact_forms(F, data):
    f = data.draw(polynomials(F, max_degree=30))
    assert cartier_plane(exact_differential(RationalFunction(f))).is_zero()


@pytest.mark.parametrize("F", [F25, F49], ids=["F25", "F49"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_kernel_contains_exact_rational_forms(F, data):
    f = data.draw(rational_functions(F, max_degree=3))
    assert cartier_plane(exact_differential(f)).is_zero()


@pytest.mark.parametrize("F", [F25, F49], ids=["F25", "F49"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_fixes_logarithmic_forms(F, data):
    u = data.draw(rational_functions(F, max_degree=3).filter(lambda r: not r.is_zero()))
    w = log_differential(u)
    assert cartier_plane(w) == w


@pytest.mark.parametrize("F", [F25, F49], ids=["F25", "F49"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_semilinearity(F, data):
    f = data.draw(rational_functions(F, max_degree=2))
    u = data.draw(rational_functions(F, max_degree=3))
    w = PlaneDifferential(u)
    assert cartier_plane(PlaneDifferential(f ** F.p * u)) == PlaneDifferential(f * cartier_plane(w).u)


@pytest.mark.parametrize("F", [F25, F49], ids=["F25", "F49"])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_additivity(F, data):
    u1 = data.draw(rational_functions(F, max_degree=3))
    u2 = data.draw(rational_functions(F, max_degree=3))
    lhs = cartier_plane(PlaneDifferential(u1 + u2))
    rhs = cartier_plane(PlaneDifferential(u1)) + cartier_plane(PlaneDifferential(u2))
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_cyclic_semilinearity_and_additivity(data):
    F = F49
    t = Polynomial.t(F)
    g = t**3 + 2 * t**2 + 2 * t + 1
    m = data.draw(st.integers(0, 2))
    h1 = data.draw(rational_functions(F, max_degree=2))
    h2 = data.draw(rational_functions(F, max_degree=2))
    f = data.draw(rational_functions(F, max_degree=2))
    w1 = CyclicCoverDifferential(3, g, m, h1)
    w2 = CyclicCoverDifferential(3, g, m, h2)
    assert cartier_cyclic(w1 + w2) == cartier_cyclic(w1) + cartier_cyclic(w2)
    assert cartier_cyclic(w1 * f ** F.p) == cartier_cyclic(w1) * f


@pytest.mark.parametrize("p", [5, 7])
def test_stabilization_on_polynomial_forms(p):
    # forms with C(w) in {0, w} stay put under a second application
    F = build_field(p, 1)
    t = Polynomial.t(F)
    for e in range(p * p):
        w = PlaneDifferential(RationalFunction(t**e))
        cw = cartier_plane(w)
        if cw.is_zero() or cw == w:
            assert cartier_plane(cw) == cw
    # iterating from any polynomial form of degree < p^2 hits 0 within 2 steps
    for e in range(p * p):
        w = PlaneDifferential(RationalFunction(t**e + 3 * t ** (e // 2)))
        c2 = cartier_plane(cartier_plane(w))
        assert cartier_plane(c2) == c2 or cartier_plane(c2).is_zero()
