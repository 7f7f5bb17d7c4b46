from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vertexlab.exact import (
    TABLE, Grading, LaurentPoly, RationalFunction, Series, fmt_rational, half_power_convert,
)
from strategies import binomial_weights, laurent_polys, monomials

t1 = LaurentPoly.var("t1")
t2 = LaurentPoly.var("t2")
z = LaurentPoly.var("z")
Z = Grading(TABLE, {"z": {"z": 1}})


def test_half_variables_store_doubled_exponents():
    e = TABLE.exps(t1=1, kappa=Fraction(1, 2))
    assert e[TABLE.index["t1"]] == 2
    assert e[TABLE.index["kappa"]] == 1
    assert TABLE.powers(e) == {"t1": 1, "kappa": Fraction(1, 2)}


def test_monomial_formatting():
    assert TABLE.fmt_monomial(TABLE.exps(q=Fraction(1, 2), t=-1)) in {"q^(1/2)*t^-1", "t^-1*q^(1/2)"}
    assert fmt_rational(Fraction(-3, 4)) == "-3/4"
    assert fmt_rational(Fraction(5)) == "5"


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero()


@given(laurent_polys(), laurent_polys())
def test_divexact_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


@given(laurent_polys())
def test_dual_is_involution_and_antimultiplicative_in_exponents(a):
    assert a.dual().dual() == a
    assert (a * a).dual() == a.dual() * a.dual()


@given(laurent_polys(), st.integers(1, 3))
def test_adams_is_ring_map(a, n):
    assert (a * a).adams(n) == a.adams(n) * a.adams(n)


def test_laurent_powers():
    assert t1 ** -1 * t1 == LaurentPoly.const(1)
    assert (t1 + t2) ** 2 == t1 * t1 + 2 * t1 * t2 + t2 * t2


@given(laurent_polys(), st.lists(binomial_weights(), min_size=1, max_size=3))
def test_rational_function_field_ops(num, ws):
    f = RationalFunction.make(num, ws)
    g = RationalFunction.make(LaurentPoly.const(1) + t1, ws[:1])
    assert f + g == g + f
    assert f * (g + g) == f * g + f * g
    assert f - f == RationalFunction.make(0)


@given(st.lists(binomial_weights(), min_size=1, max_size=3), monomials())
def test_reciprocal_of_binomial_products(ws, e):
    num = LaurentPoly.mono(e, 3)
    for w in ws[:2]:
        num = num * LaurentPoly.one_minus(w)
    f = RationalFunction.make(num, ws)
    assert f * f.reciprocal() == RationalFunction.make(1)


def test_one_minus_cancels():
    w = TABLE.exps(t1=1)
    f = RationalFunction.make(LaurentPoly.one_minus(w), [w])
    assert f == RationalFunction.make(1)
    assert f.reduce().is_polynomial()


def test_canonical_string_is_stable():
    w1, w2 = TABLE.exps(t1=1), TABLE.exps(t2=1)
    f = RationalFunction.make(t1 * t2, [w1, w2])
    g = RationalFunction.make(t2 * t1, [w2, w1])
    assert str(f) == str(g)
    # multiplying num and den by the same binomial changes nothing
    h = RationalFunction.make(t1 * t2 * LaurentPoly.one_minus(TABLE.exps(t1=2)), [w1, w2, TABLE.exps(t1=2)])
    assert str(h.canonical()) == str(f.canonical())


def test_inverse_weight_denominators_are_equal_values():
    # -(1-m1)(1-m2)/((1-1/t1)(1-1/t2)) written with positive weights
    m1, m2 = LaurentPoly.var("m1"), LaurentPoly.var("m2")
    num = -(1 - m1) * (1 - m2)
    a = RationalFunction.make(num, [TABLE.exps(t1=-1), TABLE.exps(t2=-1)])
    b = RationalFunction.make(num * t1 * t2, [TABLE.exps(t1=1), TABLE.exps(t2=1)])
    assert a == b


def test_geometric_series():
    s = Series.from_rational(RationalFunction.make(1, [TABLE.exps(z=1)]), Z, 5)
    assert sorted(s.coeffs) == [(k,) for k in range(6)]
    assert all(s.coeffs[(k,)] == z ** k for k in range(6))


@given(st.integers(1, 4))
def test_series_inverse(n):
    s = Series.from_poly(1 - z - t1 * z ** 2, Z, n)
    one = Series.from_poly(LaurentPoly.const(1), Z, n)
    assert s * s.inverse() == one


def test_exp_of_sum_is_product():
    a = Series.from_poly(z, Z, 4)
    b = Series.from_poly(t1 * z * z, Z, 4)
    assert (a + b).exp() == a.exp() * b.exp()


def test_first_difference_reports_lowest_key():
    a = Series.from_poly(1 + z + z ** 2, Z, 3)
    b = Series.from_poly(1 + z + 2 * z ** 2, Z, 3)
    key, left, right = a.first_difference(b)
    assert key == (Z.scaled(2),)
    assert (left, right) == (z ** 2, 2 * z ** 2)
    assert a.first_difference(a) is None


def test_substitution_respects_grading():
    s = Series.from_poly(1 + z * t1, Z, 3)
    # half variables map their square roots
    out = s.substitute({"t1": (1, TABLE.exps(t2=Fraction(1, 2)))})
    assert out == Series.from_poly(1 + z * t2, Z, 3)


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_half_power_convert_branch(a2, k):
    # t^(a2/2) q^(b2/2) with a2 + b2 even
    b2 = 2 * k - a2
    ta, qb = Fraction(a2, 2), Fraction(b2, 2)
    (exps, c), = list(half_power_convert(LaurentPoly.mono(TABLE.exps(t=ta, q=qb))).terms())
    pw = TABLE.powers(exps)
    assert pw.get("Q", 0) == ta + qb
    assert pw.get("kappa", 0) == (ta - qb) / 2
    assert c == (-1) ** int(ta - qb)


def test_half_power_convert_rejects_half_integral_total():
    with pytest.raises(ValueError):
        half_power_convert(LaurentPoly.var("t", Fraction(1, 2)))
