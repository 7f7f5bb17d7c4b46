from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from vertexlab.characters import (
    Explicit, GenericityError, Preferred, ahat, balanced_limit, character, index, kappa_to_t,
    pleth_sym_finite, pleth_sym_series, rigid_limit, serre_check, slope_sign,
)
from vertexlab.exact import TABLE, Grading, LaurentPoly, RationalFunction, Series
from vertexlab.partitions import Partition3D, enumerate_3d, EMPTY
from vertexlab.vertex import vertex_character_finite

KAPPA_HALF = LaurentPoly.var("kappa", Fraction(1, 2))
SINGLE_BOX = vertex_character_finite(Partition3D.finite({(0, 0, 0)}))
SMALL = [p for p in enumerate_3d(EMPTY, EMPTY, EMPTY, 3) if p.size]


@st.composite
def explicit_slopes(draw, bound=20):
    r1 = draw(st.integers(-bound, bound))
    r2 = draw(st.integers(-bound, bound))
    assume(r1 and r2 and r1 + r2)
    return Explicit((r1, r2, -r1 - r2))


def test_single_box_character():
    assert SINGLE_BOX == character([(1, 0, 0), (0, 1, 0), (0, 0, 1)]) - character(
        [(0, 1, 1), (1, 0, 1), (1, 1, 0)])
    assert serre_check(SINGLE_BOX)


@pytest.mark.parametrize("r, expected", [
    ((1, 2, -3), -KAPPA_HALF),
    ((-1, -2, 3), -KAPPA_HALF ** -1),
    ((2, -1, -1), -KAPPA_HALF ** -1),
])
def test_single_box_limits(r, expected):
    assert rigid_limit(SINGLE_BOX, Explicit(r)) == expected


def test_preferred_regime_parsing_round_trip():
    for text in ["r3>>r2>0>>r1", "r1>>r3>0>>r2", "s2>>0>s1>>s3"]:
        sigma = Preferred.parse(text)
        assert sigma.negate().negate() == sigma
    assert str(Preferred.parse("r3>>r2>0>>r1")) == "r3>>r2>0>>r1"


def test_explicit_slope_validation():
    with pytest.raises(ValueError):
        Explicit((1, 1, 1))


def test_nongeneric_slope_raises():
    with pytest.raises(GenericityError):
        index(character([(1, -1, 0)]), Explicit((1, 1, -2)))


@given(explicit_slopes(), st.sampled_from(SMALL))
def test_index_changes_sign_under_negation(sigma, pi):
    v = vertex_character_finite(pi)
    try:
        i = index(v, sigma)
    except GenericityError:
        assume(False)
    assert index(v, sigma.negate()) == -i


@given(explicit_slopes(), st.sampled_from(SMALL))
def test_balanced_limit_matches_rigid_limit(sigma, pi):
    v = vertex_character_finite(pi)
    assert serre_check(v)
    try:
        rigid = rigid_limit(v, sigma)
    except GenericityError:
        assume(False)
    assert balanced_limit(ahat(v), sigma) == RationalFunction.from_poly(kappa_to_t(rigid))


@given(explicit_slopes(), st.integers(1, 4))
def test_slope_sign_depends_on_ray(sigma, k):
    scaled = Explicit(tuple(k * x for x in sigma.r))
    for w in [TABLE.exps(t1=1), TABLE.exps(t2=1, t3=-1), TABLE.exps(t1=-2, t3=1)]:
        try:
            assert slope_sign(w, scaled) == slope_sign(w, sigma)
        except GenericityError:
            pass


def test_pleth_sym_finite():
    t1 = LaurentPoly.var("t1")
    f = pleth_sym_finite(t1 - LaurentPoly.var("t2"))
    assert f == RationalFunction.make(LaurentPoly.one_minus(TABLE.exps(t2=1)), [TABLE.exps(t1=1)])


def test_pleth_sym_series_of_single_variable():
    z = LaurentPoly.var("z")
    g = Grading(TABLE, {"z": {"z": 1}})
    s = pleth_sym_series(Series.from_poly(z, g, 5))
    assert s == Series.from_rational(RationalFunction.make(1, [TABLE.exps(z=1)]), g, 5)
    # Sym of 2z: 1/(1-z)^2 has coefficient n+1
    s2 = pleth_sym_series(Series.from_poly(2 * z, g, 4))
    assert [s2.coefficient((g.scaled(n),)) for n in range(5)] == [(n + 1) * z ** n for n in range(5)]
