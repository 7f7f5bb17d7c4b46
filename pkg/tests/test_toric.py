from fractions import Fraction

import pytest

from vertexlab.exact import TABLE, LaurentPoly, RationalFunction
from vertexlab.partitions import Partition, partitions_upto
from vertexlab.toric import (
    GEOMETRIES, KAHLER, REGIMES, btop_check, closed_form_limit, degree_zero_sector,
    reduced_limit_vertex_sum, truncate_mode_expanded, verify_edge_conversions,
    verify_listed_factors, verify_slope_independence,
)
from vertexlab.vertex import MINUS_ONE, ZERO_MINUS_TWO, EdgeTables

var = LaurentPoly.var


def zero_minus_two_corrupted():
    return EdgeTables(corrupt={(ZERO_MINUS_TWO, s) for s in EdgeTables.regimes(ZERO_MINUS_TWO)})


@pytest.mark.parametrize("name", sorted(GEOMETRIES))
def test_geometry_is_consistent(name):
    X = GEOMETRIES[name]()
    X.validate()
    ends = {v for e in X.edges for v in (e.a, e.b)}
    assert ends == set(X.vertices)


def test_x2_degree_one_closed_form():
    # linear terms of the infinite products: u t / ((1-q)(1-t)) + (qt)^(1/2) (m1 + m2) / ((1-q)(1-t))
    s = closed_form_limit("x2", "A", 1)
    sqrt_qt = LaurentPoly.mono(TABLE.exps(q=Fraction(1, 2), t=Fraction(1, 2)))
    num = var("t") * var("u") + sqrt_qt * (var("m1") + var("m2"))
    expected = RationalFunction.make(num, [TABLE.exps(t=1), TABLE.exps(q=1)])
    assert s.coefficient((KAHLER.scaled(1),)) == expected


@pytest.mark.parametrize("geometry", sorted(GEOMETRIES))
@pytest.mark.parametrize("degree", [1, 2])
def test_regimes_agree_and_vertex_sum_matches(geometry, degree):
    a = closed_form_limit(geometry, "A", degree)
    b = closed_form_limit(geometry, "B", degree)
    assert a.first_difference(b) is None
    X = GEOMETRIES[geometry]()
    for name, sigma in REGIMES.items():
        v = reduced_limit_vertex_sum(X, sigma, degree)
        assert v.first_difference(closed_form_limit(geometry, name, degree)) is None


@pytest.mark.parametrize("geometry", sorted(GEOMETRIES))
def test_slope_independence_report(geometry):
    rep = verify_slope_independence(geometry, 2, 4)
    assert rep.passed, rep


@pytest.mark.parametrize("geometry", sorted(GEOMETRIES))
def test_corrupted_zero_minus_two_rows_are_detected(geometry):
    assert not verify_slope_independence(geometry, 2, 4, zero_minus_two_corrupted()).passed


def test_corrupted_minus_one_rows_need_degree_three():
    # exchanging (2) and (1,1) contributions cancels in total degree 2
    bad = EdgeTables(corrupt={(MINUS_ONE, s) for s in EdgeTables.regimes(MINUS_ONE)})
    assert verify_slope_independence("x1", 2, None, bad).passed
    assert not verify_slope_independence("x1", 3, None, bad).passed


def test_truncation_keeps_low_qt_orders():
    s = closed_form_limit("x2", "A", 1)
    t = truncate_mode_expanded(s, 2)
    assert t.coeffs
    assert truncate_mode_expanded(s, 2) == t


@pytest.mark.parametrize("geometry", sorted(GEOMETRIES))
def test_edge_conversions(geometry):
    assert verify_edge_conversions(geometry, 2).passed


def test_listed_factors():
    assert verify_listed_factors(2).passed


@pytest.mark.parametrize("lam", [lam for lam in partitions_upto(3) if lam])
def test_btop_identity(lam):
    assert btop_check(lam, 3).passed


@pytest.mark.parametrize("geometry", sorted(GEOMETRIES))
@pytest.mark.parametrize("regime", sorted(REGIMES))
def test_degree_zero_sector(geometry, regime):
    assert degree_zero_sector(GEOMETRIES[geometry](), REGIMES[regime], 2).passed
