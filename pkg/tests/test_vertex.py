from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, strategies as st

from vertexlab.characters import Preferred
from vertexlab.exact import TABLE, LaurentPoly, RationalFunction, Series, half_power_convert
from vertexlab.partitions import EMPTY, Partition, partitions_upto
from vertexlab.vertex import (
    EDGE_TABLES, MINUS_ONE, QGRADING, VERTEX_TABLE, ZERO_MINUS_TWO, EdgeTables, FiniteAlphabet,
    UnsupportedRegime, edge_character, edge_euler, nekrasov_check, refined_vertex_C, skew_schur,
    ssyt_skew_schur, vertex_box_count, vertex_limit,
)
from vertexlab.checks import exact_edge_value
from strategies import partitions

P = Partition.of
LETTERS = [LaurentPoly.var("t1"), LaurentPoly.var("t2"), LaurentPoly.var("t3")]


def content_hook_dimension(lam, n):
    """Number of SSYT of shape lam in n letters."""
    num = prod(n + j - i for i, j in lam.boxes())
    den = prod(a + l + 1 for _, a, l in lam.arm_legs())
    return Fraction(num, den)


@given(partitions(4), partitions(2))
def test_skew_schur_jacobi_trudi_matches_tableaux(lam, eta):
    js = skew_schur(lam, eta, FiniteAlphabet(LETTERS))
    tab = ssyt_skew_schur(lam, eta, LETTERS)
    assert js == RationalFunction.from_poly(tab)


@given(partitions(5), st.integers(1, 4))
def test_schur_dimension(lam, n):
    letters = [LaurentPoly.const(1)] * n
    val = ssyt_skew_schur(lam, EMPTY, letters)
    assert val == LaurentPoly.const(content_hook_dimension(lam, n))


def test_vertex_of_empty_legs_is_one():
    assert refined_vertex_C(EMPTY, EMPTY, EMPTY) == RationalFunction.make(1)


def test_vertex_table_has_four_rows():
    assert len(VERTEX_TABLE) == 4
    for sigma in VERTEX_TABLE:
        vertex_limit(P(1), EMPTY, EMPTY, sigma)


def test_unsupported_regime():
    with pytest.raises(UnsupportedRegime):
        vertex_limit(P(1), EMPTY, EMPTY, Preferred(3, 1, 1, 1))


@pytest.mark.parametrize("legs", [(P(1), EMPTY, EMPTY), (EMPTY, P(1), P(1)), (P(2), P(1), EMPTY)])
@pytest.mark.parametrize("sigma", list(VERTEX_TABLE))
def test_box_count_routes_and_closed_form(legs, sigma):
    w = vertex_box_count(*legs, sigma, 3, route="W")
    psi = vertex_box_count(*legs, sigma, 3, route="psi")
    assert w == psi
    c = Series.from_rational(vertex_limit(*legs, sigma), QGRADING, {"Q": Fraction(w.prec[0], QGRADING.unit)})
    assert w.first_difference(c) is None


@given(partitions(5))
def test_edge_euler_characteristics(lam):
    # the (-1,-1) normal bundle is symmetric under swapping its two directions
    assert edge_euler(lam, MINUS_ONE) == edge_euler(lam.conj, MINUS_ONE)
    assert isinstance(edge_euler(lam, ZERO_MINUS_TWO), int)


@pytest.mark.parametrize("kind", [MINUS_ONE, ZERO_MINUS_TWO])
def test_edge_tables_match_exact_index(kind):
    for lam in partitions_upto(3):
        for sigma in EdgeTables.regimes(kind):
            table = half_power_convert(EDGE_TABLES.lookup(lam, kind, sigma))
            assert table == exact_edge_value(lam, kind, sigma), (lam, sigma)


def test_corrupted_table_differs():
    kind = ZERO_MINUS_TWO
    bad = EdgeTables(corrupt={(kind, s) for s in EdgeTables.regimes(kind)})
    sigma = EdgeTables.regimes(kind)[0]
    assert any(bad.lookup(lam, kind, sigma) != EDGE_TABLES.lookup(lam, kind, sigma)
               for lam in partitions_upto(2) if lam)


def test_edge_character_satisfies_serre_duality():
    from vertexlab.characters import serre_check
    for lam in partitions_upto(3):
        for kind in (MINUS_ONE, ZERO_MINUS_TWO):
            assert serre_check(edge_character(lam, kind))


@pytest.mark.parametrize("order", [0, 1, 2, 3])
def test_nekrasov_low_orders(order):
    assert nekrasov_check(order).passed
