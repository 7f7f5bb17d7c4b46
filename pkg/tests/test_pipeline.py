import pytest

from vertexlab.exact import LaurentPoly, RationalFunction, Series
from vertexlab.partitions import EMPTY, Partition, partitions_upto
from vertexlab.pipeline import (
    PIPE, PRIMED, SPECIALIZE_M4, ProductForm, listed_int, listed_sub1, localization_ratio,
    run_pipeline, summand_form,
)


@pytest.mark.parametrize("order", [(0, 0, 0), (1, 1, 1), (2, 2, 2), (2, 1, 1)])
def test_pipeline_passes(order):
    rep = run_pipeline(order)
    assert rep.passed, rep


@pytest.mark.parametrize("regime", ["A", "B"])
@pytest.mark.parametrize("lam", partitions_upto(2))
def test_substituted_summand_matches_listed_form(regime, lam):
    p1, p2 = (EMPTY, lam) if regime == "A" else (lam, EMPTY)
    form = summand_form(regime, p1, p2).substitute(SPECIALIZE_M4).substitute(PRIMED)
    ref = listed_sub1(regime, lam)
    assert form.same_products(ref)
    assert form.finite == ref.finite


def test_product_form_inverse():
    form = listed_int("A", Partition.of(1))
    one = form * form.inverse()
    assert one.inf == {}
    assert one.finite == RationalFunction.make(1)


def test_double_products_expand_to_inverse_series():
    form = listed_int("A", EMPTY)
    order = (2, 2, 2)
    s = form.to_series(PIPE, order) * form.inverse().to_series(PIPE, order)
    assert s == Series.from_poly(LaurentPoly.const(1), PIPE, order)


def test_localization_ratio_starts_at_one():
    s = localization_ratio((1, 1, 1), "up", ("m1p", "m2p", "m3p"), "vp")
    assert s.coefficient((0, 0, 0)) == 1
