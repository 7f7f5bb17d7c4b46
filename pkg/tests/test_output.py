import csv
import io
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vertexlab.exact import TABLE, Grading, LaurentPoly, RationalFunction, Series
from vertexlab.hilb import ZY, compute_F
from vertexlab.output import (
    SERIES_SCHEMA, decode_coeff, emit_report, emit_series, encode_coeff, series_from_dict,
)
from vertexlab.report import Report
from vertexlab.taut import nonequivariant_series, p2
from vertexlab.toric import closed_form_limit, truncate_mode_expanded
from strategies import binomial_weights, laurent_polys

Z = Grading(TABLE, {"z": {"z": 1}})


def round_trip(s):
    return series_from_dict(json.loads(emit_series(s, "json")))


@given(laurent_polys(), st.lists(binomial_weights(), max_size=3))
def test_coefficient_round_trip(num, ws):
    f = RationalFunction.make(num, ws)
    assert decode_coeff(json.loads(json.dumps(encode_coeff(f)))) == f
    assert decode_coeff(encode_coeff(num)) == num
    assert decode_coeff(encode_coeff(Fraction(-7, 3))) == Fraction(-7, 3)


@pytest.mark.parametrize("make", [
    lambda: compute_F(nz=2, ny=1),
    lambda: closed_form_limit("x2", "A", 2),
    lambda: truncate_mode_expanded(closed_form_limit("x1", "B", 1), 3),
    lambda: nonequivariant_series(p2(1), "lambda", (2, 2)),
])
def test_series_json_round_trip(make):
    s = make()
    back = round_trip(s)
    assert back == s
    assert back.prec == s.prec


def test_output_is_byte_deterministic():
    for fmt in ("json", "csv", "plain"):
        assert emit_series(compute_F(nz=2, ny=1), fmt) == emit_series(compute_F(nz=2, ny=1), fmt)


def test_constant_series_is_one_row():
    one = Series(Z, (Z.scaled(3),), {(0,): Fraction(1)})
    rows = list(csv.reader(io.StringIO(emit_series(one, "csv"))))
    assert rows == [["monomial", "coefficient"], ["1", "1"]]


def test_empty_series_is_header_only():
    empty = Series(Z, (Z.scaled(3),), {})
    assert emit_series(empty, "csv") == "monomial,coefficient\n"
    assert emit_series(empty, "plain").splitlines() == ["monomial  coefficient"]


def test_first_order_term_row():
    f = compute_F(nz=1, ny=0, y_zero=True)
    rows = list(csv.reader(io.StringIO(emit_series(f, "csv"))))
    assert rows[0] == ["monomial", "coefficient"]
    assert rows[2][0] == "z"
    m1, m2 = LaurentPoly.var("m1"), LaurentPoly.var("m2")
    expected = RationalFunction.make(-(1 - m1) * (1 - m2), [TABLE.exps(t1=-1), TABLE.exps(t2=-1)])
    assert rows[2][1] == str(expected)


def test_rational_coefficients_are_p_over_q():
    s = Series(Z, (Z.scaled(2),), {(0,): Fraction(1), (Z.scaled(1),): Fraction(-3, 4)})
    assert "-3/4" in emit_series(s, "csv")


def test_json_schema_and_meta():
    d = json.loads(emit_series(compute_F(nz=1, ny=1), "json", {"command": "f-series"}))
    assert d["schema"] == SERIES_SCHEMA
    assert d["meta"] == {"command": "f-series"}
    with pytest.raises(ValueError):
        series_from_dict({**d, "schema": "other/9"})


def test_report_formats():
    rep = Report("demo", True, {"n": 2})
    rep.note("ok")
    d = json.loads(emit_report(rep, "json", {"n": 2}))
    assert d["status"] == "pass" and d["orders"] == {"n": 2}
    assert emit_report(rep, "csv").startswith("field,value\n")
    rep.fail(key=(1,), left="a", right="b")
    assert "witness.key" in emit_report(rep, "plain")


def test_unknown_format():
    with pytest.raises(ValueError):
        emit_series(Series(Z, (0,), {}), "xml")
