"""Deterministic JSON, CSV and plain-text rendering of series and reports."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .exact import TABLE, Grading, LaurentPoly, RationalFunction, Series, fmt_rational
from .report import Report

SERIES_SCHEMA = "vertexlab.series/1"
FORMATS = ("json", "csv", "plain")


# -- coefficient encoding ----------------------------------------------------------

def _powers(exps: tuple) -> dict:
    return {k: fmt_rational(v) for k, v in TABLE.powers(exps).items()}


def _exps(powers: dict) -> tuple:
    return TABLE.exps({k: Fraction(v) for k, v in powers.items()})


def encode_poly(p: LaurentPoly) -> list:
    return [[_powers(e), fmt_rational(c)] for e, c in p.sorted_terms()]


def decode_poly(data: list) -> LaurentPoly:
    return LaurentPoly.from_terms(TABLE, {_exps(pw): Fraction(c) for pw, c in data})


def encode_coeff(c) -> dict:
    if isinstance(c, RationalFunction):
        den = sorted(c.den.items(), key=lambda wk: (TABLE.degree(wk[0]), wk[0]))
        return {"kind": "rational", "num": encode_poly(c.num),
                "den": [[_powers(w), k] for w, k in den]}
    if isinstance(c, LaurentPoly):
        return {"kind": "poly", "terms": encode_poly(c)}
    return {"kind": "scalar", "value": fmt_rational(c)}


def decode_coeff(d: dict):
    kind = d["kind"]
    if kind == "rational":
        den = {}
        for pw, k in d["den"]:
            den[_exps(pw)] = int(k)
        return RationalFunction(decode_poly(d["num"]), den)
    if kind == "poly":
        return decode_poly(d["terms"])
    if kind == "scalar":
        return Fraction(d["value"])
    raise ValueError(f"unknown coefficient kind {kind!r}")


def encode_grading(g: Grading) -> dict:
    groups = {}
    for name, w in zip(g.names, g.weights):
        groups[name] = {TABLE.names[i]: fmt_rational(x * TABLE.scale[i]) for i, x in enumerate(w) if x}
    return {"names": list(g.names), "groups": groups}


def decode_grading(d: dict) -> Grading:
    return Grading(TABLE, {n: {v: Fraction(x) for v, x in d["groups"][n].items()} for n in d["names"]})


# -- rows ----------------------------------------------------------------------------

def _order_key(key: tuple) -> tuple:
    return (sum(key), key)


def _key_monomial(g: Grading, key: tuple) -> str:
    parts = []
    for name, k in zip(g.names, key):
        d = Fraction(k, g.unit)
        if d == 0:
            continue
        parts.append(name if d == 1 else f"{name}^{fmt_rational(d) if d.denominator == 1 else f'({d})'}")
    return "*".join(parts) if parts else "1"


def series_rows(s: Series) -> list[tuple[str, str]]:
    """``(monomial, coefficient)`` rows in graded-lex order of the counting monomials."""
    if all(not isinstance(c, (LaurentPoly, RationalFunction)) for c in s.coeffs.values()):
        return [(_key_monomial(s.grading, k), fmt_rational(s.coeffs[k]))
                for k in sorted(s.coeffs, key=_order_key)]
    rows = []
    for exps, c in s.monomial_terms():
        rows.append((TABLE.fmt_monomial(exps), str(c)))
    return rows


# -- emitters --------------------------------------------------------------------------

def series_to_dict(s: Series, meta: dict | None = None) -> dict:
    keys = sorted(s.coeffs, key=_order_key)
    return {
        "schema": SERIES_SCHEMA,
        "meta": meta or {},
        "grading": encode_grading(s.grading),
        "unit": s.grading.unit,
        "prec": [None if p is None else fmt_rational(Fraction(p, s.grading.unit)) for p in s.prec],
        "rows": [{"monomial": m, "coefficient": c} for m, c in series_rows(s)],
        "coefficients": [{"key": list(k), "value": encode_coeff(s.coeffs[k])} for k in keys],
    }


def series_from_dict(d: dict) -> Series:
    if d.get("schema") != SERIES_SCHEMA:
        raise ValueError(f"unsupported schema {d.get('schema')!r}")
    g = decode_grading(d["grading"])
    prec = tuple(None if p is None else g.scaled(Fraction(p)) for p in d["prec"])
    coeffs = {tuple(e["key"]): decode_coeff(e["value"]) for e in d["coefficients"]}
    return Series(g, prec, coeffs)


def emit_series(s: Series, fmt: str = "json", meta: dict | None = None) -> str:
    if fmt == "json":
        return json.dumps(series_to_dict(s, meta), indent=2, sort_keys=True) + "\n"
    rows = series_rows(s)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["monomial", "coefficient"])
        w.writerows(rows)
        return buf.getvalue()
    if fmt == "plain":
        width = max([len("monomial")] + [len(m) for m, _ in rows])
        lines = [f"{'monomial'.ljust(width)}  coefficient"]
        lines += [f"{m.ljust(width)}  {c}" for m, c in rows]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(rep: Report, fmt: str = "json", orders: dict | None = None) -> str:
    """Render a report; ``orders`` records the truncation orders requested on the command line."""
    d = rep.to_dict()
    if orders is not None:
        d["orders"] = dict(orders)
    if fmt == "json":
        return json.dumps(d, indent=2, sort_keys=True, ensure_ascii=False, default=str) + "\n"
    flat = [("check", d["check"]), ("status", d["status"]), ("mode", d["mode"]),
            ("elapsed", d["elapsed"])]
    flat += [(f"order.{k}", v) for k, v in sorted((orders or {}).items())]
    flat += [(f"param.{k}", v) for k, v in sorted(d["params"].items())]
    flat += [(f"witness.{k}", v) for k, v in sorted((d["witness"] or {}).items())]
    flat += [(f"detail.{i}", v) for i, v in enumerate(d["details"])]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["field", "value"])
        w.writerows((k, str(v)) for k, v in flat)
        return buf.getvalue()
    if fmt == "plain":
        width = max(len(k) for k, _ in flat)
        return "\n".join(f"{k.ljust(width)}  {v}" for k, v in flat) + "\n"
    raise ValueError(f"unknown format {fmt!r}")
