"""Hypothesis strategies shared across the suite."""

from fractions import Fraction

from hypothesis import strategies as st

from vertexlab.exact import TABLE, LaurentPoly
from vertexlab.partitions import Partition

SMALL_VARS = ("t1", "t2", "m1", "m2")


@st.composite
def partitions(draw, max_size=6):
    n = draw(st.integers(0, max_size))
    parts = []
    cap = n
    while n:
        p = draw(st.integers(1, min(n, cap)))
        parts.append(p)
        n -= p
        cap = p
    return Partition(tuple(parts))


@st.composite
def monomials(draw, names=SMALL_VARS, lo=-2, hi=2):
    return TABLE.exps({v: draw(st.integers(lo, hi)) for v in names})


@st.composite
def laurent_polys(draw, names=SMALL_VARS, max_terms=4):
    terms = draw(st.lists(
        st.tuples(monomials(names), st.fractions(min_value=-5, max_value=5, max_denominator=4)),
        max_size=max_terms))
    acc = {}
    for e, c in terms:
        acc[e] = acc.get(e, Fraction(0)) + c
    return LaurentPoly.from_terms(TABLE, acc)


@st.composite
def binomial_weights(draw, names=("t1", "t2")):
    """A nonzero monomial usable as a denominator weight."""
    e = draw(monomials(names, -2, 2))
    if not any(e):
        e = TABLE.exps(t1=1)
    return e
