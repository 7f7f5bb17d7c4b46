"""Specialization and substitution taking the two X1 limits to normalized localization series.

Each summand of a limit is held as a :class:`ProductForm`: a rational function
times finitely many double products ``prod_{i,j>=0} (1 - L q^i t^j)^e``.
Substitutions act on both parts, so factors can be cancelled structurally
before anything is expanded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import TABLE, Grading, LaurentPoly, RationalFunction, Series
from .hilb import inv_one_minus, localization_series
from .partitions import EMPTY, Partition, partitions_of
from .report import Report, compare_series, timed
from .toric import HALF, Curly, _hooks, x1_summand
from .vertex import tq, tq_mono

PIPE = Grading(TABLE, {"u": {"up": 1}, "v": {"vp": 1}, "m": {"m1p": 1, "m2p": 1, "m3p": 1}})

SPECIALIZE_M4 = {"m4": (-1, TABLE.exps(q=HALF, t=-HALF))}
PRIMED = {
    "m1": (-1, TABLE.exps(m1p=1, t=HALF, q=-HALF)),
    "m2": (-1, TABLE.exps(m2p=1, t=HALF, q=-HALF)),
    "m3": (-1, TABLE.exps(m3p=1, t=HALF, q=-HALF)),
    "u": (1, TABLE.exps(up=1, q=1, t=-1)),
    "v": (1, TABLE.exps(vp=1, q=1, t=-1)),
}


def mono(coeff=1, **powers) -> LaurentPoly:
    return LaurentPoly.mono(TABLE.exps(powers), coeff)


def _key(m: LaurentPoly) -> tuple:
    if not m.is_monomial():
        raise ValueError("double product parameter must be a monomial")
    (e, c), = m.terms()
    return (c, e)


@dataclass
class ProductForm:
    finite: RationalFunction
    inf: dict = field(default_factory=dict)   # (coeff, exps) of L -> exponent

    @classmethod
    def one(cls) -> "ProductForm":
        return cls(RationalFunction.make(1))

    def __mul__(self, other: "ProductForm") -> "ProductForm":
        inf = dict(self.inf)
        for k, e in other.inf.items():
            inf[k] = inf.get(k, 0) + e
            if not inf[k]:
                del inf[k]
        return ProductForm(self.finite * other.finite, inf)

    def inverse(self) -> "ProductForm":
        return ProductForm(self.finite.reciprocal(), {k: -e for k, e in self.inf.items()})

    def __truediv__(self, other: "ProductForm") -> "ProductForm":
        return self * other.inverse()

    def substitute(self, mapping: dict) -> "ProductForm":
        inf: dict = {}
        for (c, e), k in self.inf.items():
            key = _key(LaurentPoly.mono(e, c).substitute(mapping))
            inf[key] = inf.get(key, 0) + k
        return ProductForm(self.finite.substitute(mapping), {k: e for k, e in inf.items() if e})

    def divides(self, other: "ProductForm") -> bool:
        """Every double product of ``self`` occurs in ``other`` to at least the same power."""
        return all(0 < e <= other.inf.get(k, 0) for k, e in self.inf.items())

    def same_products(self, other: "ProductForm") -> bool:
        return self.inf == other.inf

    def to_series(self, grading: Grading, prec) -> Series:
        s = Series.from_rational(self.finite, grading, prec)
        if not self.inf:
            return s
        log = Series.zero(grading, prec)
        for (c, e), k in self.inf.items():
            L = LaurentPoly.mono(e, c)
            deg = grading.grade(e)
            if any(d < 0 for d in deg) or not any(deg):
                raise ValueError(f"double product with parameter {L} cannot be expanded")
            nmax = min(p // d for d, p in zip(deg, log.prec) if d > 0)
            for n in range(1, nmax + 1):
                term = RationalFunction.make(L ** n, [tq(n, 0), tq(0, n)]) * Fraction(-k, n)
                log = log + Series.from_rational(term, grading, prec)
        return s * log.exp()


def curly_form(c: Curly) -> ProductForm:
    """Finite-times-double-product form of a curly factor with at most one shifted alphabet."""
    A, B = c.A, c.B
    if A.shift and B.shift:
        raise ValueError("both alphabets shifted")
    if B.shift:
        A, B = B, A
    m = c.m * A.prefactor() * B.prefactor()
    X, Y = A.base, B.base
    finite = RationalFunction.make(1)
    for b1, b2 in A.shift.boxes():
        M = m * LaurentPoly.mono(TABLE.exps({X: b1 + HALF, Y: -b2 - HALF}))
        if c.power > 0:
            finite = finite * RationalFunction.from_poly(LaurentPoly.const(1) + M)
        else:
            finite = finite * inv_one_minus(-M)
    inf = {_key(-m * tq_mono(HALF, HALF)): c.power}
    out = ProductForm(finite, inf)
    if c.power not in (1, -1):
        raise ValueError("curly power must be +1 or -1")
    return out


def summand_form(regime: str, p1: Partition, p2: Partition) -> ProductForm:
    pre, curlies = x1_summand(regime, p1, p2)
    out = ProductForm(pre)
    for c in curlies:
        out = out * curly_form(c)
    return out


COMMON = {
    _key(mono(q=1)): 1,
    _key(mono(m1p=1, t=1)): 1,
    _key(mono(m2p=1, t=1)): 1,
    _key(mono(m3p=1, t=1)): 1,
}


def _box_mono(coeff, b1, b2, **extra) -> LaurentPoly:
    """``coeff * extra * q^b1 t^-b2``."""
    return mono(coeff, q=b1, t=-b2, **extra)


def listed_sub1(regime: str, lam: Partition) -> ProductForm:
    """The substituted summand as written out by hand (``mu2`` for A, ``lambda1`` for B)."""
    n = lam.size
    if regime == "A":
        x, y, pair, single = "vp", "up", ("m2p", "m3p"), "m1p"
        inf = {_key(mono(up=1, m1p=1, q=1)): 1, _key(mono(up=1, m2p=1, q=1)): 1,
               _key(mono(up=1, q=1)): -1, _key(mono(up=1, m1p=1, m2p=1, q=1)): -1}
    else:
        x, y, pair, single = "up", "vp", ("m1p", "m2p"), "m3p"
        inf = {_key(mono(vp=1, m2p=1, q=1)): 1, _key(mono(vp=1, m3p=1, q=1)): 1,
               _key(mono(vp=1, q=1)): -1, _key(mono(vp=1, m2p=1, m3p=1, q=1)): -1}
    inf.update(COMMON)
    num = mono(1, **{x: n, "q": n, "t": lam.norm2 - n})
    den = list(_hooks(lam, False))
    f = RationalFunction.make(num, den)
    for b1, b2 in lam.boxes():
        for name in pair:
            f = f * (LaurentPoly.const(1) - _box_mono(1, b1, b2, **{name: 1}))
        f = f * (LaurentPoly.const(1) - _box_mono(1, -b1, -b2, **{y: 1, single: 1}))
        f = f * RationalFunction.make(1, [TABLE.exps({y: 1, "q": -b1, "t": b2})])
    return ProductForm(f, inf)


def listed_int(regime: str, lam: Partition) -> ProductForm:
    """Summand of the normalized expression after the swap identity."""
    if regime == "A":
        x, y, pair, single = "vp", "up", ("m2p", "m3p"), "m1p"
    else:
        x, y, pair, single = "up", "vp", ("m1p", "m2p"), "m3p"
    a, b = pair
    inf = {_key(mono(**{x: 1}, q=1)): 1, _key(mono(**{x: 1, a: 1, b: 1}, q=1)): 1,
           _key(mono(**{x: 1, a: 1}, q=1)): -1, _key(mono(**{x: 1, b: 1}, q=1)): -1}
    f = RationalFunction.make(mono(1, **{x: lam.size}))
    for (b1, b2), arm, leg in lam.arm_legs():
        for name in pair:
            f = f * (LaurentPoly.const(1) - _box_mono(1, b1, b2, **{name: 1}))
        f = f * (LaurentPoly.const(1) - _box_mono(1, -b1, -b2, **{y: 1, single: 1}))
        f = f * RationalFunction.make(1, [tq(arm + 1, leg), tq(-arm, -leg - 1)])
        # 1/(y - w) = -w^-1 / (1 - y w^-1),  w = q^b1 t^-b2
        f = f * RationalFunction.make(-_box_mono(1, -b1, -b2), [TABLE.exps({y: 1, "q": -b1, "t": b2})])
    return ProductForm(f, inf)


def localization_ratio(order: tuple, z: str, m: tuple, y: str) -> Series:
    """``F(z, m1, m2, m3, y) / F(z, m1, m2, m3, 0)`` at ``t1 = q, t2 = 1/t`` in the primed grading."""
    w1, w2 = TABLE.exps(q=1), TABLE.exps(t=-1)
    var = LaurentPoly.var
    args = {"z": var(z), "m1": var(m[0]), "m2": var(m[1]), "m3": var(m[2])}
    nz = order[0] if z == "up" else order[1]
    full = localization_series(dict(args, y=var(y)), PIPE, order, nz, w1, w2)
    base = localization_series(dict(args, y=None), PIPE, order, nz, w1, w2)
    return full / base


def run_pipeline(order: tuple = (2, 2, 2)) -> Report:
    """Specialize, substitute, cancel and compare the two normalized series."""
    rep = Report("pipeline", True, {"order": list(order)}, mode="exact rational coefficients")
    with timed(rep):
        nu, nv, _ = order
        # 1. the specialization kills every summand with a nonempty first partition
        m4 = LaurentPoly.var("m4")
        for regime in ("A", "B"):
            for n in range(1, max(nu, nv) + 1):
                for lam in partitions_of(n):
                    p1, p2 = (lam, EMPTY) if regime == "A" else (EMPTY, lam)
                    _, curlies = x1_summand(regime, p1, p2)
                    edge, = [c for c in curlies if c.m == m4]
                    if not curly_form(edge).finite.substitute(SPECIALIZE_M4).is_zero():
                        return rep.fail(where="vanishing", regime=regime, partition=lam)
        rep.note("specialization removes nonempty partitions on the m4 edge")

        reduced = {}
        for regime, bound in (("A", nv), ("B", nu)):
            total, prods = Series.zero(PIPE, order), None
            for n in range(bound + 1):
                for lam in partitions_of(n):
                    p1, p2 = (EMPTY, lam) if regime == "A" else (lam, EMPTY)
                    form = summand_form(regime, p1, p2).substitute(SPECIALIZE_M4).substitute(PRIMED)
                    ref = listed_sub1(regime, lam)
                    if not (form.same_products(ref) and form.finite == ref.finite):
                        return rep.fail(where="substituted summand", regime=regime, partition=lam)
                    common = ProductForm(RationalFunction.make(1), COMMON)
                    if not common.divides(form):
                        return rep.fail(where="common factor", regime=regime, partition=lam)
                    form = form / common
                    normalized = listed_int(regime, lam)
                    if not normalized.finite == form.finite:
                        return rep.fail(where="swap identity", regime=regime, partition=lam)
                    total = total + Series.from_rational(form.finite, PIPE, order)
                    prods = form.inf
            reduced[regime] = (total, prods)
        rep.note("substituted summands agree with the listed forms; common factor cancelled")

        (sum_a, p_u), (sum_b, p_v) = reduced["A"], reduced["B"]
        pu = ProductForm(RationalFunction.make(1), p_u)
        pv = ProductForm(RationalFunction.make(1), p_v)
        if not (listed_int("A", EMPTY).same_products(pv.inverse())
                and listed_int("B", EMPTY).same_products(pu.inverse())):
            return rep.fail(where="redistribution of double products")
        int1 = sum_a * pv.inverse().to_series(PIPE, order)
        int2 = sum_b * pu.inverse().to_series(PIPE, order)
        if not compare_series(rep, int1, int2, "int1 vs int2"):
            return rep
        rep.note(f"normalized series agree on {len(int1.coeffs)} graded coefficients")

        f_b = localization_ratio(order, "up", ("m1p", "m2p", "m3p"), "vp")
        if not compare_series(rep, int2, f_b, "int2 vs F(u',m1',m2',m3',v')/F(..,0)"):
            return rep
        f_a = localization_ratio(order, "vp", ("m2p", "m3p", "m1p"), "up")
        compare_series(rep, int1, f_a, "int1 vs F(v',m2',m3',m1',u')/F(..,0)")
        if rep.passed:
            rep.note("both sides match the localization series at t1 = q, t2 = 1/t")
    return rep
