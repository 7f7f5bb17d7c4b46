"""Torus characters, slopes, index, rigidity limits and the plethystic exponential.

A character is a :class:`LaurentPoly` with integer coefficients in ``t1, t2, t3``
(on the half lattice, so ``kappa^(1/2) = (t1 t2 t3)^(1/2)`` is representable).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .exact import (TABLE, LaurentPoly, RationalFunction, Series, VarTable,
                    vneg, vscale)

AXES = ("t1", "t2", "t3")
_IDX = tuple(TABLE.index[a] for a in AXES)

ATTRACTING, REPELLING, FIXED = 1, -1, 0


def tmono(a=0, b=0, c=0) -> tuple:
    """Exponent vector of ``t1^a t2^b t3^c``."""
    return TABLE.exps(t1=a, t2=b, t3=c)


KAPPA = tmono(1, 1, 1)
KAPPA_HALF = tmono(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))


def character(terms) -> LaurentPoly:
    """Build a character from ``{(a, b, c): coeff}`` or an iterable of exponent triples."""
    if isinstance(terms, dict):
        items = terms.items()
    else:
        items = ((e, 1) for e in terms)
    out: dict = {}
    for e, c in items:
        key = tmono(*e)
        out[key] = out.get(key, 0) + c
    return LaurentPoly.from_terms(TABLE, out)


def t_exponents(w: tuple) -> tuple:
    """Doubled exponents of ``t1, t2, t3`` in a lattice vector."""
    return tuple(w[i] for i in _IDX)


@dataclass(frozen=True)
class Explicit:
    """Integer slope ``(r1, r2, r3)`` with ``r1 + r2 + r3 = 0``."""
    r: tuple

    def __post_init__(self):
        r = tuple(int(x) for x in self.r)
        if len(r) != 3 or sum(r):
            raise ValueError(f"slope must have three entries summing to zero: {self.r}")
        object.__setattr__(self, "r", r)

    def degree(self, w: tuple):
        e = t_exponents(w)
        return (sum(a * b for a, b in zip(self.r, e)),)

    def negate(self) -> "Explicit":
        return Explicit(tuple(-x for x in self.r))

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.r)) + ")"


@dataclass(frozen=True)
class Preferred:
    """Regime with ``|r_i|`` dominant of sign ``s_i`` and ``r_k`` small of sign ``s_k``.

    The third exponent is ``r_j = -(r_i + r_k)``.  Axes are 1-based.
    """
    primary: int
    primary_sign: int
    tertiary: int
    tertiary_sign: int

    def __post_init__(self):
        if {self.primary, self.tertiary} - {1, 2, 3} or self.primary == self.tertiary:
            raise ValueError("preferred regime needs two distinct axes in 1..3")
        if self.primary_sign not in (1, -1) or self.tertiary_sign not in (1, -1):
            raise ValueError("signs must be +1 or -1")

    @property
    def remaining(self) -> int:
        return 6 - self.primary - self.tertiary

    def degree(self, w: tuple):
        e = t_exponents(w)
        i, j, k = self.primary - 1, self.remaining - 1, self.tertiary - 1
        return (self.primary_sign * (e[i] - e[j]), self.tertiary_sign * (e[k] - e[j]))

    def negate(self) -> "Preferred":
        return Preferred(self.primary, -self.primary_sign, self.tertiary, -self.tertiary_sign)

    def signs(self) -> tuple:
        """Sign of each ``r_a`` (the remaining axis has the sign opposite the primary)."""
        s = [0, 0, 0]
        s[self.primary - 1] = self.primary_sign
        s[self.tertiary - 1] = self.tertiary_sign
        s[self.remaining - 1] = -self.primary_sign
        return tuple(s)

    @classmethod
    def parse(cls, text: str) -> "Preferred":
        """Parse ``"r1>>r2>0>>r3"`` (small positive) or ``"r1>>0>r2>>r3"`` (small negative)."""
        s = text.replace(" ", "").replace("≫", ">>")
        m = re.fullmatch(r"[rs](\d)>>[rs](\d)>0>>[rs](\d)", s)
        if m:
            a, b, c = map(int, m.groups())
            return cls(a, 1, b, 1)._check(c)
        m = re.fullmatch(r"[rs](\d)>>0>[rs](\d)>>[rs](\d)", s)
        if m:
            a, b, c = map(int, m.groups())
            return cls(c, -1, b, -1)._check(a)
        raise ValueError(f"unrecognised regime {text!r}")

    def _check(self, other: int) -> "Preferred":
        if self.remaining != other:
            raise ValueError("regime must mention each axis once")
        return self

    def __str__(self) -> str:
        i, k, j = self.primary, self.tertiary, self.remaining
        if self.primary_sign > 0 and self.tertiary_sign > 0:
            return f"r{i}>>r{k}>0>>r{j}"
        if self.primary_sign < 0 and self.tertiary_sign < 0:
            return f"r{j}>>0>r{k}>>r{i}"
        if self.primary_sign > 0:
            return f"r{i}>>0>r{k}, r{j}~-r{i}"
        return f"r{j}~-r{i}>>r{k}>0, r{i}<<0"


SlopeRegime = Union[Explicit, Preferred]


def _lex_sign(deg: tuple) -> int:
    for x in deg:
        if x:
            return 1 if x > 0 else -1
    return 0


def slope_sign(w: tuple, sigma: SlopeRegime) -> int:
    """``ATTRACTING`` (+1), ``REPELLING`` (-1) or ``FIXED`` (0) for the weight ``x^w``."""
    return _lex_sign(sigma.degree(w))


def dual(v: LaurentPoly) -> LaurentPoly:
    return v.dual()


def serre_check(v: LaurentPoly) -> bool:
    return v == -(v.dual() * LaurentPoly.mono(KAPPA, 1, v.table))


class GenericityError(ValueError):
    pass


def index(v: LaurentPoly, sigma: SlopeRegime) -> int:
    """Sum of coefficients over attracting weights."""
    total = 0
    for w, c in v.terms():
        s = slope_sign(w, sigma)
        if s == FIXED:
            raise GenericityError(f"weight {TABLE.fmt_monomial(w)} is fixed by {sigma}")
        if s == ATTRACTING:
            total += c
    if Fraction(total).denominator != 1:
        raise ValueError("character with non-integer coefficients")
    return int(total)


def minus_kappa_half_power(n: int, table: VarTable = TABLE) -> LaurentPoly:
    """``(-kappa^(1/2))^n`` in the ``kappa`` variable."""
    return LaurentPoly.mono(table.exps(kappa=Fraction(n, 2)), (-1) ** (n % 2), table)


def rigid_limit(v: LaurentPoly, sigma: SlopeRegime) -> LaurentPoly:
    return minus_kappa_half_power(index(v, sigma), v.table)


def kappa_to_t(p: LaurentPoly) -> LaurentPoly:
    """Rewrite the ``kappa`` variable as ``t1 t2 t3``."""
    return p.substitute({"kappa": (1, KAPPA_HALF)})


def _weights(v: LaurentPoly):
    for w, c in v.terms():
        if c.denominator != 1:
            raise ValueError("character with non-integer coefficients")
        yield w, int(c)


def ahat(v: LaurentPoly) -> RationalFunction:
    """``prod (v^(1/2) - v^(-1/2)) / prod (u^(1/2) - u^(-1/2))`` for ``V = sum u - sum v``.

    Uses ``w^(1/2) - w^(-1/2) = -w^(-1/2) (1 - w)``.
    """
    table = v.table
    num = LaurentPoly.const(1, table)
    den: list = []
    for w, c in _weights(v):
        if not any(w):
            raise ZeroDivisionError("trivial weight in character")
        if any(x % 2 for x in w):
            raise ValueError("weight without a square root on the lattice")
        half = tuple(x // 2 for x in w)
        if c > 0:
            num = num * LaurentPoly.mono(vscale(half, c), (-1) ** c, table)
            den.extend([w] * c)
        else:
            k = -c
            num = num * (LaurentPoly.mono(vneg(half), -1, table) * LaurentPoly.one_minus(w, table)) ** k
    return RationalFunction.make(num, den, table).reduce()


class DivergenceError(ArithmeticError):
    pass


def balanced_limit(f, sigma: SlopeRegime) -> RationalFunction:
    """Limit of ``f`` along the slope: grade by ``sigma`` and keep the degree-zero part.

    Attracting denominator binomials tend to 1; repelling ones are first rewritten
    as ``-x^(-w) / (1 - x^(-w))``.  Fixed binomials are kept.
    """
    if isinstance(f, LaurentPoly):
        f = RationalFunction.from_poly(f)
    elif not isinstance(f, RationalFunction):
        return f
    table = f.table
    num = f.num
    kept: list = []
    for w, k in f.den.items():
        s = slope_sign(w, sigma)
        if s == FIXED:
            kept.extend([w] * k)
        elif s == REPELLING:
            num = num * LaurentPoly.mono(vscale(vneg(w), k), (-1) ** k, table)
    parts = num.split_by(lambda e: _lex_sign(sigma.degree(e)))
    if parts.get(-1):
        raise DivergenceError(f"function diverges along {sigma}")
    zero_part = parts.get(0, LaurentPoly.zero(table))
    return RationalFunction.make(zero_part, kept, table).reduce()


def pleth_sym_finite(v: LaurentPoly) -> RationalFunction:
    """``prod (1 - v_j) / prod (1 - u_i)`` for ``V = sum u_i - sum v_j``."""
    table = v.table
    num = LaurentPoly.const(1, table)
    den = []
    for w, c in _weights(v):
        if not any(w):
            if c > 0:
                raise ZeroDivisionError("weight 1 among the positive terms")
            return RationalFunction.from_poly(LaurentPoly.zero(table))
        if c > 0:
            den.extend([w] * c)
        else:
            num = num * LaurentPoly.one_minus(w, table) ** (-c)
    return RationalFunction.make(num, den, table).reduce()


def pleth_sym_series(arg: Series) -> Series:
    """``exp(sum_n psi^n(arg) / n)`` with ``psi^n`` raising every variable to the n-th power."""
    zero = (0,) * len(arg.prec)
    if arg.coeffs.get(zero):
        raise ValueError("argument has a constant term")
    val = arg.valuation()
    nmax = 0
    for v, p in zip(val, arg.prec):
        if v is not None and v > 0 and p is not None:
            n = p // v
            nmax = n if nmax == 0 else min(nmax, n)
    if arg.is_zero():
        return Series(arg.grading, arg.prec, {zero: Fraction(1)})
    if nmax == 0:
        raise ArithmeticError("argument is not topologically nilpotent")
    total = arg
    for n in range(2, nmax + 1):
        total = total + arg.adams(n).scale(Fraction(1, n))
    return total.exp()
