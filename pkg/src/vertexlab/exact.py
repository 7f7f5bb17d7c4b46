"""Exact Laurent polynomials, rational functions with binomial denominators
and graded truncated series.

All objects live over a :class:`VarTable`.  Variables flagged as *half* are
stored through their square roots, so ``t1^(1/2)`` has lattice exponent 1 and
``t1`` has lattice exponent 2.  Polynomial arithmetic is delegated to FLINT
multivariate polynomials; the Laurent part is an explicit exponent shift.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Iterator, Mapping, Union

import flint
from flint.utils.flint_exceptions import DomainError

Scalar = Union[int, Fraction]


class VarTable:
    """Ordered variable names with a half-lattice flag and a counting flag."""

    def __init__(self, names: Iterable[str], half: Iterable[str] = (),
                 counting: Iterable[str] = ()):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.index = {n: i for i, n in enumerate(self.names)}
        self.half = frozenset(half)
        self.counting = frozenset(counting)
        self.scale = tuple(2 if n in self.half else 1 for n in self.names)
        self.nvars = len(self.names)
        self.zero = (0,) * self.nvars
        self.ctx = flint.fmpq_mpoly_ctx.get(self.names, "lex")

    def __repr__(self) -> str:
        return f"VarTable({self.names!r})"

    def exps(self, powers: Mapping[str, Scalar] | None = None, **kw: Scalar) -> tuple:
        """Lattice exponent vector of the monomial with the given rational powers."""
        vec = [0] * self.nvars
        items = dict(powers or {}, **kw)
        for name, p in items.items():
            i = self.index[name]
            e = Fraction(p) * self.scale[i]
            if e.denominator != 1:
                raise ValueError(f"{name}^{p} is not on the lattice")
            vec[i] += int(e)
        return tuple(vec)

    def powers(self, exps: tuple) -> dict[str, Fraction]:
        return {n: Fraction(e, s) for n, e, s in zip(self.names, exps, self.scale) if e}

    def fmt_monomial(self, exps: tuple) -> str:
        parts = []
        for n, e, s in zip(self.names, exps, self.scale):
            if not e:
                continue
            p = Fraction(e, s)
            if p == 1:
                parts.append(n)
            elif p.denominator == 1:
                parts.append(f"{n}^{p.numerator}")
            else:
                parts.append(f"{n}^({p})")
        return "*".join(parts) if parts else "1"

    def degree(self, exps: tuple) -> Fraction:
        return sum((Fraction(e, s) for e, s in zip(exps, self.scale)), Fraction(0))


TABLE = VarTable(
    ["t1", "t2", "t3", "kappa", "q", "t", "Q", "z", "y", "u", "v",
     "m1", "m2", "m3", "m4", "m", "up", "vp", "m1p", "m2p", "m3p", "s"],
    half=["t1", "t2", "t3", "kappa", "q", "t"],
    counting=["Q", "z", "y", "u", "v", "m1", "m2", "m3", "m4", "m",
              "up", "vp", "m1p", "m2p", "m3p"],
)


def _to_fmpq(c: Scalar) -> flint.fmpq:
    c = Fraction(c)
    return flint.fmpq(c.numerator, c.denominator)


def _from_fmpq(c) -> Fraction:
    return Fraction(int(c.p), int(c.q))


def vadd(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: tuple) -> tuple:
    return tuple(-x for x in a)


def vscale(a: tuple, n: int) -> tuple:
    return tuple(n * x for x in a)


def lex_positive(w: tuple) -> bool:
    for x in w:
        if x:
            return x > 0
    return False


class LaurentPoly:
    """Finite Laurent polynomial ``poly * x^shift`` with rational coefficients.

    The FLINT polynomial carries no monomial content, which makes the
    representation canonical.
    """

    __slots__ = ("table", "poly", "shift")

    def __init__(self, table: VarTable, poly, shift: tuple):
        self.table = table
        self.poly = poly
        self.shift = shift

    # construction ------------------------------------------------------
    @classmethod
    def _make(cls, table: VarTable, poly, shift: tuple) -> "LaurentPoly":
        if poly.is_zero():
            return cls(table, poly, table.zero)
        e = tuple(int(x) for x in poly.term_content().monoms()[0])
        if any(e):
            poly = poly / table.ctx.term(exp_vec=e)
            shift = vadd(shift, e)
        return cls(table, poly, shift)

    @classmethod
    def from_terms(cls, table: VarTable, terms: Mapping[tuple, Scalar] | Iterable) -> "LaurentPoly":
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple, Fraction] = {}
        for e, c in items:
            if c:
                acc[e] = acc.get(e, 0) + c
        acc = {e: c for e, c in acc.items() if c}
        if not acc:
            return cls.zero(table)
        low = tuple(min(col) for col in zip(*acc))
        d = {vsub(e, low): _to_fmpq(c) for e, c in acc.items()}
        return cls._make(table, table.ctx.from_dict(d), low)

    @classmethod
    def zero(cls, table: VarTable = TABLE) -> "LaurentPoly":
        return cls(table, table.ctx.from_dict({}), table.zero)

    @classmethod
    def const(cls, c: Scalar, table: VarTable = TABLE) -> "LaurentPoly":
        return cls(table, table.ctx.constant(_to_fmpq(c)), table.zero)

    @classmethod
    def mono(cls, exps: tuple, coeff: Scalar = 1, table: VarTable = TABLE) -> "LaurentPoly":
        if not coeff:
            return cls.zero(table)
        return cls(table, table.ctx.constant(_to_fmpq(coeff)), tuple(exps))

    @classmethod
    def var(cls, name: str, power: Scalar = 1, table: VarTable = TABLE) -> "LaurentPoly":
        return cls.mono(table.exps({name: power}), 1, table)

    @classmethod
    def one_minus(cls, w: tuple, table: VarTable = TABLE) -> "LaurentPoly":
        """The binomial ``1 - x^w``."""
        return cls.from_terms(table, {table.zero: 1, tuple(w): -1})

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.table is not self.table:
                raise ValueError("mixed variable tables")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other, self.table)
        return NotImplemented

    # inspection ----------------------------------------------------------
    def terms(self) -> Iterator[tuple[tuple, Fraction]]:
        sh = self.shift
        for m, c in zip(self.poly.monoms(), self.poly.coeffs()):
            yield tuple(int(a) + b for a, b in zip(m, sh)), _from_fmpq(c)

    def to_dict(self) -> dict[tuple, Fraction]:
        return dict(self.terms())

    def __len__(self) -> int:
        return len(self.poly)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def __bool__(self) -> bool:
        return not self.poly.is_zero()

    def is_monomial(self) -> bool:
        return len(self.poly) == 1

    def constant_term(self) -> Fraction:
        return self.to_dict().get(self.table.zero, Fraction(0))

    def is_constant(self) -> bool:
        return self.is_zero() or (self.is_monomial() and not any(self.shift))

    def as_scalar(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.constant_term()

    def coefficient(self, exps: tuple) -> Fraction:
        return self.to_dict().get(tuple(exps), Fraction(0))

    # arithmetic ----------------------------------------------------------
    def _aligned(self, other: "LaurentPoly"):
        if self.shift == other.shift:
            return self.poly, other.poly, self.shift
        low = tuple(min(a, b) for a, b in zip(self.shift, other.shift))
        ctx = self.table.ctx
        pa = self.poly if self.shift == low else self.poly * ctx.term(exp_vec=vsub(self.shift, low))
        pb = other.poly if other.shift == low else other.poly * ctx.term(exp_vec=vsub(other.shift, low))
        return pa, pb, low

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        pa, pb, low = self._aligned(other)
        return LaurentPoly._make(self.table, pa + pb, low)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.table, -self.poly, self.shift)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly.zero(self.table)
            return LaurentPoly(self.table, self.poly * _to_fmpq(other), self.shift)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero(self.table)
        return LaurentPoly(self.table, self.poly * other.poly, vadd(self.shift, other.shift))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        q = self.divexact(other)
        if q is None:
            raise ArithmeticError("inexact Laurent division")
        return q

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly | None":
        """Exact quotient, or ``None`` when ``other`` does not divide ``self``."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return self
        try:
            q = self.poly / other.poly
        except DomainError:
            return None
        return LaurentPoly._make(self.table, q, vsub(self.shift, other.shift))

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial():
                raise ArithmeticError("negative power of a non-monomial")
            (e, c), = self.terms()
            return LaurentPoly.mono(vscale(e, n), Fraction(1) / c ** (-n), self.table)
        return LaurentPoly(self.table, self.poly ** n, vscale(self.shift, n))

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self) -> int:
        return hash((self.shift, tuple(sorted(self.to_dict().items()))))

    # transformations -------------------------------------------------------
    def adams(self, n: int) -> "LaurentPoly":
        """Raise every variable to the ``n``-th power."""
        if n == 1 or self.is_zero():
            return self
        return LaurentPoly(self.table, self.poly.inflate([n] * self.table.nvars), vscale(self.shift, n))

    def dual(self) -> "LaurentPoly":
        """Invert every variable."""
        return LaurentPoly.from_terms(self.table, [(vneg(e), c) for e, c in self.terms()])

    def map_exponents(self, fn) -> "LaurentPoly":
        """Apply ``fn(exps) -> (coeff_factor, new_exps)`` termwise."""
        out = []
        for e, c in self.terms():
            f, e2 = fn(e)
            out.append((e2, c * f))
        return LaurentPoly.from_terms(self.table, out)

    def substitute(self, mapping: Mapping[str, tuple]) -> "LaurentPoly":
        """Substitute variables by signed monomials ``name -> (sign, exps)``.

        Exponents are in lattice units of the source variable; a half
        variable mapped to a monomial ``m`` sends its square root to ``m``.
        """
        return self.map_exponents(_substitution_fn(self.table, mapping))

    def split_by(self, key) -> dict:
        """Group terms by ``key(exps)``; returns a dict of LaurentPolys."""
        buckets: dict = {}
        for e, c in self.terms():
            buckets.setdefault(key(e), []).append((e, c))
        return {k: LaurentPoly.from_terms(self.table, v) for k, v in buckets.items()}

    def sorted_lex(self) -> list[tuple[tuple, Fraction]]:
        """Terms in increasing lexicographic order of the exponent vector."""
        return sorted(self.terms())

    def sorted_terms(self) -> list[tuple[tuple, Fraction]]:
        t = self.table
        return sorted(self.terms(), key=lambda ec: (t.degree(ec[0]), ec[0]))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = []
        for e, c in self.sorted_terms():
            m = self.table.fmt_monomial(e)
            if m == "1":
                s = fmt_rational(c)
            elif c == 1:
                s = m
            elif c == -1:
                s = "-" + m
            else:
                s = f"{fmt_rational(c)}*{m}"
            out.append(s)
        text = " + ".join(out)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


def fmt_rational(c: Scalar) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _substitution_fn(table: VarTable, mapping: Mapping[str, tuple]):
    rows = []
    for name, (sign, img) in mapping.items():
        rows.append((table.index[name], Fraction(sign), tuple(img)))

    def fn(e):
        f = Fraction(1)
        out = list(e)
        for i, sign, img in rows:
            k = e[i]
            if not k:
                continue
            out[i] -= k
            out = [a + k * b for a, b in zip(out, img)]
            if sign != 1:
                f *= sign ** k
        return f, tuple(out)

    return fn


class RationalFunction:
    """``num / prod (1 - x^w)^mult`` with every ``w`` lexicographically positive."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: dict | None = None):
        self.num = num
        self.den = den or {}

    @property
    def table(self) -> VarTable:
        return self.num.table

    @classmethod
    def make(cls, num: LaurentPoly | Scalar, den: Iterable[tuple] = (),
             table: VarTable = TABLE) -> "RationalFunction":
        """Build ``num / prod (1 - x^w)`` for the listed ``w``, normalising signs."""
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.const(num, table)
        table = num.table
        d: dict[tuple, int] = {}
        for w in den:
            w = tuple(w)
            if not any(w):
                raise ZeroDivisionError("factor 1 - 1 in denominator")
            if not lex_positive(w):
                # 1/(1 - x^w) = -x^(-w) / (1 - x^(-w))
                num = num * LaurentPoly.mono(vneg(w), -1, table)
                w = vneg(w)
            d[w] = d.get(w, 0) + 1
        return cls(num, d)

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p, {})

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFunction(other, {})
        if isinstance(other, (int, Fraction)):
            return RationalFunction(LaurentPoly.const(other, self.table), {})
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def den_poly(self) -> LaurentPoly:
        out = LaurentPoly.const(1, self.table)
        for w, k in self.den.items():
            out = out * LaurentPoly.one_minus(w, self.table) ** k
        return out

    def _lift(self, target: dict) -> LaurentPoly:
        num = self.num
        for w, k in target.items():
            extra = k - self.den.get(w, 0)
            if extra:
                num = num * LaurentPoly.one_minus(w, self.table) ** extra
        return num

    @staticmethod
    def _lcm(a: dict, b: dict) -> dict:
        out = dict(a)
        for w, k in b.items():
            if k > out.get(w, 0):
                out[w] = k
        return out

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, dict(self.den))
        d = self._lcm(self.den, other.den)
        return RationalFunction(self._lift(d) + other._lift(d), d)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, dict(self.den))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, LaurentPoly)):
            if isinstance(other, LaurentPoly) and other.table is not self.table:
                raise ValueError("mixed variable tables")
            return RationalFunction(self.num * other, dict(self.den))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return RationalFunction(LaurentPoly.zero(self.table), {})
        d = dict(self.den)
        for w, k in other.den.items():
            d[w] = d.get(w, 0) + k
        return RationalFunction(self.num * other.num, d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        if isinstance(other, LaurentPoly) and other.is_monomial():
            return self * other ** -1
        if isinstance(other, RationalFunction):
            return self * other.reciprocal()
        return NotImplemented

    def reciprocal(self) -> "RationalFunction":
        """Reciprocal, defined when the numerator is a monomial times binomials ``1 - x^w``."""
        num = self.num
        if num.is_zero():
            raise ZeroDivisionError
        unit, factors = _binomial_factorization(num)
        out = RationalFunction.make(unit ** -1, factors, self.table)
        return out * self.den_poly()

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            return self.reciprocal() ** (-n)
        return RationalFunction(self.num ** n, {w: k * n for w, k in self.den.items()})

    def reduce(self) -> "RationalFunction":
        """Cancel denominator binomials that divide the numerator."""
        if self.num.is_zero():
            return RationalFunction(self.num, {})
        num = self.num
        d = {}
        for w in sorted(self.den):
            k = self.den[w]
            b = LaurentPoly.one_minus(w, self.table)
            while k:
                q = num.divexact(b)
                if q is None:
                    break
                num = q
                k -= 1
            if k:
                d[w] = k
        return RationalFunction(num, d)

    def canonical(self) -> "RationalFunction":
        """Reduced form, with ``1 - x^(kw)`` lowered to ``1 - x^w`` whenever possible."""
        f = self.reduce()
        changed = True
        while changed:
            changed = False
            for w in sorted(f.den):
                g = reduce(_gcd_int, w)
                for p in _prime_factors(g):
                    base = tuple(x // p for x in w)
                    # (1 - x^w) / (1 - x^base) = 1 + x^base + ... + x^((p-1) base)
                    cyc = LaurentPoly.from_terms(self.table, {vscale(base, i): 1 for i in range(p)})
                    qn = f.num.divexact(cyc)
                    if qn is not None:
                        d = dict(f.den)
                        d[w] -= 1
                        if not d[w]:
                            del d[w]
                        d[base] = d.get(base, 0) + 1
                        f = RationalFunction(qn, d).reduce()
                        changed = True
                        break
                if changed:
                    break
        return f

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return False
        if self.den == other.den:
            return self.num == other.num
        d = self._lcm(self.den, other.den)
        return self._lift(d) == other._lift(d)

    __hash__ = None

    def adams(self, n: int) -> "RationalFunction":
        return RationalFunction(self.num.adams(n), {vscale(w, n): k for w, k in self.den.items()})

    def dual(self) -> "RationalFunction":
        return RationalFunction.make(self.num.dual(), _expand_den(self.den, vneg), self.table)

    def substitute(self, mapping: Mapping[str, tuple]) -> "RationalFunction":
        """Signed monomial substitution; binomials ``1 + x^w`` are cleared as ``(1 - x^w)/(1 - x^2w)``."""
        fn = _substitution_fn(self.table, mapping)
        num = self.num.map_exponents(fn)
        den = []
        for w, k in self.den.items():
            sign, w2 = fn(w)
            for _ in range(k):
                if sign == 1:
                    den.append(w2)
                elif sign == -1:
                    num = num * LaurentPoly.one_minus(w2, self.table)
                    den.append(vscale(w2, 2))
                else:
                    raise ValueError("substitution must send monomials to signed monomials")
        return RationalFunction.make(num, den, self.table)

    def map_exponents_linear(self, fn) -> "RationalFunction":
        """Apply an exponent map ``fn(exps) -> (sign, exps)`` (a signed group homomorphism)."""
        num = self.num.map_exponents(fn)
        den = []
        for w, k in self.den.items():
            sign, w2 = fn(w)
            if sign != 1:
                raise ValueError("denominator weights must map without sign")
            den.extend([w2] * k)
        return RationalFunction.make(num, den, self.table)

    def den_list(self) -> list[tuple]:
        return _expand_den(self.den, lambda w: w)

    def __str__(self) -> str:
        f = self.canonical()
        if not f.den:
            return str(f.num)
        t = self.table
        parts = []
        for w in sorted(f.den, key=lambda w: (t.degree(w), w)):
            k = f.den[w]
            b = f"(1 - {t.fmt_monomial(w)})"
            parts.append(b if k == 1 else f"{b}^{k}")
        return f"({f.num}) / ({'*'.join(parts)})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


def _expand_den(den: dict, fn) -> list:
    out = []
    for w, k in den.items():
        out.extend([fn(w)] * k)
    return out


def _gcd_int(a: int, b: int) -> int:
    from math import gcd
    return gcd(a, b)


def _prime_factors(n: int) -> list[int]:
    n = abs(n)
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _binomial_factorization(p: LaurentPoly) -> tuple[LaurentPoly, list[tuple]]:
    """Write ``p`` as ``unit * prod (1 - x^w)`` with every ``w`` lex-positive.

    After dividing by the lex-smallest term, the next smallest exponent of a
    product of such binomials is the smallest ``w``; peel it off and repeat.
    """
    table = p.table
    terms = p.sorted_lex()
    e0, c0 = terms[0]
    unit = LaurentPoly.mono(e0, c0, table)
    rest = LaurentPoly.from_terms(table, {vsub(e, e0): c / c0 for e, c in terms})
    ws = []
    while len(rest) > 1:
        w = rest.sorted_lex()[1][0]
        q = rest.divexact(LaurentPoly.one_minus(w, table))
        if q is None:
            raise ArithmeticError("numerator is not a product of binomials")
        ws.append(w)
        rest = q
    return unit, ws


Coeff = Union[Fraction, int, LaurentPoly, RationalFunction]


def coeff_table(c) -> VarTable | None:
    return c.table if isinstance(c, (LaurentPoly, RationalFunction)) else None


class Grading:
    """Named linear functionals on lattice exponent vectors."""

    def __init__(self, table: VarTable, groups: Mapping[str, Mapping[str, Scalar]]):
        self.table = table
        self.names = tuple(groups)
        self.weights = []
        for g in self.names:
            w = [0] * table.nvars
            for v, x in groups[g].items():
                i = table.index[v]
                # weight per lattice unit, kept integral by doubling below
                w[i] = Fraction(x) / table.scale[i]
            self.weights.append(tuple(w))
        den = 1
        for w in self.weights:
            for x in w:
                den = lcm(den, Fraction(x).denominator)
        self.unit = den
        self.int_weights = tuple(tuple(int(x * den) for x in w) for w in self.weights)
        self._support = tuple(tuple(i for i, x in enumerate(w) if x) for w in self.int_weights)

    def grade(self, exps: tuple) -> tuple:
        """Degrees scaled by ``unit`` so that they are integers."""
        return tuple(sum(w[i] * exps[i] for i in sup)
                     for w, sup in zip(self.int_weights, self._support))

    def scaled(self, degree: Scalar) -> int | None:
        if degree is None:
            return None
        d = Fraction(degree) * self.unit
        from math import floor
        return floor(d)

    def __eq__(self, other) -> bool:
        return isinstance(other, Grading) and self.table is other.table and \
            self.names == other.names and self.int_weights == other.int_weights and self.unit == other.unit

    def __hash__(self) -> int:
        return hash((self.names, self.int_weights, self.unit))


INF = None


def _pmin(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _padd(a, b):
    return None if a is None or b is None else a + b


class Series:
    """Truncated series: homogeneous coefficients keyed by multidegree.

    ``prec[g]`` is the largest (scaled) degree in group ``g`` up to which the
    coefficients are exact; ``None`` means unbounded.  A coefficient is a
    scalar, :class:`LaurentPoly` or :class:`RationalFunction` whose numerator
    is homogeneous of its key.
    """

    __slots__ = ("grading", "prec", "coeffs")

    def __init__(self, grading: Grading, prec: tuple, coeffs: dict):
        self.grading = grading
        self.prec = tuple(prec)
        self.coeffs = coeffs

    # construction ------------------------------------------------------
    @classmethod
    def _scaled_prec(cls, grading: Grading, prec) -> tuple:
        if isinstance(prec, Mapping):
            return tuple(grading.scaled(prec.get(g)) for g in grading.names)
        if prec is None:
            return (None,) * len(grading.names)
        if isinstance(prec, (int, Fraction)):
            return tuple(grading.scaled(prec) for _ in grading.names)
        return tuple(grading.scaled(p) for p in prec)

    @classmethod
    def zero(cls, grading: Grading, prec=None) -> "Series":
        return cls(grading, cls._scaled_prec(grading, prec), {})

    @classmethod
    def one(cls, grading: Grading, prec=None) -> "Series":
        key = (0,) * len(grading.names)
        return cls(grading, cls._scaled_prec(grading, prec), {key: Fraction(1)})

    @classmethod
    def from_poly(cls, p: LaurentPoly, grading: Grading, prec=None) -> "Series":
        out = cls(grading, cls._scaled_prec(grading, prec), {})
        for key, part in p.split_by(grading.grade).items():
            out.coeffs[key] = part
        return out._truncated()

    @classmethod
    def from_rational(cls, f: RationalFunction, grading: Grading, prec=None) -> "Series":
        """Expand ``f``: graded denominator binomials become geometric series.

        Each graded binomial must have a weight of non-negative degree in all
        groups (after possibly inverting it) and positive degree in some
        bounded group.
        """
        prec_s = cls._scaled_prec(grading, prec)
        table = f.table
        num = f.num
        kept: dict = {}
        geo: list[tuple] = []
        for w, k in f.den.items():
            g = grading.grade(w)
            if not any(g):
                kept[w] = k
                continue
            if all(x <= 0 for x in g):
                # 1/(1 - x^w) = -x^(-w) / (1 - x^(-w))
                num = num * LaurentPoly.mono(vscale(vneg(w), k), (-1) ** k, table)
                w = vneg(w)
                g = grading.grade(w)
            if any(x < 0 for x in g):
                raise ValueError("binomial has no expansion direction in this grading")
            geo.extend([w] * k)
        out = cls(grading, prec_s, {})
        for key, part in num.split_by(grading.grade).items():
            out.coeffs[key] = RationalFunction(part, dict(kept)) if kept else part
        out = out._truncated()
        for w in geo:
            out = out.mul_geometric(w)
        return out

    # inspection ----------------------------------------------------------
    @property
    def table(self) -> VarTable:
        return self.grading.table

    def copy(self) -> "Series":
        return Series(self.grading, self.prec, dict(self.coeffs))

    def valuation(self) -> tuple:
        if not self.coeffs:
            return (None,) * len(self.prec)
        return tuple(min(k[i] for k in self.coeffs) for i in range(len(self.prec)))

    def _within(self, key: tuple, prec: tuple) -> bool:
        return all(p is None or k <= p for k, p in zip(key, prec))

    def _truncated(self) -> "Series":
        self.coeffs = {k: c for k, c in self.coeffs.items() if c and self._within(k, self.prec)}
        return self

    def truncate(self, prec) -> "Series":
        p = tuple(_pmin(a, b) for a, b in zip(self.prec, self._scaled_prec(self.grading, prec)))
        return Series(self.grading, p, dict(self.coeffs))._truncated()

    def coefficient(self, key: tuple):
        return self.coeffs.get(tuple(key), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    # arithmetic ----------------------------------------------------------
    def _check(self, other: "Series"):
        if self.grading != other.grading:
            raise ValueError("series with different gradings")

    def _lift_scalar(self, c) -> "Series":
        return Series(self.grading, (None,) * len(self.prec), {(0,) * len(self.prec): c} if c else {})

    def __add__(self, other):
        if not isinstance(other, Series):
            other = self._lift_scalar(other)
        self._check(other)
        prec = tuple(_pmin(a, b) for a, b in zip(self.prec, other.prec))
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return Series(self.grading, prec, out)._truncated()

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series(self.grading, self.prec, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Series":
        if not c:
            return Series(self.grading, self.prec, {})
        return Series(self.grading, self.prec, {k: v * c for k, v in self.coeffs.items()})._truncated()

    def __mul__(self, other):
        if not isinstance(other, Series):
            if isinstance(other, LaurentPoly) and not other.is_constant():
                return self * Series.from_poly(other, self.grading)
            return self.scale(other)
        self._check(other)
        va, vb = self.valuation(), other.valuation()
        prec = []
        for pa, pb, a, b in zip(self.prec, other.prec, va, vb):
            if a is None or b is None:
                prec.append(_pmin(pa, pb))
            else:
                prec.append(_pmin(_padd(pa, b), _padd(pb, a)))
        prec = tuple(prec)
        out: dict = {}
        items_b = list(other.coeffs.items())
        for ka, ca in self.coeffs.items():
            for kb, cb in items_b:
                k = tuple(x + y for x, y in zip(ka, kb))
                if not self._within(k, prec):
                    continue
                p = ca * cb
                if k in out:
                    out[k] = out[k] + p
                else:
                    out[k] = p
        return Series(self.grading, prec, out)._truncated()

    __rmul__ = __mul__

    def mul_binomial(self, w: tuple, c: Scalar = -1) -> "Series":
        """Multiply by ``1 + c x^w``."""
        g = self.grading.grade(w)
        mono = LaurentPoly.mono(w, c, self.table)
        out = dict(self.coeffs)
        for k, v in self.coeffs.items():
            k2 = tuple(a + b for a, b in zip(k, g))
            if not self._within(k2, self.prec):
                continue
            p = v * mono
            out[k2] = out[k2] + p if k2 in out else p
        return Series(self.grading, self.prec, out)._truncated()

    def mul_geometric(self, w: tuple, c: Scalar = 1) -> "Series":
        """Multiply by ``1 / (1 - c x^w)`` for ``x^w`` of positive degree."""
        g = self.grading.grade(w)
        if any(x < 0 for x in g) or not any(
                x > 0 and p is not None for x, p in zip(g, self.prec)):
            raise ValueError("geometric factor without a bounded positive direction")
        mono = LaurentPoly.mono(w, c, self.table)
        order = [i for i, (x, p) in enumerate(zip(g, self.prec)) if x > 0 and p is not None]
        level = lambda k: sum(k[i] for i in order)
        # R = S + c x^w R, solved in increasing degree along the bounded directions
        work = dict(self.coeffs)
        heap = [(level(k), k) for k in work]
        heapq.heapify(heap)
        result: dict = {}
        while heap:
            _, k = heapq.heappop(heap)
            if k in result:
                continue
            v = work.pop(k)
            if not v:
                continue
            result[k] = v
            k2 = tuple(a + b for a, b in zip(k, g))
            if self._within(k2, self.prec):
                p = v * mono
                if k2 in work:
                    work[k2] = work[k2] + p
                else:
                    work[k2] = p
                    heapq.heappush(heap, (level(k2), k2))
        return Series(self.grading, self.prec, result)._truncated()

    def inverse(self) -> "Series":
        """Inverse of a series whose constant coefficient is a nonzero scalar."""
        zero = (0,) * len(self.prec)
        c0 = self.coeffs.get(zero)
        if c0 is None:
            raise ZeroDivisionError("no constant coefficient")
        if isinstance(c0, (LaurentPoly, RationalFunction)):
            if isinstance(c0, LaurentPoly) and c0.is_constant():
                c0 = c0.as_scalar()
            elif isinstance(c0, RationalFunction) and c0.is_polynomial() and c0.num.is_constant():
                c0 = c0.num.as_scalar()
            else:
                raise ArithmeticError("constant coefficient must be a scalar")
        inv0 = Fraction(1) / Fraction(c0)
        rest = self.scale(-inv0)
        rest.coeffs.pop(zero, None)
        steps = self._nilpotency(rest)
        out = Series.one(self.grading, None)
        out.prec = self.prec
        power = out
        for _ in range(steps):
            power = power * rest
            if power.is_zero():
                break
            out = out + power
        return out.scale(inv0)

    def _nilpotency(self, rest: "Series") -> int:
        v = rest.valuation()
        best = None
        for x, p in zip(v, self.prec):
            if x is not None and x > 0 and p is not None:
                n = p // x
                best = n if best is None else min(best, n)
        if best is None:
            if rest.is_zero():
                return 0
            raise ArithmeticError("series is not topologically nilpotent")
        return best

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        return self.scale(Fraction(1) / Fraction(other)) if isinstance(other, (int, Fraction)) \
            else self * (1 / other)

    def __pow__(self, n: int) -> "Series":
        if n < 0:
            return self.inverse() ** (-n)
        out = Series.one(self.grading, None)
        out.prec = self.prec
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def exp(self) -> "Series":
        """Exponential of a series without constant term."""
        zero = (0,) * len(self.prec)
        if self.coeffs.get(zero):
            raise ArithmeticError("exp needs a series without constant term")
        steps = self._nilpotency(self)
        out = Series.one(self.grading, None)
        out.prec = self.prec
        term = out
        for n in range(1, steps + 1):
            term = (term * self).scale(Fraction(1, n))
            if term.is_zero():
                break
            out = out + term
        return out

    def adams(self, n: int) -> "Series":
        """Raise every variable, graded or not, to the ``n``-th power."""
        coeffs = {}
        for k, c in self.coeffs.items():
            k2 = tuple(n * x for x in k)
            coeffs[k2] = c.adams(n) if isinstance(c, (LaurentPoly, RationalFunction)) else c
        prec = tuple(None if p is None else n * p + (n - 1) for p in self.prec)
        return Series(self.grading, prec, coeffs)

    def map_coeffs(self, fn) -> "Series":
        return Series(self.grading, self.prec, {k: fn(c) for k, c in self.coeffs.items()})._truncated()

    def substitute(self, mapping: Mapping[str, tuple], grading: Grading | None = None,
                   prec=None) -> "Series":
        """Signed monomial substitution followed by regrading.

        Precision is the caller's responsibility when the substitution does
        not preserve degrees: ``prec`` (scaled degrees of the target grading)
        must be supplied in that case.
        """
        grading = grading or self.grading
        fn = _substitution_fn(self.table, mapping)
        out: dict = {}
        for c in self.coeffs.values():
            if isinstance(c, RationalFunction):
                parts = _split_rational(c.substitute(mapping), grading)
            elif isinstance(c, LaurentPoly):
                parts = c.map_exponents(fn).split_by(grading.grade)
            else:
                parts = {(0,) * len(grading.names): c}
            for k, p in parts.items():
                out[k] = out[k] + p if k in out else p
        if prec is None:
            if grading is not self.grading:
                raise ValueError("precision must be given when regrading")
            prec_s = self.prec
        else:
            prec_s = tuple(prec)
        return Series(grading, prec_s, out)._truncated()

    def regrade(self, grading: Grading, prec: tuple) -> "Series":
        return self.substitute({}, grading, prec)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Series):
            other = self._lift_scalar(other)
        self._check(other)
        prec = tuple(_pmin(a, b) for a, b in zip(self.prec, other.prec))
        keys = set(self.coeffs) | set(other.coeffs)
        for k in keys:
            if not self._within(k, prec):
                continue
            a = self.coeffs.get(k, 0)
            b = other.coeffs.get(k, 0)
            if not _coeff_eq(a, b):
                return False
        return True

    __hash__ = None

    def first_difference(self, other: "Series"):
        """Smallest key at which the two series differ, with both coefficients."""
        prec = tuple(_pmin(a, b) for a, b in zip(self.prec, other.prec))
        for k in sorted(set(self.coeffs) | set(other.coeffs)):
            if not self._within(k, prec):
                continue
            a = self.coeffs.get(k, 0)
            b = other.coeffs.get(k, 0)
            if not _coeff_eq(a, b):
                return k, a, b
        return None

    def monomial_terms(self) -> list[tuple[tuple, object]]:
        """Expand into ``(graded exponent part, coefficient)`` pairs.

        Graded variables are those with nonzero weight in the grading; the
        coefficient keeps the ungraded variables.
        """
        graded = [i for i in range(self.table.nvars)
                  if any(w[i] for w in self.grading.int_weights)]
        out: dict = {}
        for c in self.coeffs.values():
            if isinstance(c, RationalFunction):
                num, den = c.num, c.den
            elif isinstance(c, LaurentPoly):
                num, den = c, {}
            else:
                c = LaurentPoly.const(c, self.table)
                num, den = c, {}
            dkey = tuple(sorted(den.items()))
            for e, a in num.terms():
                ge = tuple(e[i] if i in graded else 0 for i in range(self.table.nvars))
                piece = LaurentPoly.mono(vsub(e, ge), a, self.table)
                key = (ge, dkey)
                out[key] = out[key] + piece if key in out else piece
        merged: dict = {}
        for (ge, dkey), p in out.items():
            f = RationalFunction(p, dict(dkey)) if dkey else RationalFunction(p, {})
            merged[ge] = merged[ge] + f if ge in merged else f
        res = []
        for ge, f in merged.items():
            f = f.reduce()
            if f.is_zero():
                continue
            res.append((ge, f.num if f.is_polynomial() else f))
        t = self.table
        res.sort(key=lambda ep: (t.degree(ep[0]), ep[0]))
        return res

    def __repr__(self) -> str:
        return f"Series({len(self.coeffs)} coefficients, prec={self.prec})"


def _coeff_eq(a, b) -> bool:
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    if isinstance(a, (int, Fraction)):
        a, b = b, a
    if isinstance(a, LaurentPoly) and isinstance(b, (int, Fraction)):
        return a == b
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return a == b
    if isinstance(a, LaurentPoly):
        a = RationalFunction(a, {})
    return a == b


def _split_rational(f: RationalFunction, grading: Grading) -> dict:
    for w in f.den:
        if any(grading.grade(w)):
            raise ValueError("graded denominator in coefficient")
    return {k: RationalFunction(p, dict(f.den)) for k, p in f.num.split_by(grading.grade).items()}


def half_power_convert(p: LaurentPoly) -> LaurentPoly:
    """Rewrite monomials in ``t^(1/2), q^(1/2)`` through ``t = -Q kappa^(1/2)``,
    ``q = -Q kappa^(-1/2)`` on the branch ``t^(1/2) q^(1/2) = Q``.

    A monomial ``t^a q^b`` needs ``a + b`` integral.
    """
    table = p.table
    it, iq = table.index["t"], table.index["q"]
    iQ, ik = table.index["Q"], table.index["kappa"]

    def fn(e):
        a2, b2 = e[it], e[iq]          # doubled exponents of t, q
        if (a2 + b2) % 2:
            raise ValueError("t^a q^b with a + b not integral")
        out = list(e)
        out[it] = out[iq] = 0
        # t^a q^b = (t^(1/2) q^(1/2))^(2b) t^(a-b) = Q^(2b) (-Q kappa^(1/2))^(a-b)
        d = (a2 - b2) // 2               # a - b
        out[iQ] += (a2 + b2) // 2        # a + b
        out[ik] += d                     # kappa^(d/2) in half units
        return (-1) ** (d % 2), tuple(out)

    return p.map_exponents(fn)


def half_power_unconvert(p: LaurentPoly) -> LaurentPoly:
    """Inverse of :func:`half_power_convert`: ``Q^n kappa^(d/2) -> (-1)^d t^((n+d)/2) q^((n-d)/2)``."""
    table = p.table
    it, iq = table.index["t"], table.index["q"]
    iQ, ik = table.index["Q"], table.index["kappa"]

    def fn(e):
        n, d = e[iQ], e[ik]
        if (n + d) % 2:
            raise ValueError("Q^n kappa^(d/2) with n + d odd has no t, q form")
        out = list(e)
        out[iQ] = out[ik] = 0
        out[it] += n + d   # doubled exponent of t is n + d
        out[iq] += n - d
        return (-1) ** (d % 2), tuple(out)

    return p.map_exponents(fn)
