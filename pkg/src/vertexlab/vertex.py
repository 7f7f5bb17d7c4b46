"""Skew Schur functions, the refined vertex, edge characters and box-counting limits."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .characters import (KAPPA, KAPPA_HALF, Preferred, ahat, index, pleth_sym_series,
                         slope_sign, tmono, ATTRACTING, FIXED)
from .exact import (TABLE, Grading, LaurentPoly, RationalFunction, Series, vadd,
                    vneg, vscale)
from .hilb import tangent_char
from .partitions import (EMPTY, Partition, Partition3D, corners, enumerate_3d,
                         in_leg, minimal_3d, partitions_of)
from .report import Report, compare_series, timed

HALF = Fraction(1, 2)
QGRADING = Grading(TABLE, {"Q": {"t": 1, "q": 1}})


def tq(a=0, b=0) -> tuple:
    """Exponent vector of ``t^a q^b`` (half-integers allowed)."""
    return TABLE.exps(t=a, q=b)


def tq_mono(a=0, b=0, c=1) -> LaurentPoly:
    return LaurentPoly.mono(tq(a, b), c)


# -- alphabets ---------------------------------------------------------------

@dataclass(frozen=True)
class SpecializedAlphabet:
    """Letters ``pre * base^(i + 1/2) * other^(-shift[i])`` for ``i = 0, 1, 2, ...``.

    ``base="t", other="q"`` with ``shift = nu^t`` is ``t^-rho q^-nu^t``.
    ``pre`` is a monomial given as ``(coeff, exps)``.
    """
    base: str
    other: str | None = None
    shift: Partition = EMPTY
    pre: tuple = (1, None)

    def prefactor(self) -> LaurentPoly:
        c, e = self.pre
        return LaurentPoly.mono(e if e is not None else TABLE.zero, c)

    def letter(self, i: int) -> LaurentPoly:
        e = TABLE.exps({self.base: Fraction(2 * i + 1, 2)})
        if self.other is not None and self.shift[i]:
            e = vadd(e, TABLE.exps({self.other: -self.shift[i]}))
        return self.prefactor() * LaurentPoly.mono(e)

    def letters(self, n: int) -> list[LaurentPoly]:
        return [self.letter(i) for i in range(n)]

    @property
    def head(self) -> int:
        return len(self.shift)

    def scaled(self, mono: LaurentPoly) -> "SpecializedAlphabet":
        """Multiply every letter by a monomial."""
        return SpecializedAlphabet(self.base, self.other, self.shift,
                                   _mono_pair(self.prefactor() * mono))

    def h(self, k: int) -> RationalFunction:
        return _h_specialized(self, k)


def _mono_pair(m: LaurentPoly) -> tuple:
    (e, c), = m.terms()
    return (c, e)


@dataclass(frozen=True)
class FiniteAlphabet:
    letters_: tuple

    def __init__(self, letters: Sequence[LaurentPoly]):
        object.__setattr__(self, "letters_", tuple(letters))

    def letters(self, n: int | None = None) -> list[LaurentPoly]:
        return list(self.letters_)

    def h(self, k: int) -> RationalFunction:
        return RationalFunction.from_poly(_h_finite(self.letters_, k)[k])


def _h_finite(letters: Sequence[LaurentPoly], k: int) -> list[LaurentPoly]:
    """``[h_0, ..., h_k]`` of a finite list of monomial letters."""
    one = LaurentPoly.const(1)
    H = [one] + [LaurentPoly.zero()] * k
    for x in letters:
        powers = [one]
        for _ in range(k):
            powers.append(powers[-1] * x)
        H = [sum((powers[j] * H[a - j] for j in range(a + 1)), LaurentPoly.zero())
             for a in range(k + 1)]
    return H


@lru_cache(maxsize=None)
def _h_specialized(alph: SpecializedAlphabet, k: int) -> RationalFunction:
    if k < 0:
        return RationalFunction.make(0)
    n = alph.head
    head = _h_finite(alph.letters(n), k)
    # tail letters c * base^j (j >= 0) with c = pre * base^(n + 1/2):
    # h_b = c^b / prod_{j=1..b} (1 - base^j)
    c = alph.prefactor() * LaurentPoly.mono(TABLE.exps({alph.base: Fraction(2 * n + 1, 2)}))
    base = TABLE.exps({alph.base: 1})
    total = RationalFunction.make(0)
    for a in range(k + 1):
        if head[a].is_zero():
            continue
        b = k - a
        tail = RationalFunction.make(c ** b, [vscale(base, j) for j in range(1, b + 1)])
        total = total + tail * head[a]
    return total


def _det(m: list[list[RationalFunction]]) -> RationalFunction:
    n = len(m)
    if n == 0:
        return RationalFunction.make(1)
    if n == 1:
        return m[0][0]
    total = RationalFunction.make(0)
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * _det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def skew_schur(lam: Partition, eta: Partition, alph) -> RationalFunction:
    """``s_{lam/eta}`` by the Jacobi-Trudi determinant in complete symmetric functions."""
    if not lam.contains_partition(eta):
        return RationalFunction.make(0)
    n = len(lam)
    if n == 0:
        return RationalFunction.make(1)

    def h(k):
        if k < 0:
            return RationalFunction.make(0)
        if k == 0:
            return RationalFunction.make(1)
        return alph.h(k)

    mat = [[h(lam[i] - eta[j] - i + j) for j in range(n)] for i in range(n)]
    return _det(mat).reduce()


def skew_schur_truncated(lam: Partition, eta: Partition, alph: SpecializedAlphabet,
                         nvars: int) -> LaurentPoly:
    """``s_{lam/eta}`` in the first ``nvars`` letters only (a polynomial)."""
    f = skew_schur(lam, eta, FiniteAlphabet(alph.letters(nvars)))
    return f.num


def ssyt_skew_schur(lam: Partition, eta: Partition, letters: Sequence[LaurentPoly]) -> LaurentPoly:
    """``s_{lam/eta}`` by enumerating semistandard skew tableaux (small alphabets only)."""
    if not lam.contains_partition(eta):
        return LaurentPoly.zero()
    cells = [(i, j) for i in range(len(lam)) for j in range(eta[i], lam[i])]
    n = len(letters)
    total = LaurentPoly.zero()
    filling: dict = {}

    def rec(idx, acc):
        nonlocal total
        if idx == len(cells):
            total = total + acc
            return
        i, j = cells[idx]
        lo = 0
        if j - 1 >= eta[i] and (i, j - 1) in filling:
            lo = max(lo, filling[(i, j - 1)])          # weak along rows
        if i > 0 and j < lam[i - 1] and j >= eta[i - 1]:
            lo = max(lo, filling[(i - 1, j)] + 1)      # strict down columns
        for v in range(lo, n):
            filling[(i, j)] = v
            rec(idx + 1, acc * letters[v])
        filling.pop((i, j), None)

    rec(0, LaurentPoly.const(1))
    return total


def t_rho(other: str | None = None, shift: Partition = EMPTY, pre=None) -> SpecializedAlphabet:
    return SpecializedAlphabet("t", other, shift, _mono_pair(pre) if pre is not None else (1, None))


def q_rho(other: str | None = None, shift: Partition = EMPTY, pre=None) -> SpecializedAlphabet:
    return SpecializedAlphabet("q", other, shift, _mono_pair(pre) if pre is not None else (1, None))


# -- refined vertex -------------------------------------------------------------

SWAP_TQ = {"t": (1, tq(0, HALF)), "q": (1, tq(HALF, 0))}


def swap_tq(f):
    """Exchange ``t`` and ``q``."""
    return f.substitute(SWAP_TQ)


def hook_denominator(nu: Partition, swap: bool = False) -> list[tuple]:
    """Weights ``q^l t^(a+1)`` over boxes of ``nu`` (``t`` and ``q`` exchanged when ``swap``)."""
    out = []
    for _, a, l in nu.arm_legs():
        out.append(tq(a + 1, l) if not swap else tq(l, a + 1))
    return out


@lru_cache(maxsize=None)
def refined_vertex_C(lam: Partition, mu: Partition, nu: Partition, swapped: bool = False) -> RationalFunction:
    """``C(lam, mu, nu)(t, q)`` as an exact rational function (``(q, t)`` when ``swapped``)."""
    pre = tq_mono(-Fraction(lam.conj.norm2, 2), -Fraction(mu.norm2, 2))
    a1 = t_rho("q", nu.conj)
    a2 = q_rho("t", nu)
    total = RationalFunction.make(0)
    mut = mu.conj
    for k in range(min(lam.size, mut.size) + 1):
        for eta in partitions_of(k):
            if not (lam.contains_partition(eta) and mut.contains_partition(eta)):
                continue
            s1 = skew_schur(lam, eta, a1)
            if s1.is_zero():
                continue
            s2 = skew_schur(mut, eta, a2)
            w = tq_mono(-Fraction(k, 2), Fraction(k, 2))
            total = total + s1 * s2 * w
    out = RationalFunction.make(pre, hook_denominator(nu)) * total
    out = out.reduce()
    return swap_tq(out) if swapped else out


def degree_zero_series(order) -> Series:
    """``1 / prod_{i,j >= 0} (1 - q^i t^(j+1))`` as a series in total ``t, q`` degree."""
    arg = Series.from_rational(RationalFunction.make(tq_mono(1, 0), [tq(1, 0), tq(0, 1)]),
                               QGRADING, order)
    return pleth_sym_series(arg)


def regime_name(sigma: Preferred) -> str:
    return str(sigma)


# tertiary axis 3 regimes and the corresponding vertex dispatch
VERTEX_TABLE = {
    Preferred(1, 1, 3, 1): ("lmn", False),    # r1 >> r3 > 0 >> r2 : C(l, m, n)(t, q)
    Preferred(2, -1, 3, -1): ("mtltnt", True),  # r1 >> 0 > r3 >> r2 : C(m^t, l^t, n^t)(q, t)
    Preferred(2, 1, 3, 1): ("mtltnt", False),   # r2 >> r3 > 0 >> r1 : C(m^t, l^t, n^t)(t, q)
    Preferred(1, -1, 3, -1): ("lmn", True),     # r2 >> 0 > r3 >> r1 : C(l, m, n)(q, t)
}


class UnsupportedRegime(ValueError):
    pass


def vertex_limit(lam: Partition, mu: Partition, nu: Partition, sigma: Preferred,
                 table=None) -> RationalFunction:
    """Normalized vertex limit by table dispatch."""
    table = VERTEX_TABLE if table is None else table
    if sigma not in table:
        raise UnsupportedRegime(f"no vertex table row for {sigma}")
    form, swapped = table[sigma]
    if form == "lmn":
        return refined_vertex_C(lam, mu, nu, swapped)
    return refined_vertex_C(mu.conj, lam.conj, nu.conj, swapped)


# -- box counting ---------------------------------------------------------------

T1INV, T2INV, T3, T3INV = tmono(-1, 0, 0), tmono(0, -1, 0), tmono(0, 0, 1), tmono(0, 0, -1)


@lru_cache(maxsize=None)
def _psi_table(nu: Partition):
    c = corners(nu)
    return c.inner, c.outer


def psi_nu(nu: Partition, box) -> tuple:
    """The weight ``psi_nu(box)`` (one of ``t1^-1, t2^-1, t3, t3^-1``)."""
    inner, outer = _psi_table(nu)
    d = box[1] - box[0]
    if d in inner:
        return T3
    if d in outer:
        return T3INV
    if d > inner[0]:
        return T2INV
    if d < inner[-1]:
        return T1INV
    for i in range(1, len(inner)):
        if outer[i - 1] > d > inner[i]:
            return T2INV
        if inner[i - 1] > d > outer[i - 1]:
            return T1INV
    raise AssertionError("corner intervals do not cover the line")


def psi_sigma(nu: Partition, box, sigma: Preferred) -> str:
    """``"t"`` when ``psi_nu(box)`` is attracting, ``"q"`` when repelling."""
    s = slope_sign(psi_nu(nu, box), sigma)
    if s == FIXED:
        raise ValueError("regime must have a small third exponent")
    return "t" if s == ATTRACTING else "q"


def _reach(pi: Partition3D) -> int:
    nu = pi.legs[2]
    return pi.extent + max((max(b) for b in pi.extra), default=0) + max(nu[0], len(nu)) + 2


def _relevant_boxes(pi: Partition3D, M: int) -> set:
    """Boxes of ``pi`` outside the pure third leg, with first two coordinates below ``M``."""
    lam, mu, _ = pi.legs
    out = set(pi.extra)
    for y, z in lam.boxes():
        for x in range(M):
            out.add((x, y, z))
    for z, x in mu.boxes():
        for y in range(M):
            out.add((x, y, z))
    return out


def W_char(pi: Partition3D) -> LaurentPoly:
    """``sum_box psi_nu - d1 psi_0 - d2 psi_0 - d3 psi_nu`` over the finitely many nonzero terms."""
    nu = pi.legs[2]
    terms: dict = {}
    for b in _relevant_boxes(pi, _reach(pi)):
        mem = pi.leg_membership(b)
        pn = psi_nu(nu, b)
        p0 = psi_nu(EMPTY, b)
        contrib = [(pn, 1)]
        if 1 in mem:
            contrib.append((p0, -1))
        if 2 in mem:
            contrib.append((p0, -1))
        if 3 in mem:
            contrib.append((pn, -1))
        for w, c in contrib:
            terms[w] = terms.get(w, 0) + c
    return LaurentPoly.from_terms(TABLE, terms)


def box_weight_W(pi: Partition3D, sigma: Preferred) -> tuple[Fraction, Fraction]:
    """Exponents ``(a, b)`` with ``Q^chi (-kappa^(1/2))^ind = t^a q^b``."""
    W = W_char(pi)
    V = W - LaurentPoly.mono(KAPPA) * W.dual()
    ind = index(V, sigma)
    chi = pi.renorm_volume()
    return Fraction(chi + ind, 2), Fraction(chi - ind, 2)


def box_weight_psi(pi: Partition3D, sigma: Preferred, N: int | None = None) -> tuple[int, int]:
    """Exponents of the product of ``Psi`` tags over a diagonal band of width ``N``."""
    if N is None:
        N = _reach(pi) + 2
    nu = pi.legs[2]
    M = N + _reach(pi) + 2
    a = b = 0
    for box in _relevant_boxes(pi, M):
        if abs(box[1] - box[0]) > N:
            continue
        mem = pi.leg_membership(box)
        if 3 not in mem:
            if psi_sigma(nu, box, sigma) == "t":
                a += 1
            else:
                b += 1
        for k in (1, 2):
            if k in mem:
                if psi_sigma(EMPTY, box, sigma) == "t":
                    a -= 1
                else:
                    b -= 1
    return a, b


def vertex_box_count(lam: Partition, mu: Partition, nu: Partition, sigma: Preferred,
                     order: int, route: str = "W", normalized: bool = True) -> Series:
    """Sum of ``t^a q^b`` over 3D partitions with ``chi <= chi_min + order``."""
    if sigma.tertiary != 3:
        raise UnsupportedRegime("box counting needs the third exponent small")
    base = minimal_3d(lam, mu, nu).renorm_volume()
    prec = base + order
    terms: dict = {}
    for pi in enumerate_3d(lam, mu, nu, prec):
        if route == "W":
            a, b = box_weight_W(pi, sigma)
        elif route == "psi":
            a, b = box_weight_psi(pi, sigma)
            a2, b2 = box_weight_psi(pi, sigma, _reach(pi) + 5)
            if (a, b) != (a2, b2):
                raise AssertionError("band product has not stabilized")
        else:
            raise ValueError(f"unknown route {route!r}")
        e = tq(a, b)
        terms[e] = terms.get(e, 0) + 1
    s = Series.from_poly(LaurentPoly.from_terms(TABLE, terms), QGRADING, {"Q": prec})
    if normalized:
        s = s * vertex_box_count(EMPTY, EMPTY, EMPTY, sigma, order, route, normalized=False).inverse()
    return s


def transpose_3d(pi: Partition3D) -> Partition3D:
    """Reflection ``(b1, b2, b3) -> (b2, b1, b3)``."""
    lam, mu, nu = pi.legs
    return Partition3D((mu.conj, lam.conj, nu.conj), frozenset((y, x, z) for x, y, z in pi.extra))


# -- edges -----------------------------------------------------------------------

MINUS_ONE = (-1, -1)
ZERO_MINUS_TWO = (0, -2)
STANDARD = (tmono(1, 0, 0), tmono(0, 1, 0), tmono(0, 0, 1))


class EdgeError(ArithmeticError):
    pass


def edge_character(lam: Partition, kind: tuple, weights: tuple = STANDARD, axis: int = 1) -> LaurentPoly:
    """Regularized edge character as an exact Laurent polynomial."""
    l, lp = kind
    k = axis - 1
    wk, wk1, wk2 = weights[k], weights[(k + 1) % 3], weights[(k + 2) % 3]
    first = RationalFunction.make(tangent_char(lam, wk1, wk2), [vneg(wk)])
    a = vadd(vscale(wk, -lp), wk2)
    b = vadd(vscale(wk, -l), wk1)
    second = RationalFunction.make(tangent_char(lam.conj, a, b), [wk])
    total = (first + second).reduce()
    if total.den:
        raise EdgeError("edge character did not simplify to a Laurent polynomial")
    return total.num


def edge_euler(lam: Partition, kind: tuple) -> int:
    l, lp = kind
    return sum(1 - l * b1 - lp * b2 for b1, b2 in lam.boxes())


def edge_limit_exact(lam: Partition, kind: tuple, sigma, weights=STANDARD, axis=1) -> LaurentPoly:
    """``Q^chi (-kappa^(1/2))^ind`` written as ``t^a q^b``."""
    chi = edge_euler(lam, kind)
    ind = index(edge_character(lam, kind, weights, axis), sigma)
    return tq_mono(Fraction(chi + ind, 2), Fraction(chi - ind, 2))


def _rows_minus_one(lam: Partition) -> dict:
    n, nt = lam.norm2, lam.conj.norm2
    A = (Fraction(nt, 2), Fraction(n, 2))
    B = (Fraction(n, 2), Fraction(nt, 2))
    return {
        Preferred(1, 1, 2, 1): A,   # r1 >> r2 > 0 >> r3
        Preferred(2, 1, 1, 1): A,   # r2 >> r1 > 0 >> r3
        Preferred(1, 1, 3, 1): B,   # r1 >> r3 > 0 >> r2
        Preferred(3, 1, 1, 1): B,   # r3 >> r1 > 0 >> r2
        Preferred(2, 1, 3, 1): A,   # r2 >> r3 > 0 >> r1
        Preferred(3, 1, 2, 1): B,   # r3 >> r2 > 0 >> r1
    }


def _rows_zero_minus_two(lam: Partition) -> dict:
    n, s = lam.norm2, lam.size
    up = (Fraction(n + s, 2), Fraction(n - s, 2))
    down = (Fraction(n - s, 2), Fraction(n + s, 2))
    return {
        Preferred(1, 1, 2, 1): up,        # r1 >> r2 > 0 >> r3
        Preferred(2, 1, 1, 1): (n, 0),    # r2 >> r1 > 0 >> r3
        Preferred(3, -1, 2, -1): down,    # r1 >> 0 > r2 >> r3
        Preferred(3, -1, 1, -1): (n, 0),  # r2 >> 0 > r1 >> r3
        Preferred(1, -1, 2, -1): down,    # r3 >> 0 > r2 >> r1
        Preferred(2, -1, 1, -1): (0, n),  # r3 >> 0 > r1 >> r2
        Preferred(3, 1, 2, 1): up,        # r3 >> r2 > 0 >> r1
        Preferred(3, 1, 1, 1): (0, n),    # r3 >> r1 > 0 >> r2
    }


@dataclass
class EdgeTables:
    """Tabulated edge limits; ``transpose_minus_one`` evaluates the (-1,-1) rows at ``lam^t``."""
    transpose_minus_one: bool = True
    corrupt: set = field(default_factory=set)

    def lookup(self, lam: Partition, kind: tuple, sigma: Preferred) -> LaurentPoly:
        if kind == MINUS_ONE:
            arg = lam.conj if self.transpose_minus_one else lam
            rows = _rows_minus_one(arg)
            if sigma in rows:
                a, b = rows[sigma]
            elif sigma.negate() in rows:
                b, a = rows[sigma.negate()]
            else:
                raise UnsupportedRegime(f"no (-1,-1) row for {sigma}")
        elif kind == ZERO_MINUS_TWO:
            rows = _rows_zero_minus_two(lam)
            if sigma not in rows:
                raise UnsupportedRegime(f"no (0,-2) row for {sigma}")
            a, b = rows[sigma]
        else:
            raise UnsupportedRegime(f"no table for normal bundle {kind}")
        if (kind, sigma) in self.corrupt:
            a, b = b, a
        return tq_mono(a, b)

    @staticmethod
    def regimes(kind: tuple) -> list[Preferred]:
        if kind == MINUS_ONE:
            rows = list(_rows_minus_one(EMPTY))
            return rows + [r.negate() for r in rows]
        return list(_rows_zero_minus_two(EMPTY))


EDGE_TABLES = EdgeTables()


def edge_limit(lam: Partition, kind: tuple, sigma: Preferred) -> LaurentPoly:
    return EDGE_TABLES.lookup(lam, kind, sigma)


# -- finite vertex characters and the Nekrasov check ------------------------------

def vertex_character_finite(pi: Partition3D, weights: tuple = STANDARD) -> LaurentPoly:
    """``O - O^dual kappa - O O^dual (1 - w1)(1 - w2)(1 - w3)`` with ``O = sum_box w^-b``."""
    if any(pi.legs):
        raise ValueError("finite partitions only")
    w1, w2, w3 = weights
    O = LaurentPoly.from_terms(TABLE, [(vneg(vadd(vadd(vscale(w1, x), vscale(w2, y)), vscale(w3, z))), 1)
                                       for x, y, z in pi.extra])
    one = LaurentPoly.const(1)
    kappa = LaurentPoly.mono(vadd(vadd(w1, w2), w3))
    cube = (one - LaurentPoly.mono(w1)) * (one - LaurentPoly.mono(w2)) * (one - LaurentPoly.mono(w3))
    D = O.dual()
    return O - D * kappa - O * D * cube


QCOUNT = Grading(TABLE, {"Q": {"Q": 1}})


def nekrasov_rhs(order: int) -> Series:
    kh = LaurentPoly.mono(KAPPA_HALF)
    num = -LaurentPoly.var("Q")
    den = [vadd(TABLE.exps(Q=1), KAPPA_HALF), vadd(TABLE.exps(Q=1), vneg(KAPPA_HALF))]
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        tk_inv = LaurentPoly.mono(vneg(tmono(*e)))
        num = num * (kh * tk_inv - LaurentPoly.mono(vneg(KAPPA_HALF)))
        den.append(vneg(tmono(*e)))
    arg = Series.from_rational(RationalFunction.make(num, den), QCOUNT, {"Q": order})
    return pleth_sym_series(arg)


def nekrasov_lhs(order: int) -> Series:
    coeffs = {}
    for pi in enumerate_3d(EMPTY, EMPTY, EMPTY, order):
        n = pi.size
        term = ahat(vertex_character_finite(pi)) * LaurentPoly.mono(TABLE.exps(Q=n), (-1) ** n)
        key = (n,)
        coeffs[key] = coeffs[key] + term if key in coeffs else term
    return Series(QCOUNT, (order,), coeffs)


def nekrasov_check(order: int) -> Report:
    rep = Report("nekrasov", True, {"order": order}, mode="exact rational coefficients")
    with timed(rep):
        lhs = nekrasov_lhs(order)
        rhs = nekrasov_rhs(order)
        compare_series(rep, lhs, rhs, "box sum vs plethystic closed form")
        rep.note(f"{len(enumerate_3d(EMPTY, EMPTY, EMPTY, order)) - 1} nonempty plane partitions")
    return rep
