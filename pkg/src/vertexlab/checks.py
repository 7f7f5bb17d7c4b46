"""Verifications of rigidity, edge tables, vertex limits and symmetric-function identities."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import partial
from itertools import product

from .characters import (Explicit, Preferred, ahat, balanced_limit, index, kappa_to_t,
                         pleth_sym_series, rigid_limit, serre_check, slope_sign)
from .exact import (TABLE, Grading, LaurentPoly, RationalFunction, Series,
                    half_power_convert)
from .partitions import EMPTY, Partition, enumerate_3d, partitions_of, partitions_upto
from .parallel import parallel_map
from .report import Report, compare_series, timed
from .vertex import (EDGE_TABLES, MINUS_ONE, QGRADING, VERTEX_TABLE, ZERO_MINUS_TWO,
                     EdgeTables, FiniteAlphabet, edge_character, edge_euler, skew_schur,
                     vertex_box_count, vertex_character_finite, vertex_limit)

EDGE_KINDS = (MINUS_ONE, ZERO_MINUS_TWO)


# -- rigidity ----------------------------------------------------------------------

def random_slope(rng: random.Random, bound: int = 30) -> Explicit:
    while True:
        r1, r2 = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if r1 and r2 and r1 + r2:
            return Explicit((r1, r2, -r1 - r2))


def _signs(v: LaurentPoly, sigma) -> tuple:
    return tuple(slope_sign(w, sigma) for w, _ in v.sorted_terms())


def chamber_partner(v: LaurentPoly, sigma: Explicit, rng: random.Random) -> Explicit:
    """A different slope giving every weight of ``v`` the same attracting/repelling sign."""
    target = _signs(v, sigma)
    for _ in range(200):
        e1, e2 = rng.randint(-3, 3), rng.randint(-3, 3)
        r = tuple(5 * x for x in sigma.r)
        cand = Explicit((r[0] + e1, r[1] + e2, r[2] - e1 - e2))
        if _signs(v, cand) == target:
            return cand
    return Explicit(tuple(3 * x for x in sigma.r))


def verify_rigidity(max_size: int = 4, slopes: int = 20, seed: int = 0) -> Report:
    """``lim â(V) = (-kappa^(1/2))^ind`` over finite vertex characters and random slopes."""
    rep = Report("rigidity", True, {"max_size": max_size, "slopes": slopes, "seed": seed})
    rng = random.Random(seed)
    with timed(rep):
        pis = [pi for pi in enumerate_3d(EMPTY, EMPTY, EMPTY, max_size) if pi.size]
        chars = [(pi, vertex_character_finite(pi)) for pi in pis]
        for pi, v in chars:
            if not serre_check(v):
                return rep.fail(partition=sorted(pi.extra), reason="character is not Serre symmetric")
        used = 0
        while used < slopes:
            sigma = random_slope(rng)
            if any(slope_sign(w, sigma) == 0 for _, v in chars for w, _ in v.terms()):
                continue
            used += 1
            for pi, v in chars:
                ind = index(v, sigma)
                if index(v, sigma.negate()) != -ind:
                    return rep.fail(partition=sorted(pi.extra), slope=sigma, reason="index not odd under negation")
                expected = RationalFunction.from_poly(kappa_to_t(rigid_limit(v, sigma)))
                limit = balanced_limit(ahat(v), sigma)
                if limit != expected:
                    return rep.fail(partition=sorted(pi.extra), slope=sigma, limit=limit, expected=expected)
                other = chamber_partner(v, sigma, rng)
                if balanced_limit(ahat(v), other) != limit:
                    return rep.fail(partition=sorted(pi.extra), slope=sigma, partner=other,
                                    reason="limit differs inside one chamber")
        rep.note(f"{len(chars)} partitions x {slopes} slopes")
    return rep


# -- edge tables ---------------------------------------------------------------------

def exact_edge_value(lam: Partition, kind: tuple, sigma: Preferred) -> LaurentPoly:
    """``Q^chi (-kappa^(1/2))^ind`` in the ``Q, kappa`` variables."""
    chi = edge_euler(lam, kind)
    ind = index(edge_character(lam, kind), sigma)
    return LaurentPoly.mono(TABLE.exps(Q=chi, kappa=Fraction(ind, 2)), (-1) ** (ind % 2))


def verify_edge_tables(max_size: int = 5, tables: EdgeTables = EDGE_TABLES) -> Report:
    """Every tabulated edge limit against the exact edge index, after half-power conversion."""
    rep = Report("edge-tables", True, {"max_size": max_size})
    with timed(rep):
        count = 0
        for n in range(max_size + 1):
            for lam in partitions_of(n):
                if 2 * edge_euler(lam, MINUS_ONE) != lam.norm2 + lam.conj.norm2:
                    return rep.fail(partition=lam, reason="(-1,-1) Euler characteristic")
                for kind in EDGE_KINDS:
                    v = edge_character(lam, kind)
                    if not serre_check(v):
                        return rep.fail(partition=lam, kind=kind, reason="edge character not Serre symmetric")
                    for sigma in tables.regimes(kind):
                        table = half_power_convert(tables.lookup(lam, kind, sigma))
                        exact = exact_edge_value(lam, kind, sigma)
                        if table != exact:
                            return rep.fail(partition=lam, kind=kind, regime=sigma, table=table, exact=exact)
                        count += 1
        for n in range(9):
            for lam in partitions_of(n):
                if sum(2 * a + 1 for _, a, _ in lam.arm_legs()) != lam.norm2:
                    return rep.fail(partition=lam, reason="arm sum identity")
        rep.note(f"{count} table entries compared")
    return rep


# -- vertex limits ---------------------------------------------------------------------

def leg_triples(max_leg: int):
    legs = partitions_upto(max_leg)
    return list(product(legs, legs, legs))


def vertex_case(legs: tuple, regimes: tuple, order: int) -> dict | None:
    """All vertex comparisons for one leg triple; the first mismatch as a witness, else ``None``."""
    lam, mu, nu = legs
    scratch = Report("vertex-case", True)
    for sigma in regimes:
        boxes = vertex_box_count(lam, mu, nu, sigma, order)
        prec = {"Q": Fraction(boxes.prec[0], QGRADING.unit)}
        closed = Series.from_rational(vertex_limit(lam, mu, nu, sigma), QGRADING, prec)
        if not compare_series(scratch, boxes, closed, f"box count vs C at {lam},{mu},{nu} {sigma}"):
            return scratch.witness
        psi = vertex_box_count(lam, mu, nu, sigma, order, route="psi")
        if not compare_series(scratch, boxes, psi, f"W route vs Psi route at {lam},{mu},{nu} {sigma}"):
            return scratch.witness
    left = vertex_box_count(lam, mu, nu, Preferred(2, 1, 3, 1), order)
    right = vertex_box_count(mu.conj, lam.conj, nu.conj, Preferred(1, 1, 3, 1), order)
    if not compare_series(scratch, left, right, f"transposition at {lam},{mu},{nu}"):
        return scratch.witness
    return None


def verify_vertex(max_leg: int = 2, order: int = 4, regimes=None, jobs: int = 1) -> Report:
    """Normalized box counts against the refined vertex, both box-count routes, and transposition."""
    regimes = tuple(VERTEX_TABLE) if regimes is None else tuple(regimes)
    rep = Report("vertex", True, {"max_leg": max_leg, "order": order})
    triples = leg_triples(max_leg)
    with timed(rep):
        results = parallel_map(partial(vertex_case, regimes=regimes, order=order), triples, jobs)
        for witness in results:
            if witness is not None:
                rep.fail(**witness)
                break
        rep.note(f"{len(triples)} leg triples x {len(regimes)} regimes")
    return rep


# -- symmetric functions -----------------------------------------------------------------

U = Grading(TABLE, {"u": {"u": 1}})
X_LETTERS = ("t1", "t2", "t3")
Y_LETTERS = ("m1", "m2", "m3")


def _letters(names, scale: LaurentPoly | None = None) -> list[LaurentPoly]:
    out = [LaurentPoly.var(n) for n in names]
    return [scale * x for x in out] if scale is not None else out


def _s(lam: Partition, eta: Partition, letters) -> LaurentPoly:
    f = skew_schur(lam, eta, FiniteAlphabet(letters))
    if f.den:
        raise ArithmeticError("finite alphabet gave a non-polynomial Schur function")
    return f.num


def _cauchy(xs, ys, sign: int, order: int) -> Series:
    """``prod (1 - u x y)^-1`` (``sign = -1``) or ``prod (1 + u x y)`` (``sign = +1``)."""
    u = LaurentPoly.var("u")
    one = LaurentPoly.const(1)
    if sign > 0:
        p = one
        for x in xs:
            for y in ys:
                p = p * (one + u * x * y)
        return Series.from_poly(p, U, {"u": order})
    den = []
    for x in xs:
        for y in ys:
            ((e, _),) = (u * x * y).terms()
            den.append(e)
    return Series.from_rational(RationalFunction.make(1, den), U, {"u": order})


def schur_identity_sides(eta1: Partition, eta2: Partition, nx: int, ny: int, order: int,
                         transposed: bool) -> tuple[Series, Series]:
    u = LaurentPoly.var("u")
    xs, ys = _letters(X_LETTERS[:nx]), _letters(Y_LETTERS[:ny])
    lhs = LaurentPoly.zero()
    for lam in partitions_upto(order):
        other = lam.conj if transposed else lam
        lhs = lhs + u ** lam.size * _s(lam, eta1, xs) * _s(other, eta2, ys)
    rhs = LaurentPoly.zero()
    uxs, uys = [u * x for x in xs], [u * y for y in ys]
    for lam in partitions_upto(max(eta1.size, eta2.size)):
        if transposed:
            term = _s(eta1.conj, lam.conj, uys) * _s(eta2.conj, lam, uxs)
        else:
            term = _s(eta1, lam, uys) * _s(eta2, lam, uxs)
        rhs = rhs + u ** lam.size * term if lam.size else rhs + term
    prefactor = _cauchy(xs, ys, 1 if transposed else -1, order)
    return Series.from_poly(lhs, U, {"u": order}), prefactor * Series.from_poly(rhs, U, {"u": order})


def verify_schur_identities(max_eta: int = 2, max_letters: int = 3, order: int = 3) -> Report:
    """Both Cauchy-type skew Schur identities over small alphabets, truncated in ``u``."""
    rep = Report("schur-identities", True, {"max_eta": max_eta, "max_letters": max_letters, "order": order})
    with timed(rep):
        etas = partitions_upto(max_eta)
        for eta1, eta2 in product(etas, etas):
            for nx in range(1, max_letters + 1):
                for ny in range(1, max_letters + 1):
                    for transposed in (False, True):
                        lhs, rhs = schur_identity_sides(eta1, eta2, nx, ny, order, transposed)
                        label = f"{'second' if transposed else 'first'} identity eta=({eta1},{eta2}) letters=({nx},{ny})"
                        if not compare_series(rep, lhs, rhs, label):
                            return rep
    return rep


def count_bounded_length(j: int, k: int) -> int:
    return sum(1 for lam in partitions_of(k) if len(lam) <= j)


def count_distinct_parts(j: int, k: int) -> int:
    return sum(1 for lam in partitions_of(k)
               if len(lam) == j and all(lam[i] > lam[i + 1] for i in range(j - 1)))


def _coefficient(c, exps: tuple) -> Fraction:
    if isinstance(c, RationalFunction):
        if c.den:
            raise ArithmeticError("ungraded denominator in a fully graded series")
        c = c.num
    if isinstance(c, LaurentPoly):
        return c.coefficient(exps)
    return Fraction(c) if not any(exps) else Fraction(0)


def verify_partition_counts(order: int = 6) -> Report:
    """``Sym(z / (1 - t))`` expanded in ``t`` and in ``t^-1`` against partition counts."""
    rep = Report("partition-counts", True, {"order": order})
    with timed(rep):
        z = LaurentPoly.var("z")
        t = TABLE.exps(t=1)
        for direction in (1, -1):
            grading = Grading(TABLE, {"z": {"z": 1}, "t": {"t": direction}})
            arg = Series.from_rational(RationalFunction.make(z, [t]), grading, {"z": order, "t": order})
            s = pleth_sym_series(arg)
            for j in range(order + 1):
                for k in range(order + 1):
                    key = grading.grade(TABLE.exps(z=j, t=direction * k))
                    got = _coefficient(s.coefficient(key), TABLE.exps(z=j, t=direction * k))
                    if direction > 0:
                        want = count_bounded_length(j, k)
                    else:
                        want = (-1) ** j * count_distinct_parts(j, k)
                    if got != want:
                        return rep.fail(direction=direction, j=j, k=k, series=got, count=want)
    return rep
