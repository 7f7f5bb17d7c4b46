"""Localization series on the Hilbert scheme of points of the plane.

The series ``F(z, m1, m2, m3, y)(t1, t2)`` sums over partitions ``lambda``

    z^|lambda| / Lambda(T_lambda^dual)
        * prod_box (1 - m1 w)(1 - m2 w)(1 - m3 y / w) / (y - w),   w = t1^b1 t2^b2,

with ``1/(y - w)`` expanded in positive powers of ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .characters import pleth_sym_series
from .exact import (TABLE, Grading, LaurentPoly, RationalFunction, Series,
                    vadd, vneg, vscale)
from .partitions import Partition, partitions_of
from .report import Report, compare_series, timed

T1 = TABLE.exps(t1=1)
T2 = TABLE.exps(t2=1)

ZY = Grading(TABLE, {"z": {"z": 1}, "y": {"y": 1}})
Z_ONLY = Grading(TABLE, {"z": {"z": 1}})

Arg = Optional[LaurentPoly]   # a signed monomial, or None for zero


def var(name: str) -> LaurentPoly:
    return LaurentPoly.var(name)


def weight(w1: tuple, w2: tuple, a, b) -> tuple:
    return vadd(vscale(w1, a), vscale(w2, b))


def tangent_weights(lam: Partition, w1: tuple = T1, w2: tuple = T2) -> list[tuple]:
    """Weights of the tangent space at the fixed point ``I_lambda``."""
    out = []
    for _, a, l in lam.arm_legs():
        out.append(weight(w1, w2, -l, a + 1))
        out.append(weight(w1, w2, l + 1, -a))
    return out


def tangent_char(lam: Partition, w1: tuple = T1, w2: tuple = T2) -> LaurentPoly:
    return LaurentPoly.from_terms(TABLE, [(w, 1) for w in tangent_weights(lam, w1, w2)])


def taut_char(lam: Partition, l: LaurentPoly, w1: tuple = T1, w2: tuple = T2) -> LaurentPoly:
    """Fiber of the tautological bundle twisted by ``l`` at ``I_lambda``."""
    boxes = LaurentPoly.from_terms(TABLE, [(weight(w1, w2, -b1, -b2), 1) for b1, b2 in lam.boxes()])
    return boxes * l


def inv_lambda_dual(lam: Partition, w1: tuple = T1, w2: tuple = T2) -> RationalFunction:
    """``1 / Lambda(T_lambda^dual) = 1 / prod (1 - w^-1)``."""
    return RationalFunction.make(1, [vneg(w) for w in tangent_weights(lam, w1, w2)])


def _mono_parts(m: LaurentPoly) -> tuple[Fraction, tuple]:
    if not m.is_monomial():
        raise ValueError("argument must be a monomial")
    (e, c), = m.terms()
    return c, e


def one_minus(m: Arg) -> LaurentPoly:
    if m is None:
        return LaurentPoly.const(1)
    return LaurentPoly.const(1) - m


def inv_one_minus(m: Arg) -> RationalFunction:
    """``1 / (1 - m)`` for a monomial ``m`` with coefficient +1 or -1."""
    if m is None:
        return RationalFunction.make(1)
    c, e = _mono_parts(m)
    if c == 1:
        return RationalFunction.make(1, [e])
    if c == -1:
        # 1/(1 + x) = (1 - x)/(1 - x^2)
        return RationalFunction.make(LaurentPoly.one_minus(e), [vscale(e, 2)])
    raise ValueError("monomial coefficient must be +1 or -1")


def hilb_summand(lam: Partition, z: Arg, m1: Arg, m2: Arg, m3: Arg, y: Arg,
                 w1: tuple = T1, w2: tuple = T2) -> RationalFunction:
    """The ``lambda`` term of ``F(z, m1, m2, m3, y)`` as a rational function."""
    n = lam.size
    if n and z is None:
        return RationalFunction.make(0)
    num = z ** n if n else LaurentPoly.const(1)
    f = inv_lambda_dual(lam, w1, w2)
    for b1, b2 in lam.boxes():
        W = LaurentPoly.mono(weight(w1, w2, b1, b2))
        Winv = LaurentPoly.mono(weight(w1, w2, -b1, -b2))
        if m1 is not None:
            num = num * one_minus(m1 * W)
        if m2 is not None:
            num = num * one_minus(m2 * W)
        if m3 is not None and y is not None:
            num = num * one_minus(m3 * y * Winv)
        # 1/(y - W) = -W^-1 / (1 - y W^-1)
        num = -num * Winv
        if y is not None:
            f = f * inv_one_minus(y * Winv)
    return f * num


@dataclass(frozen=True)
class FContext:
    nz: int
    ny: int
    symbolic: tuple = ("m1", "m2", "m3")

    def __post_init__(self):
        if self.nz < 0 or self.ny < 0:
            raise ValueError("orders must be non-negative")


def localization_series(args: dict, grading: Grading, prec, max_size: int,
                        w1: tuple = T1, w2: tuple = T2) -> Series:
    """Sum ``hilb_summand`` over partitions of size at most ``max_size``, expanded in ``grading``."""
    total = Series.zero(grading, prec)
    for n in range(max_size + 1):
        for lam in partitions_of(n):
            f = hilb_summand(lam, args.get("z"), args.get("m1"), args.get("m2"),
                             args.get("m3"), args.get("y"), w1, w2)
            if f.is_zero():
                continue
            total = total + Series.from_rational(f, grading, prec)
    return total


def compute_F(ctx: FContext | None = None, nz: int = 2, ny: int = 2, y_zero: bool = False,
              swap_m23: bool = False) -> Series:
    """``F(z, m1, m2, m3, y)`` up to ``z^nz y^ny``, graded in ``z`` and ``y``."""
    if ctx is not None:
        nz, ny = ctx.nz, ctx.ny
        symbolic = ctx.symbolic
    else:
        symbolic = ("m1", "m2", "m3")
    args = {"z": var("z"), "y": None if y_zero else var("y")}
    for name in ("m1", "m2", "m3"):
        args[name] = var(name) if name in symbolic else None
    if swap_m23:
        args["m2"], args["m3"] = args["m3"], args["m2"]
    return localization_series(args, ZY, {"z": nz, "y": ny}, nz)


def swap_zy(s: Series) -> Series:
    """Exchange the variables ``z`` and ``y``."""
    zy = {"z": (1, TABLE.exps(y=1)), "y": (1, TABLE.exps(z=1))}
    prec = (s.prec[1], s.prec[0])
    return s.substitute(zy, ZY, prec)


def normalized_F(nz: int, ny: int, swap_m23: bool = False) -> Series:
    full = compute_F(nz=nz, ny=ny, swap_m23=swap_m23)
    base = compute_F(nz=nz, ny=ny, y_zero=True, swap_m23=swap_m23)
    return full / base


def m_degree(f, name: str) -> int:
    """Degree in one ungraded variable of a coefficient (numerator degree; denominators are free of it)."""
    i = TABLE.index[name]
    if isinstance(f, RationalFunction):
        if any(w[i] for w in f.den):
            raise ValueError(f"{name} appears in a denominator")
        f = f.num
    if isinstance(f, LaurentPoly):
        return max((e[i] for e, _ in f.terms()), default=0)
    return 0


def verify_symmetry(nz: int, ny: int) -> Report:
    """Check the three normalized series (original, ``m2 <-> m3``, ``z <-> y``) agree."""
    rep = Report("symmetry", True, {"nz": nz, "ny": ny}, mode="exact rational coefficients")
    with timed(rep):
        left = normalized_F(nz, ny)
        middle = normalized_F(nz, ny, swap_m23=True)
        right = swap_zy(normalized_F(ny, nz))
        target = {"z": nz, "y": ny}
        left, middle, right = (s.truncate(target) for s in (left, middle, right))
        compare_series(rep, left, middle, "m2<->m3")
        if rep.passed:
            compare_series(rep, left, right, "z<->y")
        # coefficient of z^n m1^l vanishes for l > n; on the swapped side this is nontrivial
        for (kz, ky), c in right.coeffs.items():
            if m_degree(c, "m1") > kz:
                rep.fail(where="m1-degree bound", key=(kz, ky), coefficient=c)
                break
        rep.note(f"{len(left.coeffs)} coefficients compared")
    return rep


def denominator_argument(nz: int, grading: Grading = Z_ONLY) -> Series:
    """``-z (1 - m1)(1 - m2) / ((1 - t1^-1)(1 - t2^-1))``."""
    num = -var("z") * one_minus(var("m1")) * one_minus(var("m2"))
    f = RationalFunction.make(num, [vneg(T1), vneg(T2)])
    return Series.from_rational(f, grading, {"z": nz})


def verify_denominator(nz: int, corrupt: bool = False) -> Report:
    """``F(z, m1, m2, m3, 0)`` against the plethystic exponential of its first term."""
    rep = Report("denominator", True, {"nz": nz}, mode="exact rational coefficients")
    with timed(rep):
        args = {"z": var("z"), "m1": var("m1"), "m2": var("m2"), "m3": var("m3"), "y": None}
        lhs = localization_series(args, Z_ONLY, {"z": nz}, nz)
        if corrupt:
            key = max(lhs.coeffs)
            lhs.coeffs[key] = -lhs.coeffs[key]
        rhs = pleth_sym_series(denominator_argument(nz))
        compare_series(rep, lhs, rhs, "F(y=0) vs Sym")
    return rep
