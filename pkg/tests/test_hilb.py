import pytest
from hypothesis import given

from vertexlab.exact import TABLE, LaurentPoly, RationalFunction, Series
from vertexlab.hilb import (
    ZY, compute_F, inv_lambda_dual, swap_zy, tangent_char, tangent_weights, taut_char,
    verify_denominator, verify_symmetry,
)
from vertexlab.partitions import Partition
from strategies import partitions

t1, t2 = LaurentPoly.var("t1"), LaurentPoly.var("t2")
m1, m2 = LaurentPoly.var("m1"), LaurentPoly.var("m2")
z = LaurentPoly.var("z")


def box_sum(lam):
    return sum((t1 ** i * t2 ** j for i, j in lam.boxes()), LaurentPoly.zero())


@given(partitions(6))
def test_tangent_character_from_ext_formula(lam):
    q = box_sum(lam)
    expected = q.dual() + t1 * t2 * q - (1 - t1) * (1 - t2) * q * q.dual()
    assert tangent_char(lam) == expected
    assert len(tangent_weights(lam)) == 2 * lam.size


@given(partitions(6))
def test_tautological_fiber_has_rank_n(lam):
    fiber = taut_char(lam, LaurentPoly.const(1))
    assert sum(c for _, c in fiber.terms()) == lam.size
    assert fiber == box_sum(lam).dual()


@given(partitions(5))
def test_inverse_euler_class(lam):
    f = inv_lambda_dual(lam)
    prod = RationalFunction.make(1)
    for w in tangent_weights(lam):
        prod = prod * LaurentPoly.one_minus(tuple(-x for x in w))
    assert f * prod == RationalFunction.make(1)


def test_first_coefficient_of_F():
    f = compute_F(nz=1, ny=0, y_zero=True)
    expected = RationalFunction.make(-(1 - m1) * (1 - m2) * z, [TABLE.exps(t1=-1), TABLE.exps(t2=-1)])
    assert f.coefficient((ZY.scaled(1), 0)) == expected
    assert f.coefficient((0, 0)) == 1


def test_F_orders_are_respected():
    f = compute_F(nz=2, ny=1)
    assert f.prec == (ZY.scaled(2), ZY.scaled(1))
    assert all(kz <= ZY.scaled(2) and ky <= ZY.scaled(1) for kz, ky in f.coeffs)


def test_swap_zy_is_involution():
    f = compute_F(nz=1, ny=1)
    assert swap_zy(swap_zy(f)) == f


@pytest.mark.parametrize("nz, ny", [(0, 0), (1, 1), (2, 1), (1, 2), (2, 2)])
def test_symmetry_small_orders(nz, ny):
    rep = verify_symmetry(nz, ny)
    assert rep.passed, rep


@pytest.mark.parametrize("nz", [1, 2, 3])
def test_denominator_small_orders(nz):
    assert verify_denominator(nz).passed


def test_denominator_negative_control():
    rep = verify_denominator(2, corrupt=True)
    assert not rep.passed
    assert rep.witness["key"] == "(2,)"
    assert rep.witness["left"] != rep.witness["right"]
