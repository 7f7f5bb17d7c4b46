from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vertexlab.exact import Series
from vertexlab.taut import (
    GAMMA_ROWS, GENERATORS, ConfigurationError, binom, chi, chi_line_classical,
    chi_twisted_cotangent_classical, generic_pairs, nonequivariant_series, p1p1, p1p1_cotangent_chi,
    p2, reconstruct, series_log, solve_gamma, universal_solve, verify_corollaries,
)


def expand_exterior(chi_o, chi_l, n_max, k_max):
    """Coefficients of (1 - m z)^chi_l / (1 - z)^chi_o by repeated multiplication."""
    coeffs = {(0, 0): 1}

    def mul(poly, factor):
        out = {}
        for (a, b), c in poly.items():
            for (da, db), d in factor.items():
                key = (a + da, b + db)
                if key[0] <= n_max and key[1] <= k_max:
                    out[key] = out.get(key, 0) + c * d
        return out

    geometric = {(j, 0): 1 for j in range(n_max + 1)}
    for _ in range(chi_o):
        coeffs = mul(coeffs, geometric)
    for _ in range(chi_l):
        coeffs = mul(coeffs, {(0, 0): 1, (1, 1): -1})
    return {k: v for k, v in coeffs.items() if v}


@given(st.integers(-4, 4))
def test_plane_line_bundles_by_localization(d):
    assert chi(p2(d)) == chi_line_classical("P2", d)


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_quadric_line_bundles_by_localization(a, b):
    assert chi(p1p1((a, b))) == chi_line_classical("P1xP1", (a, b))


def test_twisted_cotangent():
    assert p1p1_cotangent_chi() == chi_twisted_cotangent_classical("P1xP1", (0, 0)) == -2
    assert chi_twisted_cotangent_classical("P2", 0) == -1


def test_binom():
    assert binom(5, 2) == 10
    assert binom(-1, 3) == -1
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)
    assert binom(4, -1) == 0


@pytest.mark.parametrize("S, chi_o, chi_l", [
    (p2(0), 1, 1), (p2(1), 1, 3), (p2(2), 1, 6), (p1p1((1, 0)), 1, 2), (p1p1((1, 1)), 1, 4),
])
def test_exterior_powers_match_product_expansion(S, chi_o, chi_l):
    s = nonequivariant_series(S, "lambda", (3, 3))
    g = s.grading
    got = {(k[0] // g.unit, k[1] // g.unit): v for k, v in s.coeffs.items()}
    assert got == expand_exterior(chi_o, chi_l, 3, 3)


def test_symmetric_square_low_order():
    s = nonequivariant_series(p2(1), "sym", (2, 2))
    g = s.grading
    # n = 1: chi(Sym^k L) on S itself, i.e. chi(O(k))
    assert s.coeffs[(g.unit, 2 * g.unit)] == chi_line_classical("P2", 2)


def test_generic_pairs_avoid_walls():
    weights = [(1, -1), (2, -1), (1, 0)]
    for a, b in generic_pairs(weights, 3):
        assert all(a * x + b * y for x, y in weights)


def test_series_log_inverts_exp():
    s = nonequivariant_series(p2(1), "lambda", (3, 2))
    assert series_log(s).exp() == s


def test_gamma_solution_reproduces_target():
    target = (4, 6, 9, 3)
    sol = solve_gamma(target)
    for j in range(4):
        assert sum(sol[n] * GAMMA_ROWS[n][j] for n in GAMMA_ROWS) == target[j]


def test_dependent_generators_rejected():
    rows = dict(GAMMA_ROWS)
    first = next(iter(rows))
    rows[list(rows)[1]] = rows[first]
    with pytest.raises(ConfigurationError):
        solve_gamma((1, 1, 1, 1), rows)


def test_cobordism_reconstruction_of_new_surface():
    A = universal_solve("lambda", (2, 2))
    S = p2(2)
    direct = nonequivariant_series(S, "lambda", (2, 2))
    assert reconstruct(S.gamma, A) == direct
    wrong = tuple(x + 1 if i == 0 else x for i, x in enumerate(S.gamma))
    assert reconstruct(wrong, A) != direct


def test_generators_are_consistent():
    for name, make in GENERATORS.items():
        S = make()
        assert S.gamma == GAMMA_ROWS[name]


def test_corollaries_small():
    rep = verify_corollaries(nmax=3, rank2_n=2, cobordism_order=2)
    assert rep.passed, rep
