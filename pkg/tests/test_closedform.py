"""Tests for the closed-form invariant formulas and their validity ranges."""

from __future__ import annotations

from fractions import Fraction

import pytest

from pellsg import (
    GeneratorSet,
    IndexConstraintViolation,
    OutOfValidityRange,
    build_family,
    compute_stats_range,
    even_p_limit,
    formula_stats,
    odd_even_params,
    odd_odd_params,
    pell,
    theorem1_frobenius,
    theorem2_genus,
    theorem2_sylvester,
    theorem3_frobenius,
    theorem4_frobenius,
    theorem5_genus,
    theorem6_genus,
    two_generator_reduction,
)
from pellsg.closedform import (
    theorem1_frobenius_unchecked,
    theorem3_condition,
    theorem3_corner_values,
    theorem3_frobenius_unchecked,
    theorem3_p_max,
    theorem4_condition,
    theorem4_corner_values,
    theorem4_frobenius_unchecked,
    theorem4_p_max,
    theorem5_genus_unchecked,
    theorem6_genus_unchecked,
)

# ── even family ──────────────────────────────────────────────────────────────


def test_even_p_limit_values():
    assert even_p_limit(2, 2, 2) == Fraction(4)
    assert even_p_limit(2, 2, 3) == Fraction(82, 3)
    assert even_p_limit(2, 2, 4) == Fraction(490, 3)
    assert even_p_limit(3, 2, 2) == Fraction(9)


def test_even_family_worked_values():
    """(12, 70, 985): levels 0..3 of all three invariants."""
    g = [theorem1_frobenius(2, 2, 2, p) for p in range(4)]
    n = [theorem2_genus(2, 2, 2, p) for p in range(4)]
    s = [theorem2_sylvester(2, 2, 2, p) for p in range(4)]
    assert g == [1323, 1743, 2163, 2583]
    assert n == [662, 1082, 1502, 1922]
    assert s == [347209, 713239, 1255669, 1974499]


def test_even_family_larger_instances():
    assert theorem1_frobenius(2, 2, 3, 27) == 17419
    assert theorem1_frobenius(2, 2, 4, 27) == 45139
    assert theorem2_genus(2, 2, 4, 27) == 28240
    assert theorem2_sylvester(2, 2, 4, 27) == 538696635


def test_even_family_validity():
    with pytest.raises(OutOfValidityRange):
        theorem1_frobenius(2, 2, 2, 4)  # strict bound is exactly 4
    with pytest.raises(OutOfValidityRange):
        theorem2_genus(2, 2, 2, -1)
    with pytest.raises(OutOfValidityRange):
        theorem2_sylvester(2, 2, 3, 28)  # bound 82/3, so p = 28 is out
    assert theorem1_frobenius(2, 2, 3, 27) > 0  # p = 27 is still in
    with pytest.raises(IndexConstraintViolation):
        theorem1_frobenius(2, 3, 2, 0)  # i > k
    with pytest.raises(IndexConstraintViolation):
        theorem1_frobenius(1, 2, 2, 0)


# ── odd-family division parameters ───────────────────────────────────────────


def test_odd_odd_params_values():
    assert odd_odd_params(2, 4, 3) == type(odd_odd_params(2, 4, 3))(197, 0)
    assert (odd_odd_params(2, 5, 3).q1, odd_odd_params(2, 5, 3).r1) == (1147, 3)
    assert (odd_odd_params(2, 3, 3).q1, odd_odd_params(2, 3, 3).r1) == (33, 2)
    assert (odd_odd_params(3, 3, 3).q1, odd_odd_params(3, 3, 3).r1) == (118, 3)


def test_odd_even_params_values():
    assert (odd_even_params(2, 3, 4).q, odd_even_params(2, 3, 4).r) == (28, 1)
    assert (odd_even_params(2, 4, 4).q, odd_even_params(2, 4, 4).r) == (164, 1)
    assert (odd_even_params(2, 5, 6).q, odd_even_params(2, 5, 6).r) == (164, 1)


def test_params_reconstruction_identities():
    """q1 P_k + u r1 recovers P_{2i+1} (with q1 == 1 mod u maximal); likewise
    q (P_k/u) + r with 0 <= r < P_k/u."""
    for u in (2, 3, 4):
        for i in range(2, 7):
            for k in range(3, 2 * i, 2):
                par = odd_odd_params(u, i, k)
                pk, p2i1 = pell(u, k), pell(u, 2 * i + 1)
                assert par.q1 * pk + u * par.r1 == p2i1
                assert par.q1 % u == 1
                assert 0 <= par.r1 < pk
                assert (par.q1 + u) * pk > p2i1  # maximality of q1
            for k in range(4, 2 * i + 1, 2):
                par = odd_even_params(u, i, k)
                pk_u = pell(u, k) // u
                assert par.q * pk_u + par.r == pell(u, 2 * i + 1)
                assert 0 <= par.r < pk_u


def test_params_reject_bad_indices():
    with pytest.raises(IndexConstraintViolation):
        odd_odd_params(2, 4, 4)  # wrong parity
    with pytest.raises(IndexConstraintViolation):
        odd_even_params(2, 4, 5)  # wrong parity
    with pytest.raises(IndexConstraintViolation):
        odd_odd_params(2, 2, 5)  # degenerate range
    with pytest.raises(IndexConstraintViolation):
        odd_even_params(2, 2, 6)  # degenerate range


# ── odd-odd family ───────────────────────────────────────────────────────────


def test_theorem3_worked_values():
    assert theorem3_frobenius(2, 4, 3, 0) == 2738539
    assert theorem3_frobenius(2, 5, 3, 0) == 92798917
    assert theorem3_p_max(2, 4, 3) == 98
    assert theorem3_frobenius(2, 4, 3, 98) == 5455099
    assert theorem3_frobenius_unchecked(2, 4, 3, 100) == 5510539
    with pytest.raises(OutOfValidityRange):
        theorem3_frobenius(2, 4, 3, 99)


def test_theorem3_branches():
    assert not theorem3_condition(2, 4, 3)  # r1 = 0 forces the second corner
    assert theorem3_condition(2, 5, 3)
    first, second = theorem3_corner_values(2, 5, 3, 0)
    assert first == 92798917


def test_theorem5_worked_values():
    assert theorem5_genus(2, 3, 3, 16) == 118324
    assert theorem5_genus_unchecked(2, 3, 3, 17) == 123079
    with pytest.raises(OutOfValidityRange):
        theorem5_genus(2, 3, 3, 17)


# ── odd-even family ──────────────────────────────────────────────────────────


def test_theorem4_worked_values():
    assert theorem4_frobenius(2, 3, 4, 0) == 160579
    assert theorem4_frobenius(2, 5, 6, 0) == 186412240
    assert theorem4_p_max(2, 3, 4) == 28
    assert theorem4_frobenius(2, 3, 4, 28) == 321327
    assert theorem4_frobenius_unchecked(2, 3, 4, 29) == 327068
    with pytest.raises(OutOfValidityRange):
        theorem4_frobenius(2, 3, 4, 29)


def test_theorem4_branches():
    assert theorem4_condition(2, 3, 4)
    assert not theorem4_condition(2, 5, 6)
    # the second corner at the first level past the guarantee
    assert theorem4_corner_values(2, 3, 4, 29) == (327068, 326252)


def test_theorem6_worked_values():
    assert theorem6_genus(2, 3, 4, 28) == 243404
    assert theorem6_genus_unchecked(2, 3, 4, 29) == 249140
    with pytest.raises(OutOfValidityRange):
        theorem6_genus(2, 3, 4, 29)


def test_selected_branch_is_max_corner():
    """The dichotomy condition always picks the larger corner candidate."""
    for u in (2, 3):
        for i in range(2, 6):
            for k in range(3, 2 * i, 2):
                for p in (0, 1, theorem3_p_max(u, i, k)):
                    first, second = theorem3_corner_values(u, i, k, p)
                    assert theorem3_frobenius_unchecked(u, i, k, p) == max(first, second)
            for k in range(4, 2 * i + 1, 2):
                for p in (0, 1, theorem4_p_max(u, i, k)):
                    first, second = theorem4_corner_values(u, i, k, p)
                    assert theorem4_frobenius_unchecked(u, i, k, p) == max(first, second)


# ── degenerate instances ─────────────────────────────────────────────────────


def test_two_generator_reduction():
    assert two_generator_reduction(2, 2, 5) == 29 * 169 - 29 - 169
    eng = compute_stats_range(GeneratorSet((29, 169, 2378)), 0)
    assert eng[0].frobenius == two_generator_reduction(2, 2, 5) == 4703
    with pytest.raises(IndexConstraintViolation):
        two_generator_reduction(2, 3, 4)  # regular range, not degenerate


# ── engine cross-checks & dispatch ───────────────────────────────────────────


def test_formulas_match_engine_small_sweep():
    cases = [
        ("even", 2, 2, 2),
        ("even", 3, 2, 2),
        ("odd-odd", 2, 3, 3),
        ("odd-odd", 3, 3, 3),
        ("odd-even", 2, 3, 4),
        ("odd-even", 3, 3, 4),
    ]
    for family, u, i, k in cases:
        inst = build_family(family, u, i, k)
        pmax = min(inst.max_p, 6)
        stats = compute_stats_range(inst.triple, pmax)
        for p in range(pmax + 1):
            want = formula_stats(inst, p)
            for attr, val in want.items():
                assert getattr(stats[p], attr) == val, (family, u, i, k, p, attr)


def test_formula_stats_dispatch():
    even = build_family("even", 2, 2, 2)
    assert set(formula_stats(even, 0)) == {"frobenius", "genus", "sylvester_sum"}
    oo = build_family("odd-odd", 2, 3, 3)
    assert set(formula_stats(oo, 0)) == {"frobenius", "genus"}
    deg = build_family("odd-odd", 2, 2, 5)
    assert formula_stats(deg, 0) == {"frobenius": 4703}
    with pytest.raises(OutOfValidityRange):
        formula_stats(deg, 1)
    with pytest.raises(OutOfValidityRange):
        formula_stats(oo, 17)
    assert formula_stats(oo, 17, force=True)["genus"] == 123079
    assert formula_stats(even, 4, force=True)["frobenius"] == theorem1_frobenius_unchecked(
        2, 2, 2, 4
    )
