"""Generalized Sylvester sequences: values, identities, growth."""

import math
from fractions import Fraction

import pytest

from egyfrac.sylvester import (
    DEFAULT_DEPTH_CAP,
    SylvesterTable,
    check_identities,
    sylvester_term,
    sylvester_u,
)


def test_u_frozen_values():
    assert sylvester_u(1, 1) == 1
    assert sylvester_u(2, 1) == 2
    assert sylvester_u(3, 1) == 6
    assert sylvester_u(4, 1) == 42
    assert sylvester_u(5, 1) == 1806
    assert sylvester_u(1, 5) == 5
    assert sylvester_u(2, 5) == 30
    assert sylvester_u(3, 2) == 42
    assert sylvester_u(4, 2) == 1806


def test_companion_terms_q1():
    assert [sylvester_term(p, 1) for p in range(1, 6)] == [2, 3, 7, 43, 1807]


def test_seed_two_shifts_seed_one():
    # u(p, 2) == u(p+1, 1): seeding at 2 just skips the first step
    for p in range(1, 8):
        assert sylvester_u(p, 2) == sylvester_u(p + 1, 1)


def test_recurrence_direct():
    for q in (1, 2, 3, 7, 10):
        for p in range(1, 7):
            u = sylvester_u(p, q)
            assert sylvester_u(p + 1, q) == u * (u + 1)


def test_growth_envelope():
    # doubly exponential: q^(2^(p-1)) <= u(p, q) < (q+1)^(2^(p-1)) for q >= 2
    for q in range(2, 11):
        for p in range(1, 9):
            e = 2 ** (p - 1)
            u = sylvester_u(p, q)
            assert q**e <= u < (q + 1) ** e


def test_first_two_terms_coprime():
    # 1 + u(1, q) and 1 + u(2, q) never share a factor
    for q in range(1, 101):
        assert math.gcd(sylvester_term(1, q), sylvester_term(2, q)) == 1


def test_table_prefix_and_caching():
    table = SylvesterTable(3)
    assert table.prefix(4) == [3, 12, 156, 24492]
    assert table.u(2) == 12  # served from the memo
    assert table.term(1) == 4


def test_table_rejects_bad_indices():
    table = SylvesterTable(2, depth_cap=5)
    with pytest.raises(ValueError):
        table.u(0)
    with pytest.raises(ValueError):
        table.u(6)  # beyond the cap
    assert table.u(5) == sylvester_u(5, 2)
    with pytest.raises(ValueError):
        SylvesterTable(0)
    with pytest.raises(ValueError):
        SylvesterTable(2, depth_cap=0)
    with pytest.raises(ValueError):
        sylvester_u(1, 0)
    assert DEFAULT_DEPTH_CAP >= 16


def test_identities_hold():
    report = check_identities(12, 10)
    assert report.passed
    assert report.counterexamples == []
    assert report.stats.nodes == 120
    assert not report.budget_exceeded


def test_identities_by_hand():
    # 1/2 + 1/3 + 1/7 == 1 - 1/42 and 2*3*7 == 42
    total = sum(Fraction(1, sylvester_term(p, 1)) for p in range(1, 4))
    assert total == 1 - Fraction(1, 42)
    assert math.prod(sylvester_term(p, 1) for p in range(1, 4)) == 42
    # seed 5: 1/6 == 1/5 - 1/30
    assert Fraction(1, sylvester_term(1, 5)) == Fraction(1, 5) - Fraction(1, 30)


def test_check_identities_rejects_empty_ranges():
    with pytest.raises(ValueError):
        check_identities(0, 5)
    with pytest.raises(ValueError):
        check_identities(5, 0)
