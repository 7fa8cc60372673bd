"""Parity-pattern validation, admissibility, and enumeration order/counts."""

from math import factorial

import pytest
from hypothesis import given, strategies as st

from ghostcycles.patterns import (
    ParityPattern,
    PatternError,
    enumerate_by_length,
    enumerate_sigmas,
    is_admissible,
    length_cells,
    validate,
)


def binom_oracle(n, k):
    # independent of math.comb on purpose
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def test_validate_examples():
    p = validate(2, 1, (0,))
    assert p.ell == 3
    assert validate(4, 2, (0, 1)) == ParityPattern(4, 2, (0, 1))
    with pytest.raises(PatternError) as err:
        validate(4, 2, (1, 2))
    assert err.value.clause == "sigma[0] must be 0"


@pytest.mark.parametrize(
    "x, y, sigma, clause",
    [
        (0, 1, (0,), "x >= 1"),
        (2, 0, (), "y >= 1"),
        (4, 2, (0,), "len(sigma) == y"),
        (4, 2, (0, 0), "sigma strictly increasing"),
        (4, 2, (0, 4), "sigma[y-1] < x"),
        (4, 2, (0, 5), "sigma[y-1] < x"),
    ],
)
def test_validate_names_the_violated_clause(x, y, sigma, clause):
    with pytest.raises(PatternError) as err:
        validate(x, y, sigma)
    assert err.value.clause == clause


def test_steps_sum_to_x_and_parity_word():
    p = ParityPattern(4, 2, (0, 1))
    assert p.steps() == (1, 3)
    assert p.parity_word() == "OEOEEE"
    assert len(p.parity_word()) == p.ell


def test_admissibility_examples():
    assert is_admissible(ParityPattern(2, 1, (0,)))
    assert not is_admissible(ParityPattern(3, 2, (0, 1)))
    assert is_admissible(ParityPattern(4, 2, (0, 1)))


def test_admissibility_against_big_integer_oracle():
    for y in range(1, 41):
        three = 3**y
        for x in range(1, 65):
            assert (1 << x) != three  # no power coincidence in range
            if y <= x:  # pattern constructible only when y <= x
                got = is_admissible(ParityPattern(x, y, tuple(range(y))))
                assert got == ((1 << x) > three)


def test_enumerate_examples():
    assert [p.sigma for p in enumerate_sigmas(1, 2)] == [(0,)]
    assert [p.sigma for p in enumerate_sigmas(2, 4)] == [(0, 1), (0, 2), (0, 3)]
    assert sum(1 for _ in enumerate_sigmas(3, 4)) == 3
    assert list(enumerate_sigmas(3, 2)) == []  # y-1 > x-1: empty, not an error


def test_enumeration_counts_match_binomial_oracle():
    for x in range(1, 17):
        for y in range(1, x + 1):
            count = sum(1 for _ in enumerate_sigmas(y, x))
            assert count == binom_oracle(x - 1, y - 1)


def test_enumeration_is_lexicographic_and_revalidates():
    seen = [p.sigma for p in enumerate_sigmas(3, 6)]
    assert seen == sorted(seen)
    for sigma in seen:
        validate(6, 3, sigma)


def test_by_length_smallest_cases():
    assert [(p.x, p.y, p.sigma, a) for p, a in enumerate_by_length(3)] == [
        (1, 1, (0,), False),
        (2, 1, (0,), True),
    ]
    four = [(p.x, p.y, p.sigma, a) for p, a in enumerate_by_length(4)]
    assert (3, 1, (0,), True) in four
    assert (2, 2, (0, 1), False) in four  # 4 < 9


def test_by_length_two_is_the_degenerate_pattern():
    assert [(p.x, p.y, p.sigma, a) for p, a in enumerate_by_length(2)] == [(1, 1, (0,), False)]
    with pytest.raises(ValueError):
        list(length_cells(1))


def test_by_length_order_is_ell_then_y_then_sigma():
    out = list(enumerate_by_length(8))
    keys = [(p.ell, p.y, p.sigma) for p, _ in out]
    assert keys == sorted(keys)
    # every ell in range is hit and counts per ell follow the cell binomials
    for ell in range(2, 9):
        expect = sum(binom_oracle(ell - y - 1, y - 1) for y in range(1, ell // 2 + 1))
        assert sum(1 for p, _ in out if p.ell == ell) == expect


@given(st.integers(2, 14))
def test_length_cells_cover_exactly_the_constructible_cells(ell_max):
    cells = list(length_cells(ell_max))
    assert cells == sorted(cells)
    assert set(cells) == {
        (x + y, y, x)
        for x in range(1, ell_max)
        for y in range(1, x + 1)
        if x + y <= ell_max
    }


def test_patterns_are_immutable():
    p = ParityPattern(4, 2, (0, 1))
    with pytest.raises(AttributeError):
        p.x = 5
