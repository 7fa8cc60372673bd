"""Semilinear membership, divisibility fibers, period detection, and the
unbounded-period witness."""

import random

import pytest

from ghostcycles.semilinear import (
    DimensionMismatch,
    FiberUndefined,
    InconclusivePeriod,
    LinearSet,
    SemilinearSet,
    dy_membership,
    fiber_eventual_period,
    fiber_indicator,
    fiber_period_bruteforce,
    fiber_period_exact,
    lcm_period_bound,
    membership,
    nonsemilinearity_witness,
    random_semilinear_set,
)


def single(base, *periods):
    return SemilinearSet((LinearSet(base, tuple(periods)),))


def test_membership_examples():
    s = single((1, 1), (2, 0), (0, 3))
    assert membership(s, (5, 7))  # (1,1) + 2*(2,0) + 2*(0,3)
    singleton = single((0, 0))
    assert membership(singleton, (0, 0))
    assert not membership(singleton, (0, 1))


def test_membership_edge_cases():
    s = single((1, 1), (2, 0), (0, 3))
    assert not membership(s, (0, 0))  # below the base
    assert not membership(s, (2, 1))  # off the even offset
    assert membership(s, (1, 1))
    with pytest.raises(DimensionMismatch):
        membership(s, (1, 1, 1))
    # zero period vectors must not stall the coefficient search
    assert membership(single((1, 0), (0, 0), (1, 1)), (3, 2))
    assert not membership(single((1, 0), (0, 0)), (3, 2))


def test_component_validation():
    with pytest.raises(DimensionMismatch):
        LinearSet((0, 0), ((1,),))
    with pytest.raises(ValueError):
        LinearSet((-1, 0), ())
    with pytest.raises(ValueError):
        SemilinearSet(())
    with pytest.raises(DimensionMismatch):
        SemilinearSet((LinearSet((0,), ()), LinearSet((0, 0), ())))


def test_dy_membership_examples():
    assert dy_membership(1, 2, 3)  # 4 - 3 = 1 divides everything
    assert dy_membership(1, 3, 5)
    assert not dy_membership(1, 3, 7)
    assert not dy_membership(2, 3, 9)  # 8 < 9: inadmissible kills the clause
    assert not dy_membership(1, 3, 0)  # C >= 1 required
    with pytest.raises(ValueError):
        dy_membership(0, 3, 5)


def test_fiber_period_exact_examples():
    assert fiber_period_exact(1, 2).period == 1
    assert fiber_period_exact(1, 5).period == 29
    assert fiber_period_exact(2, 4).period == 7
    with pytest.raises(FiberUndefined):
        fiber_period_exact(2, 3)


def test_fiber_period_bruteforce_examples():
    assert fiber_period_bruteforce(1, 3, 30) == 5
    assert fiber_period_bruteforce(1, 2, 10) == 1
    assert fiber_period_bruteforce(2, 4, 30) == 7
    with pytest.raises(FiberUndefined):
        fiber_period_bruteforce(2, 3, 30)


def test_bruteforce_inconclusive_when_window_too_small():
    with pytest.raises(InconclusivePeriod):
        fiber_period_bruteforce(1, 5, 40)  # period 29 needs roughly 3x that


def test_oracles_agree_wherever_periods_are_small():
    for y in (1, 2, 3):
        three = 3**y
        x = three.bit_length()
        while (1 << x) <= three:
            x += 1
        while (1 << x) - three <= 10_000:
            exact = fiber_period_exact(y, x).period
            assert fiber_period_bruteforce(y, x, 3 * exact + 10) == exact
            x += 1


def test_fiber_eventual_period_examples():
    assert fiber_eventual_period(single((0, 0), (0, 3)), 0, 30) == 3
    assert fiber_eventual_period(single((0, 1), (1, 0)), 5, 30) == 1
    union = SemilinearSet(
        (LinearSet((0, 0), ((0, 2),)), LinearSet((0, 0), ((0, 3),)))
    )
    assert fiber_eventual_period(union, 0, 60) == 6


def test_fiber_indicator_matches_pointwise_membership():
    rng = random.Random(7)
    for _ in range(25):
        s = random_semilinear_set(rng)
        x = rng.randint(0, 10)
        bound = 40
        bits = fiber_indicator(s, x, bound)
        for yv in range(bound + 1):
            assert bool((bits >> yv) & 1) == membership(s, (x, yv))


def test_eventual_period_divides_lcm_bound():
    rng = random.Random(12345)
    for _ in range(60):
        s = random_semilinear_set(rng)
        bound = lcm_period_bound(s)
        for x in range(0, 9, 4):
            period = fiber_eventual_period(s, x, 4095)
            assert bound % period == 0


def test_witness_examples():
    rec = nonsemilinearity_witness(1, 1000)
    assert (rec.x, rec.period) == (10, 1021)
    rec = nonsemilinearity_witness(1, 1)
    assert (rec.x, rec.period) == (3, 5)
    rec = nonsemilinearity_witness(2, 100)
    assert (rec.x, rec.period) == (7, 119)


def test_witness_always_beats_the_bound():
    rng = random.Random(99)
    for _ in range(50):
        y = rng.randint(1, 6)
        m = rng.randint(1, 10**9)
        rec = nonsemilinearity_witness(y, m)
        assert rec.period > m
        assert rec.period == (1 << rec.x) - 3**y
        # minimality: one smaller x is either inadmissible or within the bound
        prev_gap = (1 << (rec.x - 1)) - 3**y
        assert prev_gap <= m
    with pytest.raises(ValueError):
        nonsemilinearity_witness(0, 5)


def test_exact_periods_strictly_increase_in_x():
    for y in (1, 2, 3):
        periods = []
        x = (3**y).bit_length()
        while (1 << x) <= 3**y:
            x += 1
        for _ in range(15):
            periods.append(fiber_period_exact(y, x).period)
            x += 1
        assert periods == sorted(set(periods))
