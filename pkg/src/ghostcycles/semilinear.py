"""Semilinear sets and the unbounded-fiber-period obstruction.

A linear set is b + N-combinations of finitely many period vectors; a
semilinear set is a finite union of linear sets.  Semilinear subsets of
N^2 have a strong structural property: every fiber S_x = {y : (x, y) in
S} is eventually periodic, and the lcm of the component periods bounds
all fiber periods at once.  Contrapositively, a family of fibers with
unbounded minimal periods cannot be semilinear.

The divisibility predicate studied here,

    D_y = {(x, C) : 2**x > 3**y, C >= 1, (2**x - 3**y) | C},

has fibers that are pure arithmetic progressions of gap 2**x - 3**y, so
their minimal periods grow exponentially in x.  `fiber_period_exact`
evaluates that closed form; `fiber_period_bruteforce` rediscovers it
from the raw indicator sequence as an independent oracle; and
`nonsemilinearity_witness` turns any claimed uniform bound M into an
explicit fiber whose period exceeds it.

Period detection on a finite window is necessarily approximate for
arbitrary sets.  The detector skips the first third of the window as
transient and requires the candidate period to repeat across at least
half of the remaining tail, which makes a scan bound of 3x the true
period sufficient for arithmetic-progression-like fibers.  When no
candidate qualifies it raises Inconclusive rather than guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence


class DimensionMismatch(ValueError):
    """Point dimension differs from the set dimension."""


class FiberUndefined(ValueError):
    """(x, y) is inadmissible: 2**x <= 3**y, so the fiber has no positive gap."""


class InconclusivePeriod(RuntimeError):
    """No period could be established inside the scanned window."""


@dataclass(frozen=True, slots=True)
class LinearSet:
    """b + N-combinations of period vectors, all over N^d."""

    base: tuple[int, ...]
    periods: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "periods", tuple(tuple(v) for v in self.periods))
        d = len(self.base)
        if d < 1:
            raise ValueError("dimension must be >= 1")
        if any(c < 0 for c in self.base):
            raise ValueError(f"base must be over N, got {self.base}")
        for v in self.periods:
            if len(v) != d:
                raise DimensionMismatch(f"period vector {v} has dimension {len(v)}, expected {d}")
            if any(c < 0 for c in v):
                raise ValueError(f"period vectors must be over N, got {v}")

    @property
    def dimension(self) -> int:
        return len(self.base)


@dataclass(frozen=True, slots=True)
class SemilinearSet:
    components: tuple[LinearSet, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("a semilinear set needs at least one component")
        d = self.components[0].dimension
        if any(c.dimension != d for c in self.components):
            raise DimensionMismatch("all components must share one dimension")

    @property
    def dimension(self) -> int:
        return self.components[0].dimension


@dataclass(frozen=True, slots=True)
class FiberPeriodRecord:
    """One fiber of the divisibility predicate: gap 2**x - 3**y."""

    y: int
    x: int
    period: int


def _linear_contains(component: LinearSet, point: Sequence[int]) -> bool:
    target = [p - b for p, b in zip(point, component.base)]
    if any(t < 0 for t in target):
        return False
    vecs = [v for v in component.periods if any(v)]  # zero vectors contribute nothing

    def search(target: list[int], idx: int) -> bool:
        if all(t == 0 for t in target):
            return True
        if idx == len(vecs):
            return False
        v = vecs[idx]
        # each coefficient is bounded coordinatewise, hence by max(point)
        lim = min(t // c for t, c in zip(target, v) if c > 0)
        for lam in range(lim + 1):
            if search([t - lam * c for t, c in zip(target, v)], idx + 1):
                return True
        return False

    return search(target, 0)


def membership(s: SemilinearSet, point: Sequence[int]) -> bool:
    """Bounded coefficient search over each component.  Exact, and cheap at
    the scales used here; a general ILP-style decision is out of scope."""
    if len(point) != s.dimension:
        raise DimensionMismatch(
            f"point has dimension {len(point)}, set has dimension {s.dimension}"
        )
    if any(c < 0 for c in point):
        return False
    return any(_linear_contains(c, point) for c in s.components)


def dy_membership(y: int, x: int, c: int) -> bool:
    """All three defining clauses, evaluated exactly: admissibility of
    (x, y), positivity of C, and divisibility by 2**x - 3**y."""
    if y < 1:
        raise ValueError(f"need y >= 1, got {y}")
    if x < 0 or c < 1:
        return False
    gap = (1 << x) - 3 ** y
    return gap > 0 and c % gap == 0


def fiber_period_exact(y: int, x: int) -> FiberPeriodRecord:
    """Closed-form minimal period of the divisibility fiber at x."""
    if y < 1:
        raise ValueError(f"need y >= 1, got {y}")
    gap = (1 << x) - 3 ** y
    if gap <= 0:
        raise FiberUndefined(f"(x={x}, y={y}) is inadmissible: 2^x <= 3^y")
    return FiberPeriodRecord(y, x, gap)


def _minimal_eventual_period(bits: int, length: int) -> int:
    """Minimal p such that the indicator window repeats with gap p on its
    tail.  The first third is treated as transient; a candidate must be no
    longer than half the tail so that it is witnessed at least twice."""
    tail_from = length // 3
    tail = bits >> tail_from
    tlen = length - tail_from
    for p in range(1, tlen // 2 + 1):
        window = (1 << (tlen - p)) - 1
        if ((tail ^ (tail >> p)) & window) == 0:
            return p
    raise InconclusivePeriod(
        f"no eventual period of at most {tlen // 2} detected in a window of {length}"
    )


def fiber_period_bruteforce(y: int, x: int, scan_bound: int) -> int:
    """Rediscover the fiber period from raw membership queries.

    Builds the indicator of C -> dy_membership(y, x, C) over [1, scan_bound]
    and tests candidate periods directly; independent of the closed form.
    A scan bound of at least 3x the true period guarantees a conclusive
    and correct answer.
    """
    if (1 << x) <= 3 ** y:
        raise FiberUndefined(f"(x={x}, y={y}) is inadmissible: 2^x <= 3^y")
    bits = 0
    for c in range(1, scan_bound + 1):
        if dy_membership(y, x, c):
            bits |= 1 << (c - 1)
    return _minimal_eventual_period(bits, scan_bound)


def fiber_indicator(s: SemilinearSet, x: int, bound: int) -> int:
    """Bitmask of the fiber {y <= bound : (x, y) in S}, bit i = indicator at
    y = i.  Equivalent to pointwise membership (tests cross-check this) but
    built per component: solve the first-coordinate equation over vectors
    that grow x, then close each resulting offset under the second
    coordinates of the vectors that leave x fixed."""
    if s.dimension != 2:
        raise DimensionMismatch(f"fiber analysis needs dimension 2, got {s.dimension}")
    window = (1 << (bound + 1)) - 1
    bits = 0
    for comp in s.components:
        steps = sorted({v[1] for v in comp.periods if v[0] == 0 and v[1] > 0})
        growers = [v for v in comp.periods if v[0] > 0]
        offsets: set[int] = set()

        def collect(idx: int, remaining: int, second: int) -> None:
            if remaining == 0:
                if second <= bound:
                    offsets.add(second)
                return
            if idx == len(growers):
                return
            v = growers[idx]
            lam = 0
            while lam * v[0] <= remaining:
                collect(idx + 1, remaining - lam * v[0], second + lam * v[1])
                lam += 1

        delta = x - comp.base[0]
        if delta >= 0:
            collect(0, delta, comp.base[1])
        reach = 0
        for c in offsets:
            reach |= 1 << c
        # saturate under the steps; doubling shifts reach a fixpoint quickly
        changed = True
        while changed and reach:
            changed = False
            for p in steps:
                grown = reach
                shift = p
                while shift <= bound:
                    grown |= (grown << shift) & window
                    shift <<= 1
                if grown != reach:
                    reach = grown
                    changed = True
        bits |= reach
    return bits


def fiber_eventual_period(s: SemilinearSet, x: int, scan_bound: int) -> int:
    """Minimal eventual period of the fiber at x, detected from a simulated
    window y in [0, scan_bound].  Raises InconclusivePeriod when the window
    does not support any candidate."""
    bits = fiber_indicator(s, x, scan_bound)
    return _minimal_eventual_period(bits, scan_bound + 1)


def nonsemilinearity_witness(y: int, m: int) -> FiberPeriodRecord:
    """Least admissible x whose fiber period exceeds the claimed bound m: a
    constructive refutation of any uniform fiber-period bound."""
    if y < 1 or m < 1:
        raise ValueError(f"need y >= 1 and M >= 1, got y={y}, M={m}")
    three_y = 3 ** y
    x = three_y.bit_length()  # smallest x with 2^x > 3^y
    while (1 << x) <= three_y:  # bit_length can land one short
        x += 1
    while (1 << x) - three_y <= m:
        x += 1
    return FiberPeriodRecord(y, x, (1 << x) - three_y)


def lcm_period_bound(s: SemilinearSet) -> int:
    """lcm of the nonzero second coordinates of all period vectors: the
    uniform bound that every fiber's eventual period must divide."""
    bound = 1
    for comp in s.components:
        for v in comp.periods:
            if v[1] > 0:
                bound = math.lcm(bound, v[1])
    return bound


def random_semilinear_set(
    rng, max_components: int = 3, max_vectors: int = 3, coord_bound: int = 8
) -> SemilinearSet:
    """Synthetic generator for property tests: small random sets in N^2."""
    comps = []
    for _ in range(rng.randint(1, max_components)):
        base = (rng.randint(0, coord_bound), rng.randint(0, coord_bound))
        periods = tuple(
            (rng.randint(0, coord_bound), rng.randint(0, coord_bound))
            for _ in range(rng.randint(0, max_vectors))
        )
        comps.append(LinearSet(base, periods))
    return SemilinearSet(tuple(comps))
