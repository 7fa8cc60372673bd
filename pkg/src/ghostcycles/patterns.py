"""Parity patterns: the combinatorial shape of a hypothetical cycle.

A pattern (x, y, sigma) has y odd steps and x halvings; sigma[k] is the
cumulative number of halvings performed before the k-th odd step, so

    0 = sigma[0] < sigma[1] < ... < sigma[y-1] < x.

A pattern is *admissible* when 2**x > 3**y, the size constraint a
positive cycle value must satisfy.  Inadmissible patterns stay fully
representable: their cycle equation still has a unique 2-adic solution,
and the negative integer cycles they produce are useful cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator


class PatternError(ValueError):
    """A structural constraint failed; `clause` names the violated one."""

    def __init__(self, clause: str, message: str):
        self.clause = clause
        super().__init__(message)


@dataclass(frozen=True, slots=True)
class ParityPattern:
    x: int
    y: int
    sigma: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(self.sigma))
        x, y, sigma = self.x, self.y, self.sigma
        if x < 1:
            raise PatternError("x >= 1", f"x must be >= 1, got {x}")
        if y < 1:
            raise PatternError("y >= 1", f"y must be >= 1, got {y}")
        if len(sigma) != y:
            raise PatternError(
                "len(sigma) == y", f"sigma has {len(sigma)} entries, expected y = {y}"
            )
        if sigma[0] != 0:
            raise PatternError("sigma[0] must be 0", "sigma[0] must be 0")
        for i in range(1, y):
            if sigma[i] <= sigma[i - 1]:
                raise PatternError(
                    "sigma strictly increasing",
                    f"sigma must be strictly increasing, but sigma[{i}] = {sigma[i]} "
                    f"<= sigma[{i - 1}] = {sigma[i - 1]}",
                )
        if sigma[-1] >= x:
            raise PatternError(
                "sigma[y-1] < x", f"sigma[{y - 1}] = {sigma[-1]} must be < x = {x}"
            )

    @property
    def ell(self) -> int:
        """Cycle length x + y."""
        return self.x + self.y

    def steps(self) -> tuple[int, ...]:
        """Halving counts (s_1, ..., s_y) between consecutive odd steps, with
        sigma_y taken to be x.  Each s_k >= 1 by the ordering constraints."""
        full = self.sigma + (self.x,)
        return tuple(full[k] - full[k - 1] for k in range(1, self.y + 1))

    def parity_word(self) -> str:
        """Expected step parities around the cycle: 'O' for an odd step,
        then 'E' repeated s_k times, for k = 1..y.  Length is ell."""
        return "".join("O" + "E" * s for s in self.steps())


def validate(x: int, y: int, sigma) -> ParityPattern:
    """Build a pattern, raising PatternError naming the violated clause."""
    return ParityPattern(x, y, tuple(sigma))


def is_admissible(p: ParityPattern) -> bool:
    """Exact comparison 2**x > 3**y; never goes through logarithms."""
    return (1 << p.x) > 3 ** p.y


def enumerate_sigmas(y: int, x: int) -> Iterator[ParityPattern]:
    """All valid patterns for fixed (y, x), in lexicographic sigma order.

    sigma[0] = 0 is forced; the remaining y-1 entries run over strictly
    increasing choices from {1, ..., x-1}.  Yields binomial(x-1, y-1)
    patterns (none when y - 1 > x - 1).
    """
    if x < 1 or y < 1:
        raise PatternError("x >= 1" if x < 1 else "y >= 1", f"need x, y >= 1, got x={x}, y={y}")
    for rest in combinations(range(1, x), y - 1):
        yield ParityPattern(x, y, (0,) + rest)


def length_cells(ell_max: int) -> Iterator[tuple[int, int, int]]:
    """(ell, y, x) triples covering all patterns with x + y <= ell_max, in
    canonical scan order: by ell, then y.  y <= x structurally, so y only
    runs up to ell // 2."""
    if ell_max < 2:
        raise ValueError(f"no pattern has length below 2, got ell_max = {ell_max}")
    for ell in range(2, ell_max + 1):
        for y in range(1, ell // 2 + 1):
            yield ell, y, ell - y


def enumerate_by_length(ell_max: int) -> Iterator[tuple[ParityPattern, bool]]:
    """Every pattern with x + y <= ell_max, tagged with its admissibility.

    Deterministic order: by ell, then y, then lexicographic sigma.
    ell_max = 2 is accepted and yields the single (structurally valid,
    inadmissible) pattern (1, 1, (0,)).
    """
    for _ell, y, x in length_cells(ell_max):
        for p in enumerate_sigmas(y, x):
            yield p, is_admissible(p)
