"""The cycle equation and its unique 2-adic solution.

For a pattern (x, y, sigma) the cycle equation reads

    n0 * (2**x - 3**y) = sum_{k=0}^{y-1} 3**(y-1-k) * 2**sigma[k]  =  C

Both C and the modulus 2**x - 3**y are odd, so the modulus is a 2-adic
unit and n0 = modulus^-1 * C exists and is unique at any precision.
Whether that solution is an *integer* cycle is a separate, exact
question: it is one precisely when the modulus divides C in Z.  That
divisibility test is the only sound way to decide integrality; no
finite window of 2-adic digits can (a tail of zeros may always break
later).
"""

from __future__ import annotations

from dataclasses import dataclass

from .padic import PadicInt, invert_unit
from .patterns import ParityPattern, is_admissible


@dataclass(frozen=True, slots=True)
class IntegerCycle:
    """The solution is the exact (signed) integer `value`."""

    value: int


@dataclass(frozen=True, slots=True)
class Ghost:
    """The solution exists in the 2-adics but is not an integer."""


GHOST = Ghost()

Verdict = IntegerCycle | Ghost


@dataclass(frozen=True, slots=True)
class CertifiedInteger:
    value: int


@dataclass(frozen=True, slots=True)
class CertifiedGhost:
    pass


@dataclass(frozen=True, slots=True)
class Inconclusive:
    pass


Certificate = CertifiedInteger | CertifiedGhost | Inconclusive


class InadmissiblePattern(ValueError):
    """Operation needs a positive modulus, i.e. an admissible pattern."""


def cycle_constant(p: ParityPattern) -> int:
    """C = sum 3**(y-1-k) * 2**sigma[k]; always odd (the k = 0 term is the
    only odd one since sigma[0] = 0 and sigma[k] >= 1 after it)."""
    c = sum(3 ** (p.y - 1 - k) << s for k, s in enumerate(p.sigma))
    assert c & 1, "cycle constant must be odd"
    return c


def modulus(p: ParityPattern) -> int:
    """Signed 2**x - 3**y.  Odd for every valid pattern; positive exactly
    when the pattern is admissible."""
    m = (1 << p.x) - 3 ** p.y
    assert m & 1, "modulus must be odd"
    return m


def integrality_test(p: ParityPattern) -> Verdict:
    """Exact big-integer divisibility: IntegerCycle(C // m) iff m | C."""
    c = cycle_constant(p)
    q, r = divmod(c, modulus(p))
    return IntegerCycle(q) if r == 0 else GHOST


@dataclass(frozen=True, slots=True)
class GhostCycle:
    """A pattern with its cycle data and the solution at a working precision."""

    pattern: ParityPattern
    constant: int
    modulus: int
    n0: PadicInt
    verdict: Verdict


def ghost_cycle(p: ParityPattern, precision: int) -> GhostCycle:
    """Solve the cycle equation at the given precision.

    n0 is modulus^-1 * C reduced mod 2**precision; the verdict comes from
    the exact divisibility test and does not depend on the precision.
    """
    c = cycle_constant(p)
    m = modulus(p)
    n0 = invert_unit(PadicInt(m, precision)) * PadicInt(c, precision)
    assert (n0.residue * m - c) % (1 << precision) == 0
    return GhostCycle(p, c, m, n0, integrality_test(p))


def prefix_certificate(p: ParityPattern, k: int) -> Certificate:
    """Decide integrality from the low k bits of n0 when they suffice.

    Any integer solution equals C / modulus exactly, so it is bounded by
    B = ceil(C / modulus).  Once 2**k exceeds B, the low k bits pin the
    only candidate and the answer is conclusive; below that the bits
    carry no extra information (they satisfy the congruence by
    construction) unless they already exceed the bound.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if not is_admissible(p):
        raise InadmissiblePattern(
            f"pattern (x={p.x}, y={p.y}) is inadmissible; the integer bound needs a positive modulus"
        )
    c = cycle_constant(p)
    m = modulus(p)
    bound = -(-c // m)  # ceil(C / m), m > 0
    r = (invert_unit(PadicInt(m, k)) * PadicInt(c, k)).residue
    if (1 << k) > bound:
        return CertifiedInteger(r) if r * m == c else CertifiedGhost()
    if r > bound:  # no integer solution can reach past the bound
        return CertifiedGhost()
    return Inconclusive()
