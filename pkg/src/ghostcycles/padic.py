"""Truncated 2-adic integer arithmetic.

A 2-adic integer is carried as a residue modulo 2**k together with its
precision k >= 1: knowing a value to k bits means knowing it mod 2**k.
Ring operations are exact modulo the smaller operand precision, so any
precision loss (for instance from dividing out powers of 2 during map
iteration) is tracked per value instead of through a global setting.

Units are exactly the odd residues.  Inversion lifts the 1-bit inverse
one doubling at a time, so it costs O(log k) big-int multiplies.
"""

from __future__ import annotations

from dataclasses import dataclass


class PrecisionError(ValueError):
    """Precision below 1, or a request exceeding the known digits."""


class ValuationIndeterminate(ValueError):
    """v2 requested on an all-zero residue.

    Every stored digit vanishes, so the true valuation is only known to
    be >= the precision; there is no correct answer to return.
    """


class NotAUnit(ValueError):
    """Inversion requested for an even residue."""


@dataclass(frozen=True, slots=True)
class PadicInt:
    """A 2-adic integer known through its low `precision` bits."""

    residue: int
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise PrecisionError(f"precision must be >= 1, got {self.precision}")
        # canonical reduction keeps equality structural
        object.__setattr__(self, "residue", self.residue & ((1 << self.precision) - 1))

    def __str__(self) -> str:
        return f"{self.residue} + O(2^{self.precision})"

    @property
    def is_unit(self) -> bool:
        return bool(self.residue & 1)

    def __add__(self, other: "PadicInt") -> "PadicInt":
        if not isinstance(other, PadicInt):
            return NotImplemented
        return PadicInt(self.residue + other.residue, min(self.precision, other.precision))

    def __sub__(self, other: "PadicInt") -> "PadicInt":
        if not isinstance(other, PadicInt):
            return NotImplemented
        return PadicInt(self.residue - other.residue, min(self.precision, other.precision))

    def __mul__(self, other: "PadicInt") -> "PadicInt":
        if not isinstance(other, PadicInt):
            return NotImplemented
        return PadicInt(self.residue * other.residue, min(self.precision, other.precision))

    def __neg__(self) -> "PadicInt":
        return PadicInt(-self.residue, self.precision)

    def v2(self) -> int:
        """2-adic valuation: index of the lowest set bit of the residue.

        Exact whenever the residue is nonzero, since the lowest set bit
        of a known digit cannot change under further refinement.
        """
        if self.residue == 0:
            raise ValuationIndeterminate(
                f"residue is 0 at precision {self.precision}; v2 is only known to be >= {self.precision}"
            )
        return (self.residue & -self.residue).bit_length() - 1

    def digits(self, n: int) -> list[int]:
        """Low n binary digits, least significant first."""
        if n > self.precision:
            raise PrecisionError(
                f"requested {n} digits but only {self.precision} are known"
            )
        return [(self.residue >> i) & 1 for i in range(n)]

    def agrees_with(self, other: "PadicInt") -> bool:
        """True iff the residues agree modulo 2**min(precisions)."""
        k = min(self.precision, other.precision)
        return ((self.residue ^ other.residue) & ((1 << k) - 1)) == 0


def make(value: int, precision: int) -> PadicInt:
    """Embed an integer, reducing it into [0, 2**precision)."""
    return PadicInt(value, precision)


def _inverse_mod_pow2(a: int, bits: int) -> int:
    """Inverse of odd `a` modulo 2**bits by Newton doubling from the 1-bit seed."""
    inv = 1
    known = 1
    while known < bits:
        known = min(2 * known, bits)
        mask = (1 << known) - 1
        inv = (inv * (2 - a * inv)) & mask
    return inv


def invert_unit(u: PadicInt) -> PadicInt:
    """Multiplicative inverse of a unit, exact at the unit's precision."""
    if not u.is_unit:
        raise NotAUnit(f"residue {u.residue} is even and has no inverse")
    return PadicInt(_inverse_mod_pow2(u.residue, u.precision), u.precision)
