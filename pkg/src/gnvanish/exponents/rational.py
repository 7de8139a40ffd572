"""Exact reciprocal-exponent arithmetic.

Every Lebesgue exponent p in [1, inf] is handled through its reciprocal
1/p, an exact rational in [0, 1].  The reciprocal 0 encodes p = inf; there
is no separate infinity symbol, so the usual duality 1/p' = 1 - 1/p is a
total involution on the type.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)
HALF = Fraction(1, 2)


def parse_rational(text: str) -> Fraction:
    """Parse 'a/b' or an integer string into an exact Fraction.

    Decimal notation is rejected on purpose: exponent arithmetic is exact
    end to end and a float literal would silently break that.
    """
    s = str(text).strip()
    if "." in s or "e" in s.lower():
        raise ValueError(f"expected exact rational 'a/b', got {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {text!r} as a rational") from exc


@dataclass(frozen=True, order=True)
class RecipExponent:
    """Reciprocal 1/p of a Lebesgue exponent, as an exact rational in [0, 1]."""

    value: Fraction

    def __post_init__(self) -> None:
        if not isinstance(self.value, Fraction):
            object.__setattr__(self, "value", Fraction(self.value))
        if not (ZERO <= self.value <= ONE):
            raise ValueError(f"reciprocal exponent {self.value} outside [0, 1]")

    @classmethod
    def from_exponent(cls, p) -> "RecipExponent":
        """Build from the exponent itself: p = 2 -> 1/2, p = 'inf' -> 0."""
        if isinstance(p, str):
            s = p.strip().lower()
            if s in ("inf", "infty", "infinity", "oo"):
                return cls(ZERO)
            p = parse_rational(s)
        p = Fraction(p)
        if p < 1:
            raise ValueError(f"Lebesgue exponent {p} < 1")
        return cls(1 / p)

    @classmethod
    def from_reciprocal(cls, v) -> "RecipExponent":
        if isinstance(v, str):
            v = parse_rational(v)
        return cls(Fraction(v))

    @property
    def dual(self) -> "RecipExponent":
        """Reciprocal of the conjugate exponent, 1/p' = 1 - 1/p."""
        return RecipExponent(ONE - self.value)

    @property
    def is_infinity(self) -> bool:
        return self.value == ZERO

    def exponent_str(self) -> str:
        if self.value == ZERO:
            return "inf"
        return str(1 / self.value)

    def __str__(self) -> str:
        return str(self.value)


def recip(x) -> Fraction:
    """Coerce a RecipExponent / Fraction / int / str to the bare Fraction 1/p."""
    if isinstance(x, RecipExponent):
        return x.value
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)
