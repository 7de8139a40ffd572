"""Symbol profile: the exact parameters describing a pair of Fourier symbols.

A profile records the dimension d, the number k of non-vanishing principal
curvatures of the characteristic surface (ignored when d = 1), the
vanishing orders alpha1, alpha2 of the two symbols across the surface, the
growth orders s1, s2 at infinity, and the interpolation weight kappa.
The convex combinations abar and sbar are derived properties, recomputed
on access so they can never go stale.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class SymbolProfile:
    d: int
    k: int
    alpha1: Fraction
    alpha2: Fraction
    s1: Fraction
    s2: Fraction
    kappa: Fraction

    def __post_init__(self) -> None:
        for name in ("alpha1", "alpha2", "s1", "s2", "kappa"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.d < 1:
            raise ValueError(f"dimension d = {self.d} < 1")
        if self.d >= 2 and not 1 <= self.k <= self.d - 1:
            raise ValueError(f"curvature count k = {self.k} outside 1..{self.d - 1}")
        if self.alpha1 <= -1 or self.alpha2 <= -1:
            raise ValueError("vanishing orders must exceed -1")
        if not 0 <= self.kappa <= 1:
            raise ValueError(f"kappa = {self.kappa} outside [0, 1]")

    @property
    def abar(self) -> Fraction:
        return (1 - self.kappa) * self.alpha1 + self.kappa * self.alpha2

    @property
    def sbar(self) -> Fraction:
        return (1 - self.kappa) * self.s1 + self.kappa * self.s2

    @classmethod
    def sphere_power(cls, d: int, s, kappa) -> "SymbolProfile":
        """Profile of the pair (| |D|^s - 1 |, identity): simple vanishing on
        the unit sphere, growth s at infinity."""
        k = max(d - 1, 1) if d >= 2 else 1
        return cls(d=d, k=k, alpha1=Fraction(1), alpha2=Fraction(0),
                   s1=Fraction(s), s2=Fraction(0), kappa=Fraction(kappa))

    def with_kappa(self, kappa) -> "SymbolProfile":
        return SymbolProfile(self.d, self.k, self.alpha1, self.alpha2,
                             self.s1, self.s2, Fraction(kappa))
