"""Interpolation quotients on grid functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..exponents.profile import SymbolProfile
from ..exponents.rational import recip
from ..spectral.grid import GridFunction, lp_norm
from ..spectral.multipliers import SymbolSpec, apply_multiplier


@dataclass(frozen=True)
class QuotientProblem:
    """Exact exponent data plus the concrete symbols realizing them."""

    profile: SymbolProfile
    p1: SymbolSpec
    p2: SymbolSpec
    iq: Fraction
    ir1: Fraction
    ir2: Fraction

    @classmethod
    def sphere_power(cls, d: int, s, kappa, iq, ir1, ir2=None) -> "QuotientProblem":
        """The pair (| |D|^s - 1 |, identity) on the unit sphere."""
        if ir2 is None:
            ir2 = ir1
        return cls(
            profile=SymbolProfile.sphere_power(d, s, kappa),
            p1=SymbolSpec.radial_power_minus_one(float(Fraction(s))),
            p2=SymbolSpec.identity(),
            iq=recip(iq), ir1=recip(ir1), ir2=recip(ir2),
        )

    @property
    def kappa(self) -> Fraction:
        return self.profile.kappa


@dataclass
class QuotientSample:
    family: str              # Knapp | Dilated | Annulus | Random | Custom
    parameter: float
    quotient: float
    norms: dict = field(default_factory=dict)
    kappa: float = 0.5

    def recompute(self) -> float:
        k = self.kappa
        return self.norms["numerator"] / (
            self.norms["denominator1"] ** (1.0 - k)
            * self.norms["denominator2"] ** k)

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "parameter": self.parameter,
            "quotient": self.quotient,
            "kappa": self.kappa,
            "norms": dict(self.norms),
        }


def gn_quotient(u: GridFunction, prob: QuotientProblem, family: str = "Custom",
                parameter: float = 0.0) -> QuotientSample:
    """||u||_q / (||P1(D)u||_{r1}^{1-kappa} ||P2(D)u||_{r2}^{kappa}).

    Scale invariant (homogeneity degree zero).  A vanishing denominator
    whose weight is positive means u concentrates on the characteristic
    set; that is an error, not an infinite quotient.
    """
    kappa = float(prob.kappa)
    num = lp_norm(u, prob.iq)
    den1 = lp_norm(apply_multiplier(u, prob.p1), prob.ir1)
    den2 = lp_norm(apply_multiplier(u, prob.p2), prob.ir2)
    if num == 0.0:
        raise ValueError("gn_quotient called with u = 0")
    if (den1 == 0.0 and kappa < 1.0) or (den2 == 0.0 and kappa > 0.0):
        raise ValueError("denominator degenerate: symbol norm vanishes with "
                         "positive interpolation weight")
    quotient = num / (den1 ** (1.0 - kappa) * den2 ** kappa)
    return QuotientSample(
        family=family, parameter=float(parameter), quotient=quotient,
        norms={"numerator": num, "denominator1": den1, "denominator2": den2},
        kappa=kappa)
