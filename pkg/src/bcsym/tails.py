"""Right-tail behavior of Box-Cox symmetric laws.

Two complementary descriptions:

* ``tail_index``: the regular-variation index xi of the survival function,
  S(y) ~ y^(-1/xi) slowly varying.  xi = 0 for lighter-than-power tails and
  xi = inf for heavier-than-power tails.
* ``tail_form``: the asymptotic shape of the density, either
  exp(-c * y^e) ("power" form, light) or exp(-k2 * (log y)^k1) ("log_power"
  form; k1 == 1 is a plain power law y^(-k2)).

``classify`` folds the form into one of four categories and reports the
index; the two routes are mutually consistent and tested against each other
as well as against survival-probe slopes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .distribution import BcsParams, quantile
from .families import FamilyKind, _pe_scale

__all__ = [
    "TailCategory",
    "TailForm",
    "TailReport",
    "tail_index",
    "tail_form",
    "classify",
    "empirical_tail_slope",
]

_SQRT2 = math.sqrt(2.0)

# families whose generator decays like a power of z (heavy symmetric tails)
_HEAVY_KINDS = {
    FamilyKind.CAUCHY,
    FamilyKind.STUDENT_T,
    FamilyKind.CANONICAL_SLASH,
    FamilyKind.SLASH,
}


class TailCategory(Enum):
    NON_HEAVY = "non_heavy"
    HEAVY_SUB_PARETIAN = "heavy_sub_paretian"
    PARETIAN = "paretian"
    HEAVIER_THAN_PARETIAN = "heavier_than_paretian"


@dataclass(frozen=True)
class TailForm:
    """Density tail shape: exp(-coefficient * y^exponent) when kind is
    "power", exp(-coefficient * (log y)^exponent) when kind is "log_power"."""

    kind: str
    exponent: float
    coefficient: float


@dataclass(frozen=True)
class TailReport:
    index: float
    form: TailForm
    category: TailCategory
    extrapolated: bool


def _generator_power(params: BcsParams) -> float:
    """Exponent g such that r(z^2) ~ z^(-g) for the heavy generators."""
    kind = params.family.kind
    if kind is FamilyKind.CAUCHY:
        return 2.0
    if kind is FamilyKind.STUDENT_T:
        return params.family.extra + 1.0
    if kind is FamilyKind.CANONICAL_SLASH:
        return 2.0
    if kind is FamilyKind.SLASH:
        return params.family.extra + 1.0
    raise ValueError("not a power-tailed generator")


def tail_index(params: BcsParams) -> float:
    """Right tail index xi; 0 means lighter than any power, inf heavier."""
    kind = params.family.kind
    lam = params.lam
    if lam < 0.0:
        return 1.0 / abs(lam)
    if lam > 0.0:
        if kind in _HEAVY_KINDS:
            # survival exponent is lam * (g - 1) with g the generator power
            return 1.0 / (lam * (_generator_power(params) - 1.0))
        return 0.0
    # lambda == 0: log-symmetric laws
    if kind in (FamilyKind.NORMAL, FamilyKind.LOGISTIC_I):
        return 0.0
    if kind is FamilyKind.DOUBLE_EXPONENTIAL:
        return params.sigma / _SQRT2
    if kind is FamilyKind.POWER_EXPONENTIAL:
        tau = params.family.extra
        if tau > 1.0:
            return 0.0
        if tau == 1.0:
            return params.sigma / _SQRT2
        return math.inf
    if kind is FamilyKind.LOGISTIC_II:
        return params.sigma
    return math.inf  # cauchy, student t, slashes: log-power tails


def tail_form(params: BcsParams) -> TailForm:
    """Asymptotic density shape of the right tail with explicit constants."""
    fam = params.family
    kind = fam.kind
    mu, sigma, lam = params.mu, params.sigma, params.lam

    if lam < 0.0:
        # density ~ y^(lam - 1) times a positive constant at the z-edge
        return TailForm("log_power", 1.0, 1.0 + abs(lam))

    if lam > 0.0:
        if kind in _HEAVY_KINDS:
            g = _generator_power(params)
            # y^(lam-1) * z^(-g), z ~ (y/mu)^lam/(sigma lam)
            return TailForm("log_power", 1.0, lam * (g - 1.0) + 1.0)
        if kind in (FamilyKind.NORMAL, FamilyKind.LOGISTIC_I):
            scale = 1.0 if kind is FamilyKind.LOGISTIC_I else 0.5
            return TailForm(
                "power", 2.0 * lam, scale / (sigma * lam * mu**lam) ** 2
            )
        if kind is FamilyKind.DOUBLE_EXPONENTIAL:
            return TailForm("power", lam, _SQRT2 / (sigma * lam * mu**lam))
        if kind is FamilyKind.LOGISTIC_II:
            return TailForm("power", lam, 1.0 / (sigma * lam * mu**lam))
        if kind is FamilyKind.POWER_EXPONENTIAL:
            tau = fam.extra
            p = _pe_scale(tau)
            coef = 0.5 / (p * sigma * lam * mu**lam) ** tau
            return TailForm("power", lam * tau, coef)
        raise ValueError(f"unknown family kind: {kind!r}")  # pragma: no cover

    # lambda == 0: everything is a function of log y
    if kind in (FamilyKind.NORMAL, FamilyKind.LOGISTIC_I):
        scale = 1.0 if kind is FamilyKind.LOGISTIC_I else 0.5
        return TailForm("log_power", 2.0, scale / sigma**2)
    if kind is FamilyKind.DOUBLE_EXPONENTIAL:
        return TailForm("log_power", 1.0, 1.0 + _SQRT2 / sigma)
    if kind is FamilyKind.LOGISTIC_II:
        return TailForm("log_power", 1.0, 1.0 + 1.0 / sigma)
    if kind is FamilyKind.POWER_EXPONENTIAL:
        tau = fam.extra
        p = _pe_scale(tau)
        if tau == 1.0:
            return TailForm("log_power", 1.0, 1.0 + 1.0 / (2.0 * p * sigma))
        return TailForm("log_power", tau, 0.5 / (p * sigma) ** tau)
    if kind in _HEAVY_KINDS:
        # y^-1 times powers of log y: borderline power law
        return TailForm("log_power", 1.0, 1.0)
    raise ValueError(f"unknown family kind: {kind!r}")  # pragma: no cover


def _categorize(form: TailForm) -> TailCategory:
    if form.kind == "power":
        if form.exponent >= 1.0:
            return TailCategory.NON_HEAVY
        return TailCategory.HEAVY_SUB_PARETIAN
    if form.exponent > 1.0:
        return TailCategory.HEAVY_SUB_PARETIAN
    if form.exponent == 1.0:
        if form.coefficient > 1.0:
            return TailCategory.PARETIAN
        return TailCategory.HEAVIER_THAN_PARETIAN
    return TailCategory.HEAVIER_THAN_PARETIAN


def classify(params: BcsParams) -> TailReport:
    """Tail index, form, and heaviness category, with an extrapolation flag.

    The slash tail constants are established for integer q; other q values
    follow the same formulas by continuation and are flagged.
    """
    form = tail_form(params)
    xi = tail_index(params)
    extrapolated = (
        params.family.kind is FamilyKind.SLASH
        and params.family.extra != math.floor(params.family.extra)
    )
    return TailReport(xi, form, _categorize(form), extrapolated)


def empirical_tail_slope(
    params: BcsParams, lower_mass: float = 1e-4, upper_mass: float = 1e-7
) -> float:
    """Log-log slope of the survival function between two deep quantiles.

    For a Paretian tail this approaches -1/xi.  Raises if the probe
    quantiles are not finitely representable (tail too light or too deep).
    """
    if not 0.0 < upper_mass < lower_mass < 0.5:
        raise ValueError("need 0 < upper_mass < lower_mass < 0.5")
    ya = quantile(params, 1.0 - lower_mass)
    yb = quantile(params, 1.0 - upper_mass)
    if not (math.isfinite(ya) and math.isfinite(yb)) or yb <= ya:
        raise ValueError("tail probe is not resolvable in double precision")
    return (math.log(upper_mass) - math.log(lower_mass)) / (
        math.log(yb) - math.log(ya)
    )
