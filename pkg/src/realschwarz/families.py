"""The three origin-fixing analytic maps of (-1, 1) and their slopes at 0.

    sine          g(x)   = sin(pi x / 2)
    rational(a)   g_a(x) = (a + 1) x / (1 + a x^2)
    scaled_erf(k) h_k(x) = erf(k x) / erf(k)
"""

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .erf_engine import (
    SERIES_RADIUS,
    TWO_OVER_SQRT_PI,
    UNIT_ROUNDOFF,
    EvalResult,
    Method,
    as_complex,
    erf_quadrature,
    erf_series,
)
from .errors import DomainError, PoleError, ToleranceUnreachable

__all__ = [
    "Family",
    "MapFamily",
    "OriginDerivative",
    "Formula",
    "evaluate",
    "origin_derivative",
    "rational_boundary_limit",
]

POLE_GUARD = 1e-12
# Closed forms are charged a few ulps so a rounding artefact can never pass
# for a violation of |f| < 1.
_CLOSED_FORM_ULPS = 8.0


class Family(Enum):
    SINE = "sine"
    RATIONAL = "rational"
    SCALED_ERF = "scaled-erf"


class Formula(Enum):
    HALF_PI = "pi/2"
    ONE_PLUS_A = "1+a"
    ERF_RATIO = "2k/(sqrt(pi) erf(k))"


@dataclass(frozen=True)
class MapFamily:
    tag: Family
    a: float = None
    k: float = None

    def __post_init__(self):
        if self.tag is Family.RATIONAL:
            if self.a is None or not math.isfinite(self.a):
                raise ValueError("rational family needs a finite parameter a")
        elif self.tag is Family.SCALED_ERF:
            if self.k is None or not (math.isfinite(self.k) and self.k > 0):
                raise ValueError("scaled-erf family needs k > 0")

    @classmethod
    def sine(cls):
        return cls(Family.SINE)

    @classmethod
    def rational(cls, a):
        return cls(Family.RATIONAL, a=float(a))

    @classmethod
    def scaled_erf(cls, k):
        return cls(Family.SCALED_ERF, k=float(k))

    @property
    def non_selfmap(self):
        """True for rational maps with |a| > 1, which leave (-1, 1)."""
        return self.tag is Family.RATIONAL and abs(self.a) > 1

    def __str__(self):
        if self.tag is Family.RATIONAL:
            return f"rational(a={self.a:g})"
        if self.tag is Family.SCALED_ERF:
            return f"scaled-erf(k={self.k:g})"
        return "sine"


@dataclass(frozen=True)
class OriginDerivative:
    value: float
    formula: Formula


def _closed(value):
    return EvalResult(
        complex(value), _CLOSED_FORM_ULPS * UNIT_ROUNDOFF * abs(value), 0, Method.CLOSED_FORM
    )


def _eval_sine(z):
    if z.imag == 0:
        return _closed(math.sin(0.5 * math.pi * z.real))
    return _closed(cmath.sin(0.5 * math.pi * z))


def _eval_rational(a, z):
    x = z.real if z.imag == 0 else z
    denom = 1.0 + a * x * x
    if abs(denom) < POLE_GUARD:
        raise PoleError(f"rational(a={a:g}) has a pole at z={z!r}")
    return _closed((a + 1.0) * x / denom)


@lru_cache(maxsize=256)
def _erf_of_k(k, tol):
    """erf(k) by quadrature, tightened until its relative error is <= tol/8."""
    denom = erf_quadrature(k, tol / 8)
    if denom.value.real < 0.5:
        denom = erf_quadrature(k, tol * denom.value.real / 8)
    return denom


def _eval_scaled_erf(k, z, tol):
    try:
        denom = _erf_of_k(k, tol)
    except ToleranceUnreachable as exc:
        raise ToleranceUnreachable(
            f"scaled-erf(k={k:g}): erf(k) to {tol / 8:.3g}: {exc}", attainable=8 * exc.attainable
        ) from exc
    # Same accuracy for numerator and denominator: at x = 1 both are computed
    # identically and the quotient is exactly 1.
    part_tol = tol * min(1.0, denom.value.real) / 8
    w = k * z
    try:
        numer = _erf_numerator(w, part_tol)
    except ToleranceUnreachable as exc:
        raise ToleranceUnreachable(
            f"scaled-erf(k={k:g}) at z={z!r}: {exc}",
            attainable=exc.attainable * tol / part_tol,
        ) from exc
    d = denom.value.real
    e_d = denom.error_bound
    ratio = numer.value / d
    if w.imag == 0 and abs(z.real) <= 1:
        # erf(kx)/erf(k) lies in [-1, 1] for |x| <= 1; clip rounding overshoot.
        ratio = complex(max(-1.0, min(1.0, ratio.real)))
    bound = (numer.error_bound + abs(ratio) * e_d) / (d - e_d) + 2 * UNIT_ROUNDOFF * abs(ratio)
    return EvalResult(ratio, bound, numer.terms_or_subdivisions, numer.method)


def _erf_numerator(w, tol):
    # Complex arguments inside the series radius take the series; everything
    # else (real axis, or |w| beyond the radius) takes quadrature.
    if w.imag != 0 and abs(w) <= SERIES_RADIUS:
        return erf_series(w, tol)
    return erf_quadrature(w, tol)


def evaluate(family, z, tol=1e-12):
    """Evaluate ``family`` at ``z`` and return an ``EvalResult``.

    Sine and rational values are closed forms carrying a few-ulp bound.
    Scaled-erf values propagate the bounds of numerator and denominator
    through the quotient rule (e_N + |N/D| e_D) / (|D| - e_D).

    Raises:
        PoleError: rational map evaluated within 1e-12 of 1 + a z^2 = 0.
        ToleranceUnreachable: propagated from the erf engine.
    """
    z = as_complex(z)
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol!r}")
    if family.tag is Family.SINE:
        return _eval_sine(z)
    if family.tag is Family.RATIONAL:
        return _eval_rational(family.a, z)
    if family.tag is Family.SCALED_ERF:
        return _eval_scaled_erf(family.k, z, tol)
    raise DomainError(f"unknown family {family!r}")


def origin_derivative(family, tol=1e-12):
    if family.tag is Family.SINE:
        return OriginDerivative(0.5 * math.pi, Formula.HALF_PI)
    if family.tag is Family.RATIONAL:
        return OriginDerivative(1.0 + family.a, Formula.ONE_PLUS_A)
    k = family.k
    return OriginDerivative(TWO_OVER_SQRT_PI * k / _erf_of_k(k, tol).value.real, Formula.ERF_RATIO)


def rational_boundary_limit(a):
    """Limit of g_a(z) as z -> i, namely (1 + a)/(1 - a) * i."""
    if a == 1:
        raise PoleError("g_1 has a pole at z = i")
    return complex(0.0, (1.0 + a) / (1.0 - a))
