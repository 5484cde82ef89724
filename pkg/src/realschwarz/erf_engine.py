"""Error function on real and complex arguments, by two independent routes.

``erf_series`` sums the Maclaurin series

    erf(z) = 2/sqrt(pi) * sum_n (-1)^n z^(2n+1) / (n! (2n+1))

and reports a bound that covers both the truncated tail and the rounding
committed while summing.  ``erf_quadrature`` integrates the defining integral
along the segment from 0 to z with an adaptive Gauss-Kronrod (G7/K15) scheme.
The two share no code beyond the input validation, so each can serve as the
oracle for the other.

Inputs on the real axis (``z.imag == 0``) are evaluated in real arithmetic, so
real inputs always produce an exactly zero imaginary part.
"""

import cmath
import heapq
import math
import sys
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, ToleranceUnreachable

__all__ = [
    "EvalResult",
    "Method",
    "SERIES_RADIUS",
    "PANEL_BUDGET",
    "as_complex",
    "erf",
    "erf_derivative",
    "erf_quadrature",
    "erf_series",
]

EPS = sys.float_info.epsilon
UNIT_ROUNDOFF = EPS / 2
TWO_OVER_SQRT_PI = 2.0 / math.sqrt(math.pi)

# Beyond this radius cancellation in the alternating series destroys every
# digit of a double.
SERIES_RADIUS = 8.0
PANEL_BUDGET = 10_000
_MAX_TERMS = 2_000

# Kronrod 15-point abscissae (descending, last is the centre) and weights,
# with the weights of the embedded 7-point Gauss rule.  Gauss nodes are the
# odd-indexed Kronrod nodes plus the centre.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


class Method(Enum):
    SERIES = "series"
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed-form"


@dataclass(frozen=True)
class EvalResult:
    """A computed value with a certified absolute error bound."""

    value: complex
    error_bound: float
    terms_or_subdivisions: int
    method: Method

    def __post_init__(self):
        if not (self.error_bound >= 0 and math.isfinite(self.error_bound)):
            raise ValueError(f"error bound must be finite and >= 0, got {self.error_bound!r}")


def as_complex(z):
    """Coerce ``z`` to ``complex``, rejecting NaN and infinite components."""
    try:
        z = complex(z)
    except (TypeError, ValueError) as exc:
        raise DomainError(f"not a complex number: {z!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    return z


def _check_tol(tol):
    if not (tol > 0 and math.isfinite(tol)):
        raise ValueError(f"tolerance must be positive and finite, got {tol!r}")


def erf_series(z, tol):
    """Sum the Maclaurin series of erf until the certified error is <= tol.

    The tail after term N is bounded by geometric domination once the ratio
    of consecutive term magnitudes,

        r_n = |z|^2 (2n+1) / ((n+1)(2n+3)),

    has dropped below 1/2: tail <= |t_{N+1}| / (1 - r_{N+1}).  Since r_n is
    decreasing in n this is rigorous for complex z, where the alternating
    series test says nothing.

    Rounding is tracked with a first-order running error bound.  Requests below
    ``16 * eps * M`` (M the largest scaled term) are refused outright, as are
    requests the running bound shows to be out of reach.

    Raises:
        DomainError: if ``|z| > SERIES_RADIUS``.
        ToleranceUnreachable: if ``tol`` is under the cancellation floor.
    """
    z = as_complex(z)
    _check_tol(tol)
    radius = abs(z)
    if radius > SERIES_RADIUS:
        raise DomainError(f"|z| = {radius:.6g} exceeds the series radius {SERIES_RADIUS}")

    real = z.imag == 0
    x = z.real if real else z
    # Per-term relative error growth: one multiply by -z^2/(n+1) per step.
    growth = 3.0 if real else 6.0
    step = -(x * x)
    rz2 = radius * radius

    power = x  # (-1)^n z^(2n+1) / n!
    total = 0.0 if real else 0j
    sum_partials = 0.0
    sum_terms = 0.0
    biggest = 0.0
    n = 0
    while True:
        term = power / (2 * n + 1)
        total += term
        mag = abs(term)
        biggest = max(biggest, mag)
        sum_partials += abs(total)
        sum_terms += (growth * n + 2.0) * mag

        ratio = rz2 * (2 * n + 1) / ((n + 1) * (2 * n + 3))
        next_ratio = rz2 * (2 * n + 3) / ((n + 2) * (2 * n + 5))
        if next_ratio < 0.5:
            tail = TWO_OVER_SQRT_PI * mag * ratio / (1.0 - next_ratio)
            value = TWO_OVER_SQRT_PI * total
            rounding = (
                1.01 * UNIT_ROUNDOFF * TWO_OVER_SQRT_PI * (sum_partials + sum_terms)
                + 2.0 * UNIT_ROUNDOFF * abs(value)
            )
            floor = 16.0 * EPS * TWO_OVER_SQRT_PI * biggest
            bound = tail + rounding
            # The tail can still be shrunk; only rounding limits a retry.
            attainable = 4.0 * max(floor, rounding)
            if tol < floor:
                raise ToleranceUnreachable(
                    f"tol={tol:.3g} is below the cancellation floor {floor:.3g} at |z|={radius:.6g}",
                    attainable=attainable,
                )
            if bound <= tol:
                return EvalResult(
                    complex(value), bound, n + 1, Method.SERIES
                )
            if tail <= 1e-3 * rounding:
                raise ToleranceUnreachable(
                    f"rounding error {rounding:.3g} alone exceeds tol={tol:.3g} at |z|={radius:.6g}",
                    attainable=attainable,
                )
        n += 1
        if n > _MAX_TERMS:
            raise ToleranceUnreachable(
                f"series did not reach tol={tol:.3g} within {_MAX_TERMS} terms", attainable=math.inf
            )
        power = power * step / n


def _gauss_kronrod(f, lo, hi):
    """Apply G7/K15 on [lo, hi].

    ``f(s)`` returns the integrand value and the relative rounding error of
    that value in units of the unit roundoff.  Returns the Kronrod estimate,
    |Kronrod - Gauss| and an estimate of the rounding noise in the estimate.
    """
    centre = 0.5 * (lo + hi)
    half = 0.5 * (hi - lo)
    fc, nc = f(centre)
    kronrod = _WGK[7] * fc
    gauss = _WG[3] * fc
    noise = _WGK[7] * abs(fc) * nc
    for j in range(7):
        dx = half * _XGK[j]
        f1, n1 = f(centre - dx)
        f2, n2 = f(centre + dx)
        kronrod += _WGK[j] * (f1 + f2)
        if j % 2 == 1:
            gauss += _WG[j // 2] * (f1 + f2)
        noise += _WGK[j] * (abs(f1) * n1 + abs(f2) * n2)
    return kronrod * half, abs(kronrod - gauss) * half, noise * half * UNIT_ROUNDOFF


def _adaptive(f, scale, tol, budget, fixed_rounding=0.0):
    """Integrate ``f`` over [0, 1] so that ``scale * integral`` is good to ``tol``.

    The panel with the largest Gauss/Kronrod discrepancy is bisected until the
    summed discrepancies (never less than each panel's rounding noise) meet
    ``tol``.  Panels whose discrepancy is already below their noise are not
    split again.  Returns (integral, error bound of scale * integral, panels).
    """
    # Heap entries are (-discrepancy, seq, lo, hi, estimate, discrepancy, noise);
    # seq keeps the ordering total and deterministic.
    refinable = []
    settled = []
    est, diff, noise = _gauss_kronrod(f, 0.0, 1.0)
    seq = 0
    if diff > noise:
        refinable.append((-diff, seq, 0.0, 1.0, est, diff, noise))
    else:
        settled.append((est, diff, noise))
    err_total = max(diff, noise)
    abs_total = abs(est)
    panels = 1

    while True:
        bound = scale * (err_total * (1.0 + 1e-6) + 4.0 * UNIT_ROUNDOFF * abs_total) + fixed_rounding
        if bound <= tol:
            break
        if not refinable:
            raise ToleranceUnreachable(
                f"quadrature is noise-limited at {bound:.3g} > tol={tol:.3g}",
                attainable=2.0 * bound,
            )
        if panels >= budget:
            raise ToleranceUnreachable(
                f"panel budget {budget} exhausted with error {bound:.3g} > tol={tol:.3g}",
                attainable=math.inf,
            )
        _, _, lo, hi, pest, pdiff, pnoise = heapq.heappop(refinable)
        err_total -= max(pdiff, pnoise)
        abs_total -= abs(pest)
        mid = 0.5 * (lo + hi)
        for a, b in ((lo, mid), (mid, hi)):
            est, diff, noise = _gauss_kronrod(f, a, b)
            seq += 1
            if diff > noise:
                heapq.heappush(refinable, (-diff, seq, a, b, est, diff, noise))
            else:
                settled.append((est, diff, noise))
            err_total += max(diff, noise)
            abs_total += abs(est)
        panels += 1

    panels_all = [(e[4], e[5], e[6]) for e in refinable] + settled
    estimates = [e[0] for e in panels_all]
    if any(isinstance(e, complex) for e in estimates):
        integral = complex(
            math.fsum(e.real for e in estimates), math.fsum(e.imag for e in estimates)
        )
    else:
        integral = math.fsum(estimates)
    # Recompute the sums exactly; the running totals drift.
    err_exact = math.fsum(max(e[1], e[2]) for e in panels_all)
    abs_exact = math.fsum(abs(e) for e in estimates)
    bound = scale * (err_exact * (1.0 + 1e-6) + 4.0 * UNIT_ROUNDOFF * abs_exact) + fixed_rounding
    return integral, bound, panels


# Real arguments at least this large are computed as 1 - (tail integral).
COMPLEMENT_FROM = 2.0


def erf_quadrature(z, tol, budget=PANEL_BUDGET):
    """Adaptive Gauss-Kronrod quadrature of the defining integral.

    In general the path is the segment from 0 to z, i.e.

        erf(z) = 2/sqrt(pi) * z * int_0^1 exp(-z^2 s^2) ds.

    For real |x| >= 2 the small complement int_x^inf exp(-t^2) dt is
    integrated instead (substituting t = x/s) and subtracted from sqrt(pi)/2.
    That keeps values close to +-1 accurate to an ulp, so tables of erf on the
    real line come out monotone.

    Raises:
        ToleranceUnreachable: when the panel budget runs out, or every panel
            is noise-limited and the total still exceeds ``tol``.
    """
    z = as_complex(z)
    _check_tol(tol)
    if z == 0:
        return EvalResult(0j, 0.0, 0, Method.QUADRATURE)

    if z.imag == 0 and abs(z.real) >= COMPLEMENT_FROM:
        x = abs(z.real)
        x2 = x * x

        def tail(s):
            a = x2 / (s * s)
            return x / (s * s) * math.exp(-a), a + 6.0

        integral, bound, panels = _adaptive(
            tail, TWO_OVER_SQRT_PI, tol, budget, fixed_rounding=2.0 * UNIT_ROUNDOFF
        )
        value = math.copysign(1.0 - TWO_OVER_SQRT_PI * integral, z.real)
        return EvalResult(complex(value), bound, panels, Method.QUADRATURE)

    if z.imag == 0:
        x = z.real
        z2 = x * x

        def segment(s):
            a = z2 * s * s
            return math.exp(-a), a + 5.0
    else:
        x = z
        z2 = z * z
        az2 = abs(z2)

        def segment(s):
            return cmath.exp(-z2 * s * s), az2 * s * s + 5.0

    scale = TWO_OVER_SQRT_PI * abs(z)
    integral, bound, panels = _adaptive(segment, scale, tol, budget)
    value = TWO_OVER_SQRT_PI * x * integral
    if z.imag == 0:
        # |erf| <= 1 on the real line; projecting onto it never adds error.
        value = max(-1.0, min(1.0, value))
    return EvalResult(complex(value), bound, panels, Method.QUADRATURE)


def erf_derivative(z):
    """Closed-form derivative 2/sqrt(pi) * exp(-z^2)."""
    z = as_complex(z)
    if z.imag == 0:
        return complex(TWO_OVER_SQRT_PI * math.exp(-z.real * z.real))
    return TWO_OVER_SQRT_PI * cmath.exp(-z * z)


def erf(z, tol=1e-12):
    """Evaluate erf by the most suitable route.

    Real arguments go through quadrature.  Complex arguments use the series
    when it can certify ``tol`` and fall back to quadrature otherwise.
    """
    z = as_complex(z)
    if z.imag != 0 and abs(z) <= SERIES_RADIUS:
        try:
            return erf_series(z, tol)
        except ToleranceUnreachable:
            pass
    return erf_quadrature(z, tol)
