"""Self-map checks on (-1, 1) and the unit disk, and Schwarz-lemma verdicts.

A holomorphic self-map of the disk fixing 0 has |f'(0)| <= 1.  Every family
here fixes 0, so a slope above 1 means some point of the disk must be sent
outside it; ``schwarz_verdict`` goes and finds that point.  By the maximum
modulus principle it is enough to scan one circle |z| = r < 1.

All sampling is deterministic.  A "no violation" outcome only speaks for the
points that were probed.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .erf_engine import as_complex
from .errors import PoleError, ToleranceUnreachable
from .families import evaluate, origin_derivative

__all__ = [
    "Classification",
    "Domain",
    "Outcome",
    "SchwarzVerdict",
    "SelfMapVerdict",
    "check_disk",
    "check_interval",
    "disk_probes",
    "finite_difference_derivative",
    "interval_probes",
    "richardson_ratio",
    "schwarz_verdict",
]

# Known counterexample point for rational(a=1.01), always probed first.
FIRST_INTERVAL_PROBE = 0.995
ENDPOINT_DEPTH = 40


class Domain(Enum):
    INTERVAL = "interval"
    DISK = "disk"


class Outcome(Enum):
    NO_VIOLATION_FOUND = "no-violation-found"
    WITNESS = "witness"


class Classification(Enum):
    CONSISTENT_WITH_LEMMA = "consistent-with-lemma"
    LEMMA_FORCES_VIOLATION_WITNESS_FOUND = "lemma-forces-violation:witness-found"
    LEMMA_FORCES_VIOLATION_WITNESS_MISSING = "lemma-forces-violation:witness-missing"


@dataclass(frozen=True)
class SelfMapVerdict:
    domain: Domain
    outcome: Outcome
    resolution: int
    witness_point: complex = None
    witness_value: complex = None
    witness_bound: float = None
    witness_index: int = None
    radius: float = None

    @property
    def found(self):
        return self.outcome is Outcome.WITNESS


@dataclass(frozen=True)
class SchwarzVerdict:
    fixes_origin: bool
    origin_derivative_magnitude: float
    disk_verdict: SelfMapVerdict
    classification: Classification


def _van_der_corput(i):
    q, denom = 0.0, 1.0
    while i:
        denom *= 2.0
        i, bit = divmod(i, 2)
        q += bit / denom
    return q


def interval_probes(samples):
    """Ordered probe points in (-1, 1).

    The known witness 0.995 comes first, then the near-endpoint pairs
    +-(1 - 2^-j), then ``samples`` base-2 van der Corput points mapped to
    (-1, 1).  The fixed part is shared by every resolution, so probe sets for
    increasing ``samples`` are nested prefixes of one another.
    """
    if samples < 2:
        raise ValueError("need at least 2 samples")
    probes = [FIRST_INTERVAL_PROBE]
    for j in range(1, ENDPOINT_DEPTH + 1):
        edge = 1.0 - 2.0**-j
        probes.extend((edge, -edge))
    probes.extend(2.0 * _van_der_corput(i) - 1.0 for i in range(1, samples + 1))
    return probes


def unit_root(j, n):
    # Exact values at the quarter turns keep axis samples on the axes.
    if (4 * j) % n == 0:
        return (1 + 0j, 1j, -1 + 0j, -1j)[(4 * j) // n]
    theta = 2.0 * math.pi * j / n
    return complex(math.cos(theta), math.sin(theta))


def disk_probes(radius, angular_samples):
    """Axis probes r, ri, -r, -ri followed by equispaced points on |z| = r."""
    head = [complex(radius), complex(0, radius), complex(-radius), complex(0, -radius)]
    return head + [radius * unit_root(j, angular_samples) for j in range(angular_samples)]


def _probe(family, z, tol):
    # Far from the origin erf-based maps grow so large that an absolute
    # tolerance of 1e-12 is meaningless; accept the best bound on offer.
    for _ in range(4):
        try:
            return evaluate(family, z, tol)
        except ToleranceUnreachable as exc:
            if not math.isfinite(exc.attainable):
                raise
            tol = max(exc.attainable, 10 * tol)
    return evaluate(family, z, tol)


def _violates(result):
    return abs(result.value) > 1.0 + result.error_bound


def check_interval(family, samples=10_000, tol=1e-12):
    """Look for x in (-1, 1) with |f(x)| > 1; report the first one hit.

    A pole inside the interval is itself a violation and is reported with an
    infinite witness value.
    """
    probes = interval_probes(samples)
    for index, x in enumerate(probes):
        try:
            result = _probe(family, x, tol)
        except PoleError:
            return SelfMapVerdict(
                Domain.INTERVAL, Outcome.WITNESS, len(probes),
                complex(x), complex(math.inf), math.inf, index,
            )
        if _violates(result):
            return SelfMapVerdict(
                Domain.INTERVAL, Outcome.WITNESS, len(probes),
                complex(x), result.value, result.error_bound, index,
            )
    return SelfMapVerdict(Domain.INTERVAL, Outcome.NO_VIOLATION_FOUND, len(probes))


def check_disk(family, boundary_radius, angular_samples, tol=1e-12):
    """Scan |z| = boundary_radius for the point of largest |f(z)|.

    That point is returned as a witness when it clears 1 + error_bound.  Ties
    in modulus go to the earliest probe, so the axis probes win over the
    equal circle samples.
    """
    if not 0 < boundary_radius < 1:
        raise ValueError("boundary_radius must lie in (0, 1)")
    if angular_samples < 8:
        raise ValueError("need at least 8 angular samples")
    probes = disk_probes(boundary_radius, angular_samples)
    best = None
    for index, z in enumerate(probes):
        result = _probe(family, z, tol)
        if best is None or abs(result.value) > abs(best[1].value):
            best = (index, result)
    index, result = best
    if _violates(result):
        return SelfMapVerdict(
            Domain.DISK, Outcome.WITNESS, len(probes),
            probes[index], result.value, result.error_bound, index, boundary_radius,
        )
    return SelfMapVerdict(
        Domain.DISK, Outcome.NO_VIOLATION_FOUND, len(probes), radius=boundary_radius
    )


def schwarz_verdict(family, boundary_radius, angular_samples, tol=1e-12):
    fixes_origin = evaluate(family, 0, tol).value == 0
    slope = abs(origin_derivative(family, tol).value)
    disk = check_disk(family, boundary_radius, angular_samples, tol)
    if fixes_origin and slope > 1:
        if disk.found:
            classification = Classification.LEMMA_FORCES_VIOLATION_WITNESS_FOUND
        else:
            classification = Classification.LEMMA_FORCES_VIOLATION_WITNESS_MISSING
    else:
        classification = Classification.CONSISTENT_WITH_LEMMA
    return SchwarzVerdict(fixes_origin, slope, disk, classification)


def finite_difference_derivative(family, at, step=1e-5, tol=1e-12):
    """Central difference (f(at + step) - f(at - step)) / (2 step)."""
    if not step > 0:
        raise ValueError("step must be positive")
    at = as_complex(at)
    hi = evaluate(family, at + step, tol).value
    lo = evaluate(family, at - step, tol).value
    return (hi - lo) / (2 * step)


def richardson_ratio(family, at, exact, coarse=1e-4, fine=1e-5, tol=1e-12):
    """Ratio of central-difference errors at two steps; ~(coarse/fine)^2."""
    e_coarse = abs(finite_difference_derivative(family, at, coarse, tol) - exact)
    e_fine = abs(finite_difference_derivative(family, at, fine, tol) - exact)
    return e_coarse / e_fine
