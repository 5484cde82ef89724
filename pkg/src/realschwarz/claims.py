"""Fixed claim suite replayed by ``realschwarz verify-paper-claims``.

Each ``claim_*`` function runs one check end to end and returns a
``ClaimReport``; nothing is cached between claims.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import figures
from .checker import (
    Classification,
    check_disk,
    check_interval,
    finite_difference_derivative,
    schwarz_verdict,
)
from .erf_engine import TWO_OVER_SQRT_PI, erf_quadrature, erf_series
from .errors import ToleranceUnreachable
from .families import MapFamily, evaluate, origin_derivative

# Reference erf(1), from a 10x-budget brute-force quadrature (see tests).
ERF_ONE = 0.842700792949715
# (2/sqrt(pi)) * sum 1/(n! (2n+1)), summed by brute force (see tests).
ABS_ERF_I = 1.6504257587975428
SEED = 20101


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    description: str
    expected: str
    observed: str
    passed: bool

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.claim_id} {self.description} | expected: {self.expected} | observed: {self.observed}"


def disk_samples(count, radius, seed=SEED):
    """Deterministic points uniformly distributed over the disk |z| <= radius."""
    rng = np.random.default_rng(seed)
    r = radius * np.sqrt(rng.random(count))
    theta = 2 * np.pi * rng.random(count)
    return [complex(a, b) for a, b in zip(r * np.cos(theta), r * np.sin(theta))]


def claim_c1(count=1000, radius=4.0, budget=1e-10):
    per_method = budget / 2
    refused = disagree = 0
    worst_combined = 0.0
    worst_radius = 0.0
    for z in disk_samples(count, radius):
        try:
            s = erf_series(z, per_method)
            q = erf_quadrature(z, per_method)
        except ToleranceUnreachable:
            refused += 1
            worst_radius = max(worst_radius, abs(z))
            continue
        combined = s.error_bound + q.error_bound
        worst_combined = max(worst_combined, combined)
        if abs(s.value - q.value) > combined or combined > budget:
            disagree += 1
    return ClaimReport(
        "C1",
        f"series vs quadrature on {count} points with |z| <= {radius:g}",
        f"agreement within combined bounds <= {budget:g} at every point",
        f"{count - refused - disagree}/{count} ok; {refused} refused a {per_method:g} "
        f"tolerance (largest such |z| = {worst_radius:.3f}); {disagree} disagreements; "
        f"max combined bound {worst_combined:.3g}",
        refused == 0 and disagree == 0,
    )


def claim_c2(tol=1e-12):
    q = erf_quadrature(1.0, 1e-13).value.real
    s = erf_series(1.0, 1e-13).value.real
    dev = max(abs(q - ERF_ONE), abs(s - ERF_ONE))
    return ClaimReport(
        "C2",
        "erf(1) against the brute-force quadrature reference",
        f"|erf(1) - {ERF_ONE!r}| <= {tol:g} by both methods",
        f"quadrature {q!r}, series {s!r}, max deviation {dev:.3g}",
        dev <= tol,
    )


def claim_c3(count=1000, tol=2e-12):
    half = count // 2
    rng = np.random.default_rng(SEED + 3)
    worst = 0.0
    for x in rng.uniform(-6.0, 6.0, half):
        pos = erf_quadrature(float(x), 1e-13).value
        neg = erf_quadrature(float(-x), 1e-13).value
        worst = max(worst, abs(pos + neg))
    for z in disk_samples(count - half, 4.0, SEED + 4):
        pos = erf_series(z, 1e-6).value
        neg = erf_series(-z, 1e-6).value
        worst = max(worst, abs(pos + neg))
    return ClaimReport(
        "C3",
        f"odd symmetry on {count} real and complex samples",
        f"max |erf(-z) + erf(z)| <= {tol:g}",
        f"max {worst:.3g}",
        worst <= tol,
    )


def claim_c4(step=1e-5, tol=1e-9):
    sine = MapFamily.sine()
    slope = origin_derivative(sine).value
    fd = finite_difference_derivative(sine, 0, step).real
    ok = slope == math.pi / 2 and abs(fd - slope) <= tol and 1 < slope < 2
    return ClaimReport(
        "C4",
        "sine slope at the origin",
        f"pi/2 exactly, in (1, 2), finite difference within {tol:g}",
        f"closed form {slope!r}, finite difference {fd!r}",
        ok,
    )


def claim_c5(samples=10_000):
    g = MapFamily.rational(1.01)
    value = evaluate(g, 0.995).value.real
    verdict = check_interval(g, samples)
    ok = value > 1.00001 and verdict.found
    where = f"witness at x={verdict.witness_point.real!r}" if verdict.found else "no witness"
    return ClaimReport(
        "C5",
        "rational(a=1.01) leaves (-1, 1)",
        "g(0.995) > 1.00001 and an interval witness",
        f"g(0.995) = {value!r}; {where}",
        ok,
    )


def claim_c6(tol=1e-9):
    expected = math.sinh(0.3 * math.pi)
    verdict = check_disk(MapFamily.sine(), 0.6, 256)
    if not verdict.found:
        return ClaimReport("C6", "sine leaves the disk at |z| = 0.6", "witness", "no witness", False)
    modulus = abs(verdict.witness_value)
    on_axis = verdict.witness_point.real == 0
    return ClaimReport(
        "C6",
        "sine leaves the disk at |z| = 0.6",
        f"witness on the imaginary axis with modulus within {tol:g} of sinh(0.3 pi) = {expected!r}",
        f"witness {verdict.witness_point!r}, modulus {modulus!r}",
        on_axis and abs(modulus - expected) <= tol,
    )


def claim_c7(ks=(1, 5, 10, 50), step=1e-8, tol=1e-10, rel=1e-6):
    slopes = []
    worst_fd = 0.0
    for k in ks:
        family = MapFamily.scaled_erf(k)
        slope = origin_derivative(family).value
        fd = finite_difference_derivative(family, 0, step).real
        worst_fd = max(worst_fd, abs(slope - fd))
        slopes.append(slope)
    increasing = all(a < b for a, b in zip(slopes, slopes[1:]))
    asymptote = 2 * ks[-1] / math.sqrt(math.pi)
    rel_dev = abs(slopes[-1] - asymptote) / asymptote
    return ClaimReport(
        "C7",
        f"scaled-erf slopes for k in {list(ks)}",
        f"strictly increasing, finite difference within {tol:g}, k={ks[-1]} within {rel:g} of 2k/sqrt(pi)",
        f"slopes {[round(s, 6) for s in slopes]}, max |closed - fd| {worst_fd:.3g}, "
        f"k={ks[-1]} rel. deviation {rel_dev:.3g}",
        increasing and worst_fd <= tol and rel_dev <= rel,
    )


def claim_c8(radius=0.99, samples=4096):
    forced = [MapFamily.sine()]
    forced += [MapFamily.rational(a) for a in (0.25, 0.5, 0.9)]
    forced += [MapFamily.scaled_erf(k) for k in (1, 2, 5, 10)]
    missing = []
    for family in forced:
        v = schwarz_verdict(family, radius, samples)
        if v.classification is not Classification.LEMMA_FORCES_VIOLATION_WITNESS_FOUND:
            missing.append(f"{family}: {v.classification.value}")
    identity = schwarz_verdict(MapFamily.rational(0), radius, samples).classification
    if identity is not Classification.CONSISTENT_WITH_LEMMA:
        missing.append(f"rational(a=0): {identity.value}")
    return ClaimReport(
        "C8",
        f"Schwarz contrapositive at r={radius:g} with {samples} angles",
        f"witness for all {len(forced)} expanding maps, identity consistent",
        "all as expected" if not missing else "; ".join(missing),
        not missing,
    )


def claim_c9(ks=(1, 5, 10, 50), points=401, radial=101, angular=256, tol=1e-10):
    header, *rows = list(figures.interval_rows(ks, points))
    columns = list(zip(*rows))
    # Non-decreasing: large-k columns saturate to exactly 1.0 in doubles.
    monotone = all(all(a <= b for a, b in zip(col, col[1:])) for col in columns[1:])
    ends = max(
        max(abs(col[0] + 1), abs(col[-1] - 1)) for col in columns[1:]
    )
    disk = list(figures.disk_rows(radial, angular))[1:]
    at_origin = max(row[4] for row in disk if row[0] == 0)
    at_i = [row[4] for row in disk if row[2] == 0 and row[3] == 1]
    dev_i = abs(at_i[0] - ABS_ERF_I) if at_i else math.inf
    return ClaimReport(
        "C9",
        "figure data for both panels",
        f"monotone columns, endpoints within {tol:g} of -1/+1, |erf|=0 at r=0, "
        f"|erf(i)| within {tol:g} of {ABS_ERF_I!r}",
        f"monotone={monotone}, endpoint deviation {ends:.3g}, max |erf| at r=0 {at_origin!r}, "
        f"|erf(i)| deviation {dev_i:.3g}",
        monotone and ends <= tol and at_origin == 0 and dev_i <= tol,
    )


PAPER_CLAIMS = (claim_c1, claim_c2, claim_c3, claim_c4, claim_c5, claim_c6, claim_c7, claim_c8)
ALL_CLAIMS = PAPER_CLAIMS + (claim_c9,)
