import math

import pytest

from oracles import brute_force_erf, erf_on_imaginary_axis
from realschwarz.checker import (
    Classification,
    Domain,
    Outcome,
    check_disk,
    check_interval,
    disk_probes,
    finite_difference_derivative,
    interval_probes,
    richardson_ratio,
    schwarz_verdict,
)
from realschwarz.families import MapFamily, evaluate, origin_derivative

SINE = MapFamily.sine()
IDENTITY = MapFamily.rational(0)


def test_interval_probes_nested_and_inside():
    small = interval_probes(100)
    large = interval_probes(1000)
    assert large[: len(small)] == small
    assert small[0] == 0.995
    assert all(-1 < x < 1 for x in large)
    assert 1 - 2.0**-40 in small


def test_disk_probes_hit_axes_exactly():
    probes = disk_probes(0.6, 256)
    assert probes[:4] == [0.6, 0.6j, -0.6, -0.6j]
    assert probes[4 + 64] == 0.6j
    assert all(abs(abs(z) - 0.6) < 1e-15 for z in probes)


def test_rational_counterexample_on_interval():
    v = check_interval(MapFamily.rational(1.01), 10_000)
    assert v.outcome is Outcome.WITNESS and v.domain is Domain.INTERVAL
    assert v.witness_point == 0.995
    assert v.witness_value.real > 1.00001


def test_pole_inside_interval_is_a_witness():
    # g_{-4} has a pole at x = 1/2, which the van der Corput points hit.
    v = check_interval(MapFamily.rational(-4), 100)
    assert v.found
    assert abs(v.witness_value) > 1


@pytest.mark.parametrize(
    "family",
    [SINE]
    + [MapFamily.rational(a) for a in (-1, -0.5, 0, 0.5, 1)]
    + [MapFamily.scaled_erf(k) for k in (1, 5, 10, 50)],
    ids=str,
)
def test_in_regime_interval_verdicts(family):
    v = check_interval(family, 10_000)
    assert v.outcome is Outcome.NO_VIOLATION_FOUND
    assert v.resolution == 10_000 + 81


def test_sine_disk_witness():
    v = check_disk(SINE, 0.6, 256)
    assert v.found and v.domain is Domain.DISK
    assert v.witness_point == 0.6j
    assert abs(v.witness_value) == pytest.approx(math.sinh(0.3 * math.pi), abs=1e-12)
    assert v.radius == 0.6


def test_identity_has_no_disk_witness():
    assert check_disk(IDENTITY, 0.99, 256).outcome is Outcome.NO_VIOLATION_FOUND


def test_scaled_erf_disk_witness_on_imaginary_axis():
    v = check_disk(MapFamily.scaled_erf(5), 0.95, 1024)
    assert v.found
    assert v.witness_point.real == 0
    expected = erf_on_imaginary_axis(4.75) / brute_force_erf(5.0)
    assert abs(v.witness_value) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize(
    "family",
    [SINE]
    + [MapFamily.scaled_erf(k) for k in (1, 2, 5, 10)]
    + [MapFamily.rational(a) for a in (0.25, 0.5, 0.9)],
    ids=str,
)
def test_contrapositive_schwarz(family):
    v = schwarz_verdict(family, 0.99, 4096)
    assert v.fixes_origin
    assert v.origin_derivative_magnitude > 1 + 1e-9
    assert v.classification is Classification.LEMMA_FORCES_VIOLATION_WITNESS_FOUND


def test_identity_is_consistent_with_lemma():
    v = schwarz_verdict(IDENTITY, 0.99, 256)
    assert v.classification is Classification.CONSISTENT_WITH_LEMMA
    assert v.origin_derivative_magnitude == 1
    assert not v.disk_verdict.found


def test_sine_schwarz_slope():
    v = schwarz_verdict(SINE, 0.99, 4096)
    assert v.origin_derivative_magnitude == math.pi / 2


def test_missing_witness_is_flagged():
    # Too small a circle: the slope still exceeds 1 but no point leaves the disk.
    v = schwarz_verdict(MapFamily.rational(0.25), 0.1, 64)
    assert v.classification is Classification.LEMMA_FORCES_VIOLATION_WITNESS_MISSING


@pytest.mark.parametrize("family", [SINE, MapFamily.scaled_erf(2), MapFamily.rational(0.5)], ids=str)
def test_witnesses_survive_tighter_tolerance(family):
    v = check_disk(family, 0.99, 512, tol=1e-9)
    again = evaluate(family, v.witness_point, 1e-10)
    assert abs(again.value) > 1


def test_witness_monotone_in_resolution():
    family = MapFamily.rational(1.2)
    first = check_interval(family, 16)
    for samples in (64, 1024, 10_000):
        assert check_interval(family, samples).witness_point == first.witness_point


def test_verdicts_are_deterministic():
    family = MapFamily.scaled_erf(2)
    assert check_disk(family, 0.9, 128) == check_disk(family, 0.9, 128)


def test_precondition_errors():
    with pytest.raises(ValueError):
        check_disk(SINE, 1.0, 64)
    with pytest.raises(ValueError):
        check_disk(SINE, 0.5, 4)
    with pytest.raises(ValueError):
        check_interval(SINE, 1)
    with pytest.raises(ValueError):
        finite_difference_derivative(SINE, 0, 0)


def test_finite_differences_at_origin():
    assert abs(finite_difference_derivative(SINE, 0, 1e-5) - math.pi / 2) <= 1e-9
    assert abs(finite_difference_derivative(MapFamily.rational(0.5), 0, 1e-5) - 1.5) <= 1e-9
    h1 = MapFamily.scaled_erf(1)
    fd = finite_difference_derivative(h1, 0, 1e-5)
    assert abs(fd - origin_derivative(h1).value) <= 1e-7


@pytest.mark.parametrize("family", [SINE, MapFamily.scaled_erf(1)], ids=str)
def test_richardson_ratio_is_about_100(family):
    ratio = richardson_ratio(family, 0, origin_derivative(family).value)
    assert ratio == pytest.approx(100, rel=0.05)
