"""Data behind the two panels of the scaled-erf figure, as CSV rows.

Both generators yield a header row first and are fully deterministic.
"""

import csv
import math

from .checker import unit_root
from .erf_engine import erf
from .families import MapFamily, evaluate

DEFAULT_KS = (1.0, 5.0, 10.0, 50.0)


def fmt(value):
    """17 significant digits: lossless for doubles, locale independent."""
    return format(value, ".17g")


def interval_grid(points):
    """Equispaced grid on [-1, 1], symmetric so that 0 is hit exactly."""
    if points < 2:
        raise ValueError("need at least 2 points")
    last = points - 1
    return [(2 * i - last) / last for i in range(points)]


def interval_rows(ks=DEFAULT_KS, points=401, tol=1e-12):
    """Rows ``x, h_k1(x), h_k2(x), ...`` for h_k(x) = erf(kx)/erf(k)."""
    families = [MapFamily.scaled_erf(k) for k in ks]
    yield ["x"] + [f"hk_{k:g}" for k in ks]
    for x in interval_grid(points):
        yield [x] + [evaluate(f, x, tol).value.real for f in families]


def disk_rows(radial=101, angular=256, tol=1e-12):
    """Rows ``r, theta, re, im, abs_erf`` on a polar grid of the closed unit disk."""
    if radial < 2 or angular < 2:
        raise ValueError("need at least 2 radial and 2 angular points")
    yield ["r", "theta", "re", "im", "abs_erf"]
    for i in range(radial):
        r = i / (radial - 1)
        for j in range(angular):
            z = r * unit_root(j, angular)
            theta = 2 * math.pi * j / angular
            yield [r, theta, z.real, z.imag, abs(erf(z, tol).value)]


def write_csv(rows, stream):
    writer = csv.writer(stream, lineterminator="\n")
    header = next(rows)
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) for v in row])
