"""Command-line front end.

Complex literals use the ``a+bi`` form with either part optional:
``0.6i``, ``-1``, ``0.3-0.2i``, ``i``.

Exit codes: 0 on success, 1 on a usage error, 2 on a domain or evaluation
error.  ``verify-paper-claims`` exits with the number of failing claims, so a
single failure shares code 1 with a usage error.
"""

import argparse
import contextlib
import math
import sys

from . import claims, figures
from .checker import check_disk, check_interval, schwarz_verdict
from .erf_engine import as_complex
from .errors import DomainError, ToleranceUnreachable
from .families import MapFamily, evaluate

EXIT_USAGE = 1
EXIT_DOMAIN = 2

fmt = figures.fmt


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_complex(text):
    """Parse an ``a+bi`` literal into a finite complex number."""
    text = text.strip()
    if "j" in text or "J" in text or not text:
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r} (use a+bi)")
    if text.endswith("i"):
        text = text[:-1] + "j"
    try:
        return as_complex(complex(text))
    except (ValueError, DomainError):
        raise argparse.ArgumentTypeError(f"bad complex literal {text!r} (use a+bi)") from None


def format_complex(z):
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{fmt(z.real)}{sign}{fmt(abs(z.imag))}i"


def _family(args):
    if args.family == "sine":
        return MapFamily.sine()
    if args.family == "rational":
        if args.a is None:
            raise DomainError("--family rational needs --a")
        return MapFamily.rational(args.a)
    if args.k is None:
        raise DomainError("--family scaled-erf needs --k")
    return MapFamily.scaled_erf(args.k)


def _k_list(text):
    try:
        ks = [float(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad k list {text!r}") from None
    if not ks or any(not (math.isfinite(k) and k > 0) for k in ks):
        raise argparse.ArgumentTypeError("every k must be positive")
    return ks


def _verdict_fields(v):
    fields = [f"domain={v.domain.value}", f"outcome={v.outcome.value}", f"resolution={v.resolution}"]
    if v.radius is not None:
        fields.append(f"radius={fmt(v.radius)}")
    if v.found:
        fields += [
            f"point={format_complex(v.witness_point)}",
            f"value={format_complex(v.witness_value)}",
            f"abs={fmt(abs(v.witness_value))}",
            f"error_bound={fmt(v.witness_bound)}",
        ]
    return fields


def cmd_eval(args, out):
    result = evaluate(_family(args), args.at, args.tol)
    print(
        f"value={format_complex(result.value)} abs={fmt(abs(result.value))} "
        f"error_bound={fmt(result.error_bound)} method={result.method.value} "
        f"count={result.terms_or_subdivisions}",
        file=out,
    )
    return 0


def cmd_check_interval(args, out):
    family = _family(args)
    verdict = check_interval(family, args.samples or 10_000, args.tol)
    print(" ".join([f"family={family}"] + _verdict_fields(verdict)), file=out)
    return 0


def cmd_check_disk(args, out):
    family = _family(args)
    verdict = check_disk(family, args.radius, args.samples or 4096, args.tol)
    print(" ".join([f"family={family}"] + _verdict_fields(verdict)), file=out)
    return 0


def cmd_schwarz(args, out):
    family = _family(args)
    v = schwarz_verdict(family, args.radius, args.samples or 4096, args.tol)
    head = [
        f"family={family}",
        f"fixes_origin={str(v.fixes_origin).lower()}",
        f"origin_derivative={fmt(v.origin_derivative_magnitude)}",
        f"classification={v.classification.value}",
    ]
    print(" ".join(head + _verdict_fields(v.disk_verdict)), file=out)
    return 0


def cmd_verify_paper_claims(args, out):
    failures = 0
    for claim in claims.PAPER_CLAIMS:
        report = claim()
        failures += not report.passed
        print(report.line(), file=out, flush=True)
    total = len(claims.PAPER_CLAIMS)
    print(f"{total - failures}/{total} claims pass", file=out)
    return failures


def cmd_figure_interval(args, out):
    figures.write_csv(figures.interval_rows(args.k, args.points, args.tol), out)
    return 0


def cmd_figure_disk(args, out):
    figures.write_csv(figures.disk_rows(args.radial, args.angular, args.tol), out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-12, help="absolute tolerance (default 1e-12)")
    common.add_argument("--out", default="-", help="output path (default stdout)")
    common.add_argument("--samples", type=int, default=None, help="sample count")

    family = argparse.ArgumentParser(add_help=False)
    family.add_argument("--family", required=True, choices=("sine", "rational", "scaled-erf"))
    family.add_argument("--a", type=float, help="rational parameter a")
    family.add_argument("--k", type=float, help="scaled-erf parameter k > 0")

    disk = argparse.ArgumentParser(add_help=False)
    disk.add_argument("--radius", type=float, default=0.99, help="scan radius in (0, 1)")

    parser = _Parser(
        prog="realschwarz",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common, family], help="evaluate a map at a point")
    p.add_argument("--at", type=parse_complex, required=True, help="point, e.g. 0.6i or 0.3-0.2i")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check-interval", parents=[common, family], help="look for |f(x)| > 1 on (-1, 1)")
    p.set_defaults(func=cmd_check_interval)

    p = sub.add_parser("check-disk", parents=[common, family, disk], help="scan a circle for |f(z)| > 1")
    p.set_defaults(func=cmd_check_disk)

    p = sub.add_parser("schwarz", parents=[common, family, disk], help="Schwarz-lemma verdict")
    p.set_defaults(func=cmd_schwarz)

    p = sub.add_parser(
        "verify-paper-claims",
        parents=[common],
        help="replay claims C1-C8; exit code = number of failures",
    )
    p.set_defaults(func=cmd_verify_paper_claims)

    p = sub.add_parser("figure-interval", parents=[common], help="CSV of erf(kx)/erf(k) on [-1, 1]")
    p.add_argument("--k", type=_k_list, default=list(figures.DEFAULT_KS), help="comma list (default 1,5,10,50)")
    p.add_argument("--points", type=int, default=401)
    p.set_defaults(func=cmd_figure_interval)

    p = sub.add_parser("figure-disk", parents=[common], help="CSV of |erf(z)| on the unit disk")
    p.add_argument("--radial", type=int, default=101)
    p.add_argument("--angular", type=int, default=256)
    p.set_defaults(func=cmd_figure_disk)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not (args.tol > 0 and math.isfinite(args.tol)):
        parser.error("--tol must be positive")
    try:
        with contextlib.ExitStack() as stack:
            if args.out == "-":
                out = sys.stdout
            else:
                out = stack.enter_context(open(args.out, "w", newline="", encoding="ascii"))
            return args.func(args, out)
    except (DomainError, ToleranceUnreachable, ValueError) as exc:
        print(f"realschwarz: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
