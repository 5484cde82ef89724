import argparse
import csv
import io
import math
import subprocess
import sys

import pytest

from realschwarz import claims, cli
from realschwarz.cli import main, parse_complex
from realschwarz.families import MapFamily, evaluate


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(line):
    return dict(part.split("=", 1) for part in line.split())


@pytest.mark.parametrize(
    "text, value",
    [
        ("0.6i", 0.6j),
        ("-1", -1 + 0j),
        ("0.3-0.2i", 0.3 - 0.2j),
        ("i", 1j),
        ("-i", -1j),
        ("1e-3+2e-1i", 0.001 + 0.2j),
        ("+2", 2 + 0j),
    ],
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "0.6j", "abc", "1+", "nan", "inf", "1 + 2i"])
def test_parse_complex_rejects(text):
    with pytest.raises(argparse.ArgumentTypeError):
        parse_complex(text)


def test_eval_scaled_erf_at_one(capsys):
    code, out, _ = run(["eval", "--family", "scaled-erf", "--k", "1", "--at", "1"], capsys)
    assert code == 0
    f = fields(out)
    assert parse_complex(f["value"]) == 1
    assert f["method"] == "quadrature"


def test_eval_rational_counterexample(capsys):
    code, out, _ = run(["eval", "--family", "rational", "--a", "1.01", "--at", "0.995"], capsys)
    assert code == 0
    assert parse_complex(fields(out)["value"]).real > 1.00001


def test_eval_sine_imaginary(capsys):
    code, out, _ = run(["eval", "--family", "sine", "--at", "0.6i"], capsys)
    assert float(fields(out)["abs"]) == pytest.approx(math.sinh(0.3 * math.pi), abs=1e-15)


def test_usage_error_exit_code(capsys):
    code = None
    with pytest.raises(SystemExit) as info:
        main(["eval", "--family", "sine", "--at", "nope"])
    assert info.value.code == cli.EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == cli.EXIT_USAGE


def test_domain_error_exit_code(capsys):
    code, _, err = run(["eval", "--family", "rational", "--a", "-1", "--at", "1"], capsys)
    assert code == cli.EXIT_DOMAIN
    assert "pole" in err
    code, _, _ = run(["eval", "--family", "rational", "--at", "1"], capsys)
    assert code == cli.EXIT_DOMAIN
    code, _, _ = run(["check-disk", "--family", "sine", "--radius", "1.5"], capsys)
    assert code == cli.EXIT_DOMAIN


def test_tolerance_unreachable_exit_code(capsys):
    argv = ["eval", "--family", "scaled-erf", "--k", "10", "--at", "0.9i", "--tol", "1e-12"]
    code, _, err = run(argv, capsys)
    assert code == cli.EXIT_DOMAIN
    assert "noise-limited" in err


def test_check_interval_output(capsys):
    code, out, _ = run(["check-interval", "--family", "rational", "--a", "1.01", "--samples", "100"], capsys)
    f = fields(out)
    assert code == 0
    assert f["outcome"] == "witness"
    assert parse_complex(f["point"]) == 0.995


def test_check_disk_output(capsys):
    code, out, _ = run(["check-disk", "--family", "sine", "--radius", "0.6", "--samples", "256"], capsys)
    f = fields(out)
    assert f["outcome"] == "witness" and f["resolution"] == "260"
    assert parse_complex(f["point"]) == 0.6j


def test_schwarz_output(capsys):
    code, out, _ = run(["schwarz", "--family", "rational", "--a", "0", "--samples", "256"], capsys)
    f = fields(out)
    assert f["classification"] == "consistent-with-lemma"
    assert f["fixes_origin"] == "true"
    assert float(f["origin_derivative"]) == 1


def test_verify_exit_code_counts_failures(monkeypatch, capsys):
    def passing():
        return claims.ClaimReport("X1", "ok", "-", "-", True)

    def failing():
        return claims.ClaimReport("X2", "bad", "-", "-", False)

    monkeypatch.setattr(claims, "PAPER_CLAIMS", (passing, failing, failing))
    code, out, _ = run(["verify-paper-claims"], capsys)
    assert code == 2
    lines = out.splitlines()
    assert lines[0].startswith("PASS X1")
    assert lines[1].startswith("FAIL X2")
    assert lines[-1] == "1/3 claims pass"


def figure_csv(argv, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0
    return out


def test_figure_interval_format(capsys):
    out = figure_csv(["figure-interval", "--points", "11"], capsys)
    assert "\r" not in out
    lines = out.split("\n")
    assert lines[0] == "x,hk_1,hk_5,hk_10,hk_50"
    assert lines[-1] == ""
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 11
    assert not any(line.endswith(",") for line in lines)
    middle = rows[5]
    assert float(middle[0]) == 0 and all(float(v) == 0 for v in middle[1:])


def test_figure_interval_k_list(capsys):
    out = figure_csv(["figure-interval", "--points", "5", "--k", "2,3.5"], capsys)
    assert out.splitlines()[0] == "x,hk_2,hk_3.5"


def test_figure_interval_half_point(capsys):
    rows = list(csv.reader(io.StringIO(figure_csv(["figure-interval"], capsys))))
    header, body = rows[0], rows[1:]
    row = next(r for r in body if float(r[0]) == 0.5)
    assert float(row[header.index("hk_50")]) > float(row[header.index("hk_1")])


def test_figure_disk_format_and_origin(capsys):
    out = figure_csv(["figure-disk", "--radial", "5", "--angular", "8"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["r", "theta", "re", "im", "abs_erf"]
    body = [[float(v) for v in r] for r in rows[1:]]
    assert len(body) == 40
    assert all(r[4] == 0 for r in body if r[0] == 0)
    along_real = [r[4] for r in body if r[1] == 0]
    assert all(a < b for a, b in zip(along_real, along_real[1:]))


def test_figure_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        assert main(["figure-disk", "--radial", "6", "--angular", "16", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_bytes().endswith(b"\n")


def test_figure_round_trip(capsys):
    tol = 1e-12
    out = figure_csv(["figure-interval", "--points", "21", "--tol", str(tol)], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    ks = [float(h.split("_")[1]) for h in rows[0][1:]]
    for row in rows[1:]:
        x = float(row[0])
        for k, cell in zip(ks, row[1:]):
            again = evaluate(MapFamily.scaled_erf(k), x, tol)
            assert abs(float(cell) - again.value.real) <= again.error_bound


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "realschwarz", "eval", "--family", "sine", "--at", "0"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert fields(proc.stdout)["value"] == "0+0i"
