"""CLI contract: exit codes, CSV/JSON schemas, determinism, fault injection."""

import json
import subprocess
import sys

import numpy as np
import pytest

from akhiezer.cli import (
    CSV_HEADER,
    InputError,
    main,
    parse_signal_spec,
    read_signal_csv,
    write_signal_csv,
)
from akhiezer.signals import gaussian_signal, make_grid


def run_cli(*args):
    return main(list(args))


def test_parse_signal_spec():
    spec = parse_signal_spec("gaussian:width=2,center=-1")
    assert spec.kind == "gaussian"
    assert spec.params == {"width": 2.0, "center": -1.0}
    with pytest.raises(InputError):
        parse_signal_spec("gaussian:width")
    with pytest.raises(InputError):
        parse_signal_spec("mystery")


def test_csv_roundtrip(tmp_path):
    grid = make_grid(-5, 5, 64)
    x = gaussian_signal(grid)
    path = tmp_path / "sig.csv"
    write_signal_csv(path, x)
    x1, x2 = read_signal_csv(path)
    assert np.array_equal(x1.samples, x.samples)
    assert np.all(x2.samples == 0.0)
    assert x1.grid_key() == x.grid_key()
    header = path.read_text().splitlines()[0]
    assert header == ",".join(CSV_HEADER)


def test_csv_rejects_malformed(tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("t,re1\n0,1\n")
    with pytest.raises(InputError):
        read_signal_csv(bad)
    bad.write_text("t,re1,im1,re2,im2\n0,1,0,0,0\n1,zzz,0,0,0\n")
    with pytest.raises(InputError):
        read_signal_csv(bad)


def test_apply_both_reports_small_deviation(tmp_path, capsys):
    out = tmp_path / "y.csv"
    code = run_cli(
        "apply",
        "--transform",
        "C",
        "--method",
        "both",
        "--signal",
        "gaussian",
        "--grid",
        "-20:20:1024",
        "--out",
        str(out),
    )
    assert code == 0
    assert out.exists()
    dev_file = tmp_path / "y_deviation.csv"
    assert dev_file.exists()
    rows = dev_file.read_text().splitlines()
    assert rows[0] == "t,abs_dev1,abs_dev2"
    devs = np.array([[float(v) for v in r.split(",")] for r in rows[1:]])
    assert np.max(devs[:, 1]) < 1e-6


def test_apply_forward_then_inverse_roundtrip(tmp_path):
    y_path = tmp_path / "y.csv"
    z_path = tmp_path / "z.csv"
    assert run_cli(
        "apply", "--transform", "phi", "--signal", "gaussian", "--grid", "-20:20:1024", "--out", str(y_path)
    ) == 0
    assert run_cli("apply", "--transform", "psi", "--input", str(y_path), "--out", str(z_path)) == 0
    z1, z2 = read_signal_csv(z_path)
    x = gaussian_signal(make_grid(-20, 20, 1024))
    assert np.max(np.abs(z1.samples - x.samples)) < 1e-6
    assert np.max(np.abs(z2.samples)) < 1e-6


def test_apply_malformed_input_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("nonsense\n")
    out = tmp_path / "never.csv"
    code = run_cli("apply", "--transform", "C", "--input", str(bad), "--out", str(out))
    assert code == 2
    assert not out.exists()


def test_apply_requires_exactly_one_source(tmp_path):
    assert run_cli("apply", "--transform", "C") == 2


def test_apply_deterministic_output(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    args = ["apply", "--transform", "S", "--signal", "bandlimited_noise", "--seed", "7", "--grid", "-10:10:512"]
    assert run_cli(*args, "--out", str(out1)) == 0
    assert run_cli(*args, "--out", str(out2)) == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_quick_passes(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code = run_cli("verify", "--quick", "--grid", "-20:20:2048", "--out", str(report_path))
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["all_passed"] is True
    names = {c["name"] for c in report["checks"]}
    assert {
        "multiplier_normalization",
        "kernel_envelope_even",
        "kernel_envelope_odd",
        "even_multiplier_quadrature",
        "odd_multiplier_extrapolation",
        "energy_pythagoras",
        "vector_isometry",
        "mutual_inversion",
        "hilbert_isometry",
        "hilbert_involution",
        "cosh_ratio_closed_form",
        "sinh_ratio_closed_form",
        "weighted_bound_cosh",
        "weighted_bound_sinh",
        "weighted_roundtrip",
    } <= names
    for check in report["checks"]:
        assert set(check) == {"name", "description", "value", "bound_or_target", "tolerance", "pass"}
        assert check["pass"] is True


def test_verify_fault_injection_fails_named_check(tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code = run_cli(
        "verify",
        "--quick",
        "--grid",
        "-20:20:2048",
        "--inject-fault",
        "multiplier",
        "--out",
        str(report_path),
    )
    assert code == 1
    report = json.loads(report_path.read_text())
    assert report["all_passed"] is False
    failing = {c["name"] for c in report["checks"] if not c["pass"]}
    assert "plan_table_normalization" in failing
    out = capsys.readouterr().out
    assert "plan_table_normalization" in out


def test_verify_deterministic_report(tmp_path):
    p1 = tmp_path / "r1.json"
    p2 = tmp_path / "r2.json"
    args = ["verify", "--quick", "--grid", "-20:20:1024", "--seed", "3"]
    run_cli(*args, "--out", str(p1))
    run_cli(*args, "--out", str(p2))
    assert p1.read_bytes() == p2.read_bytes()


def test_verify_tolerance_override_flips_verdict(tmp_path):
    report_path = tmp_path / "r.json"
    code = run_cli(
        "verify",
        "--quick",
        "--grid",
        "-20:20:1024",
        "--tolerance",
        "cross_path_sinh=1e-12",
        "--out",
        str(report_path),
    )
    assert code == 1
    report = json.loads(report_path.read_text())
    byname = {c["name"]: c for c in report["checks"]}
    assert byname["cross_path_sinh"]["pass"] is False
    assert byname["cross_path_sinh"]["tolerance"] == 1e-12


def test_bench_degenerate_size(tmp_path):
    out = tmp_path / "bench.csv"
    code = run_cli("bench", "--sizes", "2", "--out", str(out))
    assert code == 0
    rows = out.read_text().splitlines()
    assert rows[0].startswith("n,delta,transform,backend")
    assert len(rows) == 2


def test_bench_rejects_bad_sizes(tmp_path):
    assert run_cli("bench", "--sizes", "1024,256") == 2
    assert run_cli("bench", "--sizes", "abc") == 2


def test_bench_deviation_column(tmp_path):
    out = tmp_path / "bench.csv"
    code = run_cli("bench", "--sizes", "256,512", "--out", str(out))
    assert code == 0
    rows = out.read_text().splitlines()[1:]
    for row in rows:
        fields = row.split(",")
        assert float(fields[6]) <= 1e-4


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "akhiezer.cli", "--version"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "akhiezer" in proc.stdout


def test_grid_flag_validation():
    assert run_cli("apply", "--transform", "C", "--signal", "gaussian", "--grid", "bogus") == 2
