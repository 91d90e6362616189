import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("TWISTDEN_CLI", "build/twistden")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


@pytest.mark.parametrize(
    "name,prec,expected",
    [
        ("c3", 8, "2, 8, 24, 72, 184, 432, 984, 2112"),
        ("fake_c", 5, "8, 128, 1152, 7680, 42112"),
        ("a3", 7, "1, -4, 4, -4, 20, -24, 4"),
        ("c7", 8, "1, 2, 4, 8, 14, 24, 40, 66"),
        ("a7", 12, "1, -2, 0, 0, 2, 0, 0, -2, 4, -2, 0, -4"),
    ],
)
def test_dump(name, prec, expected):
    p = run("dump", name, "--prec", str(prec))
    assert p.returncode == 0
    assert p.stdout.strip() == expected


def test_dump_formats():
    p = run("dump", "c7", "--prec", "4", "--format", "csv")
    assert p.stdout == "n,coefficient\n0,1\n1,2\n2,4\n3,8\n"
    p = run("dump", "c7", "--prec", "3", "--format", "json")
    assert json.loads(p.stdout)["coefficients"] == ["1", "2", "4"]


def test_unknown_series():
    assert run("dump", "c5").returncode == 2


def test_verify_pass_and_fault_injection():
    assert run("verify", "susy", "--order", "3", "--prec", "50").returncode == 0
    assert run("verify", "susy", "--order", "3", "--perturb").returncode == 1
    assert run("verify", "theta", "--order", "7", "--prec", "5", "--perturb").returncode == 1
    assert run("verify", "denominator", "--order", "7", "--height", "4", "--perturb").returncode == 1


def test_usage_errors():
    assert run("verify", "denominator", "--order", "5").returncode == 2
    assert run("verify", "nonsense").returncode == 2
    assert run("verify", "susy", "--format", "xml").returncode == 2
    assert run("verify", "susy", "--prec", "-3").returncode == 2
    assert run("table", "mult").returncode == 2
    assert run().returncode == 2


def test_json_report_round_trip(tmp_path):
    out = tmp_path / "r.json"
    p = run("verify", "denominator", "--order", "7", "--height", "8", "--jobs", "4", "--format", "json", "--out", str(out))
    assert p.returncode == 0
    text = out.read_text()
    report = json.loads(text)
    assert report["status"] == "pass"
    assert report["command"] == "verify denominator"
    assert "jobs" not in report["params"]
    for check in report["checks"]:
        assert set(check) == {"name", "range", "pass", "first_discrepancy"}
    assert json.dumps(report, indent=2, ensure_ascii=False) + "\n" == text


def test_reports_do_not_depend_on_jobs():
    def strip(s):
        r = json.loads(s)
        r.pop("wall_ms")
        return r

    a = run("verify", "denominator", "--order", "3", "--height", "4", "--format", "json", "--jobs", "1").stdout
    b = run("verify", "denominator", "--order", "3", "--height", "4", "--format", "json", "--jobs", "3").stdout
    assert strip(a) == strip(b)


def test_config_file(tmp_path):
    cfg = tmp_path / "run.ini"
    cfg.write_text("order=5\nprec=10\n")
    assert run("verify", "susy", "--config", str(cfg)).returncode == 2
    assert run("verify", "susy", "--config", str(cfg), "--order", "3").returncode == 0


def test_simple_roots_table():
    p = run("table", "simple_roots", "--order", "3")
    rows = list(csv.reader(io.StringIO(p.stdout)))
    assert rows[0] == ["k", "mult_even", "mult_odd"]
    assert rows[1:4] == [["1", "2", "2"], ["2", "2", "2"], ["3", "4", "4"]]
    assert rows[6] == ["6", "4", "4"]


def test_mult_table_on_7_dual():
    p = run("table", "mult", "--order", "7", "--height", "14", "--max-norm", "42")
    assert p.returncode == 0
    rows = list(csv.DictReader(io.StringIO(p.stdout)))
    scaled = [r for r in rows if r["pairing"] == "7" and r["norm"] == "-42"]
    assert scaled
    assert all(r["mult_even"] == r["mult_odd"] == "12256" for r in scaled)
    assert not [r for r in rows if r["pairing"] == "7" and r["norm"] == "-14"]


def test_empty_slice_is_header_only(tmp_path):
    out = tmp_path / "t.csv"
    p = run("table", "mult", "--order", "3", "--height", "3", "--max-norm", "-1", "--out", str(out))
    assert p.returncode == 0
    assert out.read_text() == "r_star,coset,m,n,norm,pairing,mult_even,mult_odd,source\n"
