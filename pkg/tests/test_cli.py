import io
import json
import subprocess
import sys

import pytest

from pell_lab import cli, pellmat, suites


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_seq_human_and_csv():
    code, out, _ = run("seq", "E", "1", "8", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,value"
    assert [int(l.split(",")[1]) for l in lines[1:]] == [1, 2, 5, 12, 29, 70, 169, 408]
    code, out, _ = run("seq", "E", "3", "3")
    assert code == 0 and out.strip() == "E[3] = 5"


def test_seq_json_big_ints_are_strings():
    code, out, _ = run("seq", "E", "300", "301", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert all(isinstance(t["value"], str) for t in doc["terms"])
    assert int(doc["terms"][0]["value"]).bit_length() > 300


@pytest.mark.parametrize("argv", [
    ("seq", "X", "0", "1"),
    ("seq", "E", "5", "4"),
    ("seq", "E", "-1", "3"),
    ("verify", "bogus"),
    ("verify", "all", "--n-max", "1"),
    ("sidon", "0"),
    ("gcd", "2"),
    ("classify", "--format", "xml"),
    ("nonsense",),
])
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2


def test_usage_error_message_on_stderr():
    code, out, err = run("seq", "X", "0", "1")
    assert code == 2 and out == "" and "unknown sequence" in err


def test_verify_small_and_formats():
    code, out, _ = run("verify", "identities", "--n-max", "2")
    assert code == 0 and "checks passed" in out
    code, out, _ = run("verify", "numtheory", "--n-max", "30", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"] and doc["failed_checks"] == 0
    code, out, _ = run("verify", "matrices", "--n-max", "20", "--format", "csv")
    assert code == 0 and out.splitlines()[0] == "suite,check,cases,failures,first_failure"


def test_verify_failure_exits_1(monkeypatch):
    broken = dict(pellmat.CLOSED_FORMS)
    gen, _ = broken["u2"]
    broken["u2"] = (gen, lambda n: pellmat.mat_pow(gen, n) * 2)
    monkeypatch.setattr(pellmat, "CLOSED_FORMS", broken)
    code, out, _ = run("verify", "matrices", "--n-max", "5")
    assert code == 1
    assert "FAIL matrices/closed_form_u2" in out and "n=1" in out


def test_classify_json():
    code, out, _ = run("classify", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["total"] == 512 and doc["bucket_count"] == 3 and doc["invariant_errors"] == []


def test_classify_invariant_breach_exits_1(monkeypatch):
    from pell_lab import classifier
    monkeypatch.setitem(classifier.REPRESENTATIVE_BUCKETS, "u2", classifier.REPRESENTATIVE_BUCKETS["u3"])
    code, out, _ = run("classify")
    assert code == 1 and "INVARIANT BROKEN" in out


def test_sidon_and_gcd():
    code, out, _ = run("sidon", "40", "--format", "json")
    assert code == 0 and json.loads(out)["distinct"] is True
    code, out, _ = run("sidon", "--n-max", "10")
    assert code == 0
    code, out, _ = run("gcd", "81", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["ok"]
    assert all(r["match"] for r in doc["rows"])
    assert {r["n"]: r["gcd"] for r in doc["rows"]}[9] == "24"
    code, _, _ = run("gcd", "10", "--n-max", "12")
    assert code == 2


def test_sidon_failure_exits_1(monkeypatch):
    from pell_lab import numtheory
    monkeypatch.setattr(numtheory, "sidon_check",
                        lambda n: numtheory.SidonReport(n, False, (1, 4, 2, 3), 3))
    code, out, _ = run("sidon", "4")
    assert code == 1 and "r[1] + r[4]" in out


def test_gcd_failure_exits_1(monkeypatch):
    from pell_lab import numtheory
    monkeypatch.setattr(numtheory, "gcd_expected", lambda n: 2)
    code, _, _ = run("gcd", "5")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ("seq", "Q", "0", "20"), ("verify", "numtheory", "--n-max", "20"),
    ("classify",), ("sidon", "12"), ("gcd", "15"),
])
def test_json_round_trip(argv):
    code, out, _ = run(*argv, "--format", "json")
    doc = json.loads(out)
    assert json.loads(json.dumps(doc, indent=2)) == doc
    assert json.dumps(doc, indent=2) + "\n" == out


def test_module_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "pell_lab", "seq", "E", "1", "8", "--format", "csv"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "8,408"
    proc = subprocess.run([sys.executable, "-m", "pell_lab", "sidon", "0"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2 and proc.stderr


def test_suite_config_validation():
    with pytest.raises(ValueError):
        suites.VerifyConfig(n_max=1)
    with pytest.raises(ValueError):
        suites.run("nope")
