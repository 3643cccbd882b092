import json

import pytest

from wlreg.cli import main
from wlreg.report import Check, Report


def test_check_status():
    assert Check("x", 3, "p", 3).passed
    assert not Check("x", 3, "p", 4).passed
    assert Check("x", "yes", "p", "yes").status == "pass"


def test_report_json_roundtrip():
    r = Report("demo", [Check("a", 1, "published", 1), Check("b", "yes", "derived", "no")], 12)
    d = json.loads(r.to_json())
    assert set(d) == {"suite", "checks", "elapsed_ms"}
    assert set(d["checks"][0]) == {"name", "expected", "provenance", "actual", "status"}
    back = Report.from_json(r.to_json())
    assert back == r
    assert not back.passed and [c.name for c in back.failures] == ["b"]


def test_report_rejects_inconsistent_status():
    d = Report("demo", [Check("a", 1, "p", 2)], 0).to_dict()
    d["checks"][0]["status"] = "pass"
    with pytest.raises(ValueError):
        Report.from_dict(d)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_p6(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "P6", "--host", "shrikhande")
    assert code == 0 and out.strip() == "20448"


def test_count_rooted_with_and_without_roots(capsys):
    code, out, _ = run(capsys, "count", "--pattern", "P6[1,6]", "--host", "rook(4)", "--roots", "0,1")
    assert code == 0 and out.strip() == "156"
    code, out, _ = run(capsys, "count", "--pattern", "P6[1,6]", "--host", "rook(4)")
    assert code == 0
    hist = dict(line.split("\t") for line in out.strip().splitlines())
    assert hist == {"156": "96", "180": "144"}


def test_count_from_file(capsys, tmp_path):
    f = tmp_path / "s.g6"
    code, _, _ = run(capsys, "gen", "shrikhande", "--out", str(f))
    assert code == 0
    code, out, _ = run(capsys, "count", "--pattern", "K3", "--host", str(f), "--kind", "inj")
    assert code == 0 and out.strip() == "192"


def test_tw_and_htw(capsys):
    assert run(capsys, "tw", "--pattern", "K4")[:2] == (0, "3\n")
    assert run(capsys, "htw", "--pattern", "P6[2,5]")[:2] == (0, "3\n")
    code, out, _ = run(capsys, "htw", "--pattern", "C7", "--witness")
    assert code == 0 and out.startswith("2\n") and "elimination order" in out


def test_wl(capsys):
    code, out, _ = run(capsys, "wl", "--k", "2", "shrikhande", "rook(4)")
    assert code == 0 and "all WL-2-equivalent: yes" in out
    code, out, _ = run(capsys, "wl", "--k", "3", "shrikhande", "rook(4)")
    assert code == 0 and "all WL-3-equivalent: no" in out


def test_verify_table1(capsys):
    code, out, _ = run(capsys, "verify", "table1")
    assert code == 0 and "10/10 checks passed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "table1", "--json")
    assert code == 0
    r = Report.from_json(out)
    assert r.suite == "table1" and r.passed


def test_verify_failure_exit_code(capsys, monkeypatch):
    import wlreg.cli as cli

    monkeypatch.setattr(cli, "run_suite", lambda name, parallel=False: Report(name, [Check("x", 1, "p", 2)], 0))
    assert run(capsys, "verify", "table1")[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["count", "--pattern", "X3", "--host", "shrikhande"],
        ["count", "--pattern", "P6", "--host", "nosuchgraph"],
        ["count", "--pattern", "P6[1,6]", "--host", "shrikhande", "--roots", "1"],
        ["count", "--pattern", "P6[1,6]", "--host", "shrikhande", "--roots", "1,1"],
        ["count", "--pattern", "P6[1,6]", "--host", "shrikhande", "--roots", "a,b"],
        ["verify", "nosuite"],
        ["gen", "cycle(2)"],
        ["wl", "--k", "8", "petersen"],
        ["wl", "--k", "0", "petersen"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2
