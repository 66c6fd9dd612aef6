import json

import pytest

from motive_calc.cli import main
from motive_calc.report import (
    certificate_summary,
    render_json,
    report_passed,
    run_report,
)


@pytest.fixture(scope="module")
def report3():
    return run_report(3)


def test_report_passes(report3):
    assert report_passed(report3)
    assert report3["summary"]["all_passed"] is True
    assert report3["summary"]["surface_certificate"]["failed"] == []


def test_report_sections(report3):
    for key in (
        "tool_version",
        "invariants",
        "lattice",
        "group_certificate",
        "surface_certificate",
        "threefold_certificate",
        "decompositions",
        "betti",
        "filtration",
        "experimental",
    ):
        assert key in report3
    assert report3["experimental"]["middle_multiplicity"]["consistent"] is True
    assert report3["lattice"]["reduced_inverse"] == [["-2/3", "-1/3"], ["-1/3", "-2/3"]]


def test_report_rationals_are_strings(report3):
    text = render_json(report3)
    payload = json.loads(text)
    assert payload["lattice"]["full_matrix"][0][0] == "-2"


def test_report_deterministic(report3):
    again = run_report(3)
    assert render_json(report3) == render_json(again)


def test_experimental_never_fails_build(report3):
    doctored = json.loads(render_json(report3))
    doctored["experimental"]["middle_multiplicity"]["consistent"] = False
    assert report_passed(doctored)
    doctored["surface_certificate"][0]["status"] = "fail"
    assert not report_passed(doctored)


def test_certificate_summary():
    entries = [{"name": "a", "status": "pass"}, {"name": "b", "status": "fail"}]
    summary = certificate_summary(entries)
    assert summary == {"total": 2, "passed": 1, "failed": ["b"]}


# -- command line ---------------------------------------------------------------

def test_cli_invariants(capsys):
    assert main(["invariants", "--level", "5"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["cusp_count"] == 12


def test_cli_eval(capsys):
    assert main(["eval", "--level", "4", "piC(0) . piC(1)"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_eval_threefold(capsys):
    assert main(["eval", "--level", "3", "--threefold", "ptilde(1,2) . ptilde(2,1)"]) == 0
    assert capsys.readouterr().out.strip() == "0"


def test_cli_eval_parse_error(capsys):
    assert main(["eval", "--level", "4", "piC(0) . "]) == 2


def test_cli_level_too_small(capsys):
    assert main(["report", "--level", "2"]) == 2
    err = capsys.readouterr().err
    assert "level" in err


def test_cli_max_level_guard(capsys):
    assert main(["report", "--level", "13"]) == 2
    assert main(["invariants", "--level", "13"]) == 0  # only report/verify are guarded
    capsys.readouterr()


def test_cli_report_and_verify(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["report", "--level", "3", "-o", str(out), "--surface-only"]) == 0
    payload = json.loads(out.read_text())
    assert payload["level"] == 3
    assert "threefold_certificate" not in payload
    assert main(["verify", "--level", "3", "--surface-only"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[-1] == "PASS"
    assert all(line.startswith("pass") for line in lines[:-1])


def test_cli_report_byte_identical(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    assert main(["report", "--level", "3", "-o", str(a)]) == 0
    assert main(["report", "--level", "3", "-o", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_cli_decompose_and_filtration(capsys):
    assert main(["decompose", "--level", "4"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["multiplicity"]["difference_assembly_minus_closed_form"] == 2
    assert main(["decompose", "--level", "4", "--threefold", "--format", "text"]) == 0
    text = capsys.readouterr().out
    assert "W2" in text
    assert main(["filtration", "--level", "3"]) == 0
    payload = json.loads(capsys.readouterr().out)
    steps = payload["threefold"]["chow_groups"][3]["steps"]
    assert steps[3]["label"] == "CH^3(W2)"


def test_cli_lattice_text(capsys):
    assert main(["lattice", "--level", "3", "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert "rank 2" in out


def test_cli_exit_one_on_failing_certificate(monkeypatch, capsys):
    import motive_calc.cli as cli

    def fake_run_report(n, include_threefold=True):
        return {
            "tool_version": "test",
            "level": n,
            "surface_certificate": [
                {"name": "broken", "lhs": "a", "rhs": "b", "status": "fail"}
            ],
            "summary": {"all_passed": False},
        }

    monkeypatch.setattr(cli, "run_report", fake_run_report)
    assert main(["report", "--level", "3"]) == 1
    capsys.readouterr()
    assert main(["verify", "--level", "3"]) == 1
    assert capsys.readouterr().out.strip().splitlines()[-1] == "FAIL"
