import json

import pytest

from crossed_bimodules.api.builder import build_instance
from crossed_bimodules.api.models import CheckResult, SearchSettings
from crossed_bimodules.fixtures import list_fixtures, load_fixture
from crossed_bimodules.main import main
from crossed_bimodules.verification import (
    COMMANDS,
    VerificationContext,
    VerificationOrchestrator,
    aggregate_status,
)

GENERATION = {"el_objects": 4, "adjoint_samples": 8, "perturbations": 4}


@pytest.fixture(autouse=True)
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    for var in (
        "CROSSED_BIMODULES_LOG_LEVEL",
        "CROSSED_BIMODULES_SEARCH_BUDGET",
        "CROSSED_BIMODULES_SEED",
    ):
        monkeypatch.delenv(var, raising=False)
    return tmp_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_fixtures_command(capsys):
    code, out = run(capsys, "fixtures")
    assert code == 0
    assert out.split() == list_fixtures()
    assert "point3_z2tw" in out.split()


def test_validate_passes(capsys):
    code, out = run(capsys, "validate", "--input", "point3")
    report = json.loads(out)
    assert code == 0
    assert report["command"] == "validate"
    assert report["status"] == "pass"
    assert len(report["digest"]) == 64
    assert "timings" not in report


def test_validate_reports_leibniz_failure(capsys):
    code, out = run(capsys, "validate", "--input", "dual3_deriv")
    report = json.loads(out)
    assert code == 1
    assert report["status"] == "fail"
    triple = next(c for c in report["checks"] if c["name"] == "triple")
    assert "leibniz" in {v["kind"] for v in triple["violations"]}


def test_unknown_input_is_an_input_error(capsys):
    assert run(capsys, "validate", "--input", "no-such-instance")[0] == 2


def test_missing_input(capsys):
    assert run(capsys, "validate")[0] == 2


@pytest.mark.parametrize("budget", ["0", "-5"])
def test_search_budget_must_be_positive(capsys, budget):
    code, _ = run(capsys, "nu", "--input", "point3_z2tw", "--search-budget", budget)
    assert code == 2


def test_malformed_file(capsys, workdir):
    path = workdir / "broken.json"
    path.write_text("{\"name\": ", encoding="utf-8")
    assert run(capsys, "validate", "--input", str(path))[0] == 2


def test_instance_file_on_disk(capsys, workdir):
    path = workdir / "instance.json"
    path.write_text(json.dumps(load_fixture("point3_z2tw").to_json()), encoding="utf-8")
    code, out = run(capsys, "crossed", "--input", str(path))
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_separable_needs_invertible_order(capsys):
    code, out = run(capsys, "separable", "--input", "point3_z2_f2")
    assert code == 3
    statuses = {c["name"]: c["status"] for c in json.loads(out)["checks"]}
    assert statuses["separability"] == "skipped"


def test_zeta_override_that_is_not_primitive(capsys):
    code, _ = run(capsys, "char-double", "--input", "point3_z2triv", "--zeta", "1")
    assert code == 3


def test_nu_command(capsys):
    code, out = run(capsys, "nu", "--input", "point3_z2tw")
    report = json.loads(out)
    assert code == 0
    nu = next(c for c in report["checks"] if c["name"] == "nu:o")
    assert nu["witnesses"]["nu"] == 1


def test_output_file_and_timings(capsys, workdir):
    target = workdir / "out" / "report.json"
    code, out = run(
        capsys, "center", "--input", "dual3_z2", "--output", str(target), "--timings"
    )
    assert code == 0
    assert out == ""
    report = json.loads(target.read_text(encoding="utf-8"))
    assert set(report["timings"]) >= {"triple", "center", "center-invariants"}


def test_verify_all(capsys):
    code, out = run(capsys, "verify-all", "--input", "point3_z2triv", "--seed", "3")
    report = json.loads(out)
    assert code == 0
    assert report["status"] in ("pass", "inconclusive")
    assert all(c["status"] != "fail" for c in report["checks"])


def test_verify_all_never_exits_with_precondition(capsys):
    code, out = run(capsys, "verify-all", "--input", "point3_z2_f2")
    assert code == 0
    assert "skipped" in {c["status"] for c in json.loads(out)["checks"]}


def test_reports_are_byte_stable(capsys):
    first = run(capsys, "verify-all", "--input", "point3_z2tw")
    second = run(capsys, "verify-all", "--input", "point3_z2tw")
    assert first == second


def test_aggregate_status():
    def result(status):
        return CheckResult(name="c", status=status)

    assert aggregate_status([]) == "skipped"
    assert aggregate_status([result("pass"), result("skipped")]) == "pass"
    assert aggregate_status([result("pass"), result("inconclusive")]) == "inconclusive"
    assert aggregate_status([result("inconclusive"), result("fail")]) == "fail"


def test_orchestrator_rejects_unknown_command():
    instance = build_instance(load_fixture("point3"))
    context = VerificationContext(instance, SearchSettings(), GENERATION)
    orchestrator = VerificationOrchestrator(context)
    with pytest.raises(ValueError):
        orchestrator.run("frobnicate")
    assert "verify-all" in COMMANDS


def test_broken_identity_with_el_objects_fails_validation(capsys, workdir):
    data = load_fixture("dual3").to_json()
    comp = data["category"]["composition"]
    data["category"]["composition"] = [
        c for c in comp if (c["outer"], c["inner"]) != ("t", "1")
    ]
    assert data["requests"]["el_objects"]
    path = workdir / "broken_identity.json"
    path.write_text(json.dumps(data), encoding="utf-8")
    code, out = run(capsys, "validate", "--input", str(path))
    report = json.loads(out)
    assert code == 1
    triple = next(c for c in report["checks"] if c["name"] == "triple")
    assert "right-identity" in {v["kind"] for v in triple["violations"]}
