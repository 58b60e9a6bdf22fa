import json

import pytest

from hermplane.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_hermitian_points_table(capsys):
    code, out, _ = run(capsys, "hermitian-points", "--q", "3", "--model", "H2")
    assert code == 0
    assert "28" in out


def test_hermitian_points_emit(capsys):
    code, out, _ = run(
        capsys, "hermitian-points", "--q", "2", "--emit-points", "--format", "json"
    )
    assert code == 0
    lines = [json.loads(l) for l in out.strip().splitlines()]
    assert len(lines) == 9
    assert all("point" in r for r in lines)


def test_verify_success_and_failure_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--family", "sporadic-cubic", "--q", "5")
    assert code == 0
    assert "18" in out
    # out-of-table q is a usage error, not a verification failure
    code, _, err = run(capsys, "verify", "--family", "sporadic-cubic", "--q", "9")
    assert code == 2
    assert "error" in err


def test_verify_json_record(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "even-half", "--q", "4", "--format", "json"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["count"] == rec["target"] == 10
    assert rec["achieved"] is True


def test_construct_round_trips_through_intersect(capsys, tmp_path):
    path = str(tmp_path / "curve.json")
    code, out, _ = run(
        capsys,
        "construct", "--family", "degree-q", "--q", "3",
        "--output", path, "--format", "json",
    )
    assert code == 0
    code, out, _ = run(
        capsys, "intersect", "--curve", path, "--q", "3", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)["count"] == 12


def test_intersect_wrong_field_is_usage_error(capsys, tmp_path):
    path = str(tmp_path / "curve.json")
    run(capsys, "construct", "--family", "degree-q", "--q", "3", "--output", path)
    code, _, err = run(capsys, "intersect", "--curve", path, "--q", "4")
    assert code == 2


def test_split_count(capsys):
    code, out, _ = run(capsys, "split-count", "--q", "16", "--d", "4", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["count"] == 1 and rec["agree"] is True


def test_survey_csv(capsys):
    code, out, _ = run(
        capsys,
        "survey", "--d", "5", "--q-max", "131", "--gcd-filter", "20",
        "--format", "csv",
    )
    assert code == 0
    assert out.strip().splitlines()[-1] == "131,0"


def test_thresholds(capsys):
    code, out, _ = run(capsys, "thresholds", "--d", "5", "--format", "json")
    assert code == 0
    rec = json.loads(out)
    assert rec["genus"] == 4 and rec["threshold"] == 233


def test_negative_search(capsys):
    code, out, _ = run(
        capsys, "negative-search", "--q", "2", "--d", "2", "--format", "json"
    )
    assert code == 0
    rec = json.loads(out)
    assert rec["total_forms_scanned"] == 1365 and rec["complete"] is True


def test_reproduce_paper_filter(capsys):
    code, out, err = run(
        capsys, "reproduce-paper", "--only", "genus", "--format", "json"
    )
    assert code == 0
    recs = [json.loads(l) for l in out.strip().splitlines()]
    assert len(recs) == 6
    assert all(r["pass"] for r in recs)
    assert "millis" not in recs[0]


def test_deterministic_output(capsys):
    _, out1, _ = run(capsys, "split-count", "--q", "23", "--d", "4", "--format", "csv")
    _, out2, _ = run(capsys, "split-count", "--q", "23", "--d", "4", "--format", "csv")
    assert out1 == out2


def test_unknown_command_is_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
