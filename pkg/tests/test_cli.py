import json

import pytest

from teamfit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_validate_ok(capsys, bundled_path):
    code, out, _ = run(capsys, "validate", str(bundled_path))
    assert code == 0
    assert out.strip() == "ok"


def test_validate_failure_exits_one(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({
        "format_version": 1,
        "criteria": [{"id": "math", "scale_min": 0, "scale_max": 20}],
        "population": [{"id": "p1", "scores": {"math": 25}}]}))
    code, _, err = run(capsys, "validate", str(bad))
    assert code == 1
    assert "p1" in err and "math" in err


def test_unknown_subcommand_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_unknown_flag_exits_two(capsys, bundled_path):
    with pytest.raises(SystemExit) as exc:
        main(["rank", "-w", str(bundled_path), "--capacity", "default", "--bogus"])
    assert exc.value.code == 2


def test_rank_puts_balanced_profile_first(capsys, bundled_path):
    code, out, _ = run(capsys, "rank", "-w", str(bundled_path),
                       "--capacity", "default", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["ranking"][0]["id"] == "p3"
    assert report["ranking"][1]["rank"] == report["ranking"][2]["rank"] == 2


def test_score_flat_capacity_ties(capsys, bundled_path):
    code, out, _ = run(capsys, "score", "-w", str(bundled_path),
                       "--capacity", "flat", "--output", "json")
    assert code == 0
    report = json.loads(out)
    scores = {row["id"]: row["choquet"] for row in report["scores"]}
    assert scores["p1"] == scores["p2"] == scores["p3"] == pytest.approx(0.75)
    means = {row["id"]: row["weighted_mean"] for row in report["scores"]}
    assert means == pytest.approx(scores)


def test_unknown_capacity_exits_one(capsys, bundled_path):
    code, _, err = run(capsys, "rank", "-w", str(bundled_path),
                       "--capacity", "nope")
    assert code == 1
    assert "unknown capacity" in err


def test_classify_with_minorities(capsys, bundled_path):
    code, out, _ = run(capsys, "classify", "-w", str(bundled_path),
                       "--model", "core", "--minorities", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert {p["id"] for p in report["profiles"]} == {"p1", "p2", "p3"}
    assert "minorities" in report


def test_gap_json(capsys, bundled_path):
    code, out, _ = run(capsys, "gap", "-w", str(bundled_path), "--model", "core",
                       "--class", "balanced", "--profile", "p1",
                       "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["profile"] == "p1"
    assert set(report["deficits"]) == {"math", "french"}


def test_team_complementary_pair_fixture(capsys, tmp_path):
    doc = {
        "format_version": 1,
        "criteria": [{"id": "c0", "scale_max": 1.0}, {"id": "c1", "scale_max": 1.0}],
        "population": [
            {"id": "A", "scores": {"c0": 1.0, "c1": 0.0}},
            {"id": "B", "scores": {"c0": 0.0, "c1": 1.0}},
            {"id": "C", "scores": {"c0": 0.6, "c1": 0.6}},
        ],
        "capacities": {"default": {"singletons": {"c0": 0.3, "c1": 0.3},
                                   "pairs": [["c0", "c1", 0.4]]}},
    }
    path = tmp_path / "abc.json"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "team", "-w", str(path), "--capacity", "default",
                       "-k", "2", "--combine", "coverage", "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["members"] == ["A", "B"]
    assert report["objective"] == pytest.approx(1.0)


def test_device_coverage_json(capsys, bundled_path):
    code, out, _ = run(capsys, "device", "-w", str(bundled_path),
                       "--device", "workstation", "--min-coverage", "0.75",
                       "--output", "json")
    assert code == 0
    report = json.loads(out)
    assert report["per_function"]["basic"] == 1.0
    assert {e["id"] for e in report["recommended"]} == {"basic"}


def test_json_output_is_byte_deterministic(capsys, bundled_path):
    _, out1, _ = run(capsys, "rank", "-w", str(bundled_path),
                     "--capacity", "default", "--output", "json")
    _, out2, _ = run(capsys, "rank", "-w", str(bundled_path),
                     "--capacity", "default", "--output", "json")
    assert out1 == out2


def test_table_and_json_show_same_numbers(capsys, bundled_path):
    _, json_out, _ = run(capsys, "rank", "-w", str(bundled_path),
                         "--capacity", "default", "--output", "json")
    _, table_out, _ = run(capsys, "rank", "-w", str(bundled_path),
                          "--capacity", "default")
    for row in json.loads(json_out)["ranking"]:
        assert f"{row['score']:.3f}" in table_out


def test_horizon_changes_rank(capsys, bundled_path):
    # p1 grows french at 2 * 0.5 per period: (20, 10) -> (20, 20) at t = 10
    _, out, _ = run(capsys, "rank", "-w", str(bundled_path),
                    "--capacity", "default", "--horizon", "10",
                    "--output", "json")
    report = json.loads(out)
    assert report["ranking"][0]["id"] == "p1"
    assert report["ranking"][0]["score"] == pytest.approx(1.0)
