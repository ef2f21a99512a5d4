import json
import random

import pytest

from teamfit.aggregation import Capacity2Additive
from teamfit.core_model import (CriteriaSpec, Criterion, NormalizedProfile,
                                Profile)
from teamfit.devices import DeviceSpec, FunctionSpec
from teamfit.persistence import (Workspace, WorkspaceError, dumps_workspace,
                                 import_profiles_csv, load_workspace,
                                 loads_workspace, save_workspace)
from teamfit.prototypes import ClassModel, Prototype

from .genutil import random_capacity


def assert_workspaces_close(a: Workspace, b: Workspace, tol=1e-12):
    assert a.spec == b.spec
    assert len(a.population) == len(b.population)
    for pa, pb in zip(a.population, b.population):
        assert pa.id == pb.id
        assert pa.scores == pytest.approx(pb.scores, abs=tol)
        assert pa.growth_rates == pytest.approx(pb.growth_rates, abs=tol)
        assert pa.motivation == pytest.approx(pb.motivation, abs=tol)
    assert set(a.capacities) == set(b.capacities)
    for name in a.capacities:
        ca, cb = a.capacities[name], b.capacities[name]
        assert ca.singletons == pytest.approx(cb.singletons, abs=tol)
        assert {k: v for k, v in ca.pairs.items()} == pytest.approx(
            {k: v for k, v in cb.pairs.items()}, abs=tol)
    assert set(a.class_models) == set(b.class_models)
    for name in a.class_models:
        ma, mb = a.class_models[name], b.class_models[name]
        assert ma.threshold == pytest.approx(mb.threshold, abs=tol)
        assert ma.metric == mb.metric
        for pa, pb in zip(ma.prototypes, mb.prototypes):
            assert pa.class_id == pb.class_id
            assert pa.ideal.values == pytest.approx(pb.ideal.values, abs=tol)
            assert pa.weights == pytest.approx(pb.weights, abs=tol)
    assert a.devices == b.devices or {
        name: d.functions for name, d in a.devices.items()} == {
        name: d.functions for name, d in b.devices.items()}


def random_workspace(seed: int) -> Workspace:
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    criteria = tuple(
        Criterion(f"c{i}", f"Criterion {i}", 0.0, rng.choice([1.0, 10.0, 20.0]))
        for i in range(n))
    spec = CriteriaSpec(criteria)
    population = tuple(
        Profile(f"p{i}",
                {c.id: rng.uniform(c.scale_min, c.scale_max) for c in criteria},
                {c.id: rng.uniform(0, 2) for c in criteria if rng.random() < 0.5},
                motivation=rng.random())
        for i in range(rng.randint(0, 5)))
    capacities = {f"cap{i}": random_capacity(rng, spec.ids()) for i in range(2)}
    protos = tuple(
        Prototype(f"cls{i}",
                  NormalizedProfile(f"cls{i}", tuple(rng.random() for _ in criteria)),
                  {c.id: rng.uniform(0.1, 2.0) for c in criteria})
        for i in range(2))
    class_models = {"m": ClassModel(protos, rng.uniform(0.1, 1.0))}
    devices = {"d": DeviceSpec("d", (
        FunctionSpec("f0", "F0", {criteria[0].id: rng.uniform(
            criteria[0].scale_min, criteria[0].scale_max)}, rng.uniform(0, 3)),
        FunctionSpec("f1", "F1", {}, 1.0),
    ))}
    return Workspace(spec, population, capacities, class_models, devices)


# ---------------------------------------------------------------- load/save

def test_load_bundled_workspace(bundled_workspace):
    ws = bundled_workspace
    assert len(ws.population) == 3
    assert len(ws.spec) == 2
    assert set(ws.capacities) == {"default", "flat"}
    p1 = ws.profile("p1")
    assert p1.scores == {"math": 20.0, "french": 10.0}


def test_empty_population_is_valid(tmp_path):
    doc = {"format_version": 1,
           "criteria": [{"id": "math", "scale_min": 0, "scale_max": 20}]}
    ws = loads_workspace(json.dumps(doc))
    assert ws.population == ()


def test_out_of_range_score_names_profile_and_criterion():
    doc = {"format_version": 1,
           "criteria": [{"id": "math", "scale_min": 0, "scale_max": 20}],
           "population": [{"id": "p9", "scores": {"math": 25}}]}
    with pytest.raises(WorkspaceError, match="p9") as exc:
        loads_workspace(json.dumps(doc))
    assert "math" in str(exc.value)


def test_syntax_error_reports_position():
    with pytest.raises(WorkspaceError, match="line 1"):
        loads_workspace("{not json", "bad.json")


def test_unknown_top_level_field_rejected():
    doc = {"format_version": 1, "criteria": [], "surprise": 1}
    with pytest.raises(WorkspaceError, match="surprise"):
        loads_workspace(json.dumps(doc))


def test_wrong_format_version_rejected():
    with pytest.raises(WorkspaceError, match="format_version"):
        loads_workspace(json.dumps({"format_version": 2, "criteria": []}))


def test_invalid_capacity_in_file_is_named():
    doc = {"format_version": 1,
           "criteria": [{"id": "a", "scale_max": 1}, {"id": "b", "scale_max": 1}],
           "capacities": {"bad": {"singletons": {"a": 0.9, "b": 0.9}}}}
    with pytest.raises(WorkspaceError, match="bad"):
        loads_workspace(json.dumps(doc))


def test_round_trip_bundled(bundled_workspace, tmp_path):
    path = tmp_path / "ws.json"
    save_workspace(bundled_workspace, path)
    assert_workspaces_close(load_workspace(path), bundled_workspace)


def test_round_trip_random_workspaces(tmp_path):
    for seed in range(20):
        ws = random_workspace(seed)
        path = tmp_path / f"ws{seed}.json"
        save_workspace(ws, path)
        assert_workspaces_close(load_workspace(path), ws)


def test_saves_are_byte_deterministic(tmp_path):
    ws = random_workspace(7)
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    save_workspace(ws, a)
    save_workspace(ws, b)
    assert a.read_bytes() == b.read_bytes()


def test_save_load_save_is_byte_identity(bundled_path, tmp_path):
    # the bundled file is canonically formatted already
    ws = load_workspace(bundled_path)
    assert dumps_workspace(ws).encode() == bundled_path.read_bytes()


# --------------------------------------------------------------------- CSV

CSV_HEADER = "id,score:math,score:french,rate:french,motivation\n"


def make_spec():
    return CriteriaSpec((Criterion("math", "", 0.0, 20.0),
                         Criterion("french", "", 0.0, 20.0)))


def test_import_trio_csv(tmp_path):
    path = tmp_path / "p.csv"
    path.write_text(CSV_HEADER + "p1,20,10,2,0.5\np2,10,20,0,1\np3,15,15,0,1\n")
    profiles = import_profiles_csv(path, make_spec())
    assert [p.id for p in profiles] == ["p1", "p2", "p3"]
    assert profiles[0].scores == {"math": 20.0, "french": 10.0}
    assert profiles[0].growth_rates == {"french": 2.0}
    assert profiles[0].motivation == 0.5


def test_header_only_csv_gives_empty_list(tmp_path):
    path = tmp_path / "p.csv"
    path.write_text(CSV_HEADER)
    assert import_profiles_csv(path, make_spec()) == []


def test_csv_motivation_out_of_range(tmp_path):
    path = tmp_path / "p.csv"
    path.write_text(CSV_HEADER + "p1,20,10,0,1.5\n")
    with pytest.raises(WorkspaceError, match="motivation"):
        import_profiles_csv(path, make_spec())


def test_csv_unknown_column(tmp_path):
    path = tmp_path / "p.csv"
    path.write_text("id,score:math,score:french,shoe_size\np1,1,1,42\n")
    with pytest.raises(WorkspaceError, match="shoe_size"):
        import_profiles_csv(path, make_spec())


def test_csv_missing_score_column(tmp_path):
    path = tmp_path / "p.csv"
    path.write_text("id,score:math\np1,1\n")
    with pytest.raises(WorkspaceError, match="french"):
        import_profiles_csv(path, make_spec())


def test_csv_non_numeric_cell_reports_row_and_column(tmp_path):
    path = tmp_path / "p.csv"
    path.write_text(CSV_HEADER + "p1,20,ten,0,1\n")
    with pytest.raises(WorkspaceError, match="row 2") as exc:
        import_profiles_csv(path, make_spec())
    assert "score:french" in str(exc.value)
