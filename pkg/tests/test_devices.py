import random

import pytest

from teamfit.core_model import CriteriaSpec, Criterion, Profile
from teamfit.devices import (DeviceSpec, FunctionSpec, function_usable,
                             population_coverage, recommend_functions,
                             utilization_score, validate_device)
from teamfit.projection import Horizon
from teamfit.validation import ModelError

from .genutil import random_profile


def spec20():
    return CriteriaSpec((Criterion("math", "", 0.0, 20.0),
                         Criterion("french", "", 0.0, 20.0)))


def device(*functions):
    return DeviceSpec("dev", tuple(functions))


def test_empty_requirements_always_usable():
    spec = spec20()
    fn = FunctionSpec("f", requirements={})
    assert function_usable(Profile("x", {"math": 0.0, "french": 0.0}), spec, fn)


def test_projection_unlocks_a_function():
    spec = spec20()
    fn = FunctionSpec("f", requirements={"math": 12.0})
    p = Profile("x", {"math": 10.0, "french": 0.0}, {"math": 2.0}, motivation=1.0)
    assert function_usable(p, spec, fn, Horizon(1.0))  # projected math = 12
    assert not function_usable(p, spec, fn, Horizon(0.0))


def test_unknown_requirement_criterion_errors():
    spec = spec20()
    fn = FunctionSpec("f", requirements={"latin": 3.0})
    with pytest.raises(ModelError, match="latin"):
        function_usable(Profile("x", {"math": 0.0, "french": 0.0}), spec, fn)


def test_validate_device_reports_rules():
    spec = spec20()
    dev = device(FunctionSpec("f", requirements={"math": 99.0}),
                 FunctionSpec("f", requirements={"latin": 1.0}, importance=-1.0))
    rules = {v.rule for v in validate_device(dev, spec).violations}
    assert {"requirement_out_of_range", "duplicate_id",
            "unknown_criterion", "negative_importance"} <= rules


def test_utilization_all_usable_is_one():
    spec = spec20()
    dev = device(FunctionSpec("a"), FunctionSpec("b", requirements={"math": 5.0}))
    p = Profile("x", {"math": 10.0, "french": 0.0})
    assert utilization_score(p, spec, dev) == 1.0


def test_utilization_importance_weighted():
    spec = spec20()
    dev = device(FunctionSpec("a", importance=3.0),
                 FunctionSpec("b", requirements={"math": 15.0}, importance=1.0))
    p = Profile("x", {"math": 10.0, "french": 0.0})
    assert utilization_score(p, spec, dev) == pytest.approx(0.75)


def test_empty_device_scores_zero():
    spec = spec20()
    p = Profile("x", {"math": 10.0, "french": 0.0})
    assert utilization_score(p, spec, device()) == 0.0


def test_zero_importance_function_not_counted():
    spec = spec20()
    dev = device(FunctionSpec("masked", requirements={"math": 19.0}, importance=0.0),
                 FunctionSpec("open", importance=1.0))
    p = Profile("x", {"math": 0.0, "french": 0.0})
    assert utilization_score(p, spec, dev) == 1.0


def test_coverage_single_capable_profile():
    spec = spec20()
    dev = device(FunctionSpec("a"), FunctionSpec("b", requirements={"math": 5.0}))
    report = population_coverage(
        [Profile("x", {"math": 10.0, "french": 0.0})], spec, dev)
    assert report.per_function == {"a": 1.0, "b": 1.0}
    assert report.per_individual == {"x": 1.0}


def test_unsatisfiable_requirement_has_zero_coverage():
    spec = spec20()
    dev = device(FunctionSpec("hard", requirements={"math": 20.0}))
    population = [Profile(f"p{i}", {"math": 10.0, "french": 0.0}) for i in range(3)]
    report = population_coverage(population, spec, dev)
    assert report.per_function["hard"] == 0.0


def test_coverage_counting():
    spec = spec20()
    dev = device(FunctionSpec("f", requirements={"math": 10.0}))
    population = [Profile(f"p{i}", {"math": s, "french": 0.0})
                  for i, s in enumerate([12.0, 15.0, 10.0, 5.0])]
    report = population_coverage(population, spec, dev)
    assert report.per_function["f"] == 0.75


def test_empty_population_errors():
    spec = spec20()
    with pytest.raises(ModelError):
        population_coverage([], spec, device(FunctionSpec("f")))


def test_recommend_zero_threshold_keeps_all():
    spec = spec20()
    dev = device(FunctionSpec("a"), FunctionSpec("b", requirements={"math": 20.0}))
    rec = recommend_functions(
        [Profile("x", {"math": 0.0, "french": 0.0})], spec, dev, min_coverage=0.0)
    assert [fid for fid, _ in rec.recommended] == ["a", "b"]
    assert rec.excluded == []


def test_recommend_full_threshold_excludes_on_one_failure():
    spec = spec20()
    dev = device(FunctionSpec("f", requirements={"math": 10.0}))
    population = [Profile("ok", {"math": 15.0, "french": 0.0}),
                  Profile("not", {"math": 5.0, "french": 0.0})]
    rec = recommend_functions(population, spec, dev, min_coverage=1.0)
    assert rec.recommended == []
    assert rec.excluded == [("f", 0.5)]


def test_recommend_threshold_is_inclusive():
    spec = spec20()
    dev = device(FunctionSpec("f", requirements={"math": 10.0}))
    population = [Profile(f"p{i}", {"math": s, "french": 0.0})
                  for i, s in enumerate([12.0, 15.0, 10.0, 5.0])]
    rec = recommend_functions(population, spec, dev, min_coverage=0.75)
    assert rec.recommended == [("f", 0.75)]


def test_recommendation_partitions_functions():
    spec = spec20()
    rng = random.Random(3)
    functions = [FunctionSpec(f"f{i}", requirements={"math": rng.uniform(0, 20)})
                 for i in range(6)]
    dev = device(*functions)
    population = [random_profile(rng, spec, f"p{i}") for i in range(5)]
    rec = recommend_functions(population, spec, dev, min_coverage=0.5)
    ids = {fid for fid, _ in rec.recommended} | {fid for fid, _ in rec.excluded}
    assert ids == {f.id for f in functions}
    assert len(rec.recommended) + len(rec.excluded) == len(functions)


def test_coverage_monotone_in_horizon_and_requirements():
    rng = random.Random(9)
    spec = spec20()
    for _ in range(100):
        req = {"math": rng.uniform(0, 20), "french": rng.uniform(0, 20)}
        dev = device(FunctionSpec("f", requirements=req),
                     FunctionSpec("g", requirements={"math": req["math"]}))
        population = [random_profile(rng, spec, f"p{i}") for i in range(4)]
        t1, t2 = sorted((rng.uniform(0, 5), rng.uniform(0, 5)))
        c1 = population_coverage(population, spec, dev, Horizon(t1))
        c2 = population_coverage(population, spec, dev, Horizon(t2))
        for fid in c1.per_function:
            assert c1.per_function[fid] <= c2.per_function[fid]
        for pid in c1.per_individual:
            assert c1.per_individual[pid] <= c2.per_individual[pid]
        relaxed = device(FunctionSpec("f", requirements={"math": req["math"] / 2}),
                         FunctionSpec("g", requirements={"math": req["math"]}))
        cr = population_coverage(population, spec, relaxed, Horizon(t1))
        assert cr.per_function["f"] >= c1.per_function["f"]
