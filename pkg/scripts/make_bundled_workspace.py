"""Regenerate the bundled demo workspace (the two-criterion recruiting
situation: one strong mathematician, one strong writer, one balanced
candidate) in canonical form."""
from __future__ import annotations

from pathlib import Path

from teamfit.aggregation import Capacity2Additive
from teamfit.core_model import CriteriaSpec, Criterion, NormalizedProfile, Profile
from teamfit.devices import DeviceSpec, FunctionSpec
from teamfit.persistence import Workspace, save_workspace
from teamfit.prototypes import ClassModel, Prototype

OUT = Path(__file__).resolve().parent.parent / "data" / "paper_3_3.workspace.json"


def build() -> Workspace:
    spec = CriteriaSpec((
        Criterion("math", "Mathematics", 0.0, 20.0,
                  levels=(("poor", 5.0), ("fair", 10.0),
                          ("good", 15.0), ("excellent", 20.0))),
        Criterion("french", "French", 0.0, 20.0),
    ))
    population = (
        Profile("p1", {"math": 20.0, "french": 10.0},
                growth_rates={"french": 2.0}, motivation=0.5),
        Profile("p2", {"math": 10.0, "french": 20.0},
                growth_rates={"math": 1.0}),
        Profile("p3", {"math": 15.0, "french": 15.0}),
    )
    capacities = {
        # uniform importance, strong math-french synergy: balanced profiles win
        "default": Capacity2Additive(
            {"math": 0.3, "french": 0.3}, {("french", "math"): 0.4}),
        # plain weighted mean embedded as a zero-interaction capacity
        "flat": Capacity2Additive({"math": 0.5, "french": 0.5}),
    }
    class_models = {
        "core": ClassModel((
            Prototype("balanced", NormalizedProfile("balanced", (0.75, 0.75)),
                      {"math": 1.0, "french": 1.0}),
            Prototype("scientist", NormalizedProfile("scientist", (1.0, 0.5)),
                      {"math": 1.0, "french": 1.0}),
        ), threshold=0.5),
    }
    devices = {
        "workstation": DeviceSpec("workstation", (
            FunctionSpec("basic", "Basic use", {}, 1.0),
            FunctionSpec("modelling", "Numerical modelling", {"math": 12.0}, 2.0),
            FunctionSpec("reporting", "Report writing",
                         {"french": 12.0, "math": 8.0}, 1.0),
        )),
    }
    return Workspace(spec, population, capacities, class_models, devices)


if __name__ == "__main__":
    save_workspace(build(), OUT)
    print(f"wrote {OUT}")
