from pathlib import Path

import pytest

from teamfit.aggregation import Capacity2Additive
from teamfit.core_model import CriteriaSpec, Criterion, Profile
from teamfit.persistence import load_workspace

DATA = Path(__file__).resolve().parent.parent / "data"
BUNDLED = DATA / "paper_3_3.workspace.json"


@pytest.fixture
def spec2() -> CriteriaSpec:
    return CriteriaSpec((
        Criterion("math", "Mathematics", 0.0, 20.0),
        Criterion("french", "French", 0.0, 20.0),
    ))


@pytest.fixture
def trio(spec2) -> list[Profile]:
    # strong mathematician, strong writer, balanced candidate
    return [
        Profile("p1", {"math": 20.0, "french": 10.0}),
        Profile("p2", {"math": 10.0, "french": 20.0}),
        Profile("p3", {"math": 15.0, "french": 15.0}),
    ]


@pytest.fixture
def synergy_capacity() -> Capacity2Additive:
    return Capacity2Additive({"math": 0.3, "french": 0.3}, {("math", "french"): 0.4})


@pytest.fixture
def flat_capacity() -> Capacity2Additive:
    return Capacity2Additive({"math": 0.5, "french": 0.5})


@pytest.fixture
def bundled_path() -> Path:
    return BUNDLED


@pytest.fixture
def bundled_workspace():
    return load_workspace(BUNDLED)
