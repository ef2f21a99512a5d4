"""Device-to-population fit.

A device is a set of functions, each with minimum raw-score requirements.
Capability is a hard threshold per requirement; importance 0 keeps a
function representable (masked / undocumented) without counting it.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core_model import CriteriaSpec, Profile
from .projection import Horizon, project
from .validation import ModelError, ValidationReport, Violation


@dataclass(frozen=True)
class FunctionSpec:
    id: str
    label: str = ""
    requirements: dict[str, float] = field(default_factory=dict)
    importance: float = 1.0


@dataclass(frozen=True)
class DeviceSpec:
    device_id: str
    functions: tuple[FunctionSpec, ...]

    def __post_init__(self):
        object.__setattr__(self, "functions", tuple(self.functions))


@dataclass(frozen=True)
class CoverageReport:
    per_function: dict[str, float]
    per_individual: dict[str, float]


@dataclass(frozen=True)
class FunctionRecommendation:
    recommended: list[tuple[str, float]]  # (function id, coverage), best first
    excluded: list[tuple[str, float]]
    min_coverage: float


def validate_device(device: DeviceSpec, spec: CriteriaSpec) -> ValidationReport:
    out: list[Violation] = []
    known = {c.id: c for c in spec.criteria}
    seen: set[str] = set()
    for fn in device.functions:
        if fn.id in seen:
            out.append(Violation("duplicate_id", fn.id, "duplicate function id"))
        seen.add(fn.id)
        if fn.importance < 0:
            out.append(Violation(
                "negative_importance", fn.id, f"importance {fn.importance} < 0"))
        for cid, req in fn.requirements.items():
            c = known.get(cid)
            if c is None:
                out.append(Violation(
                    "unknown_criterion", fn.id,
                    f"requirement on unknown criterion {cid!r}"))
            elif not (c.scale_min <= req <= c.scale_max):
                out.append(Violation(
                    "requirement_out_of_range", fn.id,
                    f"requirement {req} for {cid!r} outside "
                    f"[{c.scale_min}, {c.scale_max}]"))
    return ValidationReport(tuple(out))


def function_usable(profile: Profile, spec: CriteriaSpec, fn: FunctionSpec,
                    horizon: Horizon = Horizon(0.0)) -> bool:
    """True iff the projected profile meets every requirement (raw scale)."""
    known = set(spec.ids())
    for cid in fn.requirements:
        if cid not in known:
            raise ModelError(
                f"function {fn.id!r} requires unknown criterion {cid!r}")
    projected = project(profile, spec, horizon)
    return all(projected.scores[cid] >= req for cid, req in fn.requirements.items())


def utilization_score(profile: Profile, spec: CriteriaSpec, device: DeviceSpec,
                      horizon: Horizon = Horizon(0.0)) -> float:
    """Importance-weighted fraction of usable functions; 0 when the device
    carries no positive importance."""
    total = sum(fn.importance for fn in device.functions)
    if total == 0.0:
        return 0.0
    usable = sum(fn.importance for fn in device.functions
                 if function_usable(profile, spec, fn, horizon))
    return usable / total


def population_coverage(population: list[Profile], spec: CriteriaSpec,
                        device: DeviceSpec, horizon: Horizon = Horizon(0.0),
                        ) -> CoverageReport:
    if not population:
        raise ModelError("population is empty")
    per_function = {}
    for fn in device.functions:
        able = sum(1 for p in population if function_usable(p, spec, fn, horizon))
        per_function[fn.id] = able / len(population)
    per_individual = {
        p.id: utilization_score(p, spec, device, horizon) for p in population}
    return CoverageReport(per_function, per_individual)


def recommend_functions(population: list[Profile], spec: CriteriaSpec,
                        device: DeviceSpec, horizon: Horizon = Horizon(0.0),
                        min_coverage: float = 0.0) -> FunctionRecommendation:
    """Partition functions by the coverage threshold (>= keeps a function)."""
    if not (0.0 <= min_coverage <= 1.0):
        raise ModelError(f"min_coverage {min_coverage} outside [0, 1]")
    report = population_coverage(population, spec, device, horizon)
    pairs = sorted(report.per_function.items(), key=lambda t: (-t[1], t[0]))
    recommended = [(fid, cov) for fid, cov in pairs if cov >= min_coverage]
    excluded = [(fid, cov) for fid, cov in pairs if cov < min_coverage]
    return FunctionRecommendation(recommended, excluded, min_coverage)
