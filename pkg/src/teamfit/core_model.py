"""Criteria, scales, qualitative levels and individual profiles.

Every raw score lives on its criterion's own scale; normalization maps all
of them onto [0, 1] so distances and aggregations are scale-free.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .validation import ModelError, ValidationReport, Violation


@dataclass(frozen=True)
class Criterion:
    id: str
    label: str = ""
    scale_min: float = 0.0
    scale_max: float = 1.0
    # ordered (label, raw score) pairs; None when the criterion is purely quantitative
    levels: tuple[tuple[str, float], ...] | None = None


@dataclass(frozen=True)
class CriteriaSpec:
    criteria: tuple[Criterion, ...]

    def __post_init__(self):
        object.__setattr__(self, "criteria", tuple(self.criteria))

    def ids(self) -> list[str]:
        return [c.id for c in self.criteria]

    def criterion(self, crit_id: str) -> Criterion:
        for c in self.criteria:
            if c.id == crit_id:
                return c
        raise ModelError(f"unknown criterion {crit_id!r}")

    def __len__(self) -> int:
        return len(self.criteria)


@dataclass(frozen=True)
class Profile:
    id: str
    scores: dict[str, float]
    growth_rates: dict[str, float] = field(default_factory=dict)
    motivation: float = 1.0


@dataclass(frozen=True)
class NormalizedProfile:
    id: str
    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))


def validate_criteria_spec(spec: CriteriaSpec) -> ValidationReport:
    """Check all CriteriaSpec invariants; violations are the return value."""
    out: list[Violation] = []
    seen: set[str] = set()
    for c in spec.criteria:
        if not c.id:
            out.append(Violation("empty_id", c.id, "criterion id is empty"))
        if c.id in seen:
            out.append(Violation("duplicate_id", c.id, f"duplicate id {c.id!r}"))
        seen.add(c.id)
        if not c.scale_min < c.scale_max:
            out.append(Violation(
                "empty_scale", c.id,
                f"scale [{c.scale_min}, {c.scale_max}] is empty"))
        if c.levels is not None:
            labels: set[str] = set()
            for label, score in c.levels:
                if label in labels:
                    out.append(Violation(
                        "duplicate_level", c.id, f"duplicate level label {label!r}"))
                labels.add(label)
                if not (c.scale_min <= score <= c.scale_max):
                    out.append(Violation(
                        "level_out_of_range", c.id,
                        f"level {label!r} score {score} outside "
                        f"[{c.scale_min}, {c.scale_max}]"))
    return ValidationReport(tuple(out))


def validate_profile(profile: Profile, spec: CriteriaSpec) -> ValidationReport:
    """Check a profile against its governing spec."""
    out: list[Violation] = []
    known = set(spec.ids())
    for c in spec.criteria:
        if c.id not in profile.scores:
            out.append(Violation(
                "missing_score", profile.id, f"no score for criterion {c.id!r}"))
            continue
        s = profile.scores[c.id]
        if not (c.scale_min <= s <= c.scale_max):
            out.append(Violation(
                "score_out_of_range", profile.id,
                f"score {s} for {c.id!r} outside [{c.scale_min}, {c.scale_max}]"))
    for cid in profile.scores:
        if cid not in known:
            out.append(Violation(
                "unknown_criterion", profile.id, f"score for unknown criterion {cid!r}"))
    for cid, r in profile.growth_rates.items():
        if cid not in known:
            out.append(Violation(
                "unknown_criterion", profile.id, f"growth rate for unknown criterion {cid!r}"))
        if r < 0:
            out.append(Violation(
                "negative_rate", profile.id, f"growth rate {r} for {cid!r} is negative"))
    if not (0.0 <= profile.motivation <= 1.0):
        out.append(Violation(
            "motivation_out_of_range", profile.id,
            f"motivation {profile.motivation} outside [0, 1]"))
    return ValidationReport(tuple(out))


def normalize_profile(profile: Profile, spec: CriteriaSpec) -> NormalizedProfile:
    """Affine map of every raw score onto [0, 1], ordered as the spec."""
    values = []
    for c in spec.criteria:
        if c.id not in profile.scores:
            raise ModelError(f"profile {profile.id!r} has no score for criterion {c.id!r}")
        s = profile.scores[c.id]
        if not (c.scale_min <= s <= c.scale_max):
            raise ModelError(
                f"profile {profile.id!r}: score {s} for {c.id!r} outside "
                f"[{c.scale_min}, {c.scale_max}]")
        values.append((s - c.scale_min) / (c.scale_max - c.scale_min))
    return NormalizedProfile(profile.id, tuple(values))


def denormalize(values, spec: CriteriaSpec) -> dict[str, float]:
    """Inverse of normalize_profile's affine map, back to raw scores."""
    if len(values) != len(spec):
        raise ModelError(f"expected {len(spec)} values, got {len(values)}")
    return {
        c.id: c.scale_min + v * (c.scale_max - c.scale_min)
        for c, v in zip(spec.criteria, values)
    }


def score_from_level(criterion: Criterion, level_label: str) -> float:
    """Resolve a qualitative label to its raw score on the criterion scale."""
    if criterion.levels is None:
        raise ModelError(f"criterion {criterion.id!r} has no qualitative levels")
    for label, score in criterion.levels:
        if label == level_label:
            return score
    available = ", ".join(label for label, _ in criterion.levels)
    raise ModelError(
        f"unknown label {level_label!r} for criterion {criterion.id!r}; "
        f"available: {available}")
