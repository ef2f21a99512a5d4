"""Prototype-centered fuzzy classes.

A prototype is the class's center of gravity: the best achievable values on
the class's qualities. Membership is graded by a one-sided weighted distance,
so a profile can belong to several classes or to none at all.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core_model import CriteriaSpec, NormalizedProfile
from .validation import ModelError

CHEBYSHEV = "chebyshev"
EUCLIDEAN = "euclidean"


@dataclass(frozen=True)
class Prototype:
    class_id: str
    ideal: NormalizedProfile
    # class-specific importance of each quality; missing ids count as 0
    weights: dict[str, float] = field(default_factory=dict)

    def weight_vector(self, spec: CriteriaSpec) -> tuple[float, ...]:
        if not self.weights:
            return tuple(1.0 for _ in spec.criteria)
        w = tuple(self.weights.get(c.id, 0.0) for c in spec.criteria)
        if all(v == 0.0 for v in w):
            raise ModelError(f"prototype {self.class_id!r}: all weights are zero")
        if any(v < 0 for v in w):
            raise ModelError(f"prototype {self.class_id!r}: negative weight")
        return w


@dataclass(frozen=True)
class ClassModel:
    prototypes: tuple[Prototype, ...]
    threshold: float = 0.5
    metric: str = CHEBYSHEV

    def __post_init__(self):
        object.__setattr__(self, "prototypes", tuple(self.prototypes))
        ids = [p.class_id for p in self.prototypes]
        if len(set(ids)) != len(ids):
            raise ModelError("duplicate class ids in class model")
        if not (0.0 < self.threshold <= 1.0):
            raise ModelError(f"membership threshold {self.threshold} outside (0, 1]")
        if self.metric not in (CHEBYSHEV, EUCLIDEAN):
            raise ModelError(f"unknown metric {self.metric!r}")

    def prototype(self, class_id: str) -> Prototype:
        for p in self.prototypes:
            if p.class_id == class_id:
                return p
        raise ModelError(f"unknown class {class_id!r}")


@dataclass(frozen=True)
class MembershipReport:
    profile_id: str
    degrees: dict[str, float]
    assigned: frozenset[str]
    distances: dict[str, float]


def build_prototype(exemplars: list[NormalizedProfile], mode: str, class_id: str,
                    weights: dict[str, float] | None = None) -> Prototype:
    """ideal-point: componentwise max of the exemplars; centroid: their mean."""
    if not exemplars:
        raise ModelError("cannot build a prototype from an empty exemplar list")
    n = len(exemplars[0].values)
    if any(len(e.values) != n for e in exemplars):
        raise ModelError("exemplars have mixed dimensions")
    if mode == "ideal-point":
        values = tuple(max(e.values[i] for e in exemplars) for i in range(n))
    elif mode == "centroid":
        values = tuple(sum(e.values[i] for e in exemplars) / len(exemplars)
                       for i in range(n))
    else:
        raise ModelError(f"unknown prototype mode {mode!r}")
    return Prototype(class_id, NormalizedProfile(class_id, values), dict(weights or {}))


def distance(p: NormalizedProfile, proto: Prototype, spec: CriteriaSpec,
             metric: str = CHEBYSHEV) -> float:
    """One-sided weighted distance to the prototype's ideal; exceeding the
    ideal on a criterion never adds distance."""
    if len(p.values) != len(proto.ideal.values):
        raise ModelError(
            f"profile {p.id!r} has {len(p.values)} values, "
            f"prototype {proto.class_id!r} has {len(proto.ideal.values)}")
    w = proto.weight_vector(spec)
    gaps = [wi * max(0.0, ii - pi)
            for wi, ii, pi in zip(w, proto.ideal.values, p.values)]
    if metric == CHEBYSHEV:
        return max(gaps)
    return math.sqrt(sum(g * g for g in gaps))


def max_distance(proto: Prototype, spec: CriteriaSpec, metric: str = CHEBYSHEV) -> float:
    """Distance of the all-zero profile; normalizes degrees to [0, 1]."""
    w = proto.weight_vector(spec)
    gaps = [wi * ii for wi, ii in zip(w, proto.ideal.values)]
    if metric == CHEBYSHEV:
        return max(gaps)
    return math.sqrt(sum(g * g for g in gaps))


def membership_degrees(p: NormalizedProfile, model: ClassModel,
                       spec: CriteriaSpec) -> MembershipReport:
    if not model.prototypes:
        raise ModelError("class model has no prototypes")
    degrees: dict[str, float] = {}
    distances: dict[str, float] = {}
    for proto in model.prototypes:
        d = distance(p, proto, spec, model.metric)
        d_max = max_distance(proto, spec, model.metric)
        distances[proto.class_id] = d
        if d_max == 0.0:
            degrees[proto.class_id] = 1.0
        else:
            degrees[proto.class_id] = min(1.0, max(0.0, 1.0 - d / d_max))
    assigned = frozenset(c for c, deg in degrees.items() if deg >= model.threshold)
    return MembershipReport(p.id, degrees, assigned, distances)


def relevant_minorities(population: list[NormalizedProfile], model: ClassModel,
                        spec: CriteriaSpec) -> list[str]:
    """Profiles no class claims, nearest-to-some-class first (ties by id)."""
    unassigned = []
    for p in population:
        report = membership_degrees(p, model, spec)
        if not report.assigned:
            best = max(report.degrees.values())
            unassigned.append((-best, p.id))
    unassigned.sort()
    return [pid for _, pid in unassigned]
