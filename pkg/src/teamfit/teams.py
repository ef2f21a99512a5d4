"""Candidate ranking and team selection under a Choquet objective.

A team's quality vector combines members either by coverage (componentwise
max: the team has a quality if some member does) or by mean. Selection is
exact enumeration when the subset count allows, forward greedy otherwise.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .aggregation import (Capacity2Additive, InvalidCapacityError,
                          _choquet_unchecked, validate_capacity)
from .core_model import CriteriaSpec, NormalizedProfile, Profile, normalize_profile
from .projection import Horizon, project
from .validation import ModelError

COVERAGE = "coverage"
MEAN = "mean"

EXACT_GUARD = 2_000_000
AUTO_EXACT_LIMIT = 100_000


@dataclass(frozen=True)
class TeamQuery:
    capacity: Capacity2Additive
    k: int
    horizon: Horizon = Horizon(0.0)
    combine: str = COVERAGE
    method: str = "auto"

    def __post_init__(self):
        if self.k < 1:
            raise ModelError(f"team size {self.k} must be >= 1")
        if self.combine not in (COVERAGE, MEAN):
            raise ModelError(f"unknown combine mode {self.combine!r}")
        if self.method not in ("exact", "greedy", "auto"):
            raise ModelError(f"unknown method {self.method!r}")


@dataclass(frozen=True)
class TeamResult:
    member_ids: tuple[str, ...]
    team_vector: NormalizedProfile
    objective: float
    method_used: str


def team_vector(members: list[NormalizedProfile], combine: str = COVERAGE) -> NormalizedProfile:
    if not members:
        raise ModelError("cannot combine an empty member list")
    n = len(members[0].values)
    if any(len(m.values) != n for m in members):
        raise ModelError("team members have mixed dimensions")
    if combine == COVERAGE:
        values = tuple(max(m.values[i] for m in members) for i in range(n))
    elif combine == MEAN:
        values = tuple(sum(m.values[i] for m in members) / len(members)
                       for i in range(n))
    else:
        raise ModelError(f"unknown combine mode {combine!r}")
    return NormalizedProfile("team", values)


def _projected_normalized(population: list[Profile], spec: CriteriaSpec,
                          horizon: Horizon) -> list[NormalizedProfile]:
    return [normalize_profile(project(p, spec, horizon), spec) for p in population]


def rank_candidates(population: list[Profile], spec: CriteriaSpec,
                    capacity: Capacity2Additive, horizon: Horizon = Horizon(0.0),
                    ) -> list[tuple[str, float]]:
    """Project, normalize and score every candidate; best first, ties by id."""
    report = validate_capacity(capacity, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    ids = spec.ids()
    scored = [(np.id, _choquet_unchecked(np.values, ids, capacity))
              for np in _projected_normalized(population, spec, horizon)]
    scored.sort(key=lambda t: (-t[1], t[0]))
    return scored


def _prepare(population, spec, query: TeamQuery):
    report = validate_capacity(query.capacity, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    if query.k > len(population):
        raise ModelError(
            f"team size {query.k} exceeds population size {len(population)}")
    members = _projected_normalized(population, spec, query.horizon)
    members.sort(key=lambda m: m.id)
    return members


def select_team_exact(population: list[Profile], spec: CriteriaSpec,
                      query: TeamQuery) -> TeamResult:
    """Enumerate all k-subsets; ties go to the lexicographically smallest
    sorted id tuple."""
    members = _prepare(population, spec, query)
    n, k = len(members), query.k
    if math.comb(n, k) > EXACT_GUARD:
        raise ModelError(
            f"C({n}, {k}) = {math.comb(n, k)} subsets exceeds the exact-search "
            f"guard of {EXACT_GUARD}; use the greedy method")
    ids = spec.ids()
    best_ids: tuple[str, ...] | None = None
    best_vec = None
    best_obj = -math.inf
    for subset in combinations(members, k):
        vec = team_vector(list(subset), query.combine)
        obj = _choquet_unchecked(vec.values, ids, query.capacity)
        subset_ids = tuple(m.id for m in subset)
        if obj > best_obj or (obj == best_obj and subset_ids < best_ids):
            best_ids, best_vec, best_obj = subset_ids, vec, obj
    return TeamResult(best_ids, best_vec, best_obj, "exact")


def select_team_greedy(population: list[Profile], spec: CriteriaSpec,
                       query: TeamQuery) -> TeamResult:
    """Forward greedy: repeatedly add the candidate maximizing the augmented
    team's objective (ties by ascending id)."""
    members = _prepare(population, spec, query)
    ids = spec.ids()
    chosen: list[NormalizedProfile] = []
    remaining = list(members)  # already id-sorted, so ties resolve by id
    for _ in range(query.k):
        best_idx, best_obj = None, -math.inf
        for idx, cand in enumerate(remaining):
            vec = team_vector(chosen + [cand], query.combine)
            obj = _choquet_unchecked(vec.values, ids, query.capacity)
            if obj > best_obj:
                best_idx, best_obj = idx, obj
        chosen.append(remaining.pop(best_idx))
    chosen.sort(key=lambda m: m.id)
    vec = team_vector(chosen, query.combine)
    obj = _choquet_unchecked(vec.values, ids, query.capacity)
    return TeamResult(tuple(m.id for m in chosen), vec, obj, "greedy")


def select_team(population: list[Profile], spec: CriteriaSpec,
                query: TeamQuery) -> TeamResult:
    """Dispatch on query.method; auto picks exact for small subset counts."""
    if query.method == "exact":
        return select_team_exact(population, spec, query)
    if query.method == "greedy":
        return select_team_greedy(population, spec, query)
    if math.comb(len(population), query.k) <= AUTO_EXACT_LIMIT:
        return select_team_exact(population, spec, query)
    return select_team_greedy(population, spec, query)
