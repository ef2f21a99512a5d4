"""Diachronic projection and class-entry gap analysis.

Competence grows linearly in time at growth_rate * motivation per period,
saturating at the criterion's scale_max. The gap analysis inverts the
membership rule: the minimal per-criterion raw scores that put a profile at
the class threshold, the resulting deficits, and the time to close them.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .core_model import CriteriaSpec, Profile, denormalize, normalize_profile
from .prototypes import CHEBYSHEV, ClassModel, max_distance
from .validation import ModelError

_EPS = 1e-12


@dataclass(frozen=True)
class Horizon:
    delta_t: float = 0.0

    def __post_init__(self):
        if self.delta_t < 0:
            raise ModelError(f"horizon {self.delta_t} is negative")


@dataclass(frozen=True)
class GapReport:
    profile_id: str
    class_id: str
    deficits: dict[str, float]  # raw score units, 0 when already at/above required
    required: dict[str, float]  # raw score to reach the membership threshold
    time_to_ready: float  # periods; math.inf when unreachable
    unreachable: bool
    reachable_within: bool | None = None  # set when a horizon was queried
    # an unreachable gap that full motivation (1.0) would make reachable
    reachable_with_full_motivation: bool = False


def project(profile: Profile, spec: CriteriaSpec, h: Horizon) -> Profile:
    """score_i(t) = min(scale_max, score_i + rate_i * motivation * delta_t)."""
    if h.delta_t == 0.0:
        return profile
    scores = {}
    for c in spec.criteria:
        s = profile.scores[c.id]
        rate = profile.growth_rates.get(c.id, 0.0)
        scores[c.id] = min(c.scale_max, s + rate * profile.motivation * h.delta_t)
    return Profile(profile.id, scores, dict(profile.growth_rates), profile.motivation)


def required_scores(model: ClassModel, class_id: str, spec: CriteriaSpec) -> dict[str, float]:
    """Minimal raw scores putting a profile at degree >= threshold.

    required_i (normalized) = max(0, ideal_i - (1 - theta) * d_max / w_i);
    zero-weight criteria impose no requirement.
    """
    if model.metric != CHEBYSHEV:
        raise ModelError("gap analysis is defined for the chebyshev metric only")
    proto = model.prototype(class_id)
    w = proto.weight_vector(spec)
    d_max = max_distance(proto, spec, model.metric)
    slack = (1.0 - model.threshold) * d_max
    req_norm = []
    for wi, ii in zip(w, proto.ideal.values):
        if wi == 0.0:
            req_norm.append(0.0)
        else:
            req_norm.append(max(0.0, ii - slack / wi))
    return denormalize(req_norm, spec)


def gap_analysis(profile: Profile, spec: CriteriaSpec, model: ClassModel,
                 class_id: str, h: Horizon | None = None) -> GapReport:
    required = required_scores(model, class_id, spec)
    normalize_profile(profile, spec)  # surfaces invalid profiles early
    deficits = {}
    for c in spec.criteria:
        deficits[c.id] = max(0.0, required[c.id] - profile.scores[c.id])
    time_to_ready = 0.0
    unreachable = False
    reachable_full = False
    for cid, deficit in deficits.items():
        if deficit <= _EPS:
            continue
        eff_rate = profile.growth_rates.get(cid, 0.0) * profile.motivation
        if eff_rate == 0.0:
            unreachable = True
            if profile.growth_rates.get(cid, 0.0) > 0.0:
                reachable_full = True  # motivation, not ability, is the blocker
            else:
                reachable_full = False
                time_to_ready = math.inf
                break
            time_to_ready = math.inf
        else:
            time_to_ready = max(time_to_ready, deficit / eff_rate)
    if unreachable:
        time_to_ready = math.inf
    reachable_within = None
    if h is not None:
        reachable_within = time_to_ready <= h.delta_t
    return GapReport(
        profile_id=profile.id,
        class_id=class_id,
        deficits=deficits,
        required=required,
        time_to_ready=time_to_ready,
        unreachable=unreachable,
        reachable_within=reachable_within,
        reachable_with_full_motivation=reachable_full,
    )
