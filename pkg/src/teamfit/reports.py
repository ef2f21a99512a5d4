"""Report builders shared by the CLI and the HTTP service.

Every analysis produces a plain dict; rendering it with
persistence.canonical_dumps gives byte-identical output on both surfaces.
"""
from __future__ import annotations

import math

from .aggregation import (Capacity2Additive, ShapleyView, WeightVector,
                          capacity_from_shapley, choquet, pair_key,
                          shapley_view, weighted_mean)
from .core_model import normalize_profile
from .devices import population_coverage, recommend_functions
from .persistence import (Workspace, canonical_dumps, capacity_dict,
                          parse_capacity, workspace_dict)
from .projection import Horizon, gap_analysis, project
from .prototypes import membership_degrees, relevant_minorities
from .teams import TeamQuery, rank_candidates, select_team
from .validation import ModelError

RANK_TIE_TOL = 1e-9


def workspace_summary(ws: Workspace) -> dict:
    doc = workspace_dict(ws)
    return {
        "criteria": doc["criteria"],
        "population": [p.id for p in ws.population],
        "capacities": sorted(ws.capacities),
        "class_models": sorted(ws.class_models),
        "model_classes": {
            name: [p.class_id for p in model.prototypes]
            for name, model in sorted(ws.class_models.items())},
        "devices": sorted(ws.devices),
    }


def profile_report(ws: Workspace, profile_id: str) -> dict:
    p = ws.profile(profile_id)
    return {
        "id": p.id,
        "scores": dict(p.scores),
        "growth_rates": dict(p.growth_rates),
        "motivation": p.motivation,
        "normalized": {
            cid: v for cid, v in
            zip(ws.spec.ids(), normalize_profile(p, ws.spec).values)},
    }


def score_report(ws: Workspace, capacity: Capacity2Additive, horizon: Horizon,
                 capacity_name: str | None = None) -> dict:
    view = shapley_view(capacity, ws.spec)
    w = WeightVector(view.shapley)
    scores = []
    for p in sorted(ws.population, key=lambda p: p.id):
        x = normalize_profile(project(p, ws.spec, horizon), ws.spec)
        scores.append({
            "id": p.id,
            "choquet": choquet(x, capacity, ws.spec),
            "weighted_mean": weighted_mean(x, w, ws.spec),
        })
    out = {"horizon": horizon.delta_t, "scores": scores}
    if capacity_name is not None:
        out["capacity"] = capacity_name
    return out


def rank_report(ws: Workspace, capacity: Capacity2Additive, horizon: Horizon,
                top: int | None = None, capacity_name: str | None = None) -> dict:
    ranked = rank_candidates(list(ws.population), ws.spec, capacity, horizon)
    rows = []
    rank = 0
    prev_score = None
    for pos, (pid, score) in enumerate(ranked, start=1):
        if prev_score is None or abs(score - prev_score) > RANK_TIE_TOL:
            rank = pos
        prev_score = score
        rows.append({"rank": rank, "id": pid, "score": score})
    if top is not None:
        rows = rows[:top]
    out = {"horizon": horizon.delta_t, "ranking": rows}
    if capacity_name is not None:
        out["capacity"] = capacity_name
    return out


def classify_report(ws: Workspace, model_name: str, horizon: Horizon,
                    minorities: bool = False) -> dict:
    model = ws.class_model(model_name)
    normalized = [
        normalize_profile(project(p, ws.spec, horizon), ws.spec)
        for p in sorted(ws.population, key=lambda p: p.id)]
    profiles = []
    for x in normalized:
        r = membership_degrees(x, model, ws.spec)
        profiles.append({
            "id": r.profile_id,
            "degrees": dict(r.degrees),
            "assigned": sorted(r.assigned),
            "distances": dict(r.distances),
        })
    out = {"horizon": horizon.delta_t, "model": model_name, "profiles": profiles}
    if minorities:
        out["minorities"] = relevant_minorities(normalized, model, ws.spec)
    return out


def gap_report(ws: Workspace, model_name: str, class_id: str, profile_id: str,
               horizon: Horizon | None = None) -> dict:
    model = ws.class_model(model_name)
    profile = ws.profile(profile_id)
    r = gap_analysis(profile, ws.spec, model, class_id, horizon)
    out = {
        "model": model_name,
        "class": class_id,
        "profile": profile_id,
        "required": dict(r.required),
        "deficits": dict(r.deficits),
        "time_to_ready": None if math.isinf(r.time_to_ready) else r.time_to_ready,
        "unreachable": r.unreachable,
        "reachable_with_full_motivation": r.reachable_with_full_motivation,
    }
    if horizon is not None:
        out["horizon"] = horizon.delta_t
        out["reachable_within"] = r.reachable_within
    return out


def team_report(ws: Workspace, capacity: Capacity2Additive, k: int,
                horizon: Horizon, combine: str = "coverage", method: str = "auto",
                capacity_name: str | None = None) -> dict:
    query = TeamQuery(capacity, k, horizon, combine, method)
    result = select_team(list(ws.population), ws.spec, query)
    out = {
        "horizon": horizon.delta_t,
        "k": k,
        "combine": combine,
        "method": method,
        "members": list(result.member_ids),
        "team_vector": {
            cid: v for cid, v in zip(ws.spec.ids(), result.team_vector.values)},
        "objective": result.objective,
        "method_used": result.method_used,
    }
    if capacity_name is not None:
        out["capacity"] = capacity_name
    return out


def device_report(ws: Workspace, device_name: str, horizon: Horizon,
                  min_coverage: float | None = None) -> dict:
    device = ws.device(device_name)
    coverage = population_coverage(list(ws.population), ws.spec, device, horizon)
    out = {
        "horizon": horizon.delta_t,
        "device": device_name,
        "per_function": dict(coverage.per_function),
        "per_individual": dict(coverage.per_individual),
    }
    if min_coverage is not None:
        rec = recommend_functions(
            list(ws.population), ws.spec, device, horizon, min_coverage)
        out["min_coverage"] = min_coverage
        out["recommended"] = [
            {"id": fid, "coverage": cov} for fid, cov in rec.recommended]
        out["excluded"] = [
            {"id": fid, "coverage": cov} for fid, cov in rec.excluded]
    return out


def shapley_report(ws: Workspace, capacity_name: str) -> dict:
    view = shapley_view(ws.capacity(capacity_name), ws.spec)
    return {
        "capacity": capacity_name,
        "shapley": dict(view.shapley),
        "interactions": [[a, b, v] for (a, b), v in sorted(view.interactions.items())],
    }


# ---------------------------------------------------------------- what-if

def resolve_capacity(ws: Workspace, body: dict) -> tuple[Capacity2Additive, str | None]:
    """Pick the capacity a request refers to: an inline Möbius form, an
    inline Shapley form, or a workspace capacity by name."""
    forms = [k for k in ("mobius", "shapley", "capacity") if body.get(k) is not None]
    if len(forms) != 1:
        raise ModelError(
            "exactly one of 'capacity' (name), 'mobius' or 'shapley' is required")
    form = forms[0]
    if form == "capacity":
        name = body["capacity"]
        return ws.capacity(name), name
    if form == "mobius":
        return parse_capacity(body["mobius"], "inline capacity"), None
    sv = body["shapley"]
    if "shapley" not in sv:
        raise ModelError("inline shapley form needs a 'shapley' map")
    interactions = {}
    for entry in sv.get("interactions", []):
        a, b, v = entry
        interactions[pair_key(str(a), str(b))] = float(v)
    view = ShapleyView(
        {str(k): float(v) for k, v in sv["shapley"].items()}, interactions)
    return capacity_from_shapley(view, ws.spec), None


def whatif_report(ws: Workspace, body: dict) -> dict:
    analysis = body.get("analysis")
    if not isinstance(analysis, dict) or "type" not in analysis:
        raise ModelError("what-if request needs an 'analysis' object with a 'type'")
    horizon = Horizon(float(body.get("horizon", 0.0)))
    kind = analysis["type"]
    if kind == "rank":
        capacity, name = resolve_capacity(ws, body)
        result = rank_report(ws, capacity, horizon,
                             top=analysis.get("top"), capacity_name=name)
    elif kind == "score":
        capacity, name = resolve_capacity(ws, body)
        result = score_report(ws, capacity, horizon, capacity_name=name)
    elif kind == "team":
        capacity, name = resolve_capacity(ws, body)
        result = team_report(
            ws, capacity, int(analysis["k"]), horizon,
            combine=analysis.get("combine", "coverage"),
            method=analysis.get("method", "auto"), capacity_name=name)
    elif kind == "classify":
        result = classify_report(ws, analysis["model"], horizon,
                                 minorities=bool(analysis.get("minorities", False)))
    elif kind == "gap":
        result = gap_report(ws, analysis["model"], analysis["class"],
                            analysis["profile"], horizon)
    else:
        raise ModelError(f"unknown analysis type {kind!r}")
    return {"analysis": kind, "result": result}


def render(report: dict) -> str:
    return canonical_dumps(report)
