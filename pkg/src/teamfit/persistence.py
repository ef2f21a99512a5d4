"""Workspace file format and serialization.

One self-contained JSON document (UTF-8, format_version 1) holds the
criteria spec, the population, and named capacities / class models /
devices. Serialization is canonical: sorted keys, fixed layout, shortest
round-tripping float rendering, so identical workspaces save to identical
bytes. CSV is an import-only convenience for profiles.
"""
from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

from .aggregation import Capacity2Additive, pair_key, validate_capacity
from .core_model import (CriteriaSpec, Criterion, NormalizedProfile, Profile,
                         validate_criteria_spec, validate_profile)
from .devices import DeviceSpec, FunctionSpec, validate_device
from .prototypes import ClassModel, Prototype
from .validation import ModelError

FORMAT_VERSION = 1

_TOP_LEVEL_FIELDS = {
    "format_version", "criteria", "population", "capacities",
    "class_models", "devices",
}


class WorkspaceError(ValueError):
    """Unreadable or invalid workspace input; message carries file/object/rule."""


@dataclass(frozen=True)
class Workspace:
    spec: CriteriaSpec
    population: tuple[Profile, ...] = ()
    capacities: dict[str, Capacity2Additive] = field(default_factory=dict)
    class_models: dict[str, ClassModel] = field(default_factory=dict)
    devices: dict[str, DeviceSpec] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "population", tuple(self.population))

    def profile(self, profile_id: str) -> Profile:
        for p in self.population:
            if p.id == profile_id:
                return p
        raise ModelError(f"unknown profile {profile_id!r}")

    def capacity(self, name: str) -> Capacity2Additive:
        try:
            return self.capacities[name]
        except KeyError:
            raise ModelError(f"unknown capacity {name!r}") from None

    def class_model(self, name: str) -> ClassModel:
        try:
            return self.class_models[name]
        except KeyError:
            raise ModelError(f"unknown class model {name!r}") from None

    def device(self, name: str) -> DeviceSpec:
        try:
            return self.devices[name]
        except KeyError:
            raise ModelError(f"unknown device {name!r}") from None


def canonical_dumps(obj) -> str:
    """Deterministic JSON rendering used for files, CLI output and HTTP bodies."""
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, indent=2,
                      allow_nan=False)


# ---------------------------------------------------------------- to dict

def _criterion_dict(c: Criterion) -> dict:
    d = {"id": c.id, "label": c.label,
         "scale_min": c.scale_min, "scale_max": c.scale_max}
    if c.levels is not None:
        d["levels"] = [[label, score] for label, score in c.levels]
    return d


def _profile_dict(p: Profile) -> dict:
    d: dict = {"id": p.id, "scores": dict(p.scores)}
    if p.growth_rates:
        d["growth_rates"] = dict(p.growth_rates)
    if p.motivation != 1.0:
        d["motivation"] = p.motivation
    return d


def capacity_dict(c: Capacity2Additive) -> dict:
    return {
        "singletons": dict(c.singletons),
        "pairs": [[a, b, v] for (a, b), v in sorted(c.pairs.items())],
    }


def _prototype_dict(p: Prototype, spec: CriteriaSpec) -> dict:
    return {
        "class_id": p.class_id,
        "ideal": {cid: v for cid, v in zip(spec.ids(), p.ideal.values)},
        "weights": dict(p.weights),
    }


def _class_model_dict(m: ClassModel, spec: CriteriaSpec) -> dict:
    return {
        "threshold": m.threshold,
        "metric": m.metric,
        "prototypes": [_prototype_dict(p, spec) for p in m.prototypes],
    }


def _device_dict(d: DeviceSpec) -> dict:
    return {
        "functions": [
            {"id": f.id, "label": f.label,
             "requirements": dict(f.requirements), "importance": f.importance}
            for f in d.functions
        ],
    }


def workspace_dict(ws: Workspace) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "criteria": [_criterion_dict(c) for c in ws.spec.criteria],
        "population": [_profile_dict(p) for p in ws.population],
        "capacities": {name: capacity_dict(c) for name, c in ws.capacities.items()},
        "class_models": {
            name: _class_model_dict(m, ws.spec) for name, m in ws.class_models.items()},
        "devices": {name: _device_dict(d) for name, d in ws.devices.items()},
    }


# -------------------------------------------------------------- from dict

def _require(cond: bool, where: str, rule: str) -> None:
    if not cond:
        raise WorkspaceError(f"{where}: {rule}")


def _parse_criterion(d: dict, idx: int) -> Criterion:
    where = f"criteria[{idx}]"
    _require(isinstance(d, dict) and "id" in d, where, "missing id")
    levels = None
    if "levels" in d and d["levels"] is not None:
        levels = tuple((str(label), float(score)) for label, score in d["levels"])
    return Criterion(
        id=str(d["id"]), label=str(d.get("label", "")),
        scale_min=float(d.get("scale_min", 0.0)),
        scale_max=float(d.get("scale_max", 1.0)),
        levels=levels,
    )


def _parse_profile(d: dict, idx: int) -> Profile:
    where = f"population[{idx}]"
    _require(isinstance(d, dict) and "id" in d, where, "missing id")
    _require("scores" in d, f"profile {d.get('id')!r}", "missing scores")
    return Profile(
        id=str(d["id"]),
        scores={str(k): float(v) for k, v in d["scores"].items()},
        growth_rates={str(k): float(v) for k, v in d.get("growth_rates", {}).items()},
        motivation=float(d.get("motivation", 1.0)),
    )


def parse_capacity(d: dict, name: str = "capacity") -> Capacity2Additive:
    _require(isinstance(d, dict) and "singletons" in d, name, "missing singletons")
    pairs = {}
    for entry in d.get("pairs", []):
        _require(len(entry) == 3, name, f"bad pair entry {entry!r}")
        a, b, v = entry
        key = pair_key(str(a), str(b))
        _require(key not in pairs, name, f"duplicate pair {key}")
        pairs[key] = float(v)
    return Capacity2Additive(
        {str(k): float(v) for k, v in d["singletons"].items()}, pairs)


def _parse_class_model(d: dict, name: str, spec: CriteriaSpec) -> ClassModel:
    protos = []
    for pd in d.get("prototypes", []):
        _require("class_id" in pd and "ideal" in pd, f"class model {name!r}",
                 "prototype missing class_id or ideal")
        ideal_map = {str(k): float(v) for k, v in pd["ideal"].items()}
        for cid in ideal_map:
            _require(cid in spec.ids(), f"class model {name!r}",
                     f"ideal references unknown criterion {cid!r}")
        values = tuple(ideal_map.get(cid, 0.0) for cid in spec.ids())
        for cid, v in zip(spec.ids(), values):
            _require(0.0 <= v <= 1.0, f"class model {name!r}",
                     f"ideal value {v} for {cid!r} outside [0, 1]")
        protos.append(Prototype(
            class_id=str(pd["class_id"]),
            ideal=NormalizedProfile(str(pd["class_id"]), values),
            weights={str(k): float(v) for k, v in pd.get("weights", {}).items()},
        ))
    try:
        return ClassModel(tuple(protos), float(d.get("threshold", 0.5)),
                          str(d.get("metric", "chebyshev")))
    except ModelError as e:
        raise WorkspaceError(f"class model {name!r}: {e}") from None


def _parse_device(d: dict, name: str) -> DeviceSpec:
    functions = []
    for fd in d.get("functions", []):
        _require("id" in fd, f"device {name!r}", "function missing id")
        functions.append(FunctionSpec(
            id=str(fd["id"]), label=str(fd.get("label", "")),
            requirements={str(k): float(v) for k, v in fd.get("requirements", {}).items()},
            importance=float(fd.get("importance", 1.0)),
        ))
    return DeviceSpec(name, tuple(functions))


def workspace_from_dict(doc: dict) -> Workspace:
    _require(isinstance(doc, dict), "workspace", "document is not a JSON object")
    unknown = set(doc) - _TOP_LEVEL_FIELDS
    _require(not unknown, "workspace",
             f"unknown top-level fields: {', '.join(sorted(unknown))}")
    _require(doc.get("format_version") == FORMAT_VERSION, "workspace",
             f"unsupported format_version {doc.get('format_version')!r} "
             f"(expected {FORMAT_VERSION})")
    _require("criteria" in doc, "workspace", "missing criteria")

    spec = CriteriaSpec(tuple(
        _parse_criterion(c, i) for i, c in enumerate(doc["criteria"])))
    report = validate_criteria_spec(spec)
    if not report.ok:
        raise WorkspaceError("criteria: " + "; ".join(report.messages()))

    population = []
    seen_ids: set[str] = set()
    for i, pd in enumerate(doc.get("population", [])):
        p = _parse_profile(pd, i)
        _require(p.id not in seen_ids, f"profile {p.id!r}", "duplicate profile id")
        seen_ids.add(p.id)
        preport = validate_profile(p, spec)
        if not preport.ok:
            raise WorkspaceError(f"profile {p.id!r}: " + "; ".join(preport.messages()))
        population.append(p)

    capacities = {}
    for name, cd in doc.get("capacities", {}).items():
        cap = parse_capacity(cd, f"capacity {name!r}")
        try:
            creport = validate_capacity(cap, spec)
        except ModelError as e:
            raise WorkspaceError(f"capacity {name!r}: {e}") from None
        if not creport.ok:
            raise WorkspaceError(f"capacity {name!r}: " + "; ".join(creport.messages()))
        capacities[name] = cap

    class_models = {
        name: _parse_class_model(md, name, spec)
        for name, md in doc.get("class_models", {}).items()}

    devices = {}
    for name, dd in doc.get("devices", {}).items():
        dev = _parse_device(dd, name)
        dreport = validate_device(dev, spec)
        if not dreport.ok:
            raise WorkspaceError(f"device {name!r}: " + "; ".join(dreport.messages()))
        devices[name] = dev

    return Workspace(spec, tuple(population), capacities, class_models, devices)


def loads_workspace(text: str, source: str = "<string>") -> Workspace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise WorkspaceError(
            f"{source}: syntax error at line {e.lineno} column {e.colno}: {e.msg}"
        ) from None
    try:
        return workspace_from_dict(doc)
    except WorkspaceError as e:
        raise WorkspaceError(f"{source}: {e}") from None


def load_workspace(path: str | Path) -> Workspace:
    path = Path(path)
    return loads_workspace(path.read_text(encoding="utf-8"), str(path))


def dumps_workspace(ws: Workspace) -> str:
    return canonical_dumps(workspace_dict(ws)) + "\n"


def save_workspace(ws: Workspace, path: str | Path) -> None:
    Path(path).write_text(dumps_workspace(ws), encoding="utf-8")


# ------------------------------------------------------------------- CSV

def import_profiles_csv(path: str | Path, spec: CriteriaSpec) -> list[Profile]:
    """Columns: id, score:<crit>..., optional rate:<crit>..., optional motivation."""
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = next(reader)
        except StopIteration:
            raise WorkspaceError(f"{path}: missing header row") from None
        known = set(spec.ids())
        score_cols: dict[int, str] = {}
        rate_cols: dict[int, str] = {}
        motivation_col = None
        id_col = None
        for i, col in enumerate(header):
            col = col.strip()
            if col == "id":
                id_col = i
            elif col.startswith("score:"):
                cid = col[len("score:"):]
                _require(cid in known, str(path), f"unknown criterion in column {col!r}")
                score_cols[i] = cid
            elif col.startswith("rate:"):
                cid = col[len("rate:"):]
                _require(cid in known, str(path), f"unknown criterion in column {col!r}")
                rate_cols[i] = cid
            elif col == "motivation":
                motivation_col = i
            else:
                raise WorkspaceError(f"{path}: unknown column {col!r}")
        _require(id_col is not None, str(path), "missing id column")
        missing = known - set(score_cols.values())
        _require(not missing, str(path),
                 f"missing score columns for: {', '.join(sorted(missing))}")

        profiles = []
        for row_no, row in enumerate(reader, start=2):
            if not row or all(not cell.strip() for cell in row):
                continue

            def cell(i: int, col_name: str) -> float:
                try:
                    return float(row[i])
                except (ValueError, IndexError):
                    raise WorkspaceError(
                        f"{path}: row {row_no}, column {col_name!r}: "
                        f"non-numeric value {row[i] if i < len(row) else ''!r}"
                    ) from None

            p = Profile(
                id=row[id_col].strip(),
                scores={cid: cell(i, f"score:{cid}") for i, cid in score_cols.items()},
                growth_rates={cid: cell(i, f"rate:{cid}") for i, cid in rate_cols.items()},
                motivation=(cell(motivation_col, "motivation")
                            if motivation_col is not None else 1.0),
            )
            report = validate_profile(p, spec)
            if not report.ok:
                raise WorkspaceError(
                    f"{path}: row {row_no}: " + "; ".join(report.messages()))
            profiles.append(p)
    return profiles
