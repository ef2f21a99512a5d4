"""Weighted-mean and 2-additive Choquet aggregation.

Capacities are kept in Möbius form: singleton weights m_i plus pairwise
interaction terms m_ij. The Choquet integral of x is then

    C(x) = sum_i m_i x_i + sum_{i<j} m_ij min(x_i, x_j)

A positive m_ij rewards balanced profiles (complementarity), a negative
one rewards the better of the two criteria (substitutability).
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .core_model import CriteriaSpec, NormalizedProfile
from .validation import (InvalidCapacityError, ModelError, ValidationReport,
                         Violation)

TOL = 1e-9


def pair_key(a: str, b: str) -> tuple[str, str]:
    if a == b:
        raise ModelError(f"interaction pair must reference distinct criteria, got {a!r} twice")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Capacity2Additive:
    singletons: dict[str, float]
    pairs: dict[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", {pair_key(a, b): v for (a, b), v in self.pairs.items()})

    def interaction(self, a: str, b: str) -> float:
        return self.pairs.get(pair_key(a, b), 0.0)


@dataclass(frozen=True)
class ShapleyView:
    shapley: dict[str, float]
    interactions: dict[tuple[str, str], float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "interactions",
            {pair_key(a, b): v for (a, b), v in self.interactions.items()})


@dataclass(frozen=True)
class WeightVector:
    weights: dict[str, float]


def validate_capacity(capacity: Capacity2Additive, spec: CriteriaSpec) -> ValidationReport:
    """Check normalization and 2-additive monotonicity; lists every breach."""
    known = set(spec.ids())
    for cid in capacity.singletons:
        if cid not in known:
            raise ModelError(f"capacity references unknown criterion {cid!r}")
    for a, b in capacity.pairs:
        if a not in known or b not in known:
            raise ModelError(f"capacity pair ({a!r}, {b!r}) references unknown criterion")
    out: list[Violation] = []
    total = sum(capacity.singletons.values()) + sum(capacity.pairs.values())
    if abs(total - 1.0) > TOL:
        out.append(Violation(
            "normalization", "capacity",
            f"Möbius terms sum to {total}, residual {total - 1.0:.3g}"))
    for cid in spec.ids():
        m_i = capacity.singletons.get(cid, 0.0)
        slack = m_i + sum(
            min(0.0, v) for (a, b), v in capacity.pairs.items() if cid in (a, b))
        if slack < -TOL:
            out.append(Violation(
                "monotonicity", cid,
                f"m_{cid} plus negative interactions is {slack:.6g} < 0"))
    return ValidationReport(tuple(out))


def validate_weight_vector(w: WeightVector, spec: CriteriaSpec) -> ValidationReport:
    known = set(spec.ids())
    for cid in w.weights:
        if cid not in known:
            raise ModelError(f"weight vector references unknown criterion {cid!r}")
    out: list[Violation] = []
    for cid, v in w.weights.items():
        if v < 0:
            out.append(Violation("negative_weight", cid, f"weight {v} < 0"))
    total = sum(w.weights.values())
    if abs(total - 1.0) > TOL:
        out.append(Violation(
            "normalization", "weights", f"weights sum to {total}, not 1"))
    return ValidationReport(tuple(out))


def _check_dimension(x: NormalizedProfile, spec: CriteriaSpec) -> None:
    if len(x.values) != len(spec):
        raise ModelError(
            f"profile {x.id!r} has {len(x.values)} values, spec has {len(spec)} criteria")


def weighted_mean(x: NormalizedProfile, w: WeightVector, spec: CriteriaSpec) -> float:
    _check_dimension(x, spec)
    report = validate_weight_vector(w, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    return sum(w.weights.get(c.id, 0.0) * v for c, v in zip(spec.criteria, x.values))


def _choquet_unchecked(values, ids, capacity: Capacity2Additive) -> float:
    by_id = dict(zip(ids, values))
    acc = sum(capacity.singletons.get(cid, 0.0) * by_id[cid] for cid in ids)
    for (a, b), m in capacity.pairs.items():
        acc += m * min(by_id[a], by_id[b])
    return acc


def choquet(x: NormalizedProfile, capacity: Capacity2Additive, spec: CriteriaSpec) -> float:
    """2-additive Choquet integral in Möbius form."""
    _check_dimension(x, spec)
    report = validate_capacity(capacity, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    return _choquet_unchecked(x.values, spec.ids(), capacity)


def choquet_oracle(x: NormalizedProfile, capacity: Capacity2Additive,
                   spec: CriteriaSpec) -> float:
    """Sorting-based evaluation of the same integral; independent check path.

    Sort components ascending, accumulate (x_(k) - x_(k-1)) * nu(A_k) where
    A_k is the set of criteria whose value is >= x_(k).
    """
    _check_dimension(x, spec)
    report = validate_capacity(capacity, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    ids = spec.ids()

    def nu(subset: set[str]) -> float:
        s = sum(capacity.singletons.get(cid, 0.0) for cid in subset)
        s += sum(v for (a, b), v in capacity.pairs.items()
                 if a in subset and b in subset)
        return s

    order = sorted(range(len(ids)), key=lambda i: x.values[i])
    acc, prev = 0.0, 0.0
    for k, idx in enumerate(order):
        xk = x.values[idx]
        remaining = {ids[i] for i in order[k:]}
        acc += (xk - prev) * nu(remaining)
        prev = xk
    return acc


def shapley_view(capacity: Capacity2Additive, spec: CriteriaSpec) -> ShapleyView:
    """Reparameterize to Shapley importances and interaction indices."""
    report = validate_capacity(capacity, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    phi = {}
    for cid in spec.ids():
        half_pairs = sum(
            v for (a, b), v in capacity.pairs.items() if cid in (a, b)) / 2.0
        phi[cid] = capacity.singletons.get(cid, 0.0) + half_pairs
    return ShapleyView(phi, dict(capacity.pairs))


def capacity_from_shapley(view: ShapleyView, spec: CriteriaSpec) -> Capacity2Additive:
    """Inverse transform; raises InvalidCapacityError when the view encodes a
    non-monotone or unnormalized capacity."""
    known = set(spec.ids())
    for cid in view.shapley:
        if cid not in known:
            raise ModelError(f"shapley view references unknown criterion {cid!r}")
    singletons = {}
    for cid in spec.ids():
        half_pairs = sum(
            v for (a, b), v in view.interactions.items() if cid in (a, b)) / 2.0
        singletons[cid] = view.shapley.get(cid, 0.0) - half_pairs
    capacity = Capacity2Additive(singletons, dict(view.interactions))
    report = validate_capacity(capacity, spec)
    if not report.ok:
        raise InvalidCapacityError(report)
    return capacity
