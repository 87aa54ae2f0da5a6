"""The catalog of contractive conditions and an exact pairwise checker.

Each condition compares d(Tx,Ty) against an expression in the six
distances d(x,y), d(x,Tx), d(y,Ty), d(x,Ty), d(y,Tx) (and iterated
variants).  Verdicts are exact: rational terms are compared by
cross-multiplication, geometric-mean terms through
:func:`kannanlab.rationals.lt_sqrt`, so a strict inequality is never
decided by a rounded value.

A report only ever speaks for the pair set it actually checked
(``domain_exhausted`` is True only for exhaustive finite-space scans);
claiming more would be dishonest for infinite spaces, where callers must
supply an explicit rational sample.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from .rationals import HALF, as_scalar, lt_sqrt, scalar_text
from .maps import SelfMap
from .spaces import FiniteSpace, Space, point_text


# ---------------------------------------------------------------------------
# Condition kinds
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KannanK:
    """d(Tx,Ty) <= k * (d(x,Tx) + d(y,Ty)) with a fixed k in [0, 1/2)."""

    k: Fraction

    def __post_init__(self):
        object.__setattr__(self, "k", as_scalar(self.k))
        if not (0 <= self.k < HALF):
            raise ValueError(f"Kannan constant must lie in [0, 1/2), got {self.k}")

    kind = "kannan_k"

    def label(self) -> str:
        return f"kannan_k({self.k})"

    def to_json(self) -> dict:
        return {"kind": "kannan_k", "k": str(self.k)}


@dataclass(frozen=True)
class StrictKannan:
    """d(Tx,Ty) < (d(x,Tx) + d(y,Ty)) / 2 for all x != y; no constant.

    The central condition of the lab: parameterless, satisfied by maps
    that may be badly discontinuous, and strong enough to force a unique
    fixed point on boundedly compact or orbitally compact spaces.
    """

    kind = "strict_kannan"

    def label(self) -> str:
        return "strict_kannan"

    def to_json(self) -> dict:
        return {"kind": "strict_kannan"}


@dataclass(frozen=True)
class Fisher:
    """d(Tx,Ty) < (d(x,Ty) + d(y,Tx)) / 2 for all x != y."""

    kind = "fisher"

    def label(self) -> str:
        return "fisher"

    def to_json(self) -> dict:
        return {"kind": "fisher"}


@dataclass(frozen=True)
class Khan:
    """d(Tx,Ty) < sqrt(d(x,Tx) * d(y,Ty)) for all x != y.

    The root is never materialized; the verdict comes from lt_sqrt.
    """

    kind = "khan"

    def label(self) -> str:
        return "khan"

    def to_json(self) -> dict:
        return {"kind": "khan"}


PairTable = Union[Fraction, Mapping[tuple, Fraction]]


@dataclass(frozen=True)
class ChenYeh:
    """d(Tx,Ty) < max of seven terms mixing all six distances.

    The terms are d(x,y); the Kannan mean (d(x,Tx)+d(y,Ty))/2; the Fisher
    mean (d(x,Ty)+d(y,Tx))/2; d(x,Tx)d(y,Ty)/d(x,y); sqrt(d(x,Tx)d(y,Ty));
    a(x,y)d(x,Ty)d(y,Tx); and b(x,y)sqrt(d(x,Ty)d(y,Tx)), where a and b
    are caller-supplied non-negative weight tables (a constant Scalar or a
    finite mapping over the evaluated pairs — never a symbolic function,
    so the checker stays exact and total).

    ``uniqueness_bounds`` records the extra hypotheses a(x,y) <= 1/d(x,y)
    and b(x,y) <= 1 under which the fixed point is unique; when set, the
    tables are validated against those bounds on every evaluated pair.
    """

    a: PairTable = Fraction(0)
    b: PairTable = Fraction(0)
    uniqueness_bounds: bool = False

    kind = "chen_yeh"

    def __post_init__(self):
        for name in ("a", "b"):
            table = getattr(self, name)
            if isinstance(table, Mapping):
                entries = {k: as_scalar(v) for k, v in table.items()}
                if any(v < 0 for v in entries.values()):
                    raise ValueError(f"ChenYeh {name}-table has a negative weight")
                object.__setattr__(self, name, entries)
            else:
                value = as_scalar(table)
                if value < 0:
                    raise ValueError(f"ChenYeh {name} must be non-negative")
                object.__setattr__(self, name, value)

    def weight(self, name: str, x, y) -> Fraction:
        table = getattr(self, name)
        if isinstance(table, Mapping):
            try:
                return table[(x, y)]
            except KeyError:
                raise ValueError(
                    f"ChenYeh {name}-table has no entry for the pair "
                    f"({point_text(x)}, {point_text(y)})") from None
        return table

    def label(self) -> str:
        a = str(self.a) if not isinstance(self.a, Mapping) else "table"
        b = str(self.b) if not isinstance(self.b, Mapping) else "table"
        return f"chen_yeh(a={a},b={b})"

    def to_json(self) -> dict:
        out = {"kind": "chen_yeh", "uniqueness_bounds": self.uniqueness_bounds}
        for name in ("a", "b"):
            table = getattr(self, name)
            if isinstance(table, Mapping):
                out[name] = {"pairs": [[point_text(x), point_text(y), str(v)]
                                       for (x, y), v in sorted(
                                           table.items(),
                                           key=lambda kv: (point_text(kv[0][0]),
                                                           point_text(kv[0][1])))]}
            else:
                out[name] = str(table)
        return out


@dataclass(frozen=True)
class IteratedKannan:
    """The strict Kannan inequality shifted m steps along the orbit:

    d(T^{m+1}x, T^{m+1}y) < (d(T^m x, T^{m+1}x) + d(T^m y, T^{m+1}y)) / 2.

    m = 0 coincides with the plain strict condition (T^0 = identity).
    """

    m: int

    kind = "iterated_kannan"

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError("iteration shift m must be an integer >= 0")

    def label(self) -> str:
        return f"iterated_kannan({self.m})"

    def to_json(self) -> dict:
        return {"kind": "iterated_kannan", "m": self.m}


Condition = Union[KannanK, StrictKannan, Fisher, Khan, ChenYeh, IteratedKannan]


def load_condition(obj: dict) -> Condition:
    """Build a condition from its JSON definition (constant a/b tables only)."""
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValueError("condition definition must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "strict_kannan":
        return StrictKannan()
    if kind == "kannan_k":
        return KannanK(as_scalar(obj["k"]))
    if kind == "fisher":
        return Fisher()
    if kind == "khan":
        return Khan()
    if kind == "chen_yeh":
        return ChenYeh(a=as_scalar(obj.get("a", 0)), b=as_scalar(obj.get("b", 0)),
                       uniqueness_bounds=bool(obj.get("uniqueness_bounds", False)))
    if kind == "iterated_kannan":
        return IteratedKannan(int(obj["m"]))
    raise ValueError(f"unknown condition kind {kind!r}")


# ---------------------------------------------------------------------------
# Pair sources
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Exhaustive:
    """All unordered distinct pairs of a finite space."""


EXHAUSTIVE = Exhaustive()


@dataclass(frozen=True)
class SampleSet:
    """An explicit pair list, with the generating seed recorded if any."""

    pairs: tuple
    seed: Optional[int] = None


def pairs_from_points(points: Sequence) -> tuple:
    """All unordered distinct pairs among the given points, in list order."""
    pts = list(points)
    return tuple((pts[i], pts[j])
                 for i in range(len(pts)) for j in range(i + 1, len(pts)))


def sample_pairs(points: Sequence, seed: Optional[int] = None) -> SampleSet:
    return SampleSet(pairs=pairs_from_points(points), seed=seed)


PairSource = Union[Exhaustive, SampleSet, Iterable]


def _resolve_pairs(space: Space, pairs: PairSource):
    if isinstance(pairs, Exhaustive):
        if not isinstance(space, FiniteSpace):
            raise ValueError("exhaustive pair scans need a finite space; "
                             "supply an explicit sample for catalog spaces")
        return space.distinct_pairs(), {"kind": "exhaustive",
                                        "space_size": space.size}, True
    if isinstance(pairs, SampleSet):
        desc = {"kind": "sample", "pairs": len(pairs.pairs), "seed": pairs.seed}
        return list(pairs.pairs), desc, False
    pair_list = [tuple(p) for p in pairs]
    return pair_list, {"kind": "sample", "pairs": len(pair_list), "seed": None}, False


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violated:
    """Exact violation witness; replaying the pair reproduces the verdict."""

    x: object
    y: object
    lhs: Fraction
    rhs: Optional[Fraction]  # exact value when the bound is rational
    rhs_text: str            # always-set exact rendering of the bound


@dataclass(frozen=True)
class ConditionReport:
    condition: Condition
    pair_source: dict
    pairs_checked: int
    violation: Optional[Violated]
    domain_exhausted: bool

    @property
    def holds(self) -> bool:
        return self.violation is None

    def to_json(self) -> dict:
        if self.violation is None:
            verdict = "holds"
        else:
            v = self.violation
            verdict = {"violated": {
                "x": point_text(v.x), "y": point_text(v.y),
                "lhs": scalar_text(v.lhs),
                "rhs": scalar_text(v.rhs) if v.rhs is not None else v.rhs_text,
            }}
        return {"condition": self.condition.to_json(),
                "pair_source": self.pair_source,
                "pairs_checked": self.pairs_checked,
                "domain_exhausted": self.domain_exhausted,
                "verdict": verdict}


# ---------------------------------------------------------------------------
# The checker
# ---------------------------------------------------------------------------

def _check_pair(cond: Condition, space: Space, m: SelfMap, x, y):
    """Exact verdict for one ordered pair.

    Returns (holds, lhs, rhs, rhs_text) with rhs None when the bound is
    irrational (sqrt terms) or a max over mixed terms.
    """
    tx, ty = m.apply(x), m.apply(y)
    d = space.dist

    if isinstance(cond, KannanK):
        lhs = d(tx, ty)
        rhs = cond.k * (d(x, tx) + d(y, ty))
        return lhs <= rhs, lhs, rhs, scalar_text(rhs)

    if isinstance(cond, StrictKannan):
        lhs = d(tx, ty)
        rhs = (d(x, tx) + d(y, ty)) / 2
        return lhs < rhs, lhs, rhs, scalar_text(rhs)

    if isinstance(cond, Fisher):
        lhs = d(tx, ty)
        rhs = (d(x, ty) + d(y, tx)) / 2
        return lhs < rhs, lhs, rhs, scalar_text(rhs)

    if isinstance(cond, Khan):
        lhs = d(tx, ty)
        u = d(x, tx) * d(y, ty)
        return lt_sqrt(lhs, u), lhs, None, f"sqrt({scalar_text(u)})"

    if isinstance(cond, IteratedKannan):
        xm = m.iterate(x, cond.m)
        ym = m.iterate(y, cond.m)
        xm1, ym1 = m.apply(xm), m.apply(ym)
        lhs = d(xm1, ym1)
        rhs = (d(xm, xm1) + d(ym, ym1)) / 2
        return lhs < rhs, lhs, rhs, scalar_text(rhs)

    if isinstance(cond, ChenYeh):
        dxy = d(x, y)
        dxtx, dyty = d(x, tx), d(y, ty)
        dxty, dytx = d(x, ty), d(y, tx)
        a, b = cond.weight("a", x, y), cond.weight("b", x, y)
        if cond.uniqueness_bounds:
            if a * dxy > 1:
                raise ValueError(f"uniqueness bound a <= 1/d(x,y) fails at "
                                 f"({point_text(x)}, {point_text(y)})")
            if b > 1:
                raise ValueError(f"uniqueness bound b <= 1 fails at "
                                 f"({point_text(x)}, {point_text(y)})")
        lhs = d(tx, ty)
        rational_terms = [
            dxy,
            (dxtx + dyty) / 2,
            (dxty + dytx) / 2,
            dxtx * dyty / dxy,  # well-defined: pair points are distinct
            a * dxty * dytx,
        ]
        holds = any(lhs < t for t in rational_terms)
        # sqrt terms, decided by squaring: lhs < max(terms) iff lhs < some term
        if not holds:
            holds = lt_sqrt(lhs, dxtx * dyty)
        if not holds and b > 0:
            holds = lt_sqrt(lhs / b, dxty * dytx)
        rhs_text = ("max(" + ", ".join(scalar_text(t) for t in rational_terms[:4])
                    + f", sqrt({scalar_text(dxtx * dyty)})"
                    + f", {scalar_text(rational_terms[4])}"
                    + f", {scalar_text(b)}*sqrt({scalar_text(dxty * dytx)}))")
        return holds, lhs, None, rhs_text

    raise TypeError(f"unknown condition {cond!r}")


def evaluate_condition(cond: Condition, space: Space, m: SelfMap,
                       pairs: PairSource = EXHAUSTIVE) -> ConditionReport:
    """Check one condition over an explicit pair set, exactly.

    Stops at the first violation (pair-set order) and reports it with
    exact values.  Pairs must consist of distinct member points.
    """
    if space != m.space:
        raise ValueError("condition check: space does not match the map's space")
    pair_list, source_desc, exhausted = _resolve_pairs(space, pairs)
    checked = 0
    for raw_x, raw_y in pair_list:
        x = space.check_member(raw_x)
        y = space.check_member(raw_y)
        if x == y:
            raise ValueError(f"pair points must be distinct, got "
                             f"({point_text(x)}, {point_text(y)})")
        checked += 1
        holds, lhs, rhs, rhs_text = _check_pair(cond, space, m, x, y)
        if not holds:
            return ConditionReport(cond, source_desc, checked,
                                   Violated(x, y, lhs, rhs, rhs_text), exhausted)
    return ConditionReport(cond, source_desc, checked, None, exhausted)


def replay_violation(report: ConditionReport, space: Space, m: SelfMap) -> bool:
    """Re-evaluate a Violated witness; True iff it is a genuine violation."""
    if report.violation is None:
        raise ValueError("report has no violation to replay")
    v = report.violation
    holds, lhs, _, _ = _check_pair(report.condition, space, m, v.x, v.y)
    return (not holds) and lhs == v.lhs


def kannan_ratio(space: Space, m: SelfMap,
                 pairs: PairSource = EXHAUSTIVE) -> Optional[Fraction]:
    """max over pairs of d(Tx,Ty) / (d(x,Tx)+d(y,Ty)), denominator > 0 only.

    The smallest admissible Kannan constant on the checked pairs; None when
    every pair has zero total displacement.
    """
    pair_list, _, _ = _resolve_pairs(space, pairs)
    best: Optional[Fraction] = None
    for x, y in pair_list:
        x, y = space.check_member(x), space.check_member(y)
        tx, ty = m.apply(x), m.apply(y)
        s = space.dist(x, tx) + space.dist(y, ty)
        if s == 0:
            continue
        ratio = space.dist(tx, ty) / s
        if best is None or ratio > best:
            best = ratio
    return best


# ---------------------------------------------------------------------------
# The orbit eps-delta check
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EpsDeltaCell:
    """One (eps, delta) attempt: holds / vacuous / violated.

    ``exercised`` counts distinct-index pairs that satisfied the premise
    d(T^i x, T^j x) < eps + delta.  A delta whose premise was never
    exercised certifies nothing on this finite horizon, so vacuous
    satisfaction is reported as its own status and does not count as a
    pass.
    """

    eps: Fraction
    delta: Fraction
    status: str  # "holds" | "vacuous" | "violated"
    exercised: int
    witness: Optional[tuple[int, int]] = None


@dataclass(frozen=True)
class EpsDeltaReport:
    eps: Fraction
    passing_delta: Optional[Fraction]
    cells: tuple[EpsDeltaCell, ...]
    horizon: int
    finite_horizon_evidence: bool = True

    @property
    def passed(self) -> bool:
        return self.passing_delta is not None

    def to_json(self) -> dict:
        return {"eps": scalar_text(self.eps),
                "passing_delta": (scalar_text(self.passing_delta)
                                  if self.passing_delta is not None else None),
                "horizon": self.horizon,
                "finite_horizon_evidence": self.finite_horizon_evidence,
                "cells": [{"delta": scalar_text(c.delta), "status": c.status,
                           "exercised": c.exercised,
                           "witness": list(c.witness) if c.witness else None}
                          for c in self.cells]}


def check_epsdelta_orbit(space: Space, m: SelfMap, x0,
                         eps_grid: Sequence, delta_candidates: Sequence,
                         horizon: int) -> list[EpsDeltaReport]:
    """Finite-horizon scan of the orbit uniform-contraction property:

    for all 0 <= i < j <= horizon,
        d(T^i x0, T^j x0) < eps + delta  implies  d(T^{i+1} x0, T^{j+1} x0) <= eps.

    For each eps the candidates are tried in order and the first delta
    whose implication holds non-vacuously is reported.  Evidence only: a
    finite prefix can neither prove the property nor its negation.
    """
    if horizon < 2:
        raise ValueError("horizon must be >= 2")
    if space != m.space:
        raise ValueError("eps-delta check: space does not match the map's space")
    eps_grid = [as_scalar(e) for e in eps_grid]
    delta_candidates = [as_scalar(dd) for dd in delta_candidates]
    if any(e <= 0 for e in eps_grid) or any(dd <= 0 for dd in delta_candidates):
        raise ValueError("eps and delta values must be positive")

    x0 = space.check_member(x0)
    pts = [x0]
    for _ in range(horizon + 1):
        pts.append(m.apply(pts[-1]))
    dmat = {}
    for i in range(horizon + 2):
        for j in range(i + 1, horizon + 2):
            dmat[(i, j)] = space.dist(pts[i], pts[j])

    reports = []
    for eps in eps_grid:
        cells = []
        passing = None
        for delta in delta_candidates:
            bound = eps + delta
            exercised = 0
            witness = None
            for i in range(horizon):
                for j in range(i + 1, horizon + 1):
                    if dmat[(i, j)] < bound:
                        exercised += 1
                        if dmat[(i + 1, j + 1)] > eps:
                            witness = (i, j)
                            break
                if witness:
                    break
            if witness:
                cells.append(EpsDeltaCell(eps, delta, "violated", exercised, witness))
            elif exercised == 0:
                cells.append(EpsDeltaCell(eps, delta, "vacuous", 0))
            else:
                cells.append(EpsDeltaCell(eps, delta, "holds", exercised))
                passing = delta
                break
        reports.append(EpsDeltaReport(eps=eps, passing_delta=passing,
                                      cells=tuple(cells), horizon=horizon))
    return reports
