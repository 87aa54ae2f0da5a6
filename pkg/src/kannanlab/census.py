"""Brute-force ground truth on finite spaces.

A finite metric space is compact, so every fixed-point theorem in the
condition catalog applies there unconditionally.  That turns exhaustive
enumeration of all |X|^|X| self-maps into an oracle: classify every map
against every condition, count fixed points by direct scan, iterate from
every start, and demand that no strictly-Kannan map ever disagrees with
the theorems (unique fixed point, global convergence).  A single
disagreement is not a test failure to shrug at — it contradicts a proved
theorem and therefore means the implementation is broken; it raises
:class:`TheoremContradictionError` and stops the build.

Map ids are base-|X| encodings of the assignment vector, enumerated in
numeric order, so censuses are reproducible, resumable, and mergeable
after parallel partitioning.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from fractions import Fraction
from multiprocessing import Pool
from typing import Optional, Sequence

import numpy as np

from .conditions import (EXHAUSTIVE, Condition, StrictKannan,
                         evaluate_condition)
from .maps import FixedPointReached, TableMap, orbit
from .rationals import lt_sqrt
from .spaces import FiniteSpace

MAX_CENSUS_MAPS = 10 ** 7


class TheoremContradictionError(RuntimeError):
    """Brute force contradicted a theorem: the implementation is defective."""


# ---------------------------------------------------------------------------
# Space generators
# ---------------------------------------------------------------------------

def random_finite_space(n: int, seed: int, mode: str = "band") -> FiniteSpace:
    """Deterministic random finite space with guaranteed metric axioms.

    ``band`` draws off-diagonal distances as small-denominator rationals
    in [1, 2], where the triangle inequality is automatic (1 + 1 >= 2).
    ``line`` places points at increasing rationals on a line and uses
    absolute differences — more metric diversity, triangle inequality by
    collinearity.  Same (n, seed, mode) always gives the same space.
    """
    if not (2 <= n <= 8):
        raise ValueError("census spaces support sizes 2..8")
    if mode not in ("band", "line"):
        raise ValueError(f"unknown generator mode {mode!r}")
    rng = random.Random(f"{mode}-{n}-{seed}")  # str seeding is hash-stable
    labels = tuple(f"p{i}" for i in range(n))
    if mode == "band":
        d = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                den = rng.randint(1, 6)
                num = rng.randint(0, den)
                d[i][j] = d[j][i] = 1 + Fraction(num, den)
    else:
        values = [Fraction(0)]
        for _ in range(n - 1):
            den = rng.randint(1, 6)
            num = rng.randint(1, den)
            values.append(values[-1] + Fraction(num, den))
        d = [[abs(values[i] - values[j]) for j in range(n)] for i in range(n)]
    return FiniteSpace(labels=labels, matrix=tuple(tuple(row) for row in d))


# ---------------------------------------------------------------------------
# Map enumeration
# ---------------------------------------------------------------------------

def map_id_string(map_id: int, n: int) -> str:
    """Base-n digit string of the assignment vector (labels[i] -> digit i)."""
    digits = []
    for i in range(n):
        digits.append(str((map_id // n ** (n - 1 - i)) % n))
    return "".join(digits)


def map_from_id(space: FiniteSpace, map_id: int) -> TableMap:
    n = space.size
    assign = {space.labels[i]: space.labels[(map_id // n ** (n - 1 - i)) % n]
              for i in range(n)}
    return TableMap(space, assign)


@dataclass(frozen=True)
class CensusRow:
    map_id: str
    satisfies: tuple[tuple[str, bool], ...]  # (condition label, verdict)
    fixed_point_count: int
    picard_converges_from_all_starts: bool
    common_limit: Optional[str]

    def satisfied(self, label: str) -> bool:
        return dict(self.satisfies)[label]


def classify_map(space: FiniteSpace, map_id: int,
                 conditions: Sequence[Condition]) -> CensusRow:
    tm = map_from_id(space, map_id)
    verdicts = tuple(
        (cond.label(),
         evaluate_condition(cond, space, tm, EXHAUSTIVE).holds)
        for cond in conditions)
    fixed = sum(1 for l in space.labels if tm.assign[l] == l)
    limits = []
    converges = True
    for start in space.labels:
        o = orbit(tm, start, horizon=space.size)  # pigeonhole: always resolves
        if isinstance(o.status, FixedPointReached):
            limits.append(o.points[-1])
        else:
            converges = False
    common = None
    if converges and len(set(limits)) == 1:
        common = limits[0]
    return CensusRow(map_id=map_id_string(map_id, space.size),
                     satisfies=verdicts,
                     fixed_point_count=fixed,
                     picard_converges_from_all_starts=converges,
                     common_limit=common)


def _check_row_against_theorems(row: CensusRow, conditions: Sequence[Condition]):
    """Finite spaces are compact and complete, so every satisfied condition
    carries its theorem's conclusion unconditionally; a deviating row can
    only mean the implementation is broken.
    """
    verdicts = dict(row.satisfies)
    for cond in conditions:
        if not verdicts.get(cond.label()):
            continue
        kind = cond.kind
        if kind in ("strict_kannan", "kannan_k", "iterated_kannan"):
            # unique fixed point and globally convergent iteration
            if (row.fixed_point_count != 1
                    or not row.picard_converges_from_all_starts
                    or row.common_limit is None):
                raise TheoremContradictionError(
                    f"map {row.map_id} satisfies {cond.label()} exhaustively "
                    f"but has {row.fixed_point_count} fixed points, "
                    f"converges={row.picard_converges_from_all_starts}")
        elif kind in ("fisher", "khan"):
            # existence on a compact space; two fixed points would make the
            # pair inequality compare a positive value against itself or 0
            if row.fixed_point_count != 1:
                raise TheoremContradictionError(
                    f"map {row.map_id} satisfies {cond.label()} but has "
                    f"{row.fixed_point_count} fixed points")
        elif kind == "chen_yeh":
            need_unique = getattr(cond, "uniqueness_bounds", False)
            if row.fixed_point_count < 1 or (need_unique
                                             and row.fixed_point_count != 1):
                raise TheoremContradictionError(
                    f"map {row.map_id} satisfies {cond.label()} but has "
                    f"{row.fixed_point_count} fixed points")


def _classify_range(args) -> list[CensusRow]:
    space, conditions, start, stop, check = args
    rows = []
    for map_id in range(start, stop):
        row = classify_map(space, map_id, conditions)
        if check:
            _check_row_against_theorems(row, conditions)
        rows.append(row)
    return rows


def enumerate_census(space: FiniteSpace,
                     conditions: Sequence[Condition] = (StrictKannan(),),
                     workers: int = 1,
                     check_theorems: bool = True) -> list[CensusRow]:
    """One row per self-map, in numeric map-id order.

    Partitioning across workers changes nothing in the output: ranges are
    classified independently and merged back in id order.
    """
    n = space.size
    total = n ** n
    if total > MAX_CENSUS_MAPS:
        raise ValueError(f"{n}^{n} = {total} self-maps exceeds the census cap")
    conditions = tuple(conditions)
    if workers <= 1:
        return _classify_range((space, conditions, 0, total, check_theorems))
    chunk = -(-total // (workers * 4))
    ranges = [(space, conditions, lo, min(lo + chunk, total), check_theorems)
              for lo in range(0, total, chunk)]
    with Pool(workers) as pool:
        parts = pool.map(_classify_range, ranges)
    return [row for part in parts for row in part]


def census_csv(rows: Sequence[CensusRow],
               conditions: Sequence[Condition]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    labels = [c.label() for c in conditions]
    writer.writerow(["map_id", *labels, "fixed_point_count",
                     "converges", "common_limit"])
    for row in rows:
        verdicts = dict(row.satisfies)
        writer.writerow([row.map_id,
                         *[str(verdicts[l]).lower() for l in labels],
                         row.fixed_point_count,
                         str(row.picard_converges_from_all_starts).lower(),
                         row.common_limit if row.common_limit is not None else ""])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Extremal statistics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TightnessReport:
    """How close the strict inequality comes to equality on this space.

    ratio = max over satisfying maps and pairs of
    2 * d(Tx,Ty) / (d(x,Tx) + d(y,Ty)); always < 1 on satisfying maps,
    None when no map satisfies the condition at all.
    """

    ratio: Optional[Fraction]
    map_id: Optional[str]
    pair: Optional[tuple[str, str]]
    satisfying_maps: int


def tightness_scan(space: FiniteSpace) -> TightnessReport:
    strict = StrictKannan()
    best: Optional[Fraction] = None
    best_map = best_pair = None
    satisfying = 0
    for map_id in range(space.size ** space.size):
        tm = map_from_id(space, map_id)
        if not evaluate_condition(strict, space, tm, EXHAUSTIVE).holds:
            continue
        satisfying += 1
        for x, y in space.distinct_pairs():
            tx, ty = tm.apply(x), tm.apply(y)
            s = space.dist(x, tx) + space.dist(y, ty)
            if s == 0:
                continue
            ratio = 2 * space.dist(tx, ty) / s
            if best is None or ratio > best:
                best, best_map = ratio, map_id_string(map_id, space.size)
                best_pair = (x, y)
    if satisfying and best is None:
        best = Fraction(0)  # satisfying maps existed but all had lhs = 0
    return TightnessReport(ratio=best, map_id=best_map, pair=best_pair,
                           satisfying_maps=satisfying)


# ---------------------------------------------------------------------------
# Cross-validation of the exact sqrt comparison against extended floats
# ---------------------------------------------------------------------------

def _longdouble(x: Fraction) -> np.longdouble:
    return np.longdouble(x.numerator) / np.longdouble(x.denominator)


def khan_float_crosscheck(space: FiniteSpace,
                          boundary: Fraction = Fraction(1, 1 << 20)):
    """Compare exact geometric-mean verdicts with extended-float ones.

    For every self-map and distinct pair, the exact verdict
    lt_sqrt(d(Tx,Ty), d(x,Tx)*d(y,Ty)) is compared against the float
    route computed in extended precision (x86 80-bit long double).
    Pairs whose float evaluation lands within ``boundary`` of the
    decision surface are skipped — there the float route has no claim to
    correctness.  Returns (compared, skipped, mismatches).
    """
    margin = _longdouble(boundary)
    compared = skipped = 0
    mismatches = []
    pairs = space.distinct_pairs()
    for map_id in range(space.size ** space.size):
        tm = map_from_id(space, map_id)
        for x, y in pairs:
            tx, ty = tm.apply(x), tm.apply(y)
            lhs = space.dist(tx, ty)
            u = space.dist(x, tx) * space.dist(y, ty)
            exact = lt_sqrt(lhs, u)
            lhs_f = _longdouble(lhs)
            root_f = np.sqrt(_longdouble(u))
            if abs(lhs_f - root_f) <= margin:
                skipped += 1
                continue
            compared += 1
            if (lhs_f < root_f) != exact:
                mismatches.append((map_id_string(map_id, space.size), x, y))
    return compared, skipped, mismatches
