"""Fixed-point-free strict-Kannan maps built from incompleteness.

If a space has a Cauchy sequence (x_n) with no limit in the space, a
self-map with no fixed point can be built that still satisfies the strict
Kannan inequality on every distinct pair: send each point far enough down
the sequence tail that images are closer together than half of any
distance back to their sources.  The existence of such a map is exactly
why spaces on which every strict-Kannan map has a fixed point must be
complete.

This module makes that construction concrete and checkable.  A witness
packages the sequence together with two *certified* bounds:

* ``gap_lower_bound(n)``  — a positive lower bound on inf of d(x_k, x_n)
  over k != n (positive because a non-convergent Cauchy sequence has no
  convergent subsequence);
* ``tail_bound(N)``       — a nonincreasing upper bound, tending to 0, on
  sup of d(x_m, x_m') over m, m' >= N.

The bounds are supplied analytically per witness and spot-checked on
prefixes; an infinite inf/sup is never computed.  Target indices are the
*least* ones meeting the required bound (the construction only needs
existence; least-index selection makes it deterministic).

The module also hosts the positive-integer gallery check: x -> 3x on the
1 + |1/x - 1/y| metric is continuous and fixed point free on a complete
(but non-compact) space, yet strictly Kannan on every distinct pair —
the two closed forms

    d(Tx,Ty) = 1 + 1/(3x) - 1/(3y)   <   1 + 1/(3x) + 1/(3y)
             = (d(x,Tx) + d(y,Ty)) / 2          (for x < y)

are verified exhaustively in exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from .conditions import ConditionReport, StrictKannan, evaluate_condition, sample_pairs
from .maps import SelfMap, TripleNat
from .spaces import GornickiNat, ReciprocalSet, Space


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IncompleteWitness:
    """A non-convergent Cauchy sequence with certified distance bounds.

    ``term(n)`` is x_n for n >= 1, all terms distinct.  ``term_index``
    inverts term on sequence members (None off the sequence);
    ``off_sequence_gap`` certifies a positive lower bound on the distance
    from an off-sequence point to the whole sequence, when the space has
    such points at all.
    """

    space: Space
    term: Callable[[int], Fraction]
    gap_lower_bound: Callable[[int], Fraction]
    tail_bound: Callable[[int], Fraction]
    term_index: Callable[[Fraction], Optional[int]]
    off_sequence_gap: Optional[Callable[[Fraction], Fraction]] = None


def build_reciprocal_witness() -> IncompleteWitness:
    """The stock witness: x_n = 1/n in the space {1/n : n >= 1}.

    Every point of the space is a sequence term, so the off-sequence
    branch of the construction is never exercised here.  The certified
    bounds are closed forms: the nearest neighbour of 1/n is 1/(n+1),
    giving gap_lower_bound(n) = 1/(n(n+1)); and all points beyond index N
    lie in (0, 1/N], giving tail_bound(N) = 1/N.
    """
    space = ReciprocalSet()

    def term(n: int) -> Fraction:
        if n < 1:
            raise ValueError("sequence indices start at 1")
        return Fraction(1, n)

    def gap_lower_bound(n: int) -> Fraction:
        return Fraction(1, n * (n + 1))

    def tail_bound(big_n: int) -> Fraction:
        return Fraction(1, big_n)

    def term_index(p: Fraction) -> Optional[int]:
        return p.denominator if p.numerator == 1 else None

    return IncompleteWitness(space=space, term=term,
                             gap_lower_bound=gap_lower_bound,
                             tail_bound=tail_bound,
                             term_index=term_index)


def spot_check_witness(w: IncompleteWitness, prefix: int, window: int = 2) -> bool:
    """Numerically spot-check the certified bounds on a finite prefix.

    Confirms distinct terms, gap_lower_bound(n) at or below the observed
    minimum distance within a window of indices, and tail_bound(N)
    nonincreasing and at or above observed tail spreads.
    """
    terms = [w.term(n) for n in range(1, window * prefix + 1)]
    if len(set(terms)) != len(terms):
        return False
    d = w.space.dist
    for n in range(1, prefix + 1):
        glb = w.gap_lower_bound(n)
        if glb <= 0:
            return False
        observed = min(d(terms[k - 1], terms[n - 1])
                       for k in range(1, window * prefix + 1) if k != n)
        if glb > observed:
            return False
    prev = None
    for big_n in range(1, prefix + 1):
        tb = w.tail_bound(big_n)
        if prev is not None and tb > prev:
            return False
        prev = tb
        spread = max(d(terms[i], terms[j])
                     for i in range(big_n - 1, window * prefix)
                     for j in range(i + 1, window * prefix))
        if spread > tb:
            return False
    return True


# ---------------------------------------------------------------------------
# The constructed map
# ---------------------------------------------------------------------------

class ConstructedMap(SelfMap):
    """The two-branch tail map built from a witness.

    A sequence term x_{n0} goes to x_{n'} for the least n' > n0 with
    tail_bound(n') < gap_lower_bound(n0) / 2; an off-sequence point x goes
    to x_{n_x} for the least n_x with tail_bound(n_x) <
    off_sequence_gap(x) / 2.  Targets always sit strictly deeper in the
    sequence than their sources, and terms are distinct, so the map has no
    fixed point.
    """

    kind = "constructed_counterexample"

    def __init__(self, witness: IncompleteWitness):
        self.space = witness.space
        self.witness = witness
        self._targets: dict[int, int] = {}

    def target_index(self, n0: int) -> int:
        """Least admissible target index for the source term x_{n0}."""
        cached = self._targets.get(n0)
        if cached is not None:
            return cached
        half_gap = self.witness.gap_lower_bound(n0) / 2
        if half_gap <= 0:
            raise ValueError(f"witness gap bound is not positive at n={n0}")
        idx = _least_index(lambda n: n > n0 and self.witness.tail_bound(n) < half_gap,
                           start=n0 + 1)
        self._targets[n0] = idx
        return idx

    def _image(self, p):
        n0 = self.witness.term_index(p)
        if n0 is not None:
            return self.witness.term(self.target_index(n0))
        if self.witness.off_sequence_gap is None:
            raise ValueError(
                f"witness certifies no off-sequence distance bound, needed for {p}")
        half = self.witness.off_sequence_gap(p) / 2
        if half <= 0:
            raise ValueError(f"off-sequence gap bound is not positive at {p}")
        idx = _least_index(lambda n: self.witness.tail_bound(n) < half, start=1)
        return self.witness.term(idx)

    def construction_entries(self, prefix: int) -> list[tuple[int, int]]:
        """(source index, target index) for the first ``prefix`` terms."""
        return [(n, self.target_index(n)) for n in range(1, prefix + 1)]


def _least_index(satisfied: Callable[[int], bool], start: int) -> int:
    """Least n >= start with satisfied(n), for upward-closed predicates.

    tail_bound is nonincreasing, so the satisfied set is upward closed and
    gallop-then-bisect finds the same index a linear scan would.
    """
    if satisfied(start):
        return start
    lo, hi = start, max(2 * start, start + 1)
    while not satisfied(hi):
        lo, hi = hi, 2 * hi
        if hi > 1 << 62:
            raise ValueError("no admissible target index below 2^62; "
                             "the witness bounds look defective")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if satisfied(mid):
            hi = mid
        else:
            lo = mid
    return hi


def construct_counterexample_map(w: IncompleteWitness) -> ConstructedMap:
    """Build the tail map and sanity-check the first two targets exist."""
    cm = ConstructedMap(w)
    cm.target_index(1)
    cm.target_index(2)
    return cm


@dataclass(frozen=True)
class CounterexampleReport:
    prefix: int
    condition_report: ConditionReport
    fixed_point_free: bool
    constructions: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.condition_report.holds and self.fixed_point_free

    def to_json(self) -> dict:
        out = self.condition_report.to_json()
        out["prefix"] = self.prefix
        out["fixed_point_free"] = self.fixed_point_free
        out["construction"] = [{"source_index": s, "target_index": t}
                               for s, t in self.constructions]
        return out


def verify_counterexample(cm: ConstructedMap, prefix: int) -> CounterexampleReport:
    """Exhaustive strict-Kannan check over the first ``prefix`` terms.

    Also re-verifies that none of those terms is fixed: targets have
    strictly larger indices and terms are distinct.
    """
    if prefix < 1:
        raise ValueError("prefix must be >= 1")
    w = cm.witness
    terms = [w.term(n) for n in range(1, prefix + 1)]
    report = evaluate_condition(StrictKannan(), w.space, cm, sample_pairs(terms))
    fixed_free = all(cm.apply(t) != t for t in terms)
    return CounterexampleReport(prefix=prefix,
                                condition_report=report,
                                fixed_point_free=fixed_free,
                                constructions=tuple(cm.construction_entries(prefix)))


def scan_fixed_point_free(cm: ConstructedMap, count: int) -> bool:
    """True iff none of the first ``count`` sequence terms is fixed.

    Uses the index rule directly (target index != source index plus
    distinctness of terms), so large counts stay cheap.
    """
    w = cm.witness
    terms = [w.term(n) for n in range(1, count + 1)]
    if len(set(terms)) != len(terms):
        return False
    return all(cm.target_index(n) != n for n in range(1, count + 1))


# ---------------------------------------------------------------------------
# The positive-integer gallery check (exhaustive, exact)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GornickiAnswerReport:
    """Exhaustive verdicts for x -> 3x under d(x,y) = 1 + |1/x - 1/y|."""

    n: int
    pairs_checked: int
    closed_forms_match: bool
    strict_inequality: bool
    fixed_point_free: bool
    distances_exceed_one: bool
    cross_checked_pairs: int
    first_violation: Optional[tuple[int, int, str]] = None

    @property
    def ok(self) -> bool:
        return (self.closed_forms_match and self.strict_inequality
                and self.fixed_point_free and self.distances_exceed_one)

    def to_json(self) -> dict:
        return {"n": self.n, "pairs_checked": self.pairs_checked,
                "closed_forms_match": self.closed_forms_match,
                "strict_inequality": self.strict_inequality,
                "fixed_point_free": self.fixed_point_free,
                "distances_exceed_one": self.distances_exceed_one,
                "cross_checked_pairs": self.cross_checked_pairs,
                "first_violation": (list(self.first_violation)
                                    if self.first_violation else None),
                "ok": self.ok}


# int64 is exact below 2^63; with all intermediates bounded by
# (3N^2 + 2N) * 3N^2 after gcd reduction, N <= 30000 keeps every product
# under 2^62.  Larger N falls back to the pure-integer loop.
_VECTOR_SAFE_N = 30_000


def verify_gornicki_answer(n: int, cross_check: Optional[int] = None) -> GornickiAnswerReport:
    """Exhaustively verify the fixed-point-free gallery map up to n.

    For every pair 1 <= x < y <= n, with T the tripling map and d the
    1 + |1/x - 1/y| metric, checks in exact integer arithmetic that

    * d(Tx,Ty) evaluates to the closed form 1 + 1/(3x) - 1/(3y),
    * (d(x,Tx) + d(y,Ty))/2 evaluates to 1 + 1/(3x) + 1/(3y),
    * the strict inequality between them holds,
    * d(x,y) > 1 (so Cauchy sequences must be eventually constant),

    and that no x <= n is fixed by T.  The bulk scan runs on int64
    vectors (exact in this range); a deterministic subsample is
    cross-checked against the Fraction-based space metric, pair by pair.
    """
    if n < 2:
        raise ValueError("need n >= 2 for at least one pair")
    if n <= _VECTOR_SAFE_N:
        result = _scan_pairs_int64(n)
    else:
        result = _scan_pairs_python(n)
    pairs_checked, forms_ok, strict_ok, dist_ok, first_violation = result

    fixed_point_free = all(3 * x != x for x in range(1, n + 1))

    if cross_check is None:
        cross_check = n * (n - 1) // 2 if n <= 100 else 1000
    crossed = _cross_check_fraction(n, cross_check)

    return GornickiAnswerReport(n=n, pairs_checked=pairs_checked,
                                closed_forms_match=forms_ok,
                                strict_inequality=strict_ok,
                                fixed_point_free=fixed_point_free,
                                distances_exceed_one=dist_ok,
                                cross_checked_pairs=crossed,
                                first_violation=first_violation)


def _reduced(num, den):
    g = np.gcd(num, den)
    return num // g, den // g


def _scan_pairs_int64(n: int):
    pairs = 0
    forms_ok = strict_ok = dist_ok = True
    first_violation = None

    for x in range(1, n):
        y = np.arange(x + 1, n + 1, dtype=np.int64)
        xx = np.int64(x)
        delta = np.abs(y - xx)

        # d(Tx,Ty) via the metric: (TxTy + |Ty - Tx|) / (TxTy), Tx = 3x
        num_l, den_l = _reduced(9 * xx * y + 3 * delta, 9 * xx * y)
        # closed form 1 + 1/(3x) - 1/(3y) = (3xy + y - x) / (3xy)
        num_lc, den_lc = _reduced(3 * xx * y + y - xx, 3 * xx * y)

        # (d(x,Tx) + d(y,Ty)) / 2 via the metric, summed as exact fractions
        num_a, den_a = 3 * xx * xx + 2 * xx, 3 * xx * xx
        num_b, den_b = 3 * y * y + 2 * y, 3 * y * y
        num_r, den_r = _reduced(num_a * den_b + num_b * den_a, 2 * den_a * den_b)
        # closed form 1 + 1/(3x) + 1/(3y) = (3xy + x + y) / (3xy)
        num_rc, den_rc = _reduced(3 * xx * y + xx + y, 3 * xx * y)

        lhs_match = (num_l == num_lc) & (den_l == den_lc)
        rhs_match = (num_r == num_rc) & (den_r == den_rc)
        strict = num_l * den_r < num_r * den_l
        # d(x,y) > 1  <=>  (xy + |y-x|) / (xy) > 1
        gt_one = delta > 0

        pairs += len(y)
        for name, mask in (("closed_form", lhs_match & rhs_match),
                           ("strict", strict), ("distance", gt_one)):
            if not bool(np.all(mask)):
                bad = int(np.argmin(mask))
                if first_violation is None:
                    first_violation = (x, int(y[bad]), name)
                if name == "closed_form":
                    forms_ok = False
                elif name == "strict":
                    strict_ok = False
                else:
                    dist_ok = False
    return pairs, forms_ok, strict_ok, dist_ok, first_violation


def _scan_pairs_python(n: int):
    pairs = 0
    forms_ok = strict_ok = dist_ok = True
    first_violation = None
    for x in range(1, n):
        for y in range(x + 1, n + 1):
            pairs += 1
            lhs = Fraction(9 * x * y + 3 * abs(y - x), 9 * x * y)
            rhs = (Fraction(3 * x * x + 2 * x, 3 * x * x)
                   + Fraction(3 * y * y + 2 * y, 3 * y * y)) / 2
            ok_forms = (lhs == Fraction(3 * x * y + y - x, 3 * x * y)
                        and rhs == Fraction(3 * x * y + x + y, 3 * x * y))
            ok_strict = lhs < rhs
            ok_dist = abs(y - x) > 0
            if not (ok_forms and ok_strict and ok_dist):
                if first_violation is None:
                    kind = ("closed_form" if not ok_forms
                            else "strict" if not ok_strict else "distance")
                    first_violation = (x, y, kind)
                forms_ok &= ok_forms
                strict_ok &= ok_strict
                dist_ok &= ok_dist
    return pairs, forms_ok, strict_ok, dist_ok, first_violation


def _cross_check_fraction(n: int, budget: int) -> int:
    """Re-derive a deterministic pair subsample through the Fraction metric.

    An independent route: distances come from the space object, the map
    images from TripleNat.apply, all in Fraction arithmetic; a mismatch
    with the integer scan raises AssertionError.
    """
    space = GornickiNat()
    t = TripleNat(space)
    all_pairs = n * (n - 1) // 2
    budget = min(budget, all_pairs)
    if budget == all_pairs:
        sample = [(x, y) for x in range(1, n) for y in range(x + 1, n + 1)]
    else:
        per_axis = max(2, int(budget ** 0.5))
        step = max(1, (n - 1) // per_axis)
        xs = list(range(1, n, step))
        sample = []
        for x in xs:
            for y in range(x + 1, n + 1, step):
                sample.append((x, y))
        sample += [(1, 2), (1, n), (n - 1, n)]
        sample = sorted(set(sample))
    for x, y in sample:
        fx, fy = Fraction(x), Fraction(y)
        tx, ty = t.apply(fx), t.apply(fy)
        lhs = space.dist(tx, ty)
        rhs = (space.dist(fx, tx) + space.dist(fy, ty)) / 2
        assert lhs == 1 + Fraction(1, 3 * x) - Fraction(1, 3 * y), (x, y)
        assert rhs == 1 + Fraction(1, 3 * x) + Fraction(1, 3 * y), (x, y)
        assert lhs < rhs, (x, y)
        assert space.dist(fx, fy) > 1, (x, y)
    return len(sample)
