"""The contractive-condition catalog and its exact checker.

The headline act: the discontinuous drop map on (1,2] u {-1,0} satisfies
the strict Kannan inequality on every distinct pair even though it is
discontinuous and the space is incomplete — and its fixed point is 0.
"""

import json
from fractions import Fraction as F

from kannanlab import (ChenYeh, Fisher, KannanK, Khan, PiecewiseDrop,
                       SplitSet, StrictKannan, evaluate_condition,
                       kannan_ratio, sample_pairs, split_set_sample)
from kannanlab.maps import Custom

space = SplitSet()
drop = PiecewiseDrop(space)
sample = split_set_sample(60)
pairs = sample_pairs(sample)

print("=== the drop map against the whole catalog (60-point sample) ===")
for cond in (StrictKannan(), KannanK(F(49, 100)), Fisher(), Khan(),
             ChenYeh(a=F(0), b=F(0))):
    report = evaluate_condition(cond, space, drop, pairs)
    verdict = "holds" if report.holds else "violated"
    print(f"{cond.label():24s} -> {verdict:9s} "
          f"({report.pairs_checked} pairs checked)")

print()
print("=== a violation comes with an exact witness ===")
ident = Custom(space, lambda v: v, kind="identity")
report = evaluate_condition(StrictKannan(), space, ident, pairs)
print(json.dumps(report.to_json()["verdict"], indent=2, sort_keys=True))
print("the identity map has zero displacement, so the bound is 0 and any")
print("distinct pair is a witness; witnesses replay exactly.")

print()
print("=== the smallest admissible Kannan constant on the sample ===")
ratio = kannan_ratio(space, drop, pairs)
print(f"max over pairs of d(Tx,Ty)/(d(x,Tx)+d(y,Ty)) = {ratio}")
print(f"so the drop map is a classical Kannan map for any k in ({ratio}, 1/2).")

print()
print("=== square roots are never materialized ===")
from kannanlab import HalfLineUsual, Scale, lt_sqrt

half = HalfLineUsual()
halving = Scale(half, F(1, 2))
report = evaluate_condition(Khan(), half, halving, [(F(1), F(2))])
print(f"geometric-mean condition on the pair (1, 2): "
      f"{'holds' if report.holds else 'violated'}")
print(f"decided by squaring: lt_sqrt(1/2, 1/2) = {lt_sqrt(F(1, 2), F(1, 2))}")
