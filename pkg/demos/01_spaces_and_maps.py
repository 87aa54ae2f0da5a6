"""Tour of the space catalog and the self-maps that live on it.

Every number below is an exact rational; nothing is ever rounded.
"""

from fractions import Fraction as F

from kannanlab import (FiniteSpace, GornickiNat, HalfLineUsual, MembershipError,
                       PiecewiseDrop, Scale, SplitSet, StairScale, TripleNat,
                       UnitIntervalRight, verify_metric_axioms)

print("=== catalog spaces and their declared analytic flags ===")
for space in (HalfLineUsual(), UnitIntervalRight(), SplitSet(),
              GornickiNat()):
    print(f"{space.kind:22s} complete={space.complete!s:5s} "
          f"boundedly_compact={space.boundedly_compact!s:5s} "
          f"compact={space.compact}")

print()
print("=== the 1 + |1/x - 1/y| metric on the positive integers ===")
g = GornickiNat()
for x, y in [(1, 2), (2, 6), (1, 100)]:
    print(f"d({x}, {y}) = {g.dist(x, y)}")
print("distinct points are always more than 1 apart, so the only Cauchy")
print("sequences are the eventually constant ones: the space is complete.")

print()
print("=== membership is enforced on every operation ===")
try:
    g.dist(F(1, 2), 1)
except MembershipError as exc:
    print(f"as expected: {exc}")

print()
print("=== finite spaces verify the metric axioms at construction ===")
report = verify_metric_axioms(["a", "b", "c"],
                              [[0, 1, 3], [1, 0, 1], [3, 1, 0]])
print(f"triangle-breaking matrix: passed={report.passed}, "
      f"first violation: {report.first_violation}")
good = FiniteSpace(labels=("a", "b", "c"),
                   matrix=((0, 1, 2), (1, 0, F(3, 2)), (2, F(3, 2), 0)))
print(f"a genuine 3-point metric: size={good.size}, d(a,c)={good.dist('a', 'c')}")

print()
print("=== the map catalog ===")
half = HalfLineUsual()
stair = StairScale(half)
print(f"stair scale sends 3/2 (on stair n=2) to {stair.apply(F(3, 2))}")
print(f"stair scale fixes 0: {stair.apply(F(0))}")
drop = PiecewiseDrop(SplitSet())
print(f"the discontinuous drop: T(2) = {drop.apply(F(2))}, "
      f"T(3/2) = {drop.apply(F(3, 2))}")
triple = TripleNat(g)
print(f"tripling on the integers: T(1) = {triple.apply(1)} (never fixed)")
doubling = Scale(half, 2)
print(f"doubling pushes everything away: T(1) = {doubling.apply(F(1))}")
