"""Picard iteration with the convergence-argument diagnostics.

For a strictly-Kannan map the gap sequence d(x_n, x_{n+1}) must strictly
decrease and all iterates stay within the first gap of each other; the
engine measures both on the computed prefix instead of assuming them.
"""

from fractions import Fraction as F

from kannanlab import (GornickiNat, PiecewiseDrop, Scale, SplitSet, TripleNat,
                       UnitIntervalRight, check_epsdelta_orbit,
                       orbit_trace_csv, run_picard, uniqueness_probe,
                       verify_fixed_point)

print("=== the drop map: discontinuous, incomplete space, fixed point 0 ===")
space = SplitSet()
drop = PiecewiseDrop(space)
run = run_picard(space, drop, F(2), horizon=10)
print(f"gaps: {[str(g) for g in run.orbit.gaps]}  (strictly decreasing)")
print(f"gap_monotone={run.gap_monotone} pairwise_bound_ok={run.pairwise_bound_ok}")
print(f"fixed point: {run.fixed_point}")
print(f"residual check at 0: {verify_fixed_point(space, drop, F(0))}")

print()
print("=== tripling on the integers: diagnostics pass, no fixed point ===")
g = GornickiNat()
triple = TripleNat(g)
run = run_picard(g, triple, F(1), horizon=12)
print(f"status: {run.orbit.status}")
print(f"gap_monotone={run.gap_monotone} pairwise_bound_ok={run.pairwise_bound_ok}")
print(f"last gap: {run.gap_limit_evidence} -> the gaps approach 1, not 0:")
print("the orbit is not Cauchy, which is how a strictly-Kannan map escapes")
print("having a fixed point on this complete but non-compact space.")
print(f"fixed points among 1..100: {uniqueness_probe(g, triple, range(1, 101))}")

print()
print("=== halving on [0,1): converges to a limit outside the space ===")
unit = UnitIntervalRight()
halving = Scale(unit, F(1, 2))
run = run_picard(unit, halving, F(1, 2), horizon=20)
print(f"status: {run.orbit.status} (never a fake 'converged' verdict)")
print(f"tail spread over the last quarter: {run.cauchy_evidence}")
print()
print("CSV trace (first lines):")
print("\n".join(orbit_trace_csv(run.orbit).splitlines()[:5]))

print()
print("=== the orbit eps-delta property ===")
from kannanlab import HalfLineUsual

half = HalfLineUsual()
[rep] = check_epsdelta_orbit(half, Scale(half, F(1, 2)), F(1),
                             eps_grid=[F(1, 4)], delta_candidates=[F(1, 4)],
                             horizon=16)
print(f"halving, eps=1/4: passing delta = {rep.passing_delta}")
[rep] = check_epsdelta_orbit(half, Scale(half, 2), F(1),
                             eps_grid=[F(1, 4)],
                             delta_candidates=[F(1, 4), F(1, 8)], horizon=16)
print(f"doubling, eps=1/4: passing delta = {rep.passing_delta} "
      f"(cells: {[c.status for c in rep.cells]})")
print("vacuously-true deltas certify nothing and are reported as such.")
