"""Uniform Gini dominance between the 2015 and 2000 EU-28 distributions.

2015 dominates 2000 at every price vector and every aversion level in the
grid; the reverse fails, and the witness shows where.  Restricting the
prices to a narrow cone around GDP gives a weaker, partial statement.
"""
import math

from ginimre import AngleInterval, dominates, dominates_family, dw, load_eu

e2000, e2015 = load_eu(2000), load_eu(2015)
grid = [1 / 2, 5 / 14, 3 / 14, 1 / 7]

fam = dominates_family(e2015, e2000, "dw", grid)
print(f"2015 over 2000, all prices, alpha in {[round(a, 3) for a in grid]}: {fam.holds}")
for a, vd in zip(fam.alphas, fam.verdicts):
    print(f"  alpha={a:.3f} worst margin {vd.worst_margin:8.3f} at p={vd.witness.round(4)}")

back = dominates(e2000, e2015, dw(0.5))
angle = math.degrees(math.atan2(back.witness[1], back.witness[0]))
print(f"2000 over 2015: {back.holds}, worst margin {back.worst_margin:,.1f} "
      f"at {angle:.2f} degrees")

near_life = dominates(e2000, e2015, dw(0.5), AngleInterval.from_degrees(0, 0))
print(f"2000 over 2015 on life expectancy alone: {near_life.holds}")
