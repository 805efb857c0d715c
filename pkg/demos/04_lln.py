"""Sample MREs settle down as the sample grows.

Draws uniform samples on the unit square and reports the median windowed
Hausdorff distance to a reference MRE built from a much larger sample.
Takes around twenty seconds.
"""
from ginimre import dw
from ginimre.lln import format_table, run_lln

rows = run_lln("uniform", [100, 1000, 10_000], repetitions=20, seed=0, v=dw(0.5))
print(format_table(rows), end="")
