"""Representative endowments of the EU-28 in life expectancy and GDP per capita.

Builds the 2000 and 2015 polylines for four aversion levels and writes an
SVG overlay next to this script.  Stronger aversion pulls the curve towards
the lower left.
"""
from pathlib import Path

from ginimre import dw, load_eu, mre_2d
from ginimre.svg import render

BETAS = (2, 14 / 5, 14 / 3, 7)

curves, points = [], []
for group, year in enumerate((2000, 2015)):
    X = load_eu(year)
    points.append(X.data)
    for beta in BETAS:
        poly = mre_2d(X, dw(1 / beta))
        first, last = poly.vertices[0], poly.vertices[-1]
        print(f"{year} beta={beta:5.2f}: {len(poly):3d} vertices, "
              f"from ({first[0]:.2f}, {first[1]:,.0f}) to ({last[0]:.2f}, {last[1]:,.0f})")
        curves.append((poly, f"{year} beta={beta:.3g}", group))

out = Path(__file__).with_name("eu_mre.svg")
out.write_text(render(curves, points, ("life expectancy (years)", "GDP per capita"),
                      "EU-28 representative endowments, 2000 and 2015"))
print(f"wrote {out}")
