"""Find rank-2 contractions with a prescribed line count and draw one.

Run with: python3 demos/figure_hunt.py
Writes a9.svg next to this script.
"""

from fractions import Fraction
from pathlib import Path

from floparr import arrangement_svg, build_affine, build_finite, enumerate_chambers, parse_data
from floparr.cli import all_rank_two_data

print("Rank-2 contractions up to rank 5 with exactly 3 lines:")
for data in all_rank_two_data(5):
    if len(build_finite(data)) == 3:
        print(f"  {data}")

print()
data = parse_data("A2:J={}")
window = build_affine(data, Fraction(1))
level0 = sum(1 for h in window.hyperplanes if h.level == 0)
print(f"A2 with shifts in a unit window: {len(window)} lines,"
      f" {level0} through the origin.")

g = enumerate_chambers(window)
out = Path(__file__).with_name("a9.svg")
out.write_text(arrangement_svg(window, g))
print(f"Wrote {out.name}: {len(window)} lines, {len(g.chambers)} chamber markers.")
