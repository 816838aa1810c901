"""Chamber graphs, minimal galleries, and the mutation walk.

Run with: python3 demos/chambers_and_galleries.py
"""

from fractions import Fraction

from floparr import (
    atoms,
    build_affine,
    build_finite,
    crossings,
    enumerate_chambers,
    initial_label,
    mutation_walk,
    parse_data,
    region_count_zaslavsky,
    walls,
)

arr = build_finite(parse_data("A2:J={}"))
g = enumerate_chambers(arr)

print(f"The A2 arrangement has {len(arr)} lines and {len(g.chambers)} chambers.")
print(f"Region count from the intersection poset agrees: {region_count_zaslavsky(arr)}")
print()
print("Chambers carry a sign vector and an exact rational witness point:")
for c in g.chambers:
    print(f"  chamber {c.id}: signs {c.signs}, witness {tuple(str(v) for v in c.witness)}")

far = g.id_of_signs((-1, -1, -1))
print()
print(f"Minimal positive paths from chamber 0 to its opposite (chamber {far}):")
for path in atoms(g, 0, far):
    print(f"  edges {path.edges}, crossing hyperplanes in order {crossings(g, path)}")

print()
print("Transporting a formal label along one of these galleries mutates"
      " exactly one summand per wall crossing:")
path = atoms(g, 0, far)[0]
for step, label in enumerate(mutation_walk(g, initial_label(g, 0), path)):
    print(f"  step {step}: {label.symbols}")

window = build_affine(parse_data("A1:J={}"), Fraction(5, 2))
wg = enumerate_chambers(window)
print()
print(f"A single line with shifts in a window of half-width 5/2 cuts the"
      f" segment into {len(wg.chambers)} cells;")
print(f"the two outermost cells touch the window and are flagged:"
      f" {sorted(c.id for c in wg.chambers if c.boundary)}")
for c in wg.chambers:
    print(f"  cell {c.id}: witness {str(c.witness[0]):>5}, walls {walls(wg, c.id)},"
          f" boundary={c.boundary}")
