"""Tour of root systems and the arrangements they generate.

Run with: python3 demos/roots_and_arrangements.py
"""

from fractions import Fraction

from floparr import (
    DynkinType,
    arrangement_to_json,
    build_affine,
    build_finite,
    parse_data,
    positive_roots,
)
from floparr.arrangement import dumps

print("Positive root counts by type:")
for family, rank in [("A", 2), ("A", 4), ("D", 4), ("D", 5), ("E", 6), ("E", 7), ("E", 8)]:
    delta = DynkinType(family, rank)
    print(f"  {family}{rank}: {len(positive_roots(delta))} positive roots")

print()
print("A3 positive roots in simple-root coordinates:")
for root in positive_roots(DynkinType("A", 3)):
    print(f"  {root}")

print()
print("Contracting the middle node of A3 folds six roots onto three lines:")
data = parse_data("A3:J={1}")
arr = build_finite(data)
for h in arr.hyperplanes:
    print(f"  normal {h.normal}")

print()
print("The same three directions with integer shifts inside a window of"
      " half-width 3/2:")
window = build_affine(data, Fraction(3, 2))
for h in window.hyperplanes:
    print(f"  normal {h.normal}, level {h.level:+d}")

print()
print("Arrangements serialize to JSON and round-trip exactly:")
print(dumps(arrangement_to_json(arr)))
