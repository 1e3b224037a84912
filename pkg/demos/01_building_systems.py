"""Building hexagonal systems and walking the small census.

Run: python3 demos/01_building_systems.py
"""

from collections import Counter

from benzenoid import hexcore
from benzenoid.hexcore import InvalidSystemError, build, gen_named, gen_truncated_parallelogram
from benzenoid.matchings import has_perfect_matching

from _sketch import sketch

# A system is just a set of axial cells; everything else is derived.
for name in ["benzene", "naphthalene", "triphenylene", "coronene"]:
    H = gen_named(name)
    print(f"{name}: h={H.num_hexagons} n={H.num_vertices} m={H.num_edges} "
          f"boundary={len(H.boundary)} internal={sum(not hx.external for hx in H.hexagons)}")
    print(sketch(H.cells), "\n")

# Truncated parallelograms stack right-aligned rows of non-increasing length.
H = gen_truncated_parallelogram(6, 6, 5, 4)
print(f"{H.name}: {H.num_hexagons} hexagons")
print(sketch(H.cells), "\n")

# Hole-bearing cell sets are rejected (the Euler count m = n + h - 1 fails).
ring = [c for c in gen_named("coronene").cells if c != (0, 0)]
try:
    build(ring)
except InvalidSystemError as exc:
    print("ring of six:", exc, "\n")

# The isomorph-free census, with how many systems admit a perfect matching.
by_size = Counter()
kekulean = Counter()
for H in hexcore.enumerate_all_systems(7):
    by_size[H.num_hexagons] += 1
    kekulean[H.num_hexagons] += has_perfect_matching(H)
print("h   systems  kekulean")
for h in sorted(by_size):
    print(f"{h:<3} {by_size[h]:>7}  {kekulean[h]:>8}")
