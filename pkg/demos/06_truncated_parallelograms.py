"""Anti-forcing number one and truncated parallelograms.

A hexagonal system has a perfect matching fixed by deleting a single edge
exactly when it is a truncated parallelogram.  The census check is exhaustive;
the two large examples are certified by exhibiting such an edge.

Run: python3 demos/06_truncated_parallelograms.py
"""

from benzenoid import InvariantReport, anti_forcing_edges, gen_truncated_parallelogram
from benzenoid.hexcore import enumerate_all_systems, is_truncated_parallelogram
from benzenoid.matchings import has_perfect_matching, kekule_count

from _sketch import sketch

agree = total = tps = 0
for H in enumerate_all_systems(6):
    if not has_perfect_matching(H):
        continue
    rep = InvariantReport.of(H)
    tp = is_truncated_parallelogram(H.cells)
    total += 1
    tps += tp
    agree += (rep.af_min == 1) == tp
print(f"census <= 6: {agree}/{total} systems agree ({tps} truncated parallelograms)\n")

for rows in [(6, 6, 5, 4), (6, 6, 6, 6)]:
    H = gen_truncated_parallelogram(*rows)
    edges = anti_forcing_edges(H)
    e, M = edges[0]
    print(f"{H.name}: k={kekule_count(H)}, deleting edge {H.edges[e]} leaves one "
          f"perfect matching ({len(edges)} such edges)")
    print(sketch(H.cells), "\n")
