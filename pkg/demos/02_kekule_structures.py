"""Kekulé structures, alternating cycles and rotations on anthracene.

Run: python3 demos/02_kekule_structures.py
"""

from benzenoid import gen_named
from benzenoid.altcycles import alternating_hexagons, enumerate_alt_cycles
from benzenoid.matchings import enumerate_matchings, has_unique_pm, rotate

from _sketch import sketch

H = gen_named("anthracene")
ms = enumerate_matchings(H)
print(f"anthracene has {len(ms)} perfect matchings\n")

for i, M in enumerate(ms):
    cycles = enumerate_alt_cycles(H, M)
    kinds = ", ".join(f"len {len(C)} h={C.h} {'proper' if C.proper else 'improper'}"
                      for C in cycles)
    print(f"M{i}: alternating cycles [{kinds}]")
    print(sketch(H.cells, alternating_hexagons(H, M)), "\n")

# Rotating along an alternating cycle moves to a neighbouring structure.
M = ms[0]
C = enumerate_alt_cycles(H, M)[-1]
N = rotate(H, M, C.edges)
print(f"rotating M0 around its {len(C)}-cycle gives M{ms.index(N)}")

# Deleting the non-M edges of every cycle pins M down.
blockers = {next(e for e in C.edge_seq if e not in M) for C in enumerate_alt_cycles(H, M)}
print(f"removing {len(blockers)} edges leaves M0 unique: {has_unique_pm(H, M, blockers)}")
