"""Forcing and anti-forcing numbers on coronene and triphenylene.

Two small structures show how alternating hexagons fall short of the
forcing-type numbers: coronene has a concentric structure with forcing
number 2 but one alternating hexagon, and triphenylene has one whose
anti-forcing number is 2 while again only one hexagon alternates.

Run: python3 demos/03_forcing_invariants.py
"""

from benzenoid import InvariantReport, MatchingAnalysis, gen_named, ring_matchings
from benzenoid.matchings import matching_to_pairs

from _sketch import sketch

for name in ["coronene", "triphenylene"]:
    H = gen_named(name)
    rep = InvariantReport.of(H)
    print(rep.to_table().splitlines()[0])
    print(f"  forcing spectrum {rep.forcing_spectrum}, "
          f"anti-forcing spectrum {rep.anti_forcing_spectrum}, r(H)={rep.r}")
    for M in ring_matchings(H, (0, 0)):
        a = MatchingAnalysis(H, M)
        print(f"  concentric structure: f={a.f} c={a.c} af={a.af} c'={a.c_prime} fr={a.fr}")
        print(f"    minimum forcing set {matching_to_pairs(H, a.forcing_set)}")
        print(f"    minimum anti-forcing set {matching_to_pairs(H, a.anti_forcing_set)}")
        print("   ", sketch(H.cells, a.alternating_hexagons).replace("\n", "\n    "))
    print()
