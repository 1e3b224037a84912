"""The R_n family: af = fr fails one level below Af - 1.

R_n has 2n+4 hexagons, a single nice triphenylene, Af = Fr = 2n+4, and a
matching with af = 2n+2 but only 2n+1 alternating hexagons.  So the identity
af = fr at the top two anti-forcing levels cannot be pushed to a third.

Run: python3 demos/05_rn_family.py
"""

from benzenoid import InvariantReport, gen_Rn
from benzenoid.theorems import gen_Rn_validate, has_nice_triphenylene

from _sketch import sketch

for n in (1, 2, 3):
    H = gen_Rn(n)
    rep = InvariantReport.of(H)
    v = gen_Rn_validate(H, n, report=rep)
    _, tri = has_nice_triphenylene(H)
    print(f"R_{n}: {v.status}  Af={rep.Af} Fr={rep.Fr} k={rep.k}")
    print(f"  anti-forcing levels {rep.anti_forcing_spectrum}")
    gaps = sorted({(a.af, a.fr) for a in rep.analyses if a.af != a.fr}, reverse=True)
    print(f"  (af, fr) pairs with af > fr, highest first: {gaps[:4]}")
    print("  nice triphenylene marked:")
    print("  ", sketch(H.cells, tri).replace("\n", "\n   "), "\n")
