"""Mechanical verification of the minimax identities on a census.

For every Kekulean system up to six hexagons and every perfect matching this
checks f = c, af = c', F = Cl, Af = Fr, the large-af identity af = fr, the
structure of maximum non-crossing compatible sets, the af(H) = 1
characterization, the triphenylene characterization and the r <= k relation.

Run: python3 demos/04_census_verification.py [max_hexagons]
"""

import sys
import time

from benzenoid.theorems import format_summary, summarize, verify_census

limit = int(sys.argv[1]) if len(sys.argv) > 1 else 6
start = time.time()
verdicts = list(verify_census(limit))
print(f"{len(verdicts)} verdicts over systems with at most {limit} hexagons "
      f"in {time.time() - start:.1f}s\n")
print(format_summary(summarize(verdicts)))
failures = [v for v in verdicts if v.status == "fails"]
print(f"\nfailures: {len(failures)}")
for v in failures[:5]:
    print(v.to_json())
