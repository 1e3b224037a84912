"""Instance-level verification of the minimax identities and structural
characterizations for hexagonal systems.

Each check returns :class:`Verdict` records.  A ``fails`` verdict always
carries enough payload (cells, matching, certificates) to reproduce it.
Budget overruns become ``skipped-budget`` verdicts and are never reported as
passes.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .altcycles import CycleCapExceeded, DEFAULT_CYCLE_CAP, interiors_disjoint, \
    is_linear_chain_interior
from .forcing import InvariantReport, MatchingAnalysis
from .hexcore import NAMED_CELLS, HexSystem, enumerate_all_systems, is_truncated_parallelogram, \
    placements, triphenylene_placements
from .matchings import has_perfect_matching, is_nice, matching_to_pairs
from .solvers import maximum_cliques

HOLDS = "holds"
FAILS = "fails"
HYPOTHESIS_NOT_MET = "hypothesis-not-met"
SKIPPED = "skipped-budget"

DEFAULT_STRUCTURE_LIMIT = 200

# Sextet patterns and Kekulé structures are equinumerous exactly when the
# system has NO nice coronene.  Coronene itself (r = 19, k = 20) settles the
# direction; flip only together with the test that pins it.
SEXTET_EQUALITY_NEEDS_CORONENE = False


@dataclass
class Verdict:
    theorem: str
    instance: str
    status: str
    witness: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status != FAILS

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "instance": self.instance,
                "status": self.status, "witness": self.witness}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def instance_id(H: HexSystem) -> str:
    if H.name:
        return H.name
    return "cells:" + ";".join(f"{q},{r}" for q, r in H.cells)


def _cells(H: HexSystem) -> list[list[int]]:
    return [list(c) for c in H.cells]


def _payload(H: HexSystem, a: MatchingAnalysis | None = None, **extra) -> dict:
    out = {"cells": _cells(H)}
    if a is not None:
        out["matching"] = matching_to_pairs(H, a.M)
    out.update(extra)
    return out


def _guarded(theorem: str, H: HexSystem, fn: Callable[[], list[Verdict]]) -> list[Verdict]:
    try:
        return fn()
    except CycleCapExceeded as exc:
        return [Verdict(theorem, instance_id(H), SKIPPED, {"cells": _cells(H), "reason": str(exc)})]


def _report(H: HexSystem, report: InvariantReport | None, cycle_cap: int) -> InvariantReport:
    return report if report is not None else InvariantReport.of(H, cycle_cap)


# --------------------------------------------------------------------------
# Minimax identities
# --------------------------------------------------------------------------

def verify_minimax(H: HexSystem, report: InvariantReport | None = None,
                   cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Verdict]:
    """f = c and af = c' for every perfect matching."""
    def run():
        rep = _report(H, report, cycle_cap)
        out = []
        for i, a in enumerate(rep.analyses):
            for name, lhs, rhs, cert in (
                    ("forcing-minimax", a.f, a.c, a.forcing_set),
                    ("anti-forcing-minimax", a.af, a.c_prime, a.anti_forcing_set)):
                status = HOLDS if lhs == rhs else FAILS
                wit = {"matching_id": i, "values": [lhs, rhs]}
                if status == FAILS:
                    wit.update(_payload(H, a, certificate=matching_to_pairs(H, cert)))
                out.append(Verdict(name, instance_id(H), status, wit))
        return out
    return _guarded("minimax", H, run)


def verify_clar_fries(H: HexSystem, report: InvariantReport | None = None,
                      cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Verdict]:
    """F = Cl and Af = Fr."""
    def run():
        rep = _report(H, report, cycle_cap)
        if not rep.k:
            return [Verdict(t, instance_id(H), HYPOTHESIS_NOT_MET, {"k": 0})
                    for t in ("clar", "fries")]
        out = []
        for name, lhs, rhs in (("clar", rep.F, rep.Cl), ("fries", rep.Af, rep.Fr)):
            status = HOLDS if lhs == rhs else FAILS
            wit = {"values": [lhs, rhs]}
            if status == FAILS:
                wit["cells"] = _cells(H)
            out.append(Verdict(name, instance_id(H), status, wit))
        return out
    return _guarded("clar-fries", H, run)


def verify_max_forcing_hexagons(H: HexSystem, report: InvariantReport | None = None,
                                cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Verdict]:
    """Every matching of maximum forcing number F has F disjoint alternating
    hexagons."""
    def run():
        rep = _report(H, report, cycle_cap)
        out = []
        for i, a in enumerate(rep.analyses):
            if a.f != rep.F:
                continue
            got = a.disjoint_alternating_hexagons
            status = HOLDS if len(got) >= rep.F else FAILS
            wit = {"matching_id": i, "F": rep.F,
                   "hexagons": [list(c) for c in got]}
            if status == FAILS:
                wit.update(_payload(H, a))
            out.append(Verdict("max-forcing-hexagons", instance_id(H), status, wit))
        return out
    return _guarded("max-forcing-hexagons", H, run)


# --------------------------------------------------------------------------
# Large anti-forcing numbers
# --------------------------------------------------------------------------

def verify_main(H: HexSystem, report: InvariantReport | None = None,
                cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Verdict]:
    """af = fr for every matching whose af is Af or Af - 1.

    Matchings at lower levels get ``hypothesis-not-met`` with their values.
    """
    def run():
        rep = _report(H, report, cycle_cap)
        out = []
        Af = rep.Af
        for i, a in enumerate(rep.analyses):
            wit = {"matching_id": i, "af": a.af, "fr": a.fr, "Af": Af}
            if a.af < Af - 1:
                status = HYPOTHESIS_NOT_MET
            else:
                status = HOLDS if a.af == a.fr else FAILS
                if status == FAILS:
                    wit.update(_payload(H, a, anti_forcing_set=matching_to_pairs(H, a.anti_forcing_set)))
            out.append(Verdict("main", instance_id(H), status, wit))
        return out
    return _guarded("main", H, run)


def maximum_noncrossing_sets(a: MatchingAnalysis, limit: int | None = None
                             ) -> Iterator[list]:
    """Maximum non-crossing compatible M-alternating sets (as cycle lists)."""
    size = a.c_prime
    for clique in maximum_cliques(a.noncrossing_graph, size, limit=limit):
        yield [a.cycles[i] for i in clique]


def verify_structure(H: HexSystem, report: InvariantReport | None = None,
                     cycle_cap: int = DEFAULT_CYCLE_CAP,
                     limit: int = DEFAULT_STRUCTURE_LIMIT) -> list[Verdict]:
    """For matchings at levels Af and Af - 1, every maximum non-crossing
    compatible set has pairwise disjoint interiors and linear-chain
    interiors.  One verdict per inspected set."""
    def run():
        rep = _report(H, report, cycle_cap)
        out = []
        Af = rep.Af
        for i, a in enumerate(rep.analyses):
            if a.af < Af - 1:
                out.append(Verdict("structure", instance_id(H), HYPOTHESIS_NOT_MET,
                                   {"matching_id": i, "af": a.af, "Af": Af}))
                continue
            seen = 0
            for family in maximum_noncrossing_sets(a, limit=limit + 1):
                seen += 1
                if seen > limit:
                    out.append(Verdict("structure", instance_id(H), SKIPPED,
                                       {"matching_id": i, "reason": f"more than {limit} maximum sets"}))
                    break
                disjoint = all(interiors_disjoint(x, y) for j, x in enumerate(family)
                               for y in family[j + 1:])
                linear = all(is_linear_chain_interior(H, C) for C in family)
                status = HOLDS if disjoint and linear else FAILS
                wit = {"matching_id": i, "set_id": seen - 1,
                       "disjoint_interiors": disjoint, "linear_chains": linear}
                if status == FAILS:
                    wit.update(_payload(H, a, cycles=[C.to_dict() for C in family]))
                out.append(Verdict("structure", instance_id(H), status, wit))
            if seen == 0:
                # a maximum compatible set always has a non-crossing rearrangement
                out.append(Verdict("structure", instance_id(H), FAILS,
                                   _payload(H, a, matching_id=i,
                                            reason="no non-crossing set of size c'")))
        return out
    return _guarded("structure", H, run)


def verify_af1(H: HexSystem, report: InvariantReport | None = None,
               cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Verdict]:
    """min af = 1 exactly on truncated parallelograms."""
    def run():
        rep = _report(H, report, cycle_cap)
        if not rep.k:
            return [Verdict("af1", instance_id(H), HYPOTHESIS_NOT_MET, {"k": 0})]
        recognized = is_truncated_parallelogram(H.cells)
        af_min = rep.af_min
        status = HOLDS if (af_min == 1) == recognized else FAILS
        wit = {"af": af_min, "truncated_parallelogram": recognized}
        if status == FAILS:
            wit["cells"] = _cells(H)
        return [Verdict("af1", instance_id(H), status, wit)]
    return _guarded("af1", H, run)


# --------------------------------------------------------------------------
# Nice subgraphs
# --------------------------------------------------------------------------

def _nice_placement(H: HexSystem, shape) -> tuple | None:
    for placed in placements(shape, H.cells):
        if is_nice(H, H.vertices_of_cells(placed)):
            return placed
    return None


def has_nice_triphenylene(H: HexSystem) -> tuple[bool, tuple | None]:
    """Whether some triphenylene placement is a nice subgraph, with the
    first such placement (sorted cells) as witness."""
    found = None
    for _, outer in triphenylene_placements():
        found = _nice_placement(H, ((0, 0),) + outer)
        if found:
            break
    return found is not None, found


def has_nice_coronene(H: HexSystem) -> tuple[bool, tuple | None]:
    found = _nice_placement(H, NAMED_CELLS["coronene"])
    return found is not None, found


def verify_triphenylene_theorem(H: HexSystem, report: InvariantReport | None = None,
                                cycle_cap: int = DEFAULT_CYCLE_CAP) -> list[Verdict]:
    """No nice triphenylene  <=>  af = fr for every perfect matching."""
    def run():
        rep = _report(H, report, cycle_cap)
        if not rep.k:
            return [Verdict("triphenylene", instance_id(H), HYPOTHESIS_NOT_MET, {"k": 0})]
        has_tri, placed = has_nice_triphenylene(H)
        gaps = [i for i, a in enumerate(rep.analyses) if a.af != a.fr]
        status = HOLDS if (not has_tri) == (not gaps) else FAILS
        wit = {"nice_triphenylene": [list(c) for c in placed] if placed else None,
               "matchings_with_af_gt_fr": gaps}
        if status == FAILS:
            wit["cells"] = _cells(H)
        return [Verdict("triphenylene", instance_id(H), status, wit)]
    return _guarded("triphenylene", H, run)


def verify_sextet(H: HexSystem, report: InvariantReport | None = None,
                  cycle_cap: int = DEFAULT_CYCLE_CAP,
                  equality_needs_coronene: bool = SEXTET_EQUALITY_NEEDS_CORONENE
                  ) -> list[Verdict]:
    """r <= k, and r = k exactly when a nice coronene is absent (or present,
    under the opposite polarity)."""
    def run():
        rep = _report(H, report, cycle_cap)
        if not rep.k:
            return [Verdict("sextet", instance_id(H), HYPOTHESIS_NOT_MET, {"k": 0})]
        has_cor, _ = has_nice_coronene(H)
        r, k = rep.r, rep.k
        expected_equal = has_cor if equality_needs_coronene else not has_cor
        status = HOLDS if r <= k and (r == k) == expected_equal else FAILS
        wit = {"r": r, "k": k, "nice_coronene": has_cor}
        if status == FAILS:
            wit["cells"] = _cells(H)
        return [Verdict("sextet", instance_id(H), status, wit)]
    return _guarded("sextet", H, run)


# --------------------------------------------------------------------------
# The R_n family
# --------------------------------------------------------------------------

def gen_Rn_validate(H: HexSystem, n: int, report: InvariantReport | None = None,
                    cycle_cap: int = DEFAULT_CYCLE_CAP) -> Verdict:
    """Check the defining ledger of R_n on a candidate system."""
    rep = _report(H, report, cycle_cap)
    witness_id = next((i for i, a in enumerate(rep.analyses)
                       if a.fr == 2 * n + 1 and a.af == 2 * n + 2), None)
    has_tri, placed = has_nice_triphenylene(H)
    checks = {
        "hexagons": H.num_hexagons == 2 * n + 4,
        "matching_fr_2n+1_af_2n+2": witness_id is not None,
        "Af=Fr=2n+4": rep.Af == rep.Fr == 2 * n + 4,
        "nice_triphenylene": has_tri,
    }
    wit = {"n": n, "checks": checks, "Af": rep.Af, "Fr": rep.Fr,
           "hexagons": H.num_hexagons, "matching_id": witness_id,
           "nice_triphenylene": [list(c) for c in placed] if placed else None}
    if witness_id is not None:
        wit["matching"] = matching_to_pairs(H, rep.matchings[witness_id])
    status = HOLDS if all(checks.values()) else FAILS
    if status == FAILS:
        wit["cells"] = _cells(H)
    return Verdict("rn", instance_id(H), status, wit)


# --------------------------------------------------------------------------
# Drivers
# --------------------------------------------------------------------------

CHECKS: dict[str, Callable[..., list[Verdict]]] = {
    "minimax": verify_minimax,
    "clar-fries": verify_clar_fries,
    "max-forcing-hexagons": verify_max_forcing_hexagons,
    "main": verify_main,
    "structure": verify_structure,
    "af1": verify_af1,
    "triphenylene": verify_triphenylene_theorem,
    "sextet": verify_sextet,
}

THEOREM_IDS = tuple(CHECKS) + ("rn", "all")


def verify(H: HexSystem, theorems: Iterable[str] = ("all",),
           cycle_cap: int = DEFAULT_CYCLE_CAP, rn: int | None = None) -> list[Verdict]:
    """Run the selected checks on one system, sharing a single report.

    ``rn`` runs the R_n ledger with that ``n`` when ``"rn"`` is selected.
    """
    selected = list(theorems)
    unknown = set(selected) - set(THEOREM_IDS)
    if unknown:
        raise ValueError(f"unknown theorem id(s): {sorted(unknown)}")
    if "all" in selected:
        selected = list(CHECKS) + (["rn"] if rn is not None else [])
    try:
        rep = InvariantReport.of(H, cycle_cap)
    except CycleCapExceeded as exc:  # pragma: no cover - enumeration is lazy
        return [Verdict(t, instance_id(H), SKIPPED, {"reason": str(exc)}) for t in selected]
    out: list[Verdict] = []
    for t in selected:
        if t == "rn":
            if rn is None:
                raise ValueError("theorem 'rn' needs the family index n")
            try:
                out.append(gen_Rn_validate(H, rn, report=rep))
            except CycleCapExceeded as exc:
                out.append(Verdict("rn", instance_id(H), SKIPPED, {"reason": str(exc)}))
        else:
            out.extend(CHECKS[t](H, report=rep))
    return out


def verify_census(max_hexagons: int, theorems: Iterable[str] = ("all",),
                  cycle_cap: int = DEFAULT_CYCLE_CAP) -> Iterator[Verdict]:
    for H in enumerate_all_systems(max_hexagons):
        if has_perfect_matching(H):
            yield from verify(H, theorems, cycle_cap)


def summarize(verdicts: Iterable[Verdict]) -> dict[str, dict[str, int]]:
    table: dict[str, dict[str, int]] = {}
    for v in verdicts:
        row = table.setdefault(v.theorem, {HOLDS: 0, FAILS: 0, HYPOTHESIS_NOT_MET: 0, SKIPPED: 0})
        row[v.status] += 1
    return table


def format_summary(table: dict[str, dict[str, int]]) -> str:
    lines = [f"{'theorem':<22} {'holds':>7} {'fails':>6} {'n/a':>6} {'skip':>5}"]
    for name in sorted(table):
        row = table[name]
        lines.append(f"{name:<22} {row[HOLDS]:>7} {row[FAILS]:>6} "
                     f"{row[HYPOTHESIS_NOT_MET]:>6} {row[SKIPPED]:>5}")
    return "\n".join(lines)
