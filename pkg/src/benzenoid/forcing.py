"""Forcing-type invariants of perfect matchings and of whole systems.

Every quantity is computed exactly.  The two sides of each minimax pair are
obtained by different solvers: forcing and anti-forcing numbers by minimum
hitting set over the alternating cycles, their packing counterparts by
maximum clique / independent set on the pairwise relation graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .altcycles import DEFAULT_CYCLE_CAP, AltCycle, alternating_hexagons, compatible, \
    enumerate_alt_cycles, non_crossing
from .hexcore import Cell, HexSystem, are_adjacent
from .matchings import Matching, enumerate_matchings, has_unique_pm, is_nice, matching_to_pairs
from .solvers import adjacency_from_pairs, max_clique, max_independent_set, min_hitting_set


class MatchingAnalysis:
    """Lazily computed invariants of one perfect matching ``M`` of ``H``."""

    def __init__(self, H: HexSystem, M: Iterable[int], cycle_cap: int = DEFAULT_CYCLE_CAP):
        self.H = H
        self.M: Matching = frozenset(M)
        self.cycle_cap = cycle_cap

    def __repr__(self):
        return f"<MatchingAnalysis {self.H!r} |M|={len(self.M)}>"

    @cached_property
    def cycles(self) -> list[AltCycle]:
        return enumerate_alt_cycles(self.H, self.M, cap=self.cycle_cap)

    @cached_property
    def alternating_hexagons(self) -> list[Cell]:
        return alternating_hexagons(self.H, self.M)

    @property
    def fr(self) -> int:
        return len(self.alternating_hexagons)

    # -- hitting sides -----------------------------------------------------

    @cached_property
    def forcing_set(self) -> tuple[int, ...]:
        """Lexicographically smallest minimum forcing set (edge indices)."""
        return min_hitting_set([c.double_mask for c in self.cycles])

    @property
    def f(self) -> int:
        return len(self.forcing_set)

    @cached_property
    def anti_forcing_set(self) -> tuple[int, ...]:
        """Lexicographically smallest minimum anti-forcing set."""
        S = min_hitting_set([c.single_mask for c in self.cycles])
        if not has_unique_pm(self.H, self.M, removed=S):
            raise AssertionError(f"anti-forcing certificate {S} fails on {self.H!r}")
        return S

    @property
    def af(self) -> int:
        return len(self.anti_forcing_set)

    # -- packing sides -----------------------------------------------------

    @cached_property
    def compatibility_graph(self) -> list[int]:
        cs = self.cycles
        return adjacency_from_pairs(len(cs), lambda i, j: compatible(cs[i], cs[j]))

    @cached_property
    def disjoint_cycles(self) -> list[AltCycle]:
        """A maximum family of pairwise vertex-disjoint alternating cycles."""
        cs = self.cycles
        conflict = adjacency_from_pairs(
            len(cs), lambda i, j: bool(cs[i].vertex_mask & cs[j].vertex_mask))
        return [cs[i] for i in max_independent_set(conflict)]

    @property
    def c(self) -> int:
        return len(self.disjoint_cycles)

    @cached_property
    def compatible_set(self) -> list[AltCycle]:
        """A maximum compatible M-alternating set."""
        return [self.cycles[i] for i in max_clique(self.compatibility_graph)]

    @property
    def c_prime(self) -> int:
        return len(self.compatible_set)

    @cached_property
    def noncrossing_graph(self) -> list[int]:
        cs = self.cycles
        adj = self.compatibility_graph
        out = [0] * len(cs)
        for i in range(len(cs)):
            for j in range(i + 1, len(cs)):
                if (adj[i] >> j) & 1 and non_crossing(cs[i], cs[j]):
                    out[i] |= 1 << j
                    out[j] |= 1 << i
        return out

    @cached_property
    def disjoint_alternating_hexagons(self) -> list[Cell]:
        """A maximum set of pairwise vertex-disjoint M-alternating hexagons."""
        hexes = self.alternating_hexagons
        conflict = adjacency_from_pairs(len(hexes), lambda i, j: are_adjacent(hexes[i], hexes[j]))
        return [hexes[i] for i in max_independent_set(conflict)]

    def row(self) -> dict:
        return {"f": self.f, "c": self.c, "af": self.af, "c_prime": self.c_prime,
                "fr": self.fr}


def forcing_number(H: HexSystem, M, cycle_cap: int = DEFAULT_CYCLE_CAP) -> tuple[int, tuple[int, ...]]:
    a = MatchingAnalysis(H, M, cycle_cap)
    return a.f, a.forcing_set


def anti_forcing_number(H: HexSystem, M, cycle_cap: int = DEFAULT_CYCLE_CAP
                        ) -> tuple[int, tuple[int, ...]]:
    a = MatchingAnalysis(H, M, cycle_cap)
    return a.af, a.anti_forcing_set


def max_disjoint_cycles(H: HexSystem, M, cycle_cap: int = DEFAULT_CYCLE_CAP
                        ) -> tuple[int, list[AltCycle]]:
    a = MatchingAnalysis(H, M, cycle_cap)
    return a.c, a.disjoint_cycles


def max_compatible_set(H: HexSystem, M, cycle_cap: int = DEFAULT_CYCLE_CAP
                       ) -> tuple[int, list[AltCycle]]:
    a = MatchingAnalysis(H, M, cycle_cap)
    return a.c_prime, a.compatible_set


# --------------------------------------------------------------------------
# Hexagon sets: Clar number and sextet patterns
# --------------------------------------------------------------------------

def sextet_patterns(H: HexSystem) -> list[tuple[Cell, ...]]:
    """All sets of pairwise disjoint hexagons forming a nice subgraph,
    the empty set included.

    Niceness is inherited by subsets (a hexagon is perfectly matchable on its
    own), so the search only extends nice sets.
    """
    cells = list(H.cells)
    out: list[tuple[Cell, ...]] = []
    if not is_nice(H, ()):
        return out

    def rec(start: int, chosen: list[Cell]):
        out.append(tuple(chosen))
        for i in range(start, len(cells)):
            c = cells[i]
            if any(are_adjacent(c, d) for d in chosen):
                continue
            chosen.append(c)
            if is_nice(H, H.vertices_of_cells(chosen)):
                rec(i + 1, chosen)
            chosen.pop()

    rec(0, [])
    return out


def sextet_count(H: HexSystem) -> int:
    return len(sextet_patterns(H))


def clar_number(H: HexSystem) -> tuple[int, tuple[Cell, ...]]:
    """Clar number and the lexicographically smallest maximum sextet pattern."""
    patterns = sextet_patterns(H)
    if not patterns:
        raise ValueError(f"{H!r} has no perfect matching")
    best = max(len(p) for p in patterns)
    return best, min(p for p in patterns if len(p) == best)


def fries_number(H: HexSystem) -> tuple[int, Matching]:
    """Fries number and the first matching (in enumeration order) attaining it."""
    ms = enumerate_matchings(H)
    if not ms:
        raise ValueError(f"{H!r} has no perfect matching")
    best = max(ms, key=lambda M: len(alternating_hexagons(H, M)))
    return len(alternating_hexagons(H, best)), best


# --------------------------------------------------------------------------
# System-level report
# --------------------------------------------------------------------------

@dataclass
class InvariantReport:
    system: HexSystem
    matchings: list[Matching]
    analyses: list[MatchingAnalysis] = field(repr=False)

    @classmethod
    def of(cls, H: HexSystem, cycle_cap: int = DEFAULT_CYCLE_CAP) -> "InvariantReport":
        ms = enumerate_matchings(H)
        return cls(H, ms, [MatchingAnalysis(H, M, cycle_cap) for M in ms])

    @property
    def k(self) -> int:
        return len(self.matchings)

    @cached_property
    def forcing_spectrum(self) -> list[int]:
        return sorted({a.f for a in self.analyses})

    @cached_property
    def anti_forcing_spectrum(self) -> list[int]:
        return sorted({a.af for a in self.analyses})

    @property
    def F(self) -> int | None:
        return max(self.forcing_spectrum, default=None)

    @property
    def Af(self) -> int | None:
        return max(self.anti_forcing_spectrum, default=None)

    @property
    def af_min(self) -> int | None:
        return min(self.anti_forcing_spectrum, default=None)

    @property
    def Fr(self) -> int | None:
        return max((a.fr for a in self.analyses), default=None)

    @cached_property
    def clar(self) -> tuple[int, tuple[Cell, ...]] | None:
        return clar_number(self.system) if self.k else None

    @property
    def Cl(self) -> int | None:
        return self.clar[0] if self.clar else None

    @cached_property
    def r(self) -> int:
        return sextet_count(self.system)

    def rows(self) -> list[dict]:
        return [dict(id=i, **a.row()) for i, a in enumerate(self.analyses)]

    def to_dict(self, include_matchings: bool = False) -> dict:
        H = self.system
        out = {
            "system": {"cells": [list(c) for c in H.cells], "name": H.name,
                       "hexagons": H.num_hexagons, "vertices": H.num_vertices,
                       "edges": H.num_edges},
            "k": self.k, "r": self.r,
            "F": self.F, "Af": self.Af, "Cl": self.Cl, "Fr": self.Fr,
            "forcing_spectrum": self.forcing_spectrum,
            "anti_forcing_spectrum": self.anti_forcing_spectrum,
            "rows": self.rows(),
        }
        if include_matchings:
            for row, M, a in zip(out["rows"], self.matchings, self.analyses):
                row["matching"] = matching_to_pairs(H, M)
                row["forcing_set"] = matching_to_pairs(H, a.forcing_set)
                row["anti_forcing_set"] = matching_to_pairs(H, a.anti_forcing_set)
        return out

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(**kw), indent=2)

    def to_table(self) -> str:
        lines = [f"# {self.system.name or 'system'}: h={self.system.num_hexagons} "
                 f"k={self.k} r={self.r} F={self.F} Cl={self.Cl} Af={self.Af} Fr={self.Fr}",
                 f"{'id':>4} {'f':>3} {'c':>3} {'af':>3} {'c_prime':>7} {'fr':>3}"]
        for row in self.rows():
            lines.append(f"{row['id']:>4} {row['f']:>3} {row['c']:>3} {row['af']:>3} "
                         f"{row['c_prime']:>7} {row['fr']:>3}")
        return "\n".join(lines)


def spectra(H: HexSystem, cycle_cap: int = DEFAULT_CYCLE_CAP) -> tuple[list[int], list[int]]:
    rep = InvariantReport.of(H, cycle_cap)
    return rep.forcing_spectrum, rep.anti_forcing_spectrum


def anti_forcing_edges(H: HexSystem) -> list[tuple[int, Matching]]:
    """Edges ``e`` such that ``H - e`` has exactly one perfect matching,
    paired with that matching.  Non-empty iff ``af(H) = 1`` (for systems
    with at least two Kekulé structures)."""
    out = []
    for e in range(H.num_edges):
        ms = enumerate_matchings(H, removed=(e,))
        if len(ms) == 1:
            out.append((e, ms[0]))
    return out
