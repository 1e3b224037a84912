"""M-alternating cycles: enumeration, orientation, interiors and the pairwise
relations (compatibility, non-crossing) used by the minimax invariants."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

import networkx as nx

from .hexcore import BLACK, WHITE, Cell, HexSystem, cell_center, is_linear_chain_cells, \
    point_in_polygon, signed_area2
from .matchings import orientation_digraph

DEFAULT_CYCLE_CAP = 100_000

PROPER, IMPROPER = "proper", "improper"


class CycleCapExceeded(RuntimeError):
    """More alternating cycles than the configured cap; nothing was truncated."""


@dataclass(frozen=True, eq=False)
class AltCycle:
    """An M-alternating cycle of a fixed system and matching.

    ``vertices`` runs clockwise starting at the smallest vertex id.
    """

    vertices: tuple[int, ...]
    edge_seq: tuple[int, ...]  # edge_seq[i] joins vertices[i] and vertices[i + 1]
    m_edges: frozenset[int]
    orientation: str
    system: HexSystem = field(repr=False)

    def __eq__(self, other):
        if not isinstance(other, AltCycle):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def edges(self) -> frozenset[int]:
        return frozenset(self.edge_seq)

    @cached_property
    def interior_cells(self) -> frozenset[Cell]:
        """Cells of the system whose centres lie inside the cycle."""
        poly = [self.system.points[v] for v in self.vertices]
        return frozenset(c for c in self.system.cells
                         if point_in_polygon(cell_center(c), poly))

    @property
    def h(self) -> int:
        return len(self.interior_cells)

    @property
    def is_hexagon(self) -> bool:
        return len(self.vertices) == 6

    @property
    def proper(self) -> bool:
        return self.orientation == PROPER

    @cached_property
    def edge_mask(self) -> int:
        return _mask(self.edges)

    @cached_property
    def vertex_mask(self) -> int:
        return _mask(self.vertices)

    @cached_property
    def single_mask(self) -> int:
        return _mask(self.edges - self.m_edges)

    @cached_property
    def double_mask(self) -> int:
        return _mask(self.m_edges)

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "orientation": self.orientation,
                "h": self.h, "interior": [list(c) for c in sorted(self.interior_cells)]}


def _mask(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def make_cycle(H: HexSystem, M: frozenset, vertex_cycle: Iterable[int]) -> AltCycle:
    """Build an :class:`AltCycle` from a closed vertex walk (either direction)."""
    vs = list(vertex_cycle)
    pts = [H.points[v] for v in vs]
    if signed_area2(pts) > 0:
        vs = vs[::-1]
    k = vs.index(min(vs))
    vs = vs[k:] + vs[:k]
    edges = []
    proper = True
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        e = H.edge_between(a, b)
        edges.append(e)
        if e in M and not (H.color[a] == WHITE and H.color[b] == BLACK):
            proper = False
    return AltCycle(tuple(vs), tuple(edges), frozenset(edges) & M,
                    PROPER if proper else IMPROPER, H)


def enumerate_alt_cycles(H: HexSystem, M: Iterable[int],
                         cap: int = DEFAULT_CYCLE_CAP) -> list[AltCycle]:
    """Every M-alternating cycle exactly once.

    The alternating cycles are the directed cycles of the orientation digraph
    (M edges black to white, the rest white to black); those are listed with
    Johnson's algorithm.  Results are sorted by length, then vertex sequence.
    """
    M = frozenset(M)
    succ = orientation_digraph(H, M)
    G = nx.DiGraph()
    G.add_nodes_from(succ)
    G.add_edges_from((u, v) for u, ws in succ.items() for v in ws)
    cycles = []
    for cyc in nx.simple_cycles(G):
        if len(cycles) >= cap:
            raise CycleCapExceeded(
                f"{H!r}: more than {cap} alternating cycles; raise the cycle cap")
        cycles.append(make_cycle(H, M, cyc))
    cycles.sort(key=lambda c: (len(c.vertices), c.vertices))
    return cycles


def is_alternating_hexagon(H: HexSystem, M: frozenset, cell: Cell) -> bool:
    hx = H.hexagon_at[cell]
    flags = [e in M for e in hx.edges]
    return flags in ([True, False] * 3, [False, True] * 3)


def alternating_hexagons(H: HexSystem, M: Iterable[int]) -> list[Cell]:
    """Cells whose hexagon is M-alternating; ``fr(H, M)`` is the length."""
    M = frozenset(M)
    return [hx.cell for hx in H.hexagons if is_alternating_hexagon(H, M, hx.cell)]


def hexagon_cycle(H: HexSystem, M: frozenset, cell: Cell) -> AltCycle:
    return make_cycle(H, M, H.hexagon_at[cell].vertices)


def compatible(c1: AltCycle, c2: AltCycle) -> bool:
    """Disjoint, or meeting only in M edges (every shared vertex must be an
    end of a shared M edge)."""
    shared_v = c1.vertex_mask & c2.vertex_mask
    if not shared_v:
        return True
    shared_e = c1.edges & c2.edges
    if shared_e - c1.m_edges:
        return False
    ends = 0
    vs, k = c1.vertices, len(c1.vertices)
    for i, e in enumerate(c1.edge_seq):
        if e in shared_e:
            ends |= (1 << vs[i]) | (1 << vs[(i + 1) % k])
    return shared_v & ~ends == 0


def non_crossing(c1: AltCycle, c2: AltCycle) -> bool:
    a, b = c1.interior_cells, c2.interior_cells
    return not (a & b) or a <= b or b <= a


def interiors_disjoint(c1: AltCycle, c2: AltCycle) -> bool:
    return not (c1.interior_cells & c2.interior_cells)


def is_linear_chain_interior(H: HexSystem, C: AltCycle) -> bool:
    return is_linear_chain_cells(C.interior_cells)


def is_compatible_set(cycles: Iterable[AltCycle]) -> bool:
    cs = list(cycles)
    return all(compatible(cs[i], cs[j]) for i in range(len(cs)) for j in range(i + 1, len(cs)))


def contains_alternating_hexagon(H: HexSystem, M: frozenset, C: AltCycle) -> bool:
    return any(is_alternating_hexagon(H, M, c) for c in C.interior_cells)
