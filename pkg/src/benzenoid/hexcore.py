"""Hexagonal-lattice geometry and construction of hexagonal systems.

Cells are addressed with axial coordinates ``(q, r)``.  Hexagons are drawn
pointy-top, so every hexagon has two vertical edges and the horizontal rows
are the lines of constant ``r``.  Increasing ``r`` moves a row *down*: the
cell ``(q, r + 1)`` sits immediately below and to the right of ``(q, r)``.

Lattice points use an exact integer frame with ``y`` pointing up.  The centre
of cell ``(q, r)`` is ``(2q + r, -3r)`` and its six corners are offset by::

    (0, 2)  (1, 1)  (1, -1)  (0, -2)  (-1, -1)  (-1, 1)

Every lattice point is a corner of exactly three cells, so points are global
and shared edges fall out of deduplication.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Cell = tuple[int, int]
Point = tuple[int, int]

# Clockwise starting from the top corner (y up).
CORNER_OFFSETS: tuple[Point, ...] = ((0, 2), (1, 1), (1, -1), (0, -2), (-1, -1), (-1, 1))

# Axial neighbour offsets, clockwise from the east neighbour.
NEIGHBOR_OFFSETS: tuple[Cell, ...] = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

BLACK, WHITE = 1, 0

DEFAULT_MAX_HEXAGONS = 8


class InvalidSystemError(ValueError):
    """Raised when a cell set does not describe a hexagonal system."""


class BudgetExceededError(RuntimeError):
    """Raised when a request exceeds a configured size budget."""


def cell_center(cell: Cell) -> Point:
    q, r = cell
    return (2 * q + r, -3 * r)


def cell_corners(cell: Cell) -> tuple[Point, ...]:
    cx, cy = cell_center(cell)
    return tuple((cx + dx, cy + dy) for dx, dy in CORNER_OFFSETS)


def neighbors(cell: Cell) -> list[Cell]:
    q, r = cell
    return [(q + dq, r + dr) for dq, dr in NEIGHBOR_OFFSETS]


def are_adjacent(a: Cell, b: Cell) -> bool:
    return (b[0] - a[0], b[1] - a[1]) in NEIGHBOR_OFFSETS


def point_color(p: Point) -> int:
    # Top and lower-side corners of a cell sit at y = 2 (mod 3); these are
    # the only points that can be peaks.
    return BLACK if p[1] % 3 == 2 else WHITE


# --------------------------------------------------------------------------
# Lattice symmetries
# --------------------------------------------------------------------------

def _rotate60(cell: Cell) -> Cell:
    # cube (x, y, z) -> (-z, -x, -y) with x = q, z = r
    q, r = cell
    return (q + r, -q)


def _reflect(cell: Cell) -> Cell:
    q, r = cell
    return (q + r, -r)


def symmetry_images(cells: Iterable[Cell]) -> list[tuple[Cell, ...]]:
    """All 12 images of a cell set under the dihedral group of the lattice."""
    base = list(cells)
    images = []
    for mirrored in (False, True):
        cur = [_reflect(c) for c in base] if mirrored else list(base)
        for _ in range(6):
            images.append(tuple(cur))
            cur = [_rotate60(c) for c in cur]
    return images


def normalize(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    """Translate so the lexicographically smallest cell is at the origin."""
    ordered = sorted(cells)
    q0, r0 = ordered[0]
    return tuple((q - q0, r - r0) for q, r in ordered)


def canonical_form(cells: Iterable[Cell]) -> tuple[Cell, ...]:
    return min(normalize(img) for img in symmetry_images(cells))


def is_connected(cells: Iterable[Cell]) -> bool:
    cellset = set(cells)
    if not cellset:
        return False
    start = next(iter(cellset))
    seen = {start}
    todo = [start]
    while todo:
        c = todo.pop()
        for nb in neighbors(c):
            if nb in cellset and nb not in seen:
                seen.add(nb)
                todo.append(nb)
    return len(seen) == len(cellset)


# --------------------------------------------------------------------------
# Hexagonal systems
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Hexagon:
    cell: Cell
    vertices: tuple[int, ...]  # clockwise from the top corner
    edges: tuple[int, ...]  # edge indices, edges[i] joins vertices[i], vertices[i+1]
    external: bool

    @property
    def vertex_mask(self) -> int:
        m = 0
        for v in self.vertices:
            m |= 1 << v
        return m

    @property
    def edge_mask(self) -> int:
        m = 0
        for e in self.edges:
            m |= 1 << e
        return m


@dataclass(frozen=True, eq=False)
class HexSystem:
    """An immutable, validated hexagonal system.

    Vertices are numbered by the sorted order of their lattice points and
    edges by the sorted order of their ``(u, v)`` pairs with ``u < v``.
    Two systems compare equal when their cell sets are equal.
    """

    cells: tuple[Cell, ...]
    points: tuple[Point, ...]
    edges: tuple[tuple[int, int], ...]
    color: tuple[int, ...]
    hexagons: tuple[Hexagon, ...]
    boundary: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __eq__(self, other):
        if not isinstance(other, HexSystem):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(self.cells)

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return (f"<HexSystem{label} h={self.num_hexagons} "
                f"n={self.num_vertices} m={self.num_edges}>")

    @property
    def num_vertices(self) -> int:
        return len(self.points)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def num_hexagons(self) -> int:
        return len(self.cells)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def point_index(self) -> dict[Point, int]:
        return {p: i for i, p in enumerate(self.points)}

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        inc: list[list[int]] = [[] for _ in self.points]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in self.points]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def hexagon_at(self) -> dict[Cell, Hexagon]:
        return {h.cell: h for h in self.hexagons}

    @cached_property
    def boundary_edges(self) -> frozenset[int]:
        b = self.boundary
        return frozenset(self.edge_between(b[i], b[(i + 1) % len(b)])
                         for i in range(len(b)))

    def edge_between(self, u: int, v: int) -> int:
        return self.edge_index[(u, v) if u < v else (v, u)]

    def is_peak(self, v: int) -> bool:
        y = self.points[v][1]
        return all(self.points[w][1] < y for w in self.adjacency[v])

    def is_valley(self, v: int) -> bool:
        y = self.points[v][1]
        return all(self.points[w][1] > y for w in self.adjacency[v])

    def vertices_of_cells(self, cells: Iterable[Cell]) -> frozenset[int]:
        idx = self.point_index
        return frozenset(idx[p] for c in cells for p in cell_corners(c))

    def to_json(self) -> str:
        return dumps_cells(self.cells)


def build(cells: Iterable[Sequence[int]], name: str = "") -> HexSystem:
    """Validate a cell set and derive its plane bipartite graph.

    Raises :class:`InvalidSystemError` for empty, duplicated, disconnected,
    holed or not 2-connected inputs.
    """
    raw = [tuple(int(x) for x in c) for c in cells]
    if not raw:
        raise InvalidSystemError("a hexagonal system needs at least one cell")
    if any(len(c) != 2 for c in raw):
        raise InvalidSystemError("cells must be (q, r) pairs")
    cellset = set(raw)
    if len(cellset) != len(raw):
        raise InvalidSystemError("duplicate cells")
    if not is_connected(cellset):
        raise InvalidSystemError("cells are not edge-connected")
    ordered = tuple(sorted(cellset))

    points = sorted({p for c in ordered for p in cell_corners(c)})
    pidx = {p: i for i, p in enumerate(points)}
    edge_set = set()
    for c in ordered:
        ring = [pidx[p] for p in cell_corners(c)]
        for i in range(6):
            u, v = ring[i], ring[(i + 1) % 6]
            edge_set.add((u, v) if u < v else (v, u))
    edges = sorted(edge_set)
    n, m, h = len(points), len(edges), len(ordered)
    if m != n + h - 1:
        raise InvalidSystemError(
            f"cell set has {m - n - h + 1} hole(s): m={m}, n={n}, h={h}")

    eidx = {e: i for i, e in enumerate(edges)}
    edge_faces = {e: 0 for e in edges}
    hex_rings = []
    for c in ordered:
        ring = tuple(pidx[p] for p in cell_corners(c))
        ring_edges = []
        for i in range(6):
            u, v = ring[i], ring[(i + 1) % 6]
            e = (u, v) if u < v else (v, u)
            edge_faces[e] += 1
            ring_edges.append(eidx[e])
        hex_rings.append((c, ring, tuple(ring_edges)))
    outer = {e for e, k in edge_faces.items() if k == 1}
    outer_idx = {eidx[e] for e in outer}
    hexagons = tuple(Hexagon(c, ring, redges, any(e in outer_idx for e in redges))
                     for c, ring, redges in hex_rings)

    boundary = _trace_boundary(points, outer, n)
    if len(boundary) != len(outer):
        raise InvalidSystemError("derived graph is not 2-connected")

    color = tuple(point_color(p) for p in points)
    return HexSystem(ordered, tuple(points), tuple(edges), color, hexagons,
                     boundary, name=name)


def _trace_boundary(points, outer_edges, n) -> tuple[int, ...]:
    """Walk the outer-face edges as one clockwise cycle.

    The walk only closes over every outer edge when the boundary is a simple
    cycle, which for these graphs is equivalent to 2-connectivity.
    """
    adj: dict[int, list[int]] = {}
    for u, v in outer_edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(a) != 2 for a in adj.values()):
        return ()
    start = min(adj)
    cycle = [start]
    prev, cur = start, adj[start][0]
    while cur != start:
        cycle.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    if signed_area2([points[v] for v in cycle]) > 0:
        cycle = [cycle[0]] + cycle[:0:-1]
    return tuple(cycle)


def signed_area2(poly: Sequence[Point]) -> int:
    """Twice the signed area; negative means clockwise (y up)."""
    s = 0
    for i in range(len(poly)):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % len(poly)]
        s += x1 * y2 - x2 * y1
    return s


def point_in_polygon(pt: Point, poly: Sequence[Point]) -> bool:
    """Exact even-odd test.  ``pt`` must not lie on the polygon's boundary.

    Cell centres have ``y = 0 (mod 3)`` while lattice points never do, so a
    horizontal ray from a centre never passes through a polygon vertex.
    """
    x, y = pt
    inside = False
    k = len(poly)
    for i in range(k):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % k]
        if (y1 > y) != (y2 > y):
            # crossing x > x  <=>  x1 + (y - y1)(x2 - x1)/(y2 - y1) > x
            num = (y - y1) * (x2 - x1) + (x1 - x) * (y2 - y1)
            if (num > 0) == (y2 - y1 > 0):
                inside = not inside
    return inside


def bipartition_sizes(H: HexSystem) -> tuple[int, int]:
    black = sum(H.color)
    return black, H.num_vertices - black


# --------------------------------------------------------------------------
# Serialization
# --------------------------------------------------------------------------

def dumps_cells(cells: Iterable[Cell]) -> str:
    return json.dumps({"cells": [list(c) for c in sorted(cells)]})


def loads(text: str, name: str = "") -> HexSystem:
    """Parse the ``{"cells": [[q, r], ...]}`` format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSystemError(f"malformed JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("cells"), list):
        raise InvalidSystemError('expected an object with a "cells" list')
    cells = doc["cells"]
    for c in cells:
        if (not isinstance(c, list) or len(c) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in c)):
            raise InvalidSystemError(f"bad cell entry {c!r}")
    return build(cells, name=name or doc.get("name", ""))


def load(path, name: str = "") -> HexSystem:
    with open(path) as fh:
        return loads(fh.read(), name=name or str(path))


def dump(H: HexSystem, path) -> None:
    with open(path, "w") as fh:
        fh.write(H.to_json() + "\n")


# --------------------------------------------------------------------------
# Generators
# --------------------------------------------------------------------------

def gen_truncated_parallelogram(*rows: int) -> HexSystem:
    """H(n_1, ..., n_k): ``k`` horizontal rows of non-increasing length.

    Rows are anchored at their right-hand end hexagon, each one immediately
    below and to the right of the previous row's end hexagon; shorter rows
    therefore recede on the left and the system stays Kekuléan.
    """
    if len(rows) == 1 and not isinstance(rows[0], int):
        rows = tuple(rows[0])
    if not rows:
        raise ValueError("need at least one row")
    if any(n < 1 for n in rows):
        raise ValueError("row lengths must be positive")
    if any(a < b for a, b in zip(rows, rows[1:])):
        raise ValueError(f"row lengths must be non-increasing, got {rows}")
    width = rows[0]
    cells = [(q, r) for r, n in enumerate(rows) for q in range(width - n, width)]
    return build(cells, name="H(" + ",".join(map(str, rows)) + ")")


def gen_linear_chain(n: int) -> HexSystem:
    return gen_truncated_parallelogram(n)


NAMED_CELLS: dict[str, tuple[Cell, ...]] = {
    "benzene": ((0, 0),),
    "naphthalene": ((0, 0), (1, 0)),
    "anthracene": ((0, 0), (1, 0), (2, 0)),
    # central cell plus the E, SW and NW neighbours
    "triphenylene": ((0, 0), (1, 0), (-1, 1), (0, -1)),
    "coronene": ((0, 0),) + NEIGHBOR_OFFSETS,
}


def gen_named(family: str) -> HexSystem:
    try:
        cells = NAMED_CELLS[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; "
                         f"choose from {sorted(NAMED_CELLS)}") from None
    return build(cells, name=family)


def triphenylene_placements() -> list[tuple[Cell, tuple[Cell, ...]]]:
    """Triphenylene shapes relative to a central cell at the origin.

    Returns ``(centre, outer cells)``; the two chiralities are the two ways
    to pick three pairwise non-adjacent neighbours.
    """
    return [((0, 0), tuple(NEIGHBOR_OFFSETS[i] for i in (start, start + 2, start + 4)))
            for start in (0, 1)]


def rn_cells(n: int) -> tuple[Cell, ...]:
    """Cell layout of the R_n family (2n + 4 cells).

    A triphenylene (centre at the origin, outer cells W, NE and SE) whose W
    and SE cells each carry a zigzag arm of ``n`` cells.  The W arm climbs by
    alternating NW/NE steps, the SE arm descends by alternating SW/SE steps.
    Every hexagon is alternating in one Kekulé structure; rotating the
    central hexagon of that structure leaves 2n + 1 alternating hexagons.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    cells = [(0, 0), (-1, 0), (1, -1), (0, 1)]
    up, down = (-1, 0), (0, 1)
    for i in range(n):
        if i % 2 == 0:
            up, down = (up[0], up[1] - 1), (down[0] - 1, down[1] + 1)
        else:
            up, down = (up[0] + 1, up[1] - 1), (down[0], down[1] + 1)
        cells += [up, down]
    return tuple(cells)


def gen_Rn(n: int) -> HexSystem:
    return build(rn_cells(n), name=f"R_{n}")


# --------------------------------------------------------------------------
# Exhaustive enumeration
# --------------------------------------------------------------------------

def has_hole(cells: Iterable[Cell]) -> bool:
    cells = list(cells)
    pts = {p for c in cells for p in cell_corners(c)}
    es = set()
    for c in cells:
        ring = cell_corners(c)
        for i in range(6):
            u, v = ring[i], ring[(i + 1) % 6]
            es.add((u, v) if u < v else (v, u))
    return len(es) != len(pts) + len(cells) - 1


def enumerate_polyhexes(max_cells: int) -> Iterator[tuple[Cell, ...]]:
    """Canonical forms of all connected cell sets (holes included), by size."""
    level = {canonical_form([(0, 0)])}
    size = 1
    while size <= max_cells:
        yield from sorted(level)
        if size == max_cells:
            break
        nxt = set()
        for shape in level:
            cellset = set(shape)
            grown = {nb for c in shape for nb in neighbors(c)} - cellset
            for g in grown:
                nxt.add(canonical_form(shape + (g,)))
        level = nxt
        size += 1


def enumerate_all_systems(max_hexagons: int,
                          budget: int = DEFAULT_MAX_HEXAGONS) -> Iterator[HexSystem]:
    """One hexagonal system per isomorphism class with at most
    ``max_hexagons`` cells, in order of size then canonical form."""
    if max_hexagons > budget:
        raise BudgetExceededError(
            f"max_hexagons={max_hexagons} exceeds the budget of {budget}")
    for shape in enumerate_polyhexes(max_hexagons):
        if not has_hole(shape):
            yield build(shape)


def is_linear_chain_cells(cells: Iterable[Cell]) -> bool:
    """True iff the cells form a single straight row along a lattice axis."""
    cells = sorted(cells)
    if len(cells) <= 1:
        return len(cells) == 1
    d = (cells[1][0] - cells[0][0], cells[1][1] - cells[0][1])
    if d not in NEIGHBOR_OFFSETS:
        return False
    return all((b[0] - a[0], b[1] - a[1]) == d for a, b in zip(cells, cells[1:]))


def is_truncated_parallelogram(cells: Iterable[Cell]) -> bool:
    """Recognise H(n_1, ..., n_k) in any of the 12 lattice orientations:
    consecutive contiguous rows sharing their right-end ``q`` with
    non-increasing lengths."""
    for img in symmetry_images(cells):
        rows: dict[int, list[int]] = {}
        for q, r in img:
            rows.setdefault(r, []).append(q)
        rs = sorted(rows)
        if rs != list(range(rs[0], rs[0] + len(rs))):
            continue
        last = max(rows[rs[0]])
        lengths = []
        for r in rs:
            qs = sorted(rows[r])
            if qs[-1] != last or qs != list(range(qs[0], last + 1)):
                break
            lengths.append(len(qs))
        else:
            if all(a >= b for a, b in zip(lengths, lengths[1:])):
                return True
    return False


def placements(shape: Sequence[Cell], cells: Iterable[Cell]) -> list[tuple[Cell, ...]]:
    """All placements of ``shape`` (under the 12 symmetries and every
    translation) whose cells all lie in ``cells``; deduplicated as sets."""
    cellset = set(cells)
    found = set()
    for img in symmetry_images(shape):
        anchor = img[0]
        for c in cellset:
            dq, dr = c[0] - anchor[0], c[1] - anchor[1]
            placed = tuple(sorted((q + dq, r + dr) for q, r in img))
            if all(p in cellset for p in placed):
                found.add(placed)
    return sorted(found)
