"""Perfect matchings (Kekulé structures) of hexagonal systems.

A matching is a ``frozenset`` of edge indices of a fixed :class:`HexSystem`.
Subgraphs are described by the edges that are *removed*, which keeps vertex
numbering stable.
"""

from __future__ import annotations

from typing import Iterable

from .hexcore import BLACK, HexSystem

Matching = frozenset


class NotPerfectMatchingError(ValueError):
    pass


def is_perfect_matching(H: HexSystem, M: Iterable[int],
                        removed: Iterable[int] = ()) -> bool:
    removed = set(removed)
    covered = [0] * H.num_vertices
    for e in M:
        if e in removed:
            return False
        u, v = H.edges[e]
        covered[u] += 1
        covered[v] += 1
    return all(c == 1 for c in covered)


def enumerate_matchings(H: HexSystem, removed: Iterable[int] = ()) -> list[Matching]:
    """All perfect matchings of ``H`` minus ``removed`` edges, sorted by
    their sorted edge tuples.  Empty when none exists."""
    removed = frozenset(removed)
    n = H.num_vertices
    inc = [[e for e in H.incident[v] if e not in removed] for v in range(n)]
    edges = H.edges
    out: list[tuple[int, ...]] = []
    matched = [False] * n
    chosen: list[int] = []

    def other(e, v):
        a, b = edges[e]
        return b if a == v else a

    def propagate(forced_log):
        # degree-1 reduction: a vertex with one free incident edge must use it
        changed = True
        while changed:
            changed = False
            for v in range(n):
                if matched[v]:
                    continue
                free = [e for e in inc[v] if not matched[other(e, v)]]
                if not free:
                    return False
                if len(free) == 1:
                    e = free[0]
                    w = other(e, v)
                    matched[v] = matched[w] = True
                    chosen.append(e)
                    forced_log.append(e)
                    changed = True
        return True

    def undo(log):
        for e in log:
            u, v = edges[e]
            matched[u] = matched[v] = False
            chosen.pop()

    def rec():
        log: list[int] = []
        if not propagate(log):
            undo(reversed(log))
            return
        try:
            v = matched.index(False)
        except ValueError:
            out.append(tuple(sorted(chosen)))
            undo(reversed(log))
            return
        for e in inc[v]:
            w = other(e, v)
            if matched[w]:
                continue
            matched[v] = matched[w] = True
            chosen.append(e)
            rec()
            chosen.pop()
            matched[v] = matched[w] = False
        undo(reversed(log))

    if n % 2 == 0:
        rec()
    return [frozenset(t) for t in sorted(set(out))]


def kekule_count(H: HexSystem) -> int:
    return len(enumerate_matchings(H))


def orientation_digraph(H: HexSystem, M: Iterable[int],
                        removed: Iterable[int] = ()) -> dict[int, list[int]]:
    """Successor lists of the digraph whose directed cycles are exactly the
    M-alternating cycles: M edges point black to white, others white to black."""
    M = frozenset(M)
    removed = frozenset(removed)
    succ: dict[int, list[int]] = {v: [] for v in range(H.num_vertices)}
    for i, (u, v) in enumerate(H.edges):
        if i in removed:
            continue
        b, w = (u, v) if H.color[u] == BLACK else (v, u)
        if i in M:
            succ[b].append(w)
        else:
            succ[w].append(b)
    return succ


def _has_directed_cycle(succ: dict[int, list[int]]) -> bool:
    state = dict.fromkeys(succ, 0)  # 0 new, 1 on stack, 2 done
    for root in succ:
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            v, it = stack[-1]
            for w in it:
                if state[w] == 1:
                    return True
                if state[w] == 0:
                    state[w] = 1
                    stack.append((w, iter(succ[w])))
                    break
            else:
                state[v] = 2
                stack.pop()
    return False


def has_unique_pm(H: HexSystem, M: Iterable[int], removed: Iterable[int] = ()) -> bool:
    """Whether ``M`` is the only perfect matching of ``H`` minus ``removed``.

    Decided by the absence of an M-alternating cycle.
    """
    M = frozenset(M)
    if not is_perfect_matching(H, M, removed):
        raise NotPerfectMatchingError("M is not a perfect matching of the subgraph")
    return not _has_directed_cycle(orientation_digraph(H, M, removed))


def rotate(H: HexSystem, M: Iterable[int], cycle_edges: Iterable[int]) -> Matching:
    """Symmetric difference of ``M`` with an M-alternating cycle."""
    M = frozenset(M)
    C = frozenset(cycle_edges)
    if not is_alternating_edge_cycle(H, M, C):
        raise ValueError("cycle is not M-alternating")
    return M ^ C


def is_alternating_edge_cycle(H: HexSystem, M: frozenset, C: frozenset) -> bool:
    """``C`` is the edge set of a single cycle whose edges alternate in M."""
    if not C or len(C) % 2:
        return False
    deg: dict[int, int] = {}
    mdeg: dict[int, int] = {}
    for e in C:
        for v in H.edges[e]:
            deg[v] = deg.get(v, 0) + 1
            if e in M:
                mdeg[v] = mdeg.get(v, 0) + 1
    if any(d != 2 for d in deg.values()):
        return False
    if any(mdeg.get(v, 0) != 1 for v in deg):
        return False
    # connectivity of the 2-regular edge set
    adj: dict[int, list[int]] = {}
    for e in C:
        u, v = H.edges[e]
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = next(iter(adj))
    seen = {start}
    todo = [start]
    while todo:
        x = todo.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return len(seen) == len(adj)


def has_perfect_matching(H: HexSystem, excluded_vertices: Iterable[int] = (),
                         removed: Iterable[int] = ()) -> bool:
    """Kuhn's augmenting-path test on ``H - excluded_vertices - removed``."""
    excluded = set(excluded_vertices)
    removed = frozenset(removed)
    blacks = [v for v in range(H.num_vertices) if H.color[v] == BLACK and v not in excluded]
    whites = [v for v in range(H.num_vertices) if H.color[v] != BLACK and v not in excluded]
    if len(blacks) != len(whites):
        return False
    nbrs = {b: [w for e in H.incident[b] if e not in removed
                for w in H.edges[e] if w != b and w not in excluded]
            for b in blacks}
    mate: dict[int, int] = {}

    def augment(b, seen):
        for w in nbrs[b]:
            if w in seen:
                continue
            seen.add(w)
            if w not in mate or augment(mate[w], seen):
                mate[w] = b
                return True
        return False

    return all(augment(b, set()) for b in blacks)


def is_nice(H: HexSystem, vertices: Iterable[int]) -> bool:
    """Whether ``H - vertices`` has a perfect matching (empty graph counts)."""
    return has_perfect_matching(H, vertices)


def matching_to_pairs(H: HexSystem, M: Iterable[int]) -> list[list[int]]:
    return [list(H.edges[e]) for e in sorted(M)]


def matching_from_pairs(H: HexSystem, pairs: Iterable[Iterable[int]]) -> Matching:
    return frozenset(H.edge_between(*p) for p in pairs)


def matchings_alternating_on(H: HexSystem, vertex_cycles: Iterable[Iterable[int]]
                             ) -> list[Matching]:
    """Perfect matchings under which every given vertex cycle alternates."""
    rings = []
    for cyc in vertex_cycles:
        vs = list(cyc)
        rings.append(frozenset(H.edge_between(vs[i], vs[(i + 1) % len(vs)])
                               for i in range(len(vs))))
    return [M for M in enumerate_matchings(H)
            if all(is_alternating_edge_cycle(H, M, ring) for ring in rings)]


def ring_matchings(H: HexSystem, cell) -> list[Matching]:
    """Matchings alternating on both the boundary and the hexagon at ``cell``
    (the concentric Kekulé structures of coronene and triphenylene)."""
    return matchings_alternating_on(H, [H.boundary, H.hexagon_at[tuple(cell)].vertices])
