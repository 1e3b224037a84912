"""Exact combinatorial solvers on bitmask-encoded instances.

Sets and neighbourhoods are plain Python ints used as bitsets.  All solvers
are deterministic and return the lexicographically smallest optimum (as a
sorted tuple) so that certificates are reproducible.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def to_mask(items) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


# --------------------------------------------------------------------------
# Minimum hitting set
# --------------------------------------------------------------------------

def _minimal_sets(sets: Sequence[int]) -> list[int]:
    """Drop duplicates and supersets; hitting the rest hits everything."""
    uniq = sorted(set(sets), key=lambda s: (s.bit_count(), s))
    kept: list[int] = []
    for s in uniq:
        if not any(k & s == k for k in kept):
            kept.append(s)
    return kept


def _packing_bound(sets: list[int]) -> int:
    used = 0
    count = 0
    for s in sets:
        if not s & used:
            used |= s
            count += 1
    return count


def _hit(sets: list[int], limit: int) -> int | None:
    """A hitting set of size <= ``limit`` (as a mask) or ``None``."""
    if not sets:
        return 0
    if limit <= 0:
        return None
    if any(s == 0 for s in sets):
        return None
    if _packing_bound(sets) > limit:
        return None
    pivot = min(sets, key=lambda s: (s.bit_count(), s))
    banned = 0
    for e in bits(pivot):
        bit = 1 << e
        rest = [s & ~banned for s in sets if not s & bit]
        sub = _hit(rest, limit - 1)
        if sub is not None:
            return sub | bit
        banned |= bit
    return None


def min_hitting_set(sets: Sequence[int], allowed: int | None = None) -> tuple[int, ...]:
    """Smallest set of elements meeting every mask in ``sets``.

    Only elements in ``allowed`` may be used (default: all).  Raises
    ``ValueError`` if some set cannot be hit.
    """
    if allowed is not None:
        sets = [s & allowed for s in sets]
    work = sorted(_minimal_sets(sets), key=lambda s: (s.bit_count(), s))
    if any(s == 0 for s in work):
        raise ValueError("a set has no usable element; no hitting set exists")
    k = _packing_bound(work)
    while _hit(work, k) is None:
        k += 1
    # lexicographic refinement
    chosen: list[int] = []
    floor = -1
    remaining = work
    for _ in range(k):
        if not remaining:
            break
        cands = sorted({e for s in remaining for e in bits(s) if e > floor})
        for e in cands:
            bit = 1 << e
            above = ~((bit << 1) - 1)
            rest = [s & above for s in remaining if not s & bit]
            if _hit(rest, k - len(chosen) - 1) is not None:
                chosen.append(e)
                floor = e
                remaining = rest
                break
        else:  # pragma: no cover - the optimum guarantees progress
            raise AssertionError("lexicographic refinement lost feasibility")
    return tuple(chosen)


def is_hitting_set(sets: Sequence[int], elements) -> bool:
    m = to_mask(elements)
    return all(s & m for s in sets)


# --------------------------------------------------------------------------
# Maximum clique
# --------------------------------------------------------------------------

def _color_order(cand: int, adj: Sequence[int]) -> tuple[list[int], list[int]]:
    """Greedy sequential colouring; returns vertices and their colour bounds
    in increasing colour order (Tomita-style)."""
    order: list[int] = []
    bounds: list[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        q = uncolored
        while q:
            low = q & -q
            v = low.bit_length() - 1
            uncolored &= ~low
            q &= ~low
            q &= ~adj[v]
            order.append(v)
            bounds.append(color)
    return order, bounds


def _clique_search(cand: int, adj: Sequence[int], need: int) -> list[int] | None:
    """A clique of size >= ``need`` inside ``cand``, or ``None``."""
    if need <= 0:
        return []
    if cand.bit_count() < need:
        return None
    order, bounds = _color_order(cand, adj)
    for i in range(len(order) - 1, -1, -1):
        if bounds[i] < need:
            return None
        v = order[i]
        sub = _clique_search(cand & adj[v], adj, need - 1)
        if sub is not None:
            return [v] + sub
        cand &= ~(1 << v)
    return None


def max_clique(adj: Sequence[int], within: int | None = None) -> tuple[int, ...]:
    """Lexicographically smallest maximum clique of the graph ``adj``.

    ``adj[v]`` is the neighbourhood bitmask of ``v`` (no self loops).
    """
    n = len(adj)
    cand = ((1 << n) - 1) if within is None else within
    if not cand:
        return ()
    best = 1
    while _clique_search(cand, adj, best + 1) is not None:
        best += 1
    chosen: list[int] = []
    for v in bits(cand):
        if len(chosen) == best:
            break
        if not (cand >> v) & 1:
            continue
        above = ~((1 << (v + 1)) - 1)
        sub_cand = cand & adj[v] & above
        if _clique_search(sub_cand, adj, best - len(chosen) - 1) is not None:
            chosen.append(v)
            cand = sub_cand
    return tuple(chosen)


def max_independent_set(conflict: Sequence[int]) -> tuple[int, ...]:
    n = len(conflict)
    full = (1 << n) - 1
    comp = [full & ~conflict[v] & ~(1 << v) for v in range(n)]
    return max_clique(comp)


def maximum_cliques(adj: Sequence[int], size: int, limit: int | None = None
                    ) -> Iterator[tuple[int, ...]]:
    """Every clique of exactly ``size`` vertices, in lexicographic order.

    Stops after ``limit`` cliques when given.
    """
    produced = 0

    def rec(prefix: list[int], cand: int):
        nonlocal produced
        if len(prefix) == size:
            produced += 1
            yield tuple(prefix)
            return
        need = size - len(prefix)
        for v in bits(cand):
            if limit is not None and produced >= limit:
                return
            above = ~((1 << (v + 1)) - 1)
            sub = cand & adj[v] & above
            if need > 1 and _clique_search(sub, adj, need - 1) is None:
                continue
            prefix.append(v)
            yield from rec(prefix, sub)
            prefix.pop()

    if size == 0:
        yield ()
        return
    yield from rec([], (1 << len(adj)) - 1)


def adjacency_from_pairs(n: int, related) -> list[int]:
    """Bitmask adjacency for ``related(i, j)`` evaluated on all i < j."""
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if related(i, j):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj
