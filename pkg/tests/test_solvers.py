from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from benzenoid.solvers import (adjacency_from_pairs, bits, is_hitting_set, max_clique,
                               max_independent_set, maximum_cliques, min_hitting_set, to_mask)


def brute_hitting(sets, n):
    for k in range(n + 1):
        for S in combinations(range(n), k):
            if is_hitting_set(sets, S):
                return S


def is_clique(adj, vs):
    return all(adj[a] >> b & 1 for a, b in combinations(vs, 2))


def brute_cliques(adj):
    n = len(adj)
    for k in range(n, -1, -1):
        found = [S for S in combinations(range(n), k) if is_clique(adj, S)]
        if found:
            return found


N = 10
masks = st.integers(1, (1 << N) - 1)


@settings(max_examples=200, deadline=None)
@given(st.lists(masks, max_size=12))
def test_hitting_set_is_lexmin_optimum(sets):
    assert min_hitting_set(sets) == brute_hitting(sets, N)


@settings(max_examples=100, deadline=None)
@given(st.lists(masks, min_size=1, max_size=10), st.integers(1, (1 << N) - 1))
def test_hitting_set_respects_allowed(sets, allowed):
    if any(s & allowed == 0 for s in sets):
        with pytest.raises(ValueError):
            min_hitting_set(sets, allowed)
        return
    S = min_hitting_set(sets, allowed)
    assert to_mask(S) & ~allowed == 0
    assert len(S) == len(brute_hitting([s & allowed for s in sets], N))


def test_hitting_set_empty_family():
    assert min_hitting_set([]) == ()


@st.composite
def graphs(draw, max_n=11):
    n = draw(st.integers(0, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return adjacency_from_pairs(n, lambda i, j: (i, j) in chosen)


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_max_clique_is_lexmin_optimum(adj):
    best = brute_cliques(adj)
    assert max_clique(adj) == (min(best) if best and best[0] else ())


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=9))
def test_all_maximum_cliques(adj):
    best = brute_cliques(adj)
    size = len(best[0])
    assert list(maximum_cliques(adj, size)) == sorted(best)
    assert len(list(maximum_cliques(adj, size, limit=1))) == min(1, len(best))


@settings(max_examples=100, deadline=None)
@given(graphs())
def test_independent_set(adj):
    S = max_independent_set(adj)
    assert all(not adj[a] >> b & 1 for a, b in combinations(S, 2))
    comp = [((1 << len(adj)) - 1) & ~adj[v] & ~(1 << v) for v in range(len(adj))]
    assert len(S) == len(brute_cliques(comp)[0])


def test_bits_round_trip():
    assert bits(to_mask([0, 3, 9])) == [0, 3, 9]
