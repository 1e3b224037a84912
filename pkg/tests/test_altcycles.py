import pytest
from hypothesis import given, settings, strategies as st

from benzenoid.altcycles import (CycleCapExceeded, alternating_hexagons, compatible,
                                 contains_alternating_hexagon, enumerate_alt_cycles,
                                 interiors_disjoint, is_compatible_set,
                                 is_linear_chain_interior, non_crossing)
from benzenoid.hexcore import (build, cell_center, enumerate_all_systems, gen_linear_chain, gen_named,
                               point_in_polygon, signed_area2)
from benzenoid.matchings import enumerate_matchings, has_perfect_matching

import oracles

SMALL = [H for H in enumerate_all_systems(4) if has_perfect_matching(H)]
KEKULEAN6 = [H for H in enumerate_all_systems(6) if has_perfect_matching(H)]


@pytest.mark.parametrize("H", SMALL, ids=lambda H: ",".join(f"{q}{r}" for q, r in H.cells))
def test_cycles_match_face_xor_oracle(H):
    for M in enumerate_matchings(H):
        got = {C.edges for C in enumerate_alt_cycles(H, M)}
        assert got == oracles.brute_alt_cycles(H, M)


@pytest.mark.parametrize("name", ["benzene", "naphthalene"])
def test_face_xor_oracle_is_complete(name):
    # the oracle's own premise, checked against a full edge-subset scan
    H = gen_named(name)
    assert oracles.all_cycles(H) == oracles.all_cycles_by_edges(H)


def test_benzene_cycles():
    H = gen_named("benzene")
    for M in enumerate_matchings(H):
        (C,) = enumerate_alt_cycles(H, M)
        assert C.is_hexagon and C.h == 1 and len(C) == 6


def test_one_proper_one_improper_on_benzene():
    H = gen_named("benzene")
    kinds = sorted(enumerate_alt_cycles(H, M)[0].proper for M in enumerate_matchings(H))
    assert kinds == [False, True]


def test_cycle_vertices_clockwise():
    H = gen_named("coronene")
    for M in enumerate_matchings(H)[:5]:
        for C in enumerate_alt_cycles(H, M):
            poly = [H.points[v] for v in C.vertices]
            assert signed_area2(poly) < 0  # y up: clockwise is negative area


def test_interior_cells_by_definition():
    H = gen_named("coronene")
    M = enumerate_matchings(H)[0]
    for C in enumerate_alt_cycles(H, M):
        poly = [H.points[v] for v in C.vertices]
        inside = {c for c in H.cells if point_in_polygon(cell_center(c), poly)}
        assert inside == set(C.interior_cells) and C.h == len(inside)


def test_cycle_cap():
    H = gen_named("coronene")
    M = enumerate_matchings(H)[0]
    with pytest.raises(CycleCapExceeded):
        enumerate_alt_cycles(H, M, cap=2)


def test_alternating_hexagons_linear_chain():
    H = gen_linear_chain(4)
    counts = sorted(len(alternating_hexagons(H, M)) for M in enumerate_matchings(H))
    # tetracene: Fries number 2, and every structure has a sextet
    assert counts == [1, 1, 2, 2, 2]
    assert counts == sorted(oracles.brute_fr(H, M) for M in enumerate_matchings(H))


# -- pairwise relations ------------------------------------------------------

TRIPHENYLENE_ROTATED = build([(0, 0), (1, -2), (1, -1), (2, -1)])


def test_compatible_but_crossing_pair():
    H = TRIPHENYLENE_ROTATED
    M = enumerate_matchings(H)[0]
    cs = {tuple(sorted(C.interior_cells)): C for C in enumerate_alt_cycles(H, M)}
    a = cs[((0, 0), (1, -1))]
    b = cs[((1, -2), (1, -1), (2, -1))]
    assert compatible(a, b)
    assert not non_crossing(a, b)


def test_adjacent_hexagons_not_compatible_when_sharing_single_edge():
    H = gen_named("naphthalene")
    for M in enumerate_matchings(H):
        hexes = [C for C in enumerate_alt_cycles(H, M) if C.is_hexagon]
        if len(hexes) == 2:
            shared = hexes[0].edges & hexes[1].edges
            assert compatible(*hexes) == (shared <= M)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(KEKULEAN6), st.data())
def test_compatible_means_shared_edges_in_m(H, data):
    M = data.draw(st.sampled_from(enumerate_matchings(H)))
    cs = enumerate_alt_cycles(H, M)
    if len(cs) < 2:
        return
    i, j = data.draw(st.lists(st.integers(0, len(cs) - 1), min_size=2, max_size=2, unique=True))
    a, b = cs[i], cs[j]
    assert compatible(a, b) == ((a.edges & b.edges) <= M)
    if non_crossing(a, b):
        ia, ib = set(a.interior_cells), set(b.interior_cells)
        assert not (ia & ib) or ia <= ib or ib <= ia
    assert compatible(a, b) == compatible(b, a)


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(KEKULEAN6), st.data())
def test_every_cycle_contains_alternating_hexagon(H, data):
    M = data.draw(st.sampled_from(enumerate_matchings(H)))
    for C in enumerate_alt_cycles(H, M):
        assert contains_alternating_hexagon(H, M, C)


def test_alternating_hexagons_pairwise_compatible():
    H = gen_named("coronene")
    for M in enumerate_matchings(H):
        hexes = [C for C in enumerate_alt_cycles(H, M) if C.is_hexagon]
        assert is_compatible_set(hexes)
        assert all(interiors_disjoint(a, b) for a in hexes for b in hexes if a is not b)


def test_linear_chain_interior():
    H = gen_linear_chain(3)
    M = enumerate_matchings(H)[0]
    longest = max(enumerate_alt_cycles(H, M), key=len)
    assert longest.h == 3 and is_linear_chain_interior(H, longest)
    H = gen_named("triphenylene")
    M = enumerate_matchings(H)[0]
    assert not is_linear_chain_interior(H, max(enumerate_alt_cycles(H, M), key=len))
