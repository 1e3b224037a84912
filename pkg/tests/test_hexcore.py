import json

import pytest
from hypothesis import given, settings, strategies as st

from benzenoid import hexcore
from benzenoid.hexcore import (BLACK, InvalidSystemError, build, canonical_form,
                               enumerate_all_systems, gen_linear_chain, gen_named, gen_Rn,
                               gen_truncated_parallelogram, is_truncated_parallelogram)

import oracles


def test_benzene():
    H = build([(0, 0)])
    assert (H.num_vertices, H.num_edges, H.num_hexagons) == (6, 6, 1)
    assert len(H.boundary) == 6


def test_coronene_counts():
    H = gen_named("coronene")
    assert (H.num_vertices, H.num_edges, H.num_hexagons) == (24, 30, 7)
    assert sum(not hx.external for hx in H.hexagons) == 1


def test_triphenylene_counts():
    H = gen_named("triphenylene")
    assert (H.num_vertices, H.num_edges, H.num_hexagons) == (18, 21, 4)
    assert all(hx.external for hx in H.hexagons)


@pytest.mark.parametrize("name,h", [("benzene", 1), ("naphthalene", 2), ("anthracene", 3)])
def test_named_acenes(name, h):
    H = gen_named(name)
    assert H.num_hexagons == h
    assert hexcore.is_linear_chain_cells(H.cells)


def test_ring_with_hole_rejected():
    ring = [c for c in gen_named("coronene").cells if c != (0, 0)]
    with pytest.raises(InvalidSystemError, match="hole"):
        build(ring)


def test_disconnected_rejected():
    with pytest.raises(InvalidSystemError):
        build([(0, 0), (5, 5)])


def test_empty_rejected():
    with pytest.raises(InvalidSystemError):
        build([])


def test_parallelogram_2_2():
    H = gen_truncated_parallelogram(2, 2)
    assert H.num_hexagons == 4 and H.num_vertices == 16


def test_tp_single_row_is_chain():
    assert hexcore.is_linear_chain_cells(gen_truncated_parallelogram(3).cells)
    assert hexcore.is_linear_chain_cells(gen_truncated_parallelogram(1, 1, 1).cells)


def test_tp_rejects_increasing():
    with pytest.raises(ValueError):
        gen_truncated_parallelogram(2, 3)


def test_fig5_systems():
    assert gen_truncated_parallelogram(6, 6, 5, 4).num_hexagons == 21
    assert gen_truncated_parallelogram(6, 6, 6, 6).num_hexagons == 24


def test_bipartite_and_peaks_black():
    H = gen_truncated_parallelogram(3, 2, 2)
    for u, v in H.edges:
        assert H.color[u] != H.color[v]
    for v in range(H.num_vertices):
        if H.is_peak(v):
            assert H.color[v] == BLACK
    assert sum(H.color) * 2 == H.num_vertices


def test_euler_relation_on_census():
    for H in enumerate_all_systems(6):
        assert H.num_edges == H.num_vertices + H.num_hexagons - 1


def test_census_counts_match_naive_growth():
    expected = oracles.census_counts(7)
    got = {}
    for H in enumerate_all_systems(7):
        got[H.num_hexagons] = got.get(H.num_hexagons, 0) + 1
    assert got == expected
    assert [expected[i] for i in range(1, 8)] == [1, 1, 3, 7, 22, 81, 331]


def test_census_budget():
    with pytest.raises(hexcore.BudgetExceededError):
        list(enumerate_all_systems(9, budget=8))


def test_census_isomorph_free():
    forms = [canonical_form(H.cells) for H in enumerate_all_systems(6)]
    assert len(forms) == len(set(forms))


def test_json_round_trip(tmp_path):
    H = gen_named("triphenylene")
    path = tmp_path / "t.json"
    hexcore.dump(H, path)
    assert json.loads(path.read_text())["cells"]
    assert hexcore.load(path).cells == H.cells


def test_loads_rejects_garbage():
    with pytest.raises(InvalidSystemError):
        hexcore.loads("{\"nope\": 1}")


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_rn_hexagon_count(n):
    assert gen_Rn(n).num_hexagons == 2 * n + 4


def test_tp_recognition_examples():
    assert is_truncated_parallelogram(gen_truncated_parallelogram(4, 3, 1).cells)
    assert is_truncated_parallelogram(gen_linear_chain(5).cells)
    assert not is_truncated_parallelogram(gen_named("triphenylene").cells)
    assert not is_truncated_parallelogram(gen_named("coronene").cells)


rows = st.lists(st.integers(1, 4), min_size=1, max_size=4).map(lambda xs: sorted(xs, reverse=True))


@settings(max_examples=40, deadline=None)
@given(rows, st.integers(0, 11))
def test_tp_recognised_under_symmetry(rs, k):
    H = gen_truncated_parallelogram(*rs)
    image = hexcore.symmetry_images(H.cells)[k]
    assert is_truncated_parallelogram(image)
    assert build(image).num_vertices == H.num_vertices


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(list(enumerate_all_systems(5))), st.integers(0, 11))
def test_canonical_form_invariant(H, k):
    image = hexcore.symmetry_images(H.cells)[k]
    shifted = [(q + 3, r - 2) for q, r in image]
    assert canonical_form(shifted) == canonical_form(H.cells)
