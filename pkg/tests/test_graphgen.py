import random
from itertools import combinations

import networkx as nx
import pytest

from conftest import to_nx
from mec_atlas.families import path_graph, star_graph
from mec_atlas.graph import GraphError, is_connected, is_triangle_free, make_graph
from mec_atlas.graphgen import (
    TREE_COUNTS,
    all_connected_graphs,
    all_trees,
    canonical_form,
    canonical_graph,
    canonical_id,
    graph_from_id,
)

# connected graphs and triangle-free connected graphs, p = 1..8
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]
TRIANGLE_FREE = [1, 1, 1, 3, 6, 19, 59, 267, 1380]


@pytest.mark.parametrize("p", range(1, 11))
def test_tree_counts(p):
    trees = all_trees(p)
    assert len(trees) == TREE_COUNTS[p]
    assert all(t.m == p - 1 and is_connected(t) for t in trees)


@pytest.mark.parametrize("p", range(1, 8))
def test_connected_counts(p):
    assert sum(1 for _ in all_connected_graphs(p)) == CONNECTED[p - 1]


@pytest.mark.parametrize("p", range(1, 9))
def test_triangle_free_counts(p):
    graphs = list(all_connected_graphs(p, triangle_free=True))
    assert len(graphs) == TRIANGLE_FREE[p - 1]
    assert all(is_triangle_free(g) and is_connected(g) for g in graphs)


def test_small_examples():
    assert {canonical_form(t) for t in all_trees(4)} == {canonical_form(path_graph(4)), canonical_form(star_graph(3))}
    tf4 = {canonical_form(g) for g in all_connected_graphs(4, triangle_free=True)}
    c4 = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert tf4 == {canonical_form(path_graph(4)), canonical_form(star_graph(3)), canonical_form(c4)}


@pytest.mark.parametrize("p", range(1, 8))
def test_matches_networkx_atlas(p):
    # the atlas lists every graph on up to 7 vertices, one per isomorphism class
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == p and nx.is_connected(h)]
    forms = {canonical_form(make_graph(p, h.edges())) for h in atlas}
    assert len(forms) == len(atlas)
    assert forms == {canonical_form(g) for g in all_connected_graphs(p)}


def test_triangle_free_five_brute_force():
    pairs = list(combinations(range(5), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = make_graph(5, [e for i, e in enumerate(pairs) if mask >> i & 1])
        if is_connected(g) and is_triangle_free(g):
            forms.add(canonical_form(g))
    assert forms == {canonical_form(g) for g in all_connected_graphs(5, triangle_free=True)}


@pytest.mark.parametrize("p", range(2, 8))
def test_canonical_form_is_permutation_invariant(p):
    rng = random.Random(p)
    for g in all_connected_graphs(p):
        form = canonical_form(g)
        for _ in range(200 if p <= 5 else 15):
            perm = list(range(p))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == form


def test_canonical_form_agrees_with_networkx_isomorphism():
    # degree-preserving edge swaps give pairs that simple invariants cannot separate
    rng = random.Random(7)
    checked = 0
    for _ in range(300):
        n = rng.randint(6, 10)
        pairs = list(combinations(range(n), 2))
        a = make_graph(n, rng.sample(pairs, rng.randint(n, 2 * n)))
        try:
            swapped = nx.double_edge_swap(to_nx(a), nswap=2, max_tries=1000, seed=rng.randint(0, 10 ** 6))
        except nx.NetworkXException:
            continue
        perm = list(range(n))
        rng.shuffle(perm)
        b = make_graph(n, swapped.edges()).relabel(perm)
        assert (canonical_form(a) == canonical_form(b)) == nx.is_isomorphic(to_nx(a), to_nx(b))
        checked += 1
    assert checked > 200


def test_canonical_graph_round_trip():
    for g in all_connected_graphs(5):
        h = canonical_graph(g)
        assert nx.is_isomorphic(to_nx(g), to_nx(h))
        assert graph_from_id(canonical_id(g)) == h
        assert canonical_graph(h) == h


def test_ranges():
    with pytest.raises(GraphError):
        list(all_connected_graphs(9))
    with pytest.raises(GraphError):
        list(all_connected_graphs(0))
    with pytest.raises(GraphError):
        all_trees(11)
    with pytest.raises(GraphError):
        canonical_form(path_graph(11))
