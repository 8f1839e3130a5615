from collections import Counter
from itertools import combinations, product

import networkx as nx
from hypothesis import strategies as st

from mec_atlas.graph import UndirectedGraph, make_graph


def to_nx(g: UndirectedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def naive_classes(g: UndirectedGraph) -> Counter:
    """Immorality set -> class size, by trying every orientation with networkx."""
    classes: Counter = Counter()
    for flips in product((False, True), repeat=g.m):
        d = nx.DiGraph()
        d.add_nodes_from(range(g.n))
        d.add_edges_from((v, u) if f else (u, v) for (u, v), f in zip(g.edges, flips))
        if not nx.is_directed_acyclic_graph(d):
            continue
        key = frozenset(
            (j, i, k)
            for j in d.nodes
            for i, k in combinations(sorted(d.predecessors(j)), 2)
            if not g.has_edge(i, k)
        )
        classes[key] += 1
    return classes


@st.composite
def small_graphs(draw, min_n=1, max_n=7, max_edges=12):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return make_graph(n, chosen)
