"""Non-isomorphic small graphs: canonical forms and exhaustive generators.

Canonical forms come from an individualization/refinement search: vertices are
ordered by an iteratively refined degree partition, ties are broken by trying
each vertex of the first non-singleton cell, and the lexicographically smallest
adjacency bit string over the resulting orderings wins. Twin vertices (same
neighborhood apart from each other) are interchangeable, so only one of each
twin class is tried per cell.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import GraphError, UndirectedGraph, is_connected, is_triangle_free, make_graph

MAX_CANONICAL_N = 10
MAX_TREE_P = 10
MAX_CONNECTED_P = 8
MAX_TRIANGLE_FREE_P = 9

# known counts, used only for sanity reporting
TREE_COUNTS = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by neighbor counts into every cell until the partition is equitable."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(bin(adj[v] & m).count("1") for m in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _code(adj: tuple[int, ...], order: list[int], upto: int) -> tuple[int, ...]:
    """Column-wise upper-triangle adjacency bits of the first ``upto`` ordered vertices."""
    bits = []
    for j in range(1, upto):
        aj = adj[order[j]]
        for i in range(j):
            bits.append(aj >> order[i] & 1)
    return tuple(bits)


def canonical_form(g: UndirectedGraph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    n = g.n
    if n > MAX_CANONICAL_N:
        raise GraphError(f"canonical form supports at most {MAX_CANONICAL_N} vertices, got {n}")
    adj = g.adjacency
    best: list[tuple[int, ...] | None] = [None]

    def search(cells: list[list[int]]):
        t = 0
        while t < len(cells) and len(cells[t]) == 1:
            t += 1
        order = [c[0] for c in cells[:t]]
        if best[0] is not None:
            prefix = _code(adj, order, t)
            if prefix > best[0][:len(prefix)]:
                return
        if t == len(cells):
            code = _code(adj, order, n)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        cell = cells[t]
        tried: list[int] = []
        for v in cell:
            if any(adj[v] & ~(1 << u) == adj[u] & ~(1 << v) for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(adj, cells[:t] + [[v], rest] + cells[t + 1:]))

    if n:
        degree_cells: dict[int, list[int]] = {}
        for v in range(n):
            degree_cells.setdefault(bin(adj[v]).count("1"), []).append(v)
        search(_refine(adj, [degree_cells[d] for d in sorted(degree_cells)]))
    bits = best[0] or ()
    packed = bytearray([n])
    for i in range(0, len(bits), 8):
        chunk = bits[i:i + 8]
        packed.append(int("".join(map(str, chunk)).ljust(8, "0"), 2))
    return bytes(packed)


def canonical_id(g: UndirectedGraph) -> str:
    return canonical_form(g).hex()


def graph_from_form(form: bytes) -> UndirectedGraph:
    """Decode a canonical form back into its representative graph."""
    n = form[0]
    bits = "".join(f"{b:08b}" for b in form[1:])
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return make_graph(n, edges)


def graph_from_id(cid: str) -> UndirectedGraph:
    return graph_from_form(bytes.fromhex(cid))


def canonical_graph(g: UndirectedGraph) -> UndirectedGraph:
    """The representative graph encoded by the canonical form."""
    return graph_from_form(canonical_form(g))


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _trees(p: int) -> tuple[UndirectedGraph, ...]:
    if p == 1:
        return (make_graph(1, []),)
    seen: dict[bytes, UndirectedGraph] = {}
    for t in _trees(p - 1):
        for v in range(p - 1):
            child = make_graph(p, t.edges + ((v, p - 1),))
            form = canonical_form(child)
            if form not in seen:
                seen[form] = canonical_graph(child)
    return tuple(seen[f] for f in sorted(seen))


def all_trees(p: int) -> list[UndirectedGraph]:
    """One canonical representative per isomorphism class of trees on ``p`` vertices."""
    if not 1 <= p <= MAX_TREE_P:
        raise GraphError(f"tree generation supports 1 <= p <= {MAX_TREE_P}, got {p}")
    return list(_trees(p))


@lru_cache(maxsize=None)
def _connected(p: int, triangle_free: bool) -> tuple[UndirectedGraph, ...]:
    # every connected graph has a vertex whose removal leaves it connected,
    # so adding a vertex to each smaller connected graph reaches them all
    if p == 1:
        return (make_graph(1, []),)
    seen: dict[bytes, UndirectedGraph] = {}
    new = p - 1
    for parent in _connected(p - 1, triangle_free):
        adj = parent.adjacency
        for subset in range(1, 1 << new):
            if triangle_free and any(subset >> u & 1 and adj[u] & subset for u in range(new)):
                continue
            edges = parent.edges + tuple((u, new) for u in range(new) if subset >> u & 1)
            child = UndirectedGraph(p, tuple(sorted(edges)))
            form = canonical_form(child)
            if form not in seen:
                seen[form] = canonical_graph(child)
    return tuple(seen[f] for f in sorted(seen))


def all_connected_graphs(p: int, triangle_free: bool = False) -> Iterator[UndirectedGraph]:
    """Connected graphs on ``p`` vertices up to isomorphism, in canonical-form order."""
    limit = MAX_TRIANGLE_FREE_P if triangle_free else MAX_CONNECTED_P
    if not 1 <= p <= limit:
        kind = "triangle-free connected" if triangle_free else "connected"
        raise GraphError(f"{kind} generation supports 1 <= p <= {limit}, got {p}")
    for g in _connected(p, triangle_free):
        assert is_connected(g) and (not triangle_free or is_triangle_free(g))
        yield g
