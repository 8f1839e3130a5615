"""Undirected skeleton graphs and the structural statistics used by the surveys.

Vertices are ``0..n-1``. Edges are stored as a sorted, duplicate-free tuple of
pairs ``(u, v)`` with ``u < v``; the position of an edge in that tuple is its
stable index, which orientations refer to.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graph input."""


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        adj = [0] * self.n
        for u, v in self.edges:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "adjacency", tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        mask = self.adjacency[v]
        return [u for u in range(self.n) if mask >> u & 1]

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except AttributeError:
            object.__setattr__(self, "_index", {e: i for i, e in enumerate(self.edges)})
            return self._index[(u, v)]

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["UndirectedGraph", list[int]]:
        """Return the induced subgraph relabeled to ``0..k-1`` and the old labels."""
        old = sorted(set(vertices))
        new = {v: i for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return make_graph(len(old), edges), old

    def relabel(self, perm: Sequence[int]) -> "UndirectedGraph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return make_graph(self.n, [(perm[u], perm[v]) for u, v in self.edges])


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> UndirectedGraph:
    """Build a canonicalized graph, rejecting self-loops and out-of-range endpoints.

    >>> make_graph(4, [(1, 0), (0, 1), (2, 3)]).edges
    ((0, 1), (2, 3))
    """
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    canon = set()
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)} is not allowed")
        canon.add((u, v) if u < v else (v, u))
    return UndirectedGraph(n, tuple(sorted(canon)))


def components(g: UndirectedGraph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = g.adjacency[v] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        out.append([v for v in range(g.n) if comp >> v & 1])
    return out


def is_connected(g: UndirectedGraph) -> bool:
    return len(components(g)) <= 1


def count_triangles(g: UndirectedGraph) -> int:
    total = 0
    for u, v in g.edges:
        common = g.adjacency[u] & g.adjacency[v]
        # count each triangle once, at its largest vertex
        total += bin(common >> (v + 1)).count("1")
    return total


def is_triangle_free(g: UndirectedGraph) -> bool:
    return all(g.adjacency[u] & g.adjacency[v] == 0 for u, v in g.edges)


def count_two_paths(g: UndirectedGraph) -> int:
    """Number of paths of length two, counted by their middle vertex."""
    return sum(d * (d - 1) // 2 for d in (g.degree(v) for v in range(g.n)))


def count_induced_3paths(g: UndirectedGraph) -> int:
    """Triples ``i - j - k`` with ``i`` and ``k`` non-adjacent: the possible immorality sites."""
    total = 0
    for j in range(g.n):
        for i, k in combinations(g.neighbors(j), 2):
            if not g.has_edge(i, k):
                total += 1
    return total


def clustering_coefficient(g: UndirectedGraph, strict: bool = False) -> Fraction:
    """Global clustering coefficient ``3 * triangles / two-paths`` as an exact fraction.

    A graph with no two-paths has an undefined coefficient. It is reported as 0
    unless ``strict`` is set, in which case ``GraphError`` is raised; callers
    that need to tell the cases apart check ``count_two_paths`` themselves.
    """
    paths = count_two_paths(g)
    if paths == 0:
        if strict:
            raise GraphError("clustering coefficient undefined: graph has no two-paths")
        return Fraction(0)
    return Fraction(3 * count_triangles(g), paths)


def degree_stats(g: UndirectedGraph) -> tuple[int, Fraction]:
    """Maximum degree and exact average degree."""
    if g.n == 0:
        raise GraphError("degree statistics need at least one vertex")
    return max(g.degree(v) for v in range(g.n)), Fraction(2 * g.m, g.n)


# ---------------------------------------------------------------------------
# Text formats
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> UndirectedGraph:
    """Parse ``u v`` lines, optionally after an ``n <count>`` header (``#`` starts a comment).

    Without a header the vertex count is one more than the largest label.
    """
    n = None
    edges = []
    seen_any = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "n":
            if seen_any or len(tokens) != 2:
                raise GraphError(f"line {lineno}: 'n <count>' must be a lone first line, got {raw!r}")
            n = _parse_int(tokens[1], lineno)
            seen_any = True
            continue
        seen_any = True
        if len(tokens) != 2:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((_parse_int(tokens[0], lineno), _parse_int(tokens[1], lineno)))
    if n is None:
        if not edges:
            raise GraphError("empty edge list and no 'n <count>' header")
        n = max(max(e) for e in edges) + 1
    return make_graph(n, edges)


def _parse_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphError(f"line {lineno}: {token!r} is not an integer") from None


def format_edge_list(g: UndirectedGraph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph6(line: str) -> UndirectedGraph:
    """Decode a single graph6 string (optionally prefixed by ``>>graph6<<``)."""
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= b < 64 for b in data):
        raise GraphError(f"invalid graph6 string {line!r}")
    if data[0] < 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] < 63:
        n, pos = _bits_to_int(data[1:4], line), 4
    else:
        n, pos = _bits_to_int(data[2:8], line), 8
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphError(f"graph6 string {line!r} has {len(body)} data bytes, expected {need}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if body[k // 6] >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    return make_graph(n, edges)


def _bits_to_int(chunk: list[int], line: str) -> int:
    if len(chunk) not in (3, 6):
        raise GraphError(f"truncated graph6 size field in {line!r}")
    value = 0
    for b in chunk:
        value = value << 6 | b
    return value


def format_graph6(g: UndirectedGraph) -> str:
    n = g.n
    if n < 63:
        head = [n]
    elif n < 258048:
        head = [63, n >> 12 & 63, n >> 6 & 63, n & 63]
    else:
        head = [63, 63] + [n >> s & 63 for s in (30, 24, 18, 12, 6, 0)]
    bits = [1 if g.has_edge(u, v) else 0 for v in range(1, n) for u in range(v)]
    bits += [0] * (-len(bits) % 6)
    body = [int("".join(map(str, bits[i:i + 6])), 2) for i in range(0, len(bits), 6)]
    return "".join(chr(b + 63) for b in head + body)


def read_graph_file(path: str | Path) -> UndirectedGraph:
    """Read a graph from disk: graph6 if the first content line looks like graph6."""
    text = Path(path).read_text()
    first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
    if first.startswith(">>graph6<<") or (first and not first.startswith("n ") and " " not in first):
        return parse_graph6(first)
    return parse_edge_list(text)
