"""Brute-force ground truth: acyclic orientations grouped into Markov equivalence classes.

Every acyclic orientation of a skeleton is visited once, in ascending order of
its direction bit vector (bit ``i`` set means edge ``i`` points from its larger
endpoint to its smaller one). Orientations are grouped by their immorality set,
which identifies the class. No CPDAG construction is needed: the essential
graph of a class falls out of which direction bits all its members agree on.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterator, Sequence

from .graph import UndirectedGraph, components
from .polycomb import Polynomial, SizeSpectrum

DEFAULT_CAP = 30


class EnumerationCapError(ValueError):
    """The skeleton has more edges than the enumeration cap allows."""


class NotAcyclicError(ValueError):
    pass


def worker_count(default: int = 1) -> int:
    """Worker cap from ``MEC_ATLAS_THREADS``."""
    raw = os.environ.get("MEC_ATLAS_THREADS")
    if not raw:
        return default
    try:
        return max(1, int(raw))
    except ValueError:
        raise ValueError(f"MEC_ATLAS_THREADS must be an integer, got {raw!r}") from None


def _check_cap(g: UndirectedGraph, cap: int | None):
    cap = DEFAULT_CAP if cap is None else cap
    if g.m > cap:
        raise EnumerationCapError(
            f"graph has {g.m} edges; enumeration cap is {cap} edges (raise it with --cap)")


@dataclass(frozen=True, order=True)
class Immorality:
    head: int
    tails: tuple[int, int]

    def __str__(self) -> str:
        i, k = self.tails
        return f"{i}->{self.head}<-{k}"


@dataclass(frozen=True)
class Dag:
    skeleton: UndirectedGraph
    directions: int

    def __post_init__(self):
        if self.directions < 0 or self.directions >> self.skeleton.m:
            raise ValueError(f"direction vector {self.directions} does not fit {self.skeleton.m} edges")
        if not _is_acyclic(self.skeleton.n, self.arcs()):
            raise NotAcyclicError(f"orientation {self.directions:b} of {self.skeleton.edges} has a directed cycle")

    def arc(self, i: int) -> tuple[int, int]:
        u, v = self.skeleton.edges[i]
        return (v, u) if self.directions >> i & 1 else (u, v)

    def arcs(self) -> list[tuple[int, int]]:
        return [self.arc(i) for i in range(self.skeleton.m)]

    @classmethod
    def from_arcs(cls, g: UndirectedGraph, arcs: Sequence[tuple[int, int]]) -> "Dag":
        bits = 0
        for tail, head in arcs:
            i = g.edge_index(tail, head)
            if tail > head:
                bits |= 1 << i
        if len(set(g.edge_index(t, h) for t, h in arcs)) != g.m:
            raise ValueError("arcs must orient every skeleton edge exactly once")
        return cls(g, bits)


def _is_acyclic(n: int, arcs: Sequence[tuple[int, int]]) -> bool:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for t, h in arcs:
        out[t].append(h)
        indeg[h] += 1
    stack = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while stack:
        v = stack.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                stack.append(w)
    return seen == n


def immorality_sites(g: UndirectedGraph) -> list[Immorality]:
    """All induced 3-paths ``i - j - k``, sorted; position is the key bit."""
    sites = []
    for j in range(g.n):
        for i, k in combinations(g.neighbors(j), 2):
            if not g.has_edge(i, k):
                sites.append(Immorality(j, (i, k)))
    return sites


def immoralities_of(d: Dag) -> tuple[Immorality, ...]:
    g = d.skeleton
    parents = [[] for _ in range(g.n)]
    for t, h in d.arcs():
        parents[h].append(t)
    found = []
    for j in range(g.n):
        for i, k in combinations(sorted(parents[j]), 2):
            if not g.has_edge(i, k):
                found.append(Immorality(j, (i, k)))
    return tuple(sorted(found))


# ---------------------------------------------------------------------------
# Enumeration core
# ---------------------------------------------------------------------------

def _walk(g: UndirectedGraph, prefix: Sequence[int] = ()) -> Iterator[tuple[int, int]]:
    """Yield ``(directions, key)`` for acyclic orientations in ascending order.

    Edges are decided from the highest index down, so the traversal order is
    the numeric order of the direction vector. ``prefix`` fixes the directions
    of the top ``len(prefix)`` edges (edge ``m-1`` first). ``key`` is the
    immorality set as a bitmask over :func:`immorality_sites`.
    """
    n, m, adj = g.n, g.m, g.adjacency
    site_bit = {}
    for s, imm in enumerate(immorality_sites(g)):
        i, k = imm.tails
        site_bit[(imm.head, i, k)] = site_bit[(imm.head, k, i)] = 1 << s
    ends = [g.edges[m - 1 - d] for d in range(m)]

    parents = [0] * n
    children = [0] * n
    state = {"key": 0, "dirs": 0}

    def reaches(src: int, dst: int) -> bool:
        seen = 0
        frontier = 1 << src
        while frontier:
            if frontier >> dst & 1:
                return True
            seen |= frontier
            nxt = 0
            f = frontier
            while f:
                low = f & -f
                nxt |= children[low.bit_length() - 1]
                f ^= low
            frontier = nxt & ~seen
        return False

    def apply(d: int, c: int) -> bool:
        u, v = ends[d]
        tail, head = (v, u) if c else (u, v)
        if reaches(head, tail):
            return False
        new = parents[head] & ~adj[tail]
        key = state["key"]
        while new:
            low = new & -new
            key |= site_bit[(head, tail, low.bit_length() - 1)]
            new ^= low
        state["key"] = key
        parents[head] |= 1 << tail
        children[tail] |= 1 << head
        if c:
            state["dirs"] |= 1 << (m - 1 - d)
        return True

    def undo(d: int, c: int, key: int):
        u, v = ends[d]
        tail, head = (v, u) if c else (u, v)
        parents[head] &= ~(1 << tail)
        children[tail] &= ~(1 << head)
        state["key"] = key
        state["dirs"] &= ~(1 << (m - 1 - d))

    start = len(prefix)
    for d, c in enumerate(prefix):
        if not apply(d, c):
            return
    if start == m:
        yield state["dirs"], state["key"]
        return

    tried = [-1] * (m + 1)
    saved = [0] * (m + 1)
    d = start
    while d >= start:
        if d == m:
            yield state["dirs"], state["key"]
            d -= 1
            continue
        c = tried[d]
        if c >= 0:
            undo(d, c, saved[d])
        c += 1
        while c <= 1:
            saved[d] = state["key"]
            if apply(d, c):
                break
            c += 1
        if c <= 1:
            tried[d] = c
            d += 1
            tried[d] = -1
        else:
            tried[d] = -1
            d -= 1


def acyclic_orientations(g: UndirectedGraph, cap: int | None = None) -> Iterator[Dag]:
    """Every acyclic orientation once, by ascending direction vector."""
    _check_cap(g, cap)
    for dirs, _ in _walk(g):
        yield _trusted_dag(g, dirs)


def _trusted_dag(g: UndirectedGraph, dirs: int) -> Dag:
    # orientations from _walk are acyclic by construction
    d = object.__new__(Dag)
    object.__setattr__(d, "skeleton", g)
    object.__setattr__(d, "directions", dirs)
    return d


def count_acyclic_orientations(g: UndirectedGraph, cap: int | None = None) -> int:
    _check_cap(g, cap)
    return sum(1 for _ in _walk(g))


# ---------------------------------------------------------------------------
# Classes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EssentialGraph:
    """Per edge: ``(tail, head)`` if every class member agrees, else ``None``."""

    skeleton: UndirectedGraph
    status: tuple[tuple[int, int] | None, ...]

    def directed_edges(self) -> list[tuple[int, int]]:
        return [s for s in self.status if s is not None]

    def undirected_edges(self) -> list[tuple[int, int]]:
        return [e for e, s in zip(self.skeleton.edges, self.status) if s is None]


@dataclass(frozen=True)
class Mec:
    skeleton: UndirectedGraph
    immoralities: tuple[Immorality, ...]
    size: int
    representative: Dag
    unanimous: int  # bitmask of edges oriented identically by all members

    @property
    def n_immoralities(self) -> int:
        return len(self.immoralities)

    @cached_property
    def essential(self) -> EssentialGraph:
        rep = self.representative
        status = tuple(rep.arc(i) if self.unanimous >> i & 1 else None
                       for i in range(self.skeleton.m))
        return EssentialGraph(self.skeleton, status)


def _group(g: UndirectedGraph, prefix: Sequence[int] = ()) -> dict[int, list[int]]:
    """key -> [size, first directions, AND of directions, OR of directions]."""
    classes: dict[int, list[int]] = {}
    for dirs, key in _walk(g, prefix):
        rec = classes.get(key)
        if rec is None:
            classes[key] = [1, dirs, dirs, dirs]
        else:
            rec[0] += 1
            rec[2] &= dirs
            rec[3] |= dirs
    return classes


def _merge(parts: Sequence[dict[int, list[int]]]) -> dict[int, list[int]]:
    # parts must be in ascending prefix order so "first" stays the minimum
    merged: dict[int, list[int]] = {}
    for part in parts:
        for key, (size, first, band, bor) in part.items():
            rec = merged.get(key)
            if rec is None:
                merged[key] = [size, first, band, bor]
            else:
                rec[0] += size
                rec[2] &= band
                rec[3] |= bor
    return merged


def _prefixes(bits: int) -> list[tuple[int, ...]]:
    return [tuple(v >> (bits - 1 - i) & 1 for i in range(bits)) for v in range(1 << bits)]


def _group_task(args):
    g, prefix = args
    return _group(g, prefix)


def enumerate_mecs(g: UndirectedGraph, cap: int | None = None, workers: int = 1) -> list[Mec]:
    """Partition all acyclic orientations of ``g`` into Markov equivalence classes.

    Classes are returned sorted by their immorality set. With ``workers > 1``
    the orientation space is split into contiguous ranges by the top direction
    bits and grouped in separate processes; the merged result is identical to
    the single-process one.
    """
    _check_cap(g, cap)
    bits = 0
    if workers > 1 and g.m >= 10:
        while (1 << bits) < 4 * workers and bits < g.m - 6:
            bits += 1
    if bits:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_group_task, [(g, p) for p in _prefixes(bits)]))
        raw = _merge(parts)
    else:
        raw = _group(g)

    sites = immorality_sites(g)
    out = []
    for key, (size, first, band, bor) in raw.items():
        imms = tuple(s for b, s in enumerate(sites) if key >> b & 1)
        unanimous = ~(band ^ bor) & ((1 << g.m) - 1)
        out.append(Mec(g, imms, size, _trusted_dag(g, first), unanimous))
    out.sort(key=lambda c: c.immoralities)
    return out


def class_members(mec: Mec) -> list[Dag]:
    """All DAGs in the class, by ascending direction vector."""
    g = mec.skeleton
    want = set(mec.immoralities)
    return [d for d in acyclic_orientations(g, cap=g.m) if set(immoralities_of(d)) == want]


def essential_graph(mec: Mec, members: Sequence[Dag] | None = None) -> EssentialGraph:
    """Essential graph of a class from an explicit member list.

    Without ``members`` the unanimity mask recorded during enumeration is used.
    """
    if members is None:
        return mec.essential
    if not members:
        raise ValueError("essential graph needs at least one class member")
    g = members[0].skeleton
    key = immoralities_of(members[0])
    band = bor = members[0].directions
    for d in members[1:]:
        if d.skeleton != g or immoralities_of(d) != key:
            raise ValueError("members do not share a skeleton and immorality set")
        band &= d.directions
        bor |= d.directions
    status = tuple(members[0].arc(i) if not (band ^ bor) >> i & 1 else None for i in range(g.m))
    return EssentialGraph(g, status)


def _edge_components(n: int, edges: Sequence[tuple[int, int]]) -> list[tuple[int, ...]]:
    from .graph import make_graph

    touched = sorted({v for e in edges for v in e})
    if not touched:
        return []
    comps = components(make_graph(n, edges))
    keep = set(touched)
    return [tuple(c) for c in comps if c[0] in keep]


def chain_components(eg: EssentialGraph) -> list[tuple[int, ...]]:
    """Nontrivial connected components of the undirected part."""
    return _edge_components(eg.skeleton.n, eg.undirected_edges())


def raw_chain_components(eg: EssentialGraph) -> list[tuple[int, ...]]:
    """All components of the undirected part, singletons included."""
    from .graph import make_graph

    return [tuple(c) for c in components(make_graph(eg.skeleton.n, eg.undirected_edges()))]


def directed_components(eg: EssentialGraph) -> list[tuple[int, ...]]:
    """Connected components of the subgraph formed by the directed edges."""
    return _edge_components(eg.skeleton.n, eg.directed_edges())


# ---------------------------------------------------------------------------
# Summaries
# ---------------------------------------------------------------------------

def polynomial_of(classes: Sequence[Mec]) -> Polynomial:
    counts: dict[int, int] = {}
    for c in classes:
        counts[c.n_immoralities] = counts.get(c.n_immoralities, 0) + 1
    if not counts:
        return Polynomial()
    return Polynomial(counts.get(k, 0) for k in range(max(counts) + 1))


def spectrum_of(classes: Sequence[Mec]) -> SizeSpectrum:
    return SizeSpectrum.from_sizes(c.size for c in classes)


def mec_polynomial(g: UndirectedGraph, cap: int | None = None, workers: int = 1) -> Polynomial:
    """``M(G;x)``: coefficient ``k`` counts classes with exactly ``k`` immoralities."""
    return polynomial_of(enumerate_mecs(g, cap, workers))


def immorality_number(g: UndirectedGraph, cap: int | None = None) -> int:
    return mec_polynomial(g, cap).degree


def size_spectrum(g: UndirectedGraph, cap: int | None = None, workers: int = 1) -> SizeSpectrum:
    return spectrum_of(enumerate_mecs(g, cap, workers))
