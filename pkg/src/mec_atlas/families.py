"""Graph families with closed-form or recursive MEC counts.

Each family has a constructor with a fixed vertex labeling and one or more
formula evaluators. The formulas never enumerate orientations; they are
checked against :mod:`mec_atlas.oracle` in the test suite.

Labelings:

* path ``I_p``: ``0 - 1 - ... - p-1``; cycle ``C_p`` closes ``p-1 - 0``.
* star ``G_1(p)``: center 0, leaves ``1..p``.
* leafy path ``G_p(q_1..q_p)``: spine ``0..p-1``, then the leaves of spine
  vertex 0, of spine vertex 1, and so on. Bistars are ``G_2(p, q)``.
* spider: center 0, then each leg laid out outward from the center, leg by leg.
* caterpillar ``W_p``: spine first, then leaves (a leafy path).
* complete binary tree ``T_k``: breadth-first from root 0, children of ``i``
  are ``2i+1`` and ``2i+2``; the additive tree ``A_k`` adds leaf ``2^k - 1`` to the root.
* ``K_{2,p}``: ``a = 0``, ``b = 1``, spine ``2..p+1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, isqrt, prod
from typing import NamedTuple

from .graph import UndirectedGraph, make_graph
from .polycomb import (
    ONE,
    X,
    Polynomial,
    SizeSpectrum,
    bounded_partitions,
    compositions,
    fibonacci,
    fibonacci_polynomial,
    lucas_polynomial,
    multinomial,
)


class FamilyError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Family specs and constructors
# ---------------------------------------------------------------------------

_KINDS = {
    "path": "path", "cycle": "cycle", "star": "star", "bistar": "bistar",
    "spider": "spider", "caterpillar": "caterpillar", "btree": "binary_tree",
    "binary_tree": "binary_tree", "atree": "additive_tree", "additive_tree": "additive_tree",
    "k2p": "k2p", "leafy": "leafy_path", "leafy_path": "leafy_path",
}

_ARITY = {"bistar": 2, "spider": None, "leafy_path": None}


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __post_init__(self):
        kind, ps = self.kind, self.params
        if kind not in _KINDS.values():
            raise FamilyError(f"unknown family {kind!r}")
        arity = _ARITY.get(kind, 1)
        if arity is not None and len(ps) != arity:
            raise FamilyError(f"{kind} takes {arity} parameter(s), got {len(ps)}")
        lo = {"path": 1, "cycle": 3, "star": 0, "caterpillar": 1, "binary_tree": 1,
              "additive_tree": 1, "k2p": 1, "bistar": 1}.get(kind)
        if lo is not None and min(ps) < lo:
            raise FamilyError(f"{kind} parameters must be >= {lo}, got {ps}")
        if kind == "spider":
            if not ps or min(ps) < 1:
                raise FamilyError(f"spider legs must be a nonempty list of positive lengths, got {ps}")
            if list(ps) != sorted(ps, reverse=True):
                raise FamilyError(f"spider legs must be sorted in decreasing order, got {ps}")
        if kind == "leafy_path" and (not ps or min(ps) < 0):
            raise FamilyError(f"leafy path needs one nonnegative leaf count per spine vertex, got {ps}")

    def __str__(self) -> str:
        name = min((k for k, v in _KINDS.items() if v == self.kind), key=len)
        return f"{name}:{','.join(map(str, self.params))}"


def parse_family(text: str) -> FamilySpec:
    """Parse ``kind:params`` strings such as ``spider:3,2,2`` or ``btree:3``."""
    m = re.fullmatch(r"\s*([a-z_0-9]+)\s*:\s*([0-9,\s]*)\s*", text)
    if not m or m.group(1) not in _KINDS:
        raise FamilyError(f"cannot parse family spec {text!r}")
    raw = [t for t in m.group(2).replace(" ", "").split(",") if t]
    kind = _KINDS[m.group(1)]
    params = tuple(int(t) for t in raw)
    if kind == "spider":
        params = tuple(sorted(params, reverse=True))
    return FamilySpec(kind, params)


def path_graph(p: int) -> UndirectedGraph:
    return make_graph(p, [(i, i + 1) for i in range(p - 1)])


def cycle_graph(p: int) -> UndirectedGraph:
    if p < 3:
        raise FamilyError(f"cycle needs p >= 3, got {p}")
    return make_graph(p, [(i, (i + 1) % p) for i in range(p)])


def leafy_path_graph(leaves: tuple[int, ...] | list[int]) -> UndirectedGraph:
    q = len(leaves)
    edges = [(i, i + 1) for i in range(q - 1)]
    nxt = q
    for i, c in enumerate(leaves):
        for _ in range(c):
            edges.append((i, nxt))
            nxt += 1
    return make_graph(nxt, edges)


def star_graph(p: int) -> UndirectedGraph:
    return leafy_path_graph((p,))


def bistar_graph(p: int, q: int) -> UndirectedGraph:
    return leafy_path_graph((p, q))


def spider_graph(legs: tuple[int, ...] | list[int]) -> UndirectedGraph:
    edges = []
    nxt = 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return make_graph(nxt, edges)


def caterpillar_graph(p: int) -> UndirectedGraph:
    """``W_p``: ``G_{p/2}(1,..,1)`` for even ``p``, ``G_{(p+1)/2}(1,..,1,0)`` for odd."""
    if p % 2 == 0:
        return leafy_path_graph((1,) * (p // 2))
    return leafy_path_graph((1,) * ((p - 1) // 2) + (0,))


def binary_tree_graph(k: int, additive: bool = False) -> UndirectedGraph:
    n = 2 ** k - 1
    edges = [(i, c) for i in range(n) for c in (2 * i + 1, 2 * i + 2) if c < n]
    if additive:
        edges.append((0, n))
        n += 1
    return make_graph(n, edges)


def k2p_graph(p: int) -> UndirectedGraph:
    return make_graph(p + 2, [(a, s) for a in (0, 1) for s in range(2, p + 2)])


def build(spec: FamilySpec) -> UndirectedGraph:
    k, ps = spec.kind, spec.params
    if k == "path":
        return path_graph(ps[0])
    if k == "cycle":
        return cycle_graph(ps[0])
    if k == "star":
        return star_graph(ps[0])
    if k == "bistar":
        return bistar_graph(*ps)
    if k == "spider":
        return spider_graph(ps)
    if k == "caterpillar":
        return caterpillar_graph(ps[0])
    if k == "binary_tree":
        return binary_tree_graph(ps[0])
    if k == "additive_tree":
        return binary_tree_graph(ps[0], additive=True)
    if k == "k2p":
        return k2p_graph(ps[0])
    return leafy_path_graph(ps)


# ---------------------------------------------------------------------------
# Paths and cycles
# ---------------------------------------------------------------------------

def path_polynomial(p: int) -> Polynomial:
    """``M(I_p;x) = F_{p-1}(x)``; ``I_0`` and ``I_1`` give 1 by convention."""
    if p < 0:
        raise FamilyError(f"path length must be nonnegative, got {p}")
    return fibonacci_polynomial(max(p - 1, 0))


def cycle_polynomial(p: int) -> Polynomial:
    """``M(C_p;x) = L_p(x) - 1`` for ``p >= 4``.

    ``C_3`` is a triangle and has a single class with no immoralities, which
    the Lucas formula does not produce.
    """
    if p < 4:
        raise FamilyError(f"cycle formula needs p >= 4, got {p}")
    return lucas_polynomial(p) - 1


def path_size_count(p: int, size: int) -> int:
    """Number of classes of the given size on ``I_p``.

    A class with ``k`` immoralities splits the path into ``k + 1`` runs whose
    lengths form a composition of ``p - k``; the class size is the product of
    the run lengths.
    """
    if p < 1:
        raise FamilyError(f"path needs p >= 1, got {p}")
    return sum(1 for k in range(p // 2 + 1) for c in compositions(p - k, k + 1) if prod(c) == size)


def path_size_spectrum(p: int) -> SizeSpectrum:
    if p < 1:
        raise FamilyError(f"path needs p >= 1, got {p}")
    return SizeSpectrum.from_sizes(prod(c) for k in range(p // 2 + 1) for c in compositions(p - k, k + 1))


def _cycle_terms(p: int):
    """Yield ``(k, size, p * multinomial)`` over bounded partitions."""
    for k in range(1, p // 2 + 1):
        j = p - 2 * k + 1
        for mult in bounded_partitions(j, k, p - k):
            size = prod((i + 1) ** m for i, m in enumerate(mult))
            yield k, size, p * multinomial(k, mult)


def cycle_size_spectrum(p: int) -> SizeSpectrum:
    """Sizes of classes on ``C_p`` via bounded partitions of ``p - k`` into ``k`` parts.

    Per-partition terms ``p / k * multinomial`` are summed over all partitions
    with the same ``k`` and size before dividing by ``k``.
    """
    if p < 4:
        raise FamilyError(f"cycle formula needs p >= 4, got {p}")
    acc: dict[tuple[int, int], int] = {}
    for k, size, num in _cycle_terms(p):
        acc[(k, size)] = acc.get((k, size), 0) + num
    counts: dict[int, int] = {}
    for (k, size), num in acc.items():
        q, r = divmod(num, k)
        if r:
            raise ArithmeticError(f"cycle term for p={p}, k={k}, size={size} not divisible by k")
        counts[size] = counts.get(size, 0) + q
    return SizeSpectrum(counts)


def cycle_size_count(p: int, size: int) -> int:
    return cycle_size_spectrum(p).get(size, 0)


# ---------------------------------------------------------------------------
# Stars and bistars
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def star_polynomial(p: int) -> Polynomial:
    """``1 + sum_{k>=2} C(p,k) x^{C(k,2)}``."""
    if p < 0:
        raise FamilyError(f"star needs p >= 0, got {p}")
    out = ONE
    for k in range(2, p + 1):
        out = out + Polynomial.monomial(comb(k, 2), comb(p, k))
    return out


def star_count(p: int) -> int:
    return 2 ** p - p


def star_size_spectrum(p: int) -> SizeSpectrum:
    """``2^p - p - 1`` singleton classes and one class of size ``p + 1``."""
    if p < 0:
        raise FamilyError(f"star needs p >= 0, got {p}")
    return SizeSpectrum({1: 2 ** p - p - 1, p + 1: 1})


def _p_term(m: int) -> Polynomial:
    out = Polynomial()
    for k in range(1, m + 1):
        out = out + Polynomial.monomial(comb(k + 1, 2), comb(m, k))
    return out


def bistar_polynomial(p: int, q: int) -> Polynomial:
    if p < 1 or q < 1:
        raise FamilyError(f"bistar needs p, q >= 1, got {(p, q)}")
    sp, sq = star_polynomial(p), star_polynomial(q)
    return sp * _p_term(q) + sq * _p_term(p) + sp + sq - 1


def bistar_count(p: int, q: int) -> int:
    return 2 ** (p + q + 1) - p * 2 ** q - q * 2 ** p - 1


def bistar_size_spectrum(p: int, q: int) -> SizeSpectrum:
    if p < 1 or q < 1:
        raise FamilyError(f"bistar needs p, q >= 1, got {(p, q)}")
    ones = 2 ** (p + q + 1) - p * 2 ** q - q * 2 ** p - 2 ** p - 2 ** q
    return SizeSpectrum([(1, ones), (q + 1, 2 ** p - 1), (p + 1, 2 ** q - 1), (p + q + 2, 1)])


# ---------------------------------------------------------------------------
# Spiders
# ---------------------------------------------------------------------------

def spider_polynomial(legs: tuple[int, ...] | list[int]) -> Polynomial:
    """``M(G_lambda;x)`` by choosing which first-leg vertices head an immorality.

    For a chosen set ``S`` of legs (among those longer than one vertex) whose
    first vertex is a head, the rest of each such leg behaves like a path one
    vertex shorter, the other legs like full paths, and the center like a star
    on the ``k - |S|`` legs still free to point at it.
    """
    legs = tuple(legs)
    if not legs or min(legs) < 1:
        raise FamilyError(f"spider legs must be a nonempty list of positive lengths, got {legs}")
    k = len(legs)
    long_legs = [i for i, lam in enumerate(legs) if lam > 1]
    total = Polynomial()
    for j in range(len(long_legs) + 1):
        inner = Polynomial()
        for chosen in combinations(long_legs, j):
            term = ONE
            for i, lam in enumerate(legs):
                term = term * path_polynomial(lam - 1 if i in chosen else lam)
            inner = inner + term
        total = total + inner.shift(j) * star_polynomial(k - j)
    return total


def uniform_spider_count(k: int, m: int) -> int:
    """``M`` of the spider with ``k`` legs of length ``m``: ``F_{m+1}^k - k F_{m-1} F_m^{k-1}``."""
    if k < 2 or m < 1:
        raise FamilyError(f"need k >= 2 and m >= 1, got k={k}, m={m}")
    return fibonacci(m + 1) ** k - k * fibonacci(m - 1) * fibonacci(m) ** (k - 1)


# ---------------------------------------------------------------------------
# Caterpillars
# ---------------------------------------------------------------------------

_CATERPILLAR_MID = Polynomial((-2, 1, -1, 1))  # x^3 - x^2 + x - 2


@lru_cache(maxsize=None)
def caterpillar_polynomial(p: int) -> Polynomial:
    """``M(W_p;x)`` by recursion.

    Even ``p`` takes the Fibonacci step ``W_{p-1} + x W_{p-2}``; odd ``p``
    takes ``(x+2) W_{p-2} + (x^3-x^2+x-2) W_{p-3} + (x^2+1) W_{p-4}``.
    """
    if p < 1:
        raise FamilyError(f"caterpillar needs p >= 1, got {p}")
    base = {1: ONE, 2: ONE, 3: ONE + X, 4: ONE + X * 2}
    if p in base:
        return base[p]
    w = caterpillar_polynomial
    if p % 2 == 0:
        return w(p - 1) + w(p - 2).shift(1)
    return (X + 2) * w(p - 2) + _CATERPILLAR_MID * w(p - 3) + (X * X + 1) * w(p - 4)


def caterpillar_count(p: int) -> int:
    return caterpillar_polynomial(p).eval_at_one()


def caterpillar_count_recursive(p: int) -> int:
    """Counts from the integer recursion; valid for ``p >= 7`` (and the bases)."""
    base = {1: 1, 2: 1, 3: 2, 4: 3}
    if p in base:
        return base[p]
    if p < 1:
        raise FamilyError(f"caterpillar needs p >= 1, got {p}")
    if p == 5:
        raise FamilyError("the odd-p count recursion reaches W_0 at p = 5")
    vals = dict(base)
    vals[5] = caterpillar_count(5)
    for i in range(6, p + 1):
        if i % 2 == 0:
            vals[i] = vals[i - 1] + vals[i - 2]
        else:
            vals[i] = 3 * vals[i - 2] + vals[i - 4] - vals[i - 5]
    return vals[p]


# ---------------------------------------------------------------------------
# Complete binary trees
# ---------------------------------------------------------------------------

class BinaryTreeCounts(NamedTuple):
    T: int
    A: int
    X: int
    Y: int
    Z: int
    sqrtZ: int


@lru_cache(maxsize=None)
def binary_tree_counts(k: int) -> BinaryTreeCounts:
    """Joint recursion for ``T_k``, ``A_k`` and the helper counts ``X, Y, Z``.

    ``Z_k`` is a perfect square by construction, so its root is carried along
    and ``X_k = T_{k-1} * sqrt(Z_k)`` stays in integers.
    """
    if k < 1:
        raise FamilyError(f"binary tree needs k >= 1, got {k}")
    if k == 1:
        return BinaryTreeCounts(T=1, A=1, X=1, Y=1, Z=1, sqrtZ=1)
    prev = binary_tree_counts(k - 1)
    if k == 2:
        root = 1
    else:
        root = 2 * prev.X + binary_tree_counts(k - 2).T ** 2 + prev.Z
    z = root * root
    y = 2 * prev.Z * prev.T - prev.Z ** 2
    t = prev.A ** 2 + y
    x = prev.T * root
    a = t + 2 * x + prev.T ** 2
    assert isqrt(z) ** 2 == z
    return BinaryTreeCounts(T=t, A=a, X=x, Y=y, Z=z, sqrtZ=root)


class RatioCheck(NamedTuple):
    ratio: Fraction
    within_bounds: bool
    z_below_t: bool
    note: str


def binary_tree_ratio_check(k: int) -> RatioCheck:
    """``A_k / T_k`` with the strict bounds ``1 < ratio < 4`` and ``Z_k < T_k``."""
    c = binary_tree_counts(k)
    ratio = Fraction(c.A, c.T)
    within = 1 < ratio < 4
    z_ok = c.Z < c.T if k >= 2 else True
    note = ""
    if k == 1:
        note = "A_1 and T_1 both have one class; the strict lower bound cannot hold"
    return RatioCheck(ratio, within, z_ok, note)


# ---------------------------------------------------------------------------
# K_{2,p}
# ---------------------------------------------------------------------------

def k2p_count(p: int) -> int:
    if p < 1:
        raise FamilyError(f"K_2,p needs p >= 1, got {p}")
    return sum(comb(p, k) * (2 ** (p - k) - 1 + 2 ** k - k) for k in range(p + 1)) - p * 2 ** (p - 1)


def k2p_immorality_number(p: int) -> int:
    if p < 1:
        raise FamilyError(f"K_2,p needs p >= 1, got {p}")
    if p == 1:
        return 1  # K_2,1 is the 3-path: its middle vertex can head one immorality
    return 2 * comb(p, 2)


def k2p_size_spectrum(p: int) -> SizeSpectrum:
    """Class sizes on ``K_{2,p}`` for ``p >= 2``.

    Classes whose only undirected part is a star at ``a`` (or ``b``) over ``k``
    spine vertices have size ``k + 1``: two for ``k = p`` and ``2 C(p,k)`` for
    ``2 <= k <= p-1``. The ``p`` classes whose undirected part is a path
    ``a - i - b`` have size 3. Every other class is a singleton.
    """
    if p < 1:
        raise FamilyError(f"K_2,p needs p >= 1, got {p}")
    if p == 1:
        return SizeSpectrum({1: 1, 3: 1})  # K_2,1 is the path on 3 vertices
    entries = [(p + 1, 2), (3, p)]
    entries += [(k + 1, 2 * comb(p, k)) for k in range(2, p)]
    larger = sum(c for _, c in entries)
    entries.append((1, k2p_count(p) - larger))
    return SizeSpectrum(entries)


def k2p_size_spectrum_uncorrected(p: int) -> SizeSpectrum:
    """An older closed form for the ``K_{2,p}`` size table, before correction.

    Kept for comparison only; brute force disagrees with it (its entries do
    not even sum to :func:`k2p_count`). Use :func:`k2p_size_spectrum`.
    """
    if p < 2:
        raise FamilyError(f"uncorrected table needs p >= 2, got {p}")
    entries = [(1, 2 + sum(comb(p, k) * 2 ** (p - k) for k in range(2, p))), (2, 2 + comb(p, 2))]
    entries += [(k, 1 + comb(p, 2)) for k in range(3, p)]
    entries.append((p, 2))
    return SizeSpectrum(entries)


# ---------------------------------------------------------------------------
# Dispatch by spec
# ---------------------------------------------------------------------------

def family_polynomial(spec: FamilySpec) -> Polynomial | None:
    """Closed-form ``M(G;x)`` where the family has one, else ``None``."""
    k, ps = spec.kind, spec.params
    if k == "path":
        return path_polynomial(ps[0])
    if k == "cycle":
        return cycle_polynomial(ps[0]) if ps[0] >= 4 else None
    if k == "star":
        return star_polynomial(ps[0])
    if k == "bistar":
        return bistar_polynomial(*ps)
    if k == "spider":
        return spider_polynomial(ps)
    if k == "caterpillar":
        return caterpillar_polynomial(ps[0])
    if k == "leafy_path" and len(ps) == 1:
        return star_polynomial(ps[0])
    if k == "leafy_path" and len(ps) == 2 and min(ps) >= 1:
        return bistar_polynomial(*ps)
    return None


def family_count(spec: FamilySpec) -> int | None:
    k, ps = spec.kind, spec.params
    if k == "binary_tree":
        return binary_tree_counts(ps[0]).T
    if k == "additive_tree":
        return binary_tree_counts(ps[0]).A
    if k == "k2p":
        return k2p_count(ps[0])
    poly = family_polynomial(spec)
    return None if poly is None else poly.eval_at_one()


def family_spectrum(spec: FamilySpec) -> SizeSpectrum | None:
    k, ps = spec.kind, spec.params
    if k == "path":
        return path_size_spectrum(ps[0])
    if k == "cycle":
        return cycle_size_spectrum(ps[0]) if ps[0] >= 4 else None
    if k == "star" or (k == "leafy_path" and len(ps) == 1):
        return star_size_spectrum(ps[0])
    if k == "bistar" or (k == "leafy_path" and len(ps) == 2 and min(ps) >= 1):
        return bistar_size_spectrum(*ps)
    if k == "k2p":
        return k2p_size_spectrum(ps[0])
    return None
