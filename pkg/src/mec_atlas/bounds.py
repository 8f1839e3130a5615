"""Bounds on the number of classes of a tree and on class sizes from essential-graph shape."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, asdict
from math import prod

from .graph import UndirectedGraph, is_connected, make_graph
from .graphgen import all_trees, canonical_id
from .oracle import Dag, EssentialGraph, Mec, chain_components, directed_components, enumerate_mecs
from .polycomb import fibonacci

CSV_FIELDS = ("tree_id", "p", "ell", "m", "class_key", "observed", "lower",
              "upper_num", "upper_check", "holds", "tight_lower", "tight_upper")


class BoundsError(ValueError):
    pass


@dataclass(frozen=True)
class BoundReport:
    """One inequality instance ``lower <= observed <= upper``.

    ``kind`` is ``tree_count`` (class count of a tree), ``class_size``
    (``2^ell <= size <= ((p-m)/ell)^ell``) or ``single_chain``
    (``m <= size <= p - 2m`` when there is exactly one chain component).
    For ``class_size`` the upper bound is ``(upper_num / ell) ** ell`` and is
    compared as ``observed * ell**ell <= upper_num**ell``; otherwise
    ``upper_num`` is the bound itself.
    """

    kind: str
    tree_id: str
    p: int
    ell: int
    m: int
    class_key: str
    observed: int
    lower: int
    upper_num: int
    holds: bool
    tight_lower: bool
    tight_upper: bool

    @property
    def upper_check(self) -> str:
        if self.kind == "class_size" and self.ell:
            return f"{self.observed}*{self.ell}^{self.ell}<={self.upper_num}^{self.ell}"
        return f"{self.observed}<={self.upper_num}"


def tree_count_bounds(p: int) -> tuple[int, int]:
    """``(F_{p-1}, 2^{p-1} - p + 1)``: class counts of the path and the star."""
    if p < 1:
        raise BoundsError(f"need p >= 1, got {p}")
    return fibonacci(p - 1), 2 ** (p - 1) - p + 1


def _is_tree(g: UndirectedGraph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def _class_key(mec: Mec) -> str:
    return ";".join(str(i) for i in mec.immoralities) or "-"


def mec_size_bounds(eg: EssentialGraph, tree_id: str = "", class_key: str = "") -> BoundReport:
    """Size bounds for a class on a tree from its chain and directed components.

    The observed size is the product of the chain-component orders.
    """
    g = eg.skeleton
    if not _is_tree(g):
        raise BoundsError("class-size bounds are only established for tree skeletons")
    chains = chain_components(eg)
    ell, m, p = len(chains), len(directed_components(eg)), g.n
    observed = prod(len(c) for c in chains)
    if ell == 0:
        return BoundReport("class_size", tree_id, p, 0, m, class_key, observed, 1, 1,
                           observed == 1, True, True)
    lower = 2 ** ell
    lhs, rhs = observed * ell ** ell, (p - m) ** ell
    return BoundReport("class_size", tree_id, p, ell, m, class_key, observed, lower, p - m,
                       lower <= observed and lhs <= rhs, observed == lower, lhs == rhs)


def single_chain_bounds(eg: EssentialGraph, tree_id: str = "", class_key: str = "") -> BoundReport:
    """``m <= size <= p - 2m`` for a class with exactly one chain component."""
    chains = chain_components(eg)
    if len(chains) != 1:
        raise BoundsError(f"expected one chain component, found {len(chains)}")
    p, m = eg.skeleton.n, len(directed_components(eg))
    observed = len(chains[0])
    return BoundReport("single_chain", tree_id, p, 1, m, class_key, observed, m, p - 2 * m,
                       m <= observed <= p - 2 * m, observed == m, observed == p - 2 * m)


def tree_bound_report(g: UndirectedGraph, count: int, tree_id: str = "") -> BoundReport:
    lo, hi = tree_count_bounds(g.n)
    return BoundReport("tree_count", tree_id, g.n, 0, 0, "", count, lo, hi,
                       lo <= count <= hi, count == lo, count == hi)


@dataclass(frozen=True)
class TreeSweep:
    tree: UndirectedGraph
    tree_id: str
    count_report: BoundReport
    class_reports: list[BoundReport]
    single_chain_reports: list[BoundReport]
    product_mismatches: int  # classes whose size differs from the chain-component product


def sweep_tree(g: UndirectedGraph) -> TreeSweep:
    tid = canonical_id(g)
    classes = enumerate_mecs(g)
    class_reports, single = [], []
    mismatches = 0
    for mec in classes:
        key = _class_key(mec)
        rep = mec_size_bounds(mec.essential, tid, key)
        if rep.observed != mec.size:
            mismatches += 1
        class_reports.append(rep)
        if rep.ell == 1:
            single.append(single_chain_bounds(mec.essential, tid, key))
    return TreeSweep(g, tid, tree_bound_report(g, len(classes), tid), class_reports, single, mismatches)


def sweep_tree_bounds(p: int, max_p: int = 9) -> list[TreeSweep]:
    """Bounds for every tree on ``p`` vertices and every class on it."""
    if not 1 <= p <= max_p:
        raise BoundsError(f"tree sweep supports 1 <= p <= {max_p}, got {p}")
    return [sweep_tree(t) for t in all_trees(p)]


def reports_to_csv(reports: list[BoundReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        d = asdict(r)
        d["upper_check"] = r.upper_check
        w.writerow([str(d[f]).lower() if isinstance(d[f], bool) else d[f] for f in CSV_FIELDS])
    return buf.getvalue()


def tight_upper_instance(ell: int, s: int) -> tuple[UndirectedGraph, Dag]:
    """A tree and DAG whose class meets the upper size bound with equality.

    The directed part is a star with ``ell`` arrows into its center; each arm
    vertex also spans a chain component of ``s`` vertices (a star of ``s - 1``
    leaves, oriented away from the arm vertex). The class size is ``s ** ell``.
    """
    if ell < 2 or s < 2:
        raise BoundsError("need at least two arms and chain components of two or more vertices")
    edges, arcs = [], []
    nxt = 1
    for _ in range(ell):
        arm = nxt
        nxt += 1
        edges.append((0, arm))
        arcs.append((arm, 0))
        for _ in range(s - 1):
            edges.append((arm, nxt))
            arcs.append((arm, nxt))
            nxt += 1
    g = make_graph(nxt, edges)
    return g, Dag.from_arcs(g, arcs)
