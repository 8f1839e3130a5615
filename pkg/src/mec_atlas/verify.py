"""Formula-versus-oracle checks and identity suites behind ``mec-atlas verify``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import families as fam
from .bounds import sweep_tree_bounds
from .graph import UndirectedGraph
from .oracle import enumerate_mecs, polynomial_of, spectrum_of
from .polycomb import (
    SizeSpectrum,
    fibonacci,
    fibonacci_polynomial,
    lucas_polynomial,
    lucas_triangle_coefficient,
    X,
)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}" + (f" ({self.detail})" if self.detail else "")


@dataclass(frozen=True)
class FamilyScope:
    """Largest instance of each family compared against brute force."""

    path: int
    cycle: int
    star: int
    bistar_sum: int
    spider_nodes: int
    caterpillar: int
    tree_k: int
    k2p: int

    @classmethod
    def up_to(cls, nodes: int) -> "FamilyScope":
        k = 1
        while 2 ** (k + 1) <= nodes:
            k += 1
        return cls(path=nodes, cycle=nodes, star=nodes - 1, bistar_sum=nodes - 2,
                   spider_nodes=nodes, caterpillar=nodes, tree_k=k, k2p=nodes - 2)


ACCEPTANCE_SCOPE = FamilyScope(path=12, cycle=12, star=8, bistar_sum=9, spider_nodes=10,
                               caterpillar=12, tree_k=4, k2p=5)


def _partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _oracle(g: UndirectedGraph):
    classes = enumerate_mecs(g)
    return polynomial_of(classes), spectrum_of(classes)


def _compare(name: str, g: UndirectedGraph, poly=None, count=None, spectrum: SizeSpectrum | None = None) -> Check:
    o_poly, o_spec = _oracle(g)
    problems = []
    if poly is not None and poly != o_poly:
        problems.append(f"polynomial {poly} != oracle {o_poly}")
    if count is not None and count != o_poly.eval_at_one():
        problems.append(f"count {count} != oracle {o_poly.eval_at_one()}")
    if spectrum is not None and spectrum != o_spec:
        problems.append(f"spectrum {spectrum} != oracle {o_spec}")
    return Check(name, not problems, "; ".join(problems))


def family_checks(scope: FamilyScope) -> Iterator[Check]:
    for p in range(1, scope.path + 1):
        yield _compare(f"path:{p}", fam.path_graph(p), fam.path_polynomial(p), spectrum=fam.path_size_spectrum(p))
    for p in range(4, scope.cycle + 1):
        yield _compare(f"cycle:{p}", fam.cycle_graph(p), fam.cycle_polynomial(p), spectrum=fam.cycle_size_spectrum(p))
    for p in range(0, scope.star + 1):
        yield _compare(f"star:{p}", fam.star_graph(p), fam.star_polynomial(p), fam.star_count(p),
                       fam.star_size_spectrum(p))
    for p in range(1, scope.bistar_sum):
        for q in range(1, scope.bistar_sum - p + 1):
            yield _compare(f"bistar:{p},{q}", fam.bistar_graph(p, q), fam.bistar_polynomial(p, q),
                           fam.bistar_count(p, q), fam.bistar_size_spectrum(p, q))
    for nodes in range(2, scope.spider_nodes + 1):
        for legs in _partitions(nodes - 1):
            yield _compare(f"spider:{','.join(map(str, legs))}", fam.spider_graph(legs), fam.spider_polynomial(legs))
    for k in range(2, scope.spider_nodes):
        for m in range(1, (scope.spider_nodes - 1) // k + 1):
            yield _compare(f"uniform-spider:{k}x{m}", fam.spider_graph((m,) * k), count=fam.uniform_spider_count(k, m))
    for p in range(1, scope.caterpillar + 1):
        yield _compare(f"caterpillar:{p}", fam.caterpillar_graph(p), fam.caterpillar_polynomial(p))
    for k in range(1, scope.tree_k + 1):
        c = fam.binary_tree_counts(k)
        yield _compare(f"btree:{k}", fam.binary_tree_graph(k), count=c.T)
        yield _compare(f"atree:{k}", fam.binary_tree_graph(k, additive=True), count=c.A)
    for p in range(1, scope.k2p + 1):
        g = fam.k2p_graph(p)
        check = _compare(f"k2p:{p}", g, count=fam.k2p_count(p), spectrum=fam.k2p_size_spectrum(p))
        o_deg = polynomial_of(enumerate_mecs(g)).degree
        if fam.k2p_immorality_number(p) != o_deg:
            check = Check(check.name, False, f"immorality number {fam.k2p_immorality_number(p)} != oracle {o_deg}")
        yield check


def identity_checks() -> Iterator[Check]:
    for m in range(1, 12):
        lhs = fam.uniform_spider_count(2, m)
        yield Check(f"two-leg spider count == F_{2 * m}:m={m}", lhs == fibonacci(2 * m), f"{lhs} vs {fibonacci(2 * m)}")
    yield Check("bistar(1,1) == path(4)", fam.bistar_polynomial(1, 1) == fam.path_polynomial(4))
    for k in range(1, 9):
        yield Check(f"spider(1^{k}) == star({k})", fam.spider_polynomial((1,) * k) == fam.star_polynomial(k))
    for p in range(7, 21):
        a, b = fam.caterpillar_count_recursive(p), fam.caterpillar_count(p)
        yield Check(f"caterpillar count recursion:p={p}", a == b, f"{a} vs {b}")
    for p in range(1, 15):
        spec = fam.path_size_spectrum(p)
        ok = spec.total() == fibonacci(p - 1) and spec.orientations() == 2 ** (p - 1)
        yield Check(f"path size sums:p={p}", ok, f"total {spec.total()}, orientations {spec.orientations()}")
    for p in range(2, 31):
        ok = fibonacci_polynomial(p) == fibonacci_polynomial(p - 1) + X * fibonacci_polynomial(p - 2)
        yield Check(f"Fibonacci polynomial recursion:p={p}", ok)


def lucas_triangle_checks(max_p: int = 24) -> Iterator[Check]:
    for p in range(2, max_p + 1):
        direct = lucas_polynomial(p)
        bad = []
        for k in range(1, p // 2 + 1):
            tri = lucas_triangle_coefficient(p, k)
            if tri != direct[k]:
                bad.append(f"k={k}: partition sum {tri} != {direct[k]}")
            pascal = lucas_polynomial(p - 2)[k - 1] + lucas_polynomial(p - 1)[k]
            if tri != pascal:
                bad.append(f"k={k}: Pascal step gives {pascal}")
        yield Check(f"Lucas triangle:p={p}", not bad, "; ".join(bad))


def bounds_checks(max_p: int = 9) -> Iterator[Check]:
    from .families import path_graph, star_graph
    from .graphgen import canonical_form

    for p in range(1, max_p + 1):
        sweeps = sweep_tree_bounds(p, max_p=max(9, max_p))
        path_form = canonical_form(path_graph(p))
        star_form = canonical_form(star_graph(p - 1))
        count_ok = all(s.count_report.holds for s in sweeps)
        lower_tight = {canonical_form(s.tree) for s in sweeps if s.count_report.tight_lower}
        upper_tight = {canonical_form(s.tree) for s in sweeps if s.count_report.tight_upper}
        yield Check(f"tree count bounds:p={p}", count_ok, f"{len(sweeps)} trees")
        yield Check(f"lower bound tight exactly at path:p={p}", lower_tight == {path_form})
        yield Check(f"upper bound tight exactly at star:p={p}", upper_tight == {star_form})
        classes = [r for s in sweeps for r in s.class_reports]
        yield Check(f"class size bounds:p={p}", all(r.holds for r in classes), f"{len(classes)} classes")
        mism = sum(s.product_mismatches for s in sweeps)
        yield Check(f"chain-component product equals class size:p={p}", mism == 0, f"{mism} mismatches")
        single = [r for s in sweeps for r in s.single_chain_reports]
        yield Check(f"single chain component bounds:p={p}", all(r.holds for r in single), f"{len(single)} classes")
