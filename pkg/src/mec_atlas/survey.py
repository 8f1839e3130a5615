"""Per-graph statistics, exhaustive surveys and the polynomial invariance check."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence, TypeVar

from .graph import (
    UndirectedGraph,
    components,
    count_induced_3paths,
    count_two_paths,
    clustering_coefficient,
    degree_stats,
    is_triangle_free,
)
from .graphgen import all_connected_graphs, canonical_id
from .oracle import (
    Mec,
    chain_components,
    directed_components,
    enumerate_mecs,
    polynomial_of,
    spectrum_of,
)
from .polycomb import Polynomial, SizeSpectrum, format_polynomial

T = TypeVar("T")
R = TypeVar("R")

SURVEY_FIELDS = (
    "canonical_id", "p", "edge_count", "max_degree", "avg_degree", "avg_degree_dec",
    "clustering_coefficient", "clustering_coefficient_dec", "clustering_defined",
    "triangle_free", "induced_3paths", "mec_count", "avg_class_size", "avg_class_size_dec",
    "max_class_size", "immorality_ratio_rows", "mec_polynomial", "size_bound_holds",
)


def fmt_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fmt_decimal(q: Fraction) -> str:
    return f"{float(q):.12g}"


def ordered_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """``map`` that optionally fans out to processes; results keep input order."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (8 * workers))))


def size_bound_holds(mec: Mec) -> bool:
    """Whether a class meets ``2^ell <= size <= ((p-m)/ell)^ell`` (tree bounds, applied as-is)."""
    eg = mec.essential
    ell = len(chain_components(eg))
    if ell == 0:
        return mec.size == 1
    m = len(directed_components(eg))
    p = mec.skeleton.n
    return 2 ** ell <= mec.size and mec.size * ell ** ell <= (p - m) ** ell


@dataclass(frozen=True)
class SurveyRecord:
    canonical_id: str
    p: int
    edge_count: int
    max_degree: int
    avg_degree: Fraction
    clustering_coefficient: Fraction
    clustering_defined: bool
    triangle_free: bool
    induced_3paths: int
    mec_count: int
    avg_class_size: Fraction
    max_class_size: int
    immorality_ratio_rows: tuple[tuple[int, Fraction | None], ...]
    mec_polynomial: Polynomial = field(compare=True)
    size_bound_holds: bool = True

    def row(self) -> list[str]:
        ratios = ";".join(f"{s}:{'-' if r is None else fmt_fraction(r)}"
                          for s, r in self.immorality_ratio_rows)
        return [
            self.canonical_id, str(self.p), str(self.edge_count), str(self.max_degree),
            fmt_fraction(self.avg_degree), fmt_decimal(self.avg_degree),
            fmt_fraction(self.clustering_coefficient), fmt_decimal(self.clustering_coefficient),
            str(self.clustering_defined).lower(), str(self.triangle_free).lower(),
            str(self.induced_3paths), str(self.mec_count),
            fmt_fraction(self.avg_class_size), fmt_decimal(self.avg_class_size),
            str(self.max_class_size), ratios, format_polynomial(self.mec_polynomial),
            str(self.size_bound_holds).lower(),
        ]


def survey_record(g: UndirectedGraph, cap: int | None = None) -> SurveyRecord:
    classes = enumerate_mecs(g, cap)
    sites = count_induced_3paths(g)
    max_deg, avg_deg = degree_stats(g)
    total = sum(c.size for c in classes)
    ratios = sorted((c.size, Fraction(c.n_immoralities, sites) if sites else None) for c in classes)
    return SurveyRecord(
        canonical_id=canonical_id(g),
        p=g.n,
        edge_count=g.m,
        max_degree=max_deg,
        avg_degree=avg_deg,
        clustering_coefficient=clustering_coefficient(g),
        clustering_defined=count_two_paths(g) > 0,
        triangle_free=is_triangle_free(g),
        induced_3paths=sites,
        mec_count=len(classes),
        avg_class_size=Fraction(total, len(classes)),
        max_class_size=max(c.size for c in classes),
        immorality_ratio_rows=tuple((s, r) for s, r in ratios),
        mec_polynomial=polynomial_of(classes),
        size_bound_holds=all(size_bound_holds(c) for c in classes),
    )


def run_survey(p: int, triangle_free: bool = False, workers: int = 1) -> list[SurveyRecord]:
    graphs = list(all_connected_graphs(p, triangle_free))
    records = ordered_map(survey_record, graphs, workers)
    return sorted(records, key=lambda r: r.canonical_id)


def survey_csv(records: Iterable[SurveyRecord]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SURVEY_FIELDS)
    for r in records:
        w.writerow(r.row())
    return buf.getvalue()


# ---------------------------------------------------------------------------
# Invariance check
# ---------------------------------------------------------------------------

def _poly_task(g: UndirectedGraph) -> tuple[str, Polynomial]:
    return canonical_id(g), polynomial_of(enumerate_mecs(g))


@dataclass(frozen=True)
class InvarianceReport:
    p: int
    triangle_free: bool
    graphs: int
    collisions: list[tuple[Polynomial, list[str]]]  # polynomial -> canonical ids sharing it


def invariant_check(p: int, triangle_free: bool = False, workers: int = 1) -> InvarianceReport:
    """Group all connected graphs on ``p`` vertices by ``M(G;x)`` and report shared polynomials."""
    graphs = list(all_connected_graphs(p, triangle_free))
    pairs = ordered_map(_poly_task, graphs, workers)
    groups: dict[Polynomial, list[str]] = {}
    for cid, poly in pairs:
        groups.setdefault(poly, []).append(cid)
    collisions = sorted(((poly, sorted(ids)) for poly, ids in groups.items() if len(ids) > 1),
                        key=lambda t: t[1])
    return InvarianceReport(p, triangle_free, len(graphs), collisions)


# ---------------------------------------------------------------------------
# Single-graph enumeration across components
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EnumerationReport:
    graph: UndirectedGraph
    components: list[list[int]]
    polynomial: Polynomial
    spectrum: SizeSpectrum
    orientations: int
    classes: list[tuple[int, Mec]]  # (component index, class on that component)
    component_graphs: list[tuple[UndirectedGraph, list[int]]]

    @property
    def count(self) -> int:
        return self.polynomial.eval_at_one()


def enumerate_graph(g: UndirectedGraph, cap: int | None = None, workers: int = 1) -> EnumerationReport:
    """Enumerate each connected component; polynomials and spectra multiply across them."""
    comps = components(g) if g.n else []
    poly = Polynomial.constant(1)
    spec = SizeSpectrum({1: 1})
    orientations = 1
    listed: list[tuple[int, Mec]] = []
    subgraphs = []
    for idx, comp in enumerate(comps):
        sub, labels = g.induced_subgraph(comp)
        subgraphs.append((sub, labels))
        classes = enumerate_mecs(sub, cap, workers)
        poly = poly * polynomial_of(classes)
        spec = spec * spectrum_of(classes)
        orientations *= sum(c.size for c in classes)
        listed.extend((idx, c) for c in classes)
    return EnumerationReport(g, comps, poly, spec, orientations, listed, subgraphs)
