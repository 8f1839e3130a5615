"""Counting and enumerating Markov equivalence classes of DAGs on small skeletons."""

from .graph import (
    GraphError,
    UndirectedGraph,
    clustering_coefficient,
    components,
    degree_stats,
    make_graph,
    parse_edge_list,
    parse_graph6,
    format_graph6,
    read_graph_file,
)
from .polycomb import Polynomial, SizeSpectrum, format_polynomial, parse_polynomial
from .oracle import (
    Dag,
    EnumerationCapError,
    EssentialGraph,
    Mec,
    acyclic_orientations,
    chain_components,
    directed_components,
    enumerate_mecs,
    immorality_number,
    mec_polynomial,
    size_spectrum,
)
from .families import FamilyError, FamilySpec, build, parse_family
from .graphgen import all_connected_graphs, all_trees, canonical_form, canonical_id

__version__ = "0.1.0"

__all__ = [
    "GraphError", "UndirectedGraph", "clustering_coefficient", "components", "degree_stats",
    "make_graph", "parse_edge_list", "parse_graph6", "format_graph6", "read_graph_file",
    "Polynomial", "SizeSpectrum", "format_polynomial", "parse_polynomial",
    "Dag", "EnumerationCapError", "EssentialGraph", "Mec", "acyclic_orientations",
    "chain_components", "directed_components", "enumerate_mecs", "immorality_number",
    "mec_polynomial", "size_spectrum",
    "FamilyError", "FamilySpec", "build", "parse_family",
    "all_connected_graphs", "all_trees", "canonical_form", "canonical_id",
]
