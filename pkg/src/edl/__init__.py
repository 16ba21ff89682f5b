"""Exact edit-distance functions of hereditary graph properties, computed via colored regularity graphs."""

from edl.crg import CRG, complement_crg, components, g, g_value, is_p_core, k_wb, parse_crg
from edl.edf import Envelope, LinFrac, Surd, h9_edf, max_point, split_edf
from edl.embedding import ForbFamily, embeds, in_family
from edl.enumeration import enumerate_crgs, family_grid_minima, min_g_over_family
from edl.graphs import Graph, complement, graph_from_edges, h9

__all__ = [
    "CRG", "complement_crg", "components", "g", "g_value", "is_p_core", "k_wb", "parse_crg",
    "Envelope", "LinFrac", "Surd", "h9_edf", "max_point", "split_edf",
    "ForbFamily", "embeds", "in_family",
    "enumerate_crgs", "family_grid_minima", "min_g_over_family",
    "Graph", "complement", "graph_from_edges", "h9",
]
