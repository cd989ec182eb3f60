"""Recognition of CIS graphs and related graph classes."""

import json

from ._core import (
    CapacityError,
    Graph,
    ParseError,
    UnsupportedSize,
    all_graphs,
    gallery,
    gallery_names,
    holds,
    is_cis_line_root,
    is_equistable,
    is_isomorphic,
    is_strongly_equistable,
    line_graph,
    maximal_cliques,
    maximal_stable_sets,
    projective_split,
    random_split,
    root_graph,
    scan_violations,
    verify_table,
)
from . import _core


def classify(graph, graph_id="", include_lp=False):
    """Full report as a dict (schema cisgraphs.report/1)."""
    return json.loads(_core.classify_json(graph, graph_id, include_lp))


def verify_report(report):
    """Re-checks every certificate of a report dict."""
    return _core.verify_report_json(json.dumps(report))


def equistable_certificate(graph, strong=False):
    return json.loads(_core.equistable_json(graph, strong))


__all__ = [
    "CapacityError",
    "Graph",
    "ParseError",
    "UnsupportedSize",
    "all_graphs",
    "classify",
    "equistable_certificate",
    "gallery",
    "gallery_names",
    "holds",
    "is_cis_line_root",
    "is_equistable",
    "is_isomorphic",
    "is_strongly_equistable",
    "line_graph",
    "maximal_cliques",
    "maximal_stable_sets",
    "projective_split",
    "random_split",
    "root_graph",
    "scan_violations",
    "verify_report",
    "verify_table",
]
