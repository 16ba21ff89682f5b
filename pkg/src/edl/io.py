"""Text and JSON forms of graphs, CRGs, families and exact numbers."""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction

from edl.crg import NAMED_CRGS, CRG, k_wb, parse_crg
from edl.embedding import ForbFamily
from edl.graphs import Graph, graph_from_edges, preset

_RATIONAL_RE = re.compile(r"^\s*-?\d+\s*(/\s*\d+\s*)?$")


def parse_rational(text: str) -> Fraction:
    """``"a/b"`` or ``"a"``; decimals are rejected so that inputs stay exact."""
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"expected an exact rational like 3/5, got {text!r}")
    return Fraction(text.replace(" ", ""))


def fmt_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def graph_from_json(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise ValueError('graph JSON needs the keys "n" and "edges"')
    return graph_from_edges(int(obj["n"]), [tuple(e) for e in obj["edges"]])


def graph_to_json(G: Graph) -> dict:
    return G.to_json()


def parse_graph_text(text: str) -> Graph:
    """Compact form ``"n:u-v,u-v,..."``."""
    n_part, _, edge_part = text.partition(":")
    n = int(n_part)
    edges = []
    for tok in filter(None, (t.strip() for t in edge_part.split(","))):
        u, _, v = tok.partition("-")
        edges.append((int(u), int(v)))
    return graph_from_edges(n, edges)


def load_graph(spec: str) -> Graph:
    """A JSON file path, a compact ``n:u-v,...`` string, inline JSON, or a preset name."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return graph_from_json(json.load(fh))
    s = spec.strip()
    if s.startswith("{"):
        return graph_from_json(json.loads(s))
    if re.match(r"^\d+\s*:", s):
        return parse_graph_text(s)
    return preset(s)


def family_from_json(obj) -> ForbFamily:
    if isinstance(obj, dict):
        obj = [obj]
    return ForbFamily(tuple(graph_from_json(o) for o in obj))


def load_family(spec: str) -> ForbFamily:
    """A JSON file holding a list of graphs, or ``;``-free specs joined by ``|``."""
    if os.path.exists(spec):
        with open(spec) as fh:
            return family_from_json(json.load(fh))
    return ForbFamily(tuple(load_graph(part) for part in spec.split("|")))


def family_to_json(F: ForbFamily) -> list:
    return [G.to_json() for G in F.graphs]


def load_crg(spec: str) -> CRG:
    """CRG text (``"WWB;ggg"``) or a named CRG such as ``K3``."""
    if spec in NAMED_CRGS:
        return NAMED_CRGS[spec]
    m = re.match(r"^K\((\d+),\s*(\d+)\)$", spec.strip())
    if m:
        return k_wb(int(m.group(1)), int(m.group(2)))
    return parse_crg(spec)
