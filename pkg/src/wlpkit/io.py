"""Text and JSON formats for graphs, facet lists, matrices and reports."""

from __future__ import annotations

import io
import json
from pathlib import Path

import networkx as nx
import numpy as np
from scipy import io as spio
from scipy import sparse

from .complexes import SimplicialComplex
from .graphs import Graph, GraphError, from_generator_spec, make_graph, vertices_of


class FormatError(ValueError):
    pass


def _content_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


# graphs ---------------------------------------------------------------

def render_edge_list(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty edge list")
    try:
        n = int(lines[0])
        edges = [tuple(int(t) for t in ln.split()) for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"bad edge list: {exc}") from None
    return make_graph(n, edges)


def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def graph_from_json(data: dict) -> Graph:
    try:
        return make_graph(int(data["n"]), data.get("edges", []))
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad graph JSON: {exc}") from None


def load_graph(spec: str) -> Graph:
    """A generator spec like ``broom:5``, or a path to an edge-list / JSON file."""
    path = Path(spec)
    if path.is_file():
        text = path.read_text()
        if text.lstrip().startswith("{"):
            return graph_from_json(json.loads(text))
        return parse_edge_list(text)
    try:
        return from_generator_spec(spec)
    except GraphError as exc:
        raise FormatError(f"{spec!r} is neither a file nor a generator spec ({exc})") from None


def graph6(G: Graph) -> str:
    g = nx.Graph()
    g.add_nodes_from(range(G.n))
    g.add_edges_from(G.edges)
    return nx.to_graph6_bytes(g, header=False).decode().strip()


# facet lists -----------------------------------------------------------

def render_facets(D: SimplicialComplex) -> str:
    lines = [str(D.n)] + [" ".join(map(str, vertices_of(F))) for F in D.facets]
    return "\n".join(lines) + "\n"


def parse_facets(text: str) -> SimplicialComplex:
    lines = _content_lines(text)
    if not lines:
        raise FormatError("empty facet list")
    try:
        n = int(lines[0])
        faces = [[int(t) for t in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"bad facet list: {exc}") from None
    return SimplicialComplex.from_faces(n, faces)


def complex_to_json(D: SimplicialComplex) -> dict:
    return {"n": D.n, "facets": [vertices_of(F) for F in D.facets]}


def complex_from_json(data: dict) -> SimplicialComplex:
    return SimplicialComplex.from_faces(int(data["n"]), data["facets"])


# matrices --------------------------------------------------------------

def render_matrix(M, row_labels=None, col_labels=None) -> str:
    """``rows cols`` header then one row per line; labeled form adds a header row and row names."""
    M = M.toarray() if sparse.issparse(M) else np.asarray(M)
    rows, cols = M.shape
    out = [f"{rows} {cols}"]
    if row_labels is None:
        out += [" ".join(str(int(x)) for x in row) for row in M]
    else:
        out.append(" ".join(["-"] + list(col_labels)))
        out += [" ".join([lab] + [str(int(x)) for x in row]) for lab, row in zip(row_labels, M)]
    return "\n".join(out) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    lines = _content_lines(text)
    rows, cols = (int(t) for t in lines[0].split())
    body = lines[1:]
    labeled = bool(body) and body[0].split()[0] == "-"
    if labeled:
        body = [ln.split()[1:] for ln in body[1:]]
    else:
        body = [ln.split() for ln in body]
    M = np.array([[int(t) for t in ln] for ln in body], dtype=np.int64).reshape(rows, cols)
    return M


def render_matrix_market(M) -> str:
    buf = io.BytesIO()
    spio.mmwrite(buf, sparse.coo_matrix(M), field="integer")
    return buf.getvalue().decode()


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)
