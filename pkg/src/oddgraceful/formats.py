"""Serialization: JSON labeling documents (round-trippable), DOT, and CSV.

The JSON document is the interchange format: ``generate`` writes it and
``verify`` reads it back. Vertices appear in topology order (u_1..u_m then
v_1..v_n), edges likewise (cycle edges then path edges). Stored edge labels
are derived data; verification always recomputes them from vertex labels, so
a document with tampered vertex labels is judged on substance.

Output is byte-identical across runs for identical inputs.
"""

from __future__ import annotations

import json

from .errors import DocumentError
from .graphs import (
    Edge,
    GraphTopology,
    Labeling,
    VertexId,
    canonical_edge,
)
from .verification import (
    DuplicateEdgeLabel,
    DuplicateVertexLabel,
    EdgeLabelEven,
    EdgeLabelSetIncomplete,
    VerificationReport,
    VertexLabelOutOfRange,
    edge_labels,
)


def labeling_document(topology: GraphTopology, labeling: Labeling) -> dict:
    """Build the JSON-ready document for a labeled topology."""
    induced = edge_labels(topology, labeling)
    return {
        "graph": {"m": topology.m, "n": topology.n},
        "q": topology.q,
        "vertices": [{"id": str(v), "label": labeling[v]} for v in topology.vertices],
        "edges": [
            {"from": str(a), "to": str(b), "label": value}
            for (a, b), value in induced.labels
        ],
    }


def document_to_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def _want(mapping: dict, key: str, context: str):
    if not isinstance(mapping, dict) or key not in mapping:
        raise DocumentError(f"{context}: missing {key!r}")
    return mapping[key]


def _want_int(value, context: str) -> int:
    # bool is an int subclass; reject it explicitly
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"{context}: expected an integer, got {value!r}")
    return value


def _want_vertex(value, context: str) -> VertexId:
    if not isinstance(value, str):
        raise DocumentError(f"{context}: expected a vertex id string, got {value!r}")
    try:
        return VertexId.parse(value)
    except ValueError as exc:
        raise DocumentError(f"{context}: {exc}") from None


def parse_labeling_document(text: str) -> tuple[GraphTopology, Labeling]:
    """Parse a JSON labeling document back into a topology and labeling."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    if not isinstance(raw, dict):
        raise DocumentError("document root must be an object")

    graph = _want(raw, "graph", "document")
    m = _want_int(_want(graph, "m", "graph"), "graph.m")
    n = _want_int(_want(graph, "n", "graph"), "graph.n")
    if m < 0 or n < 0:
        raise DocumentError(f"graph sizes must be non-negative, got m={m}, n={n}")

    raw_vertices = _want(raw, "vertices", "document")
    if not isinstance(raw_vertices, list) or not raw_vertices:
        raise DocumentError("document needs a non-empty 'vertices' list")
    vertices: list[VertexId] = []
    assignment: dict[VertexId, int] = {}
    for position, entry in enumerate(raw_vertices):
        context = f"vertices[{position}]"
        vertex = _want_vertex(_want(entry, "id", context), context)
        label = _want_int(_want(entry, "label", context), f"{context}.label")
        if label < 0:
            raise DocumentError(f"{context}: label must be non-negative, got {label}")
        if vertex in assignment:
            raise DocumentError(f"{context}: duplicate vertex id {vertex}")
        vertices.append(vertex)
        assignment[vertex] = label

    raw_edges = _want(raw, "edges", "document")
    if not isinstance(raw_edges, list) or not raw_edges:
        raise DocumentError("document needs a non-empty 'edges' list")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    for position, entry in enumerate(raw_edges):
        context = f"edges[{position}]"
        a = _want_vertex(_want(entry, "from", context), context)
        b = _want_vertex(_want(entry, "to", context), context)
        if a == b:
            raise DocumentError(f"{context}: self-loop at {a}")
        if a not in assignment or b not in assignment:
            raise DocumentError(f"{context}: edge references an unknown vertex")
        edge = canonical_edge(a, b)
        if edge in seen:
            raise DocumentError(f"{context}: duplicate edge {a}-{b}")
        seen.add(edge)
        edges.append(edge)

    q = _want_int(_want(raw, "q", "document"), "q")
    if q != len(edges):
        raise DocumentError(f"document says q={q} but lists {len(edges)} edges")

    topology = GraphTopology(
        vertices=tuple(vertices), edges=tuple(edges), m=m, n=n, q=q
    )
    return topology, Labeling(assignment)


def to_dot(topology: GraphTopology, labeling: Labeling) -> str:
    """Undirected DOT text; node display is ``id:label``, edges carry their label."""
    induced = edge_labels(topology, labeling)
    lines = ["graph G {"]
    lines.extend(f'  {v} [label="{v}:{labeling[v]}"];' for v in topology.vertices)
    lines.extend(
        f"  {a} -- {b} [label={value}];" for (a, b), value in induced.labels
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_csv(topology: GraphTopology, labeling: Labeling) -> str:
    """Vertex section then edge section; edges are numbered e1..eq in edge order."""
    induced = edge_labels(topology, labeling)
    lines = ["vertex,label"]
    lines.extend(f"{v},{labeling[v]}" for v in topology.vertices)
    lines.append("edge,from,to,label")
    lines.extend(
        f"e{index},{a},{b},{value}"
        for index, ((a, b), value) in enumerate(induced.labels, start=1)
    )
    return "\n".join(lines) + "\n"


def violation_to_dict(violation) -> dict:
    if isinstance(violation, DuplicateVertexLabel):
        return {
            "kind": "DuplicateVertexLabel",
            "label": violation.label,
            "vertices": [str(v) for v in violation.vertices],
        }
    if isinstance(violation, VertexLabelOutOfRange):
        return {
            "kind": "VertexLabelOutOfRange",
            "vertex": str(violation.vertex),
            "label": violation.label,
            "upper": violation.upper,
        }
    if isinstance(violation, EdgeLabelEven):
        return {
            "kind": "EdgeLabelEven",
            "edge": [str(violation.edge[0]), str(violation.edge[1])],
            "label": violation.label,
        }
    if isinstance(violation, DuplicateEdgeLabel):
        return {
            "kind": "DuplicateEdgeLabel",
            "label": violation.label,
            "edges": [[str(a), str(b)] for a, b in violation.edges],
        }
    if isinstance(violation, EdgeLabelSetIncomplete):
        return {"kind": "EdgeLabelSetIncomplete", "missing": list(violation.missing)}
    raise TypeError(f"unknown violation type {type(violation).__name__}")


def report_to_dict(report: VerificationReport, q: int) -> dict:
    return {
        "is_odd_graceful": report.is_odd_graceful,
        "q": q,
        "violations": [violation_to_dict(v) for v in report.violations],
    }
