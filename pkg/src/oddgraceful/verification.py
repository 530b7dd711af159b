"""Decides whether a labeling is odd graceful, itemizing every violation.

A labeling of a graph with q edges passes when the vertex labels are distinct
values in [0, 2q-1] and the induced absolute differences over the edges are
exactly the odd values 1, 3, ..., 2q-1, each exactly once. The checks accept
arbitrary topologies, not just cycle-path unions, so the same code certifies
search results.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import MissingVertexLabelError
from .graphs import Edge, EdgeLabelMap, GraphTopology, Labeling, VertexId


def _edge_text(edge: Edge) -> str:
    return f"{edge[0]}-{edge[1]}"


@dataclass(frozen=True)
class DuplicateVertexLabel:
    label: int
    vertices: tuple[VertexId, ...]

    def describe(self) -> str:
        holders = ", ".join(str(v) for v in self.vertices)
        return f"vertex label {self.label} shared by {holders}"


@dataclass(frozen=True)
class VertexLabelOutOfRange:
    vertex: VertexId
    label: int
    upper: int

    def describe(self) -> str:
        return f"vertex {self.vertex} has label {self.label} outside [0, {self.upper}]"


@dataclass(frozen=True)
class EdgeLabelEven:
    edge: Edge
    label: int

    def describe(self) -> str:
        return f"edge {_edge_text(self.edge)} has even label {self.label}"


@dataclass(frozen=True)
class DuplicateEdgeLabel:
    label: int
    edges: tuple[Edge, ...]

    def describe(self) -> str:
        holders = ", ".join(_edge_text(e) for e in self.edges)
        return f"edge label {self.label} induced by {holders}"


@dataclass(frozen=True)
class EdgeLabelSetIncomplete:
    missing: tuple[int, ...]

    def describe(self) -> str:
        values = ", ".join(str(v) for v in self.missing)
        return f"missing odd edge labels: {values}"


Violation = Union[
    DuplicateVertexLabel,
    VertexLabelOutOfRange,
    EdgeLabelEven,
    DuplicateEdgeLabel,
    EdgeLabelSetIncomplete,
]


@dataclass(frozen=True)
class VerificationReport:
    is_odd_graceful: bool
    violations: tuple[Violation, ...]


def _require_total(topology: GraphTopology, labeling: Labeling) -> None:
    missing = [v for v in topology.vertices if v not in labeling]
    if missing:
        shown = ", ".join(str(v) for v in missing[:5])
        suffix = ", ..." if len(missing) > 5 else ""
        raise MissingVertexLabelError(
            f"labeling misses {len(missing)} vertices ({shown}{suffix})"
        )


def edge_labels(topology: GraphTopology, labeling: Labeling) -> EdgeLabelMap:
    """Induced |f(a) - f(b)| per edge, in the topology's edge order."""
    _require_total(topology, labeling)
    return EdgeLabelMap(
        tuple(((a, b), abs(labeling[a] - labeling[b])) for a, b in topology.edges)
    )


def verify_odd_graceful(topology: GraphTopology, labeling: Labeling) -> VerificationReport:
    """Run every check and report all violations in deterministic order.

    Order of findings: vertex labels out of range (vertex order), duplicate
    vertex labels (by first holder), even edge labels (edge order), duplicate
    edge labels (by first holder), then a single finding for any odd values
    absent from the induced edge labels.
    """
    _require_total(topology, labeling)
    upper = 2 * topology.q - 1
    violations: list[Violation] = []

    for vertex in topology.vertices:
        value = labeling[vertex]
        if value < 0 or value > upper:
            violations.append(VertexLabelOutOfRange(vertex=vertex, label=value, upper=upper))

    holders: dict[int, list[VertexId]] = {}
    for vertex in topology.vertices:
        holders.setdefault(labeling[vertex], []).append(vertex)
    for vertex in topology.vertices:
        shared = holders[labeling[vertex]]
        if len(shared) > 1 and shared[0] == vertex:
            violations.append(
                DuplicateVertexLabel(label=labeling[vertex], vertices=tuple(shared))
            )

    induced = edge_labels(topology, labeling)
    by_value: dict[int, list[Edge]] = {}
    for edge, value in induced.labels:
        by_value.setdefault(value, []).append(edge)
    for edge, value in induced.labels:
        if value % 2 == 0:
            violations.append(EdgeLabelEven(edge=edge, label=value))
    for edge, value in induced.labels:
        shared = by_value[value]
        if len(shared) > 1 and shared[0] == edge:
            violations.append(DuplicateEdgeLabel(label=value, edges=tuple(shared)))
    missing = tuple(
        value for value in range(1, 2 * topology.q, 2) if value not in by_value
    )
    if missing:
        violations.append(EdgeLabelSetIncomplete(missing=missing))

    return VerificationReport(is_odd_graceful=not violations, violations=tuple(violations))


def complement_labeling(topology: GraphTopology, labeling: Labeling) -> Labeling:
    """Mirror every label to 2q - 1 - f(v).

    Absolute differences are preserved and [0, 2q-1] maps onto itself, so the
    complement of a passing labeling passes as well.
    """
    _require_total(topology, labeling)
    top = 2 * topology.q - 1
    return Labeling({v: top - labeling[v] for v in topology.vertices})
