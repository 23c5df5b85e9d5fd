"""Finite connected metric graphs encoded as paired darts.

Edge ``e`` owns the two darts ``2e`` and ``2e+1``; the first points away
from the endpoint named first in the input file.  All structure downstream
(rotation systems, boundary walks) is phrased in terms of darts, so loops
and parallel edges need no special cases.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import CycleGraphError, GraphFormatError, GraphValidationError


def mate(dart: int) -> int:
    """The oppositely directed dart of the same edge."""
    return dart ^ 1


def edge_of(dart: int) -> int:
    """The undirected edge owning a dart."""
    return dart >> 1


@dataclass(frozen=True)
class MetricGraph:
    """A finite metric graph.

    ``vertex_of[d]`` is the vertex dart ``d`` emanates from; ``lengths[e]``
    is the length of edge ``e``.  Loops are allowed and count twice toward
    the degree of their vertex.  Instances are immutable; every operation
    that changes the graph returns a new one.

    The constructor checks structural sanity only (array sizes, vertex ids
    in range).  Connectivity, degree floors and length positivity are the
    business of :func:`parse_graph` (which enforces them) and
    :func:`validate` (which reports them), so that diagnostic tooling can
    hold ill-formed graphs in memory.
    """

    vertex_of: tuple[int, ...]
    lengths: tuple[float, ...]
    edge_names: tuple[str, ...]
    vertex_names: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.vertex_of) != 2 * len(self.lengths):
            raise ValueError("dart table size must be twice the edge count")
        if len(self.edge_names) != len(self.lengths):
            raise ValueError("edge name count does not match edge count")
        n = len(self.vertex_names)
        if self.vertex_of and not all(0 <= v < n for v in self.vertex_of):
            raise ValueError("dart endpoint out of range")

    @property
    def edge_count(self) -> int:
        return len(self.lengths)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_names)

    @property
    def dart_count(self) -> int:
        return len(self.vertex_of)

    @cached_property
    def _darts_by_vertex(self) -> tuple[tuple[int, ...], ...]:
        table: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for d, v in enumerate(self.vertex_of):
            table[v].append(d)
        return tuple(tuple(ds) for ds in table)

    def darts_at(self, vertex: int) -> tuple[int, ...]:
        """Darts emanating from ``vertex``, in increasing dart id."""
        return self._darts_by_vertex[vertex]

    def degree(self, vertex: int) -> int:
        return len(self._darts_by_vertex[vertex])

    def endpoints(self, edge: int) -> tuple[int, int]:
        return self.vertex_of[2 * edge], self.vertex_of[2 * edge + 1]

    def is_loop(self, edge: int) -> bool:
        u, v = self.endpoints(edge)
        return u == v

    def total_length(self) -> float:
        return sum(self.lengths)


def parse_graph(text: str) -> MetricGraph:
    """Parse the edge-list file format.

    One record per line::

        edge <name> <u> <v> <length>

    ``#`` starts a comment, blank lines are skipped, names are alphanumeric
    tokens.  Vertices come into existence the first time they are named;
    edges and darts are numbered in file order.  Raises
    :class:`GraphFormatError` with the offending line number on syntax
    errors, non-positive lengths and duplicate edge names, and
    :class:`GraphValidationError` if the result is not connected.
    """
    vertex_ids: dict[str, int] = {}
    vertex_of: list[int] = []
    lengths: list[float] = []
    edge_names: list[str] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "edge":
            raise GraphFormatError(f"unknown record type {parts[0]!r}", lineno)
        if len(parts) != 5:
            raise GraphFormatError("expected: edge <name> <u> <v> <length>", lineno)
        _, name, u, v, length_text = parts
        for token in (name, u, v):
            if not token.isalnum():
                raise GraphFormatError(f"name {token!r} is not alphanumeric", lineno)
        if name in edge_names:
            raise GraphFormatError(f"duplicate edge name {name!r}", lineno)
        try:
            length = float(length_text)
        except ValueError:
            raise GraphFormatError(f"bad length {length_text!r}", lineno) from None
        if not math.isfinite(length) or length <= 0.0:
            raise GraphFormatError(f"edge length must be positive, got {length_text}", lineno)
        for endpoint in (u, v):
            vertex_of.append(vertex_ids.setdefault(endpoint, len(vertex_ids)))
        lengths.append(length)
        edge_names.append(name)

    if not edge_names:
        raise GraphFormatError("no edge records found")

    names: list[str] = [""] * len(vertex_ids)
    for vname, vid in vertex_ids.items():
        names[vid] = vname
    graph = MetricGraph(tuple(vertex_of), tuple(lengths), tuple(edge_names), tuple(names))
    if len(connected_components(graph)) != 1:
        raise GraphValidationError("graph is not connected")
    return graph


def format_graph(graph: MetricGraph) -> str:
    """Canonical text form: one ``edge`` record per edge, in edge order."""
    lines = []
    for e in range(graph.edge_count):
        u, v = graph.endpoints(e)
        lines.append(
            f"edge {graph.edge_names[e]} {graph.vertex_names[u]} "
            f"{graph.vertex_names[v]} {graph.lengths[e]:.12g}"
        )
    return "\n".join(lines) + "\n"


def graph_hash(graph: MetricGraph) -> str:
    """Hex digest of the canonical text form."""
    return hashlib.sha256(format_graph(graph).encode()).hexdigest()


def connected_components(graph: MetricGraph) -> list[list[int]]:
    """Vertex sets of the components, each sorted, ordered by minimum."""
    parent = list(range(graph.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in range(graph.edge_count):
        u, v = graph.endpoints(e)
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    groups: dict[int, list[int]] = {}
    for v in range(graph.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def euler_char(graph: MetricGraph) -> int:
    """|V| - |E|."""
    return graph.vertex_count - graph.edge_count


def betti(graph: MetricGraph) -> int:
    """First Betti number |E| - |V| + 1 of a connected graph."""
    return graph.edge_count - graph.vertex_count + 1


def girth(graph: MetricGraph) -> int | float:
    """Edge count of a shortest cycle; ``math.inf`` for a forest.

    A loop is a cycle of length 1 and a pair of parallel edges a cycle of
    length 2.  Computed as min over edges e=(u,v) of dist(u,v) in G-e plus
    one, which handles multigraphs uniformly.
    """
    best: int | float = math.inf
    for e in range(graph.edge_count):
        u, v = graph.endpoints(e)
        if u == v:
            return 1
        d = _distance_avoiding(graph, u, v, e)
        if d is not None and d + 1 < best:
            best = d + 1
            if best == 2:
                break
    return best


def _distance_avoiding(graph: MetricGraph, src: int, dst: int, banned_edge: int) -> int | None:
    dist = {src: 0}
    frontier = [src]
    while frontier:
        nxt = []
        for x in frontier:
            for d in graph.darts_at(x):
                if edge_of(d) == banned_edge:
                    continue
                y = graph.vertex_of[mate(d)]
                if y not in dist:
                    dist[y] = dist[x] + 1
                    if y == dst:
                        return dist[y]
                    nxt.append(y)
        frontier = nxt
    return None


def is_cycle_graph(graph: MetricGraph) -> bool:
    """True for a single cycle: connected with every degree equal to 2."""
    return (
        all(graph.degree(v) == 2 for v in range(graph.vertex_count))
        and len(connected_components(graph)) == 1
    )


@dataclass(frozen=True)
class Violation:
    """One structural defect found by :func:`validate`."""

    kind: str  # "disconnected" | "min_degree" | "nonpositive_length"
    message: str


def validate(graph: MetricGraph, min_degree: int = 3) -> list[Violation]:
    """Report connectivity, degree-floor and length-positivity defects.

    Returns an empty list when the graph is clean.  Deterministic order:
    connectivity first, then degrees by vertex id, then lengths by edge id.
    """
    out: list[Violation] = []
    components = connected_components(graph)
    if len(components) != 1:
        out.append(Violation("disconnected", f"{len(components)} components"))
    for v in range(graph.vertex_count):
        if graph.degree(v) < min_degree:
            out.append(
                Violation(
                    "min_degree",
                    f"vertex {graph.vertex_names[v]} has degree {graph.degree(v)} < {min_degree}",
                )
            )
    for e in range(graph.edge_count):
        if not (math.isfinite(graph.lengths[e]) and graph.lengths[e] > 0.0):
            out.append(
                Violation(
                    "nonpositive_length",
                    f"edge {graph.edge_names[e]} has length {graph.lengths[e]!r}",
                )
            )
    return out


def smooth(graph: MetricGraph) -> MetricGraph:
    """Suppress every degree-2 vertex, concatenating the two edge lengths.

    Returns the graph unchanged when all degrees are at least 3, so the
    operation is idempotent.  Raises :class:`CycleGraphError` when the graph
    is a single cycle (there is no branch vertex to anchor the result) and
    :class:`GraphValidationError` on degree-1 vertices, which have no
    sensible smoothing.
    """
    if is_cycle_graph(graph):
        raise CycleGraphError(
            "graph is a single cycle: it embeds on every surface after "
            "rescaling, so no genus machinery applies"
        )
    for v in range(graph.vertex_count):
        if graph.degree(v) < 2:
            raise GraphValidationError(
                f"vertex {graph.vertex_names[v]} has degree {graph.degree(v)}; "
                "smoothing requires every degree to be at least 2"
            )
    if all(graph.degree(v) >= 3 for v in range(graph.vertex_count)):
        return graph

    branch = [v for v in range(graph.vertex_count) if graph.degree(v) >= 3]
    new_id = {v: i for i, v in enumerate(branch)}
    records: list[tuple[str, int, int, float]] = []
    seen_darts: set[int] = set()

    for b in branch:
        for start in graph.darts_at(b):
            if start in seen_darts:
                continue
            # walk the chain of degree-2 vertices hanging off this dart
            chain_names = []
            length = 0.0
            d = start
            while True:
                seen_darts.add(d)
                seen_darts.add(mate(d))
                chain_names.append(graph.edge_names[edge_of(d)])
                length += graph.lengths[edge_of(d)]
                end = graph.vertex_of[mate(d)]
                if graph.degree(end) >= 3:
                    break
                a, c = graph.darts_at(end)
                d = c if a == mate(d) else a
            records.append(("".join(chain_names), new_id[b], new_id[end], length))

    vertex_of: list[int] = []
    lengths: list[float] = []
    edge_names: list[str] = []
    for name, u, v, length in records:
        vertex_of.extend((u, v))
        lengths.append(length)
        edge_names.append(name)
    return MetricGraph(
        tuple(vertex_of),
        tuple(lengths),
        tuple(edge_names),
        tuple(graph.vertex_names[v] for v in branch),
    )


def subdivide(graph: MetricGraph, edge: int, fractions: Sequence[float]) -> MetricGraph:
    """Split one edge into segments at the given interior positions.

    ``fractions`` are strictly increasing values in (0, 1); k of them turn
    the edge into k+1 segments whose lengths sum to the original.  Inverse
    of :func:`smooth` up to naming.  New vertices are named
    ``<edge-name>m1, ...``, new edges ``<edge-name>s0, ...``.
    """
    fs = list(fractions)
    if not fs:
        return graph
    if any(not 0.0 < f < 1.0 for f in fs) or any(b <= a for a, b in zip(fs, fs[1:])):
        raise ValueError("fractions must be strictly increasing within (0, 1)")

    ename = graph.edge_names[edge]
    u, v = graph.endpoints(edge)
    total = graph.lengths[edge]
    cuts = [0.0, *fs, 1.0]

    vertex_names = list(graph.vertex_names)
    mid_ids = []
    for i in range(len(fs)):
        name = f"{ename}m{i + 1}"
        while name in vertex_names:
            name += "x"
        mid_ids.append(len(vertex_names))
        vertex_names.append(name)

    chain = [u, *mid_ids, v]
    vertex_of: list[int] = []
    lengths: list[float] = []
    edge_names: list[str] = []
    for e in range(graph.edge_count):
        if e == edge:
            for i in range(len(chain) - 1):
                vertex_of.extend((chain[i], chain[i + 1]))
                lengths.append(total * (cuts[i + 1] - cuts[i]))
                edge_names.append(f"{ename}s{i}")
        else:
            vertex_of.extend(graph.endpoints(e))
            lengths.append(graph.lengths[e])
            edge_names.append(graph.edge_names[e])
    return MetricGraph(tuple(vertex_of), tuple(lengths), tuple(edge_names), tuple(vertex_names))
