"""Rotation systems (fat-graph structures) and boundary-walk extraction.

A rotation system assigns each vertex a cyclic order of its darts.  Walking
a boundary component alternates "step back one dart in the cyclic order,
then hop to the other end of that edge": the next dart after ``d`` is
``mate(prev(d))``.  Of the four ways to compose the two involved
permutations this one is pinned package-wide, so that walks, their labels
and everything serialized from them are reproducible byte for byte.  All
four conventions produce the same number of walks, which is the only thing
the genus bookkeeping consumes.

Cyclic orders are stored rotated so the smallest dart id comes first,
giving rotation systems a canonical equality.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, GraphFormatError, InternalInvariantError
from .graph import MetricGraph, edge_of, euler_char

DEFAULT_ROTATION_CAP = 10**6


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate a cyclic sequence so its minimum element comes first."""
    cycle = tuple(cycle)
    i = cycle.index(min(cycle))
    return cycle[i:] + cycle[:i]


@dataclass(frozen=True)
class RotationSystem:
    """One cyclic dart order per vertex, indexed by vertex id.

    Construct through :func:`make_rotation` (or the enumeration helpers),
    which canonicalize and validate against a graph.
    """

    cycles: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BoundaryWalk:
    """One boundary component as the cyclic dart sequence it traverses."""

    darts: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.darts)


def make_rotation(graph: MetricGraph, cycles: Iterable[Sequence[int]]) -> RotationSystem:
    """Build a rotation system from per-vertex dart sequences."""
    rotation = RotationSystem(tuple(canonical_cycle(c) for c in cycles))
    validate_rotation(graph, rotation)
    return rotation


def validate_rotation(graph: MetricGraph, rotation: RotationSystem) -> None:
    """Check that the cycles partition the darts vertex by vertex."""
    if len(rotation.cycles) != graph.vertex_count:
        raise ValueError(
            f"rotation has {len(rotation.cycles)} cycles for {graph.vertex_count} vertices"
        )
    for v, cycle in enumerate(rotation.cycles):
        if sorted(cycle) != list(graph.darts_at(v)):
            raise ValueError(
                f"cycle at vertex {graph.vertex_names[v]} is not a permutation "
                f"of the darts at that vertex"
            )


def default_rotation(graph: MetricGraph, seed: int = 0) -> RotationSystem:
    """File-order rotation for seed 0, a seeded uniform shuffle otherwise."""
    if seed == 0:
        return RotationSystem(tuple(graph.darts_at(v) for v in range(graph.vertex_count)))
    rng = random.Random(seed)
    cycles = []
    for v in range(graph.vertex_count):
        darts = list(graph.darts_at(v))
        rng.shuffle(darts)
        cycles.append(canonical_cycle(darts))
    return RotationSystem(tuple(cycles))


def _prev_in_cycles(dart_count: int, cycles: Sequence[Sequence[int]]) -> list[int]:
    prev = [0] * dart_count
    for cycle in cycles:
        for i, d in enumerate(cycle):
            prev[d] = cycle[i - 1]
    return prev


def _walk_count(dart_count: int, cycles: Sequence[Sequence[int]]) -> int:
    """Orbit count of the boundary traversal, without building walk objects."""
    prev = _prev_in_cycles(dart_count, cycles)
    seen = bytearray(dart_count)
    count = 0
    for start in range(dart_count):
        if seen[start]:
            continue
        count += 1
        d = start
        while not seen[d]:
            seen[d] = 1
            d = prev[d] ^ 1
    return count


def boundary_walks(graph: MetricGraph, rotation: RotationSystem) -> list[BoundaryWalk]:
    """The boundary components of the thickened fat graph.

    Walks are returned sorted by their smallest dart, each starting at that
    dart, so the list (and the labels derived from it) is canonical.
    """
    validate_rotation(graph, rotation)
    prev = _prev_in_cycles(graph.dart_count, rotation.cycles)
    seen = bytearray(graph.dart_count)
    walks: list[BoundaryWalk] = []
    for start in range(graph.dart_count):
        if seen[start]:
            continue
        orbit = []
        d = start
        while not seen[d]:
            seen[d] = 1
            orbit.append(d)
            d = prev[d] ^ 1
        walks.append(BoundaryWalk(tuple(orbit)))
    slack = 2 - euler_char(graph) - len(walks)
    if slack < 0 or slack % 2:
        raise InternalInvariantError(
            f"walk count {len(walks)} breaks Euler parity for chi={euler_char(graph)}"
        )
    return walks


def boundary_count(graph: MetricGraph, rotation: RotationSystem) -> int:
    return len(boundary_walks(graph, rotation))


def fat_genus(graph: MetricGraph, rotation: RotationSystem) -> int:
    """Genus of the closed surface the fat graph fills: (2 - chi - walks)/2."""
    b = len(boundary_walks(graph, rotation))
    return (2 - euler_char(graph) - b) // 2


def vertex_boundary_incidence(graph: MetricGraph, rotation: RotationSystem) -> dict[int, int]:
    """How many distinct boundary walks pass through each vertex."""
    incidence = dict.fromkeys(range(graph.vertex_count), 0)
    for walk in boundary_walks(graph, rotation):
        for v in {graph.vertex_of[d] for d in walk.darts}:
            incidence[v] += 1
    return incidence


def count_rotations(graph: MetricGraph) -> int:
    """Number of rotation systems: the product of (deg(v) - 1)! over vertices."""
    return math.prod(math.factorial(graph.degree(v) - 1) for v in range(graph.vertex_count))


def _pinned_tails(graph: MetricGraph, vertex: int) -> tuple[int, tuple[int, ...]]:
    darts = graph.darts_at(vertex)
    return darts[0], darts[1:]


def enumerate_rotations(
    graph: MetricGraph, cap: int = DEFAULT_ROTATION_CAP
) -> Iterator[RotationSystem]:
    """Yield every rotation system exactly once.

    The smallest dart at each vertex is pinned first, which quotients out
    rotations of each cycle; what remains is the product of the per-vertex
    (deg - 1)! tail permutations, streamed in lexicographic order with the
    last vertex varying fastest.  Raises :class:`CapExceededError` up front
    when the total exceeds ``cap``.
    """
    total = count_rotations(graph)
    if total > cap:
        raise CapExceededError(f"{total} rotation systems exceed the cap of {cap}")
    per_vertex = []
    for v in range(graph.vertex_count):
        head, tail = _pinned_tails(graph, v)
        per_vertex.append([(head, *p) for p in itertools.permutations(tail)])
    for combo in itertools.product(*per_vertex):
        yield RotationSystem(combo)


def _nth_permutation(items: Sequence[int], index: int) -> tuple[int, ...]:
    pool = list(items)
    out = []
    for i in range(len(pool), 0, -1):
        j, index = divmod(index, math.factorial(i - 1))
        out.append(pool.pop(j))
    return tuple(out)


def rotation_by_index(graph: MetricGraph, index: int) -> RotationSystem:
    """The ``index``-th rotation in :func:`enumerate_rotations` order.

    Indices decompose in mixed radix over the per-vertex tail counts, most
    significant digit at vertex 0.  This lets disjoint index ranges be
    processed independently.
    """
    total = count_rotations(graph)
    if not 0 <= index < total:
        raise IndexError(f"rotation index {index} out of range({total})")
    radices = [math.factorial(graph.degree(v) - 1) for v in range(graph.vertex_count)]
    digits = [0] * len(radices)
    for v in range(len(radices) - 1, -1, -1):
        index, digits[v] = divmod(index, radices[v])
    cycles = []
    for v in range(graph.vertex_count):
        head, tail = _pinned_tails(graph, v)
        cycles.append((head, *_nth_permutation(tail, digits[v])))
    return RotationSystem(tuple(cycles))


def _profile_range(args: tuple[MetricGraph, int, int]) -> Counter:
    graph, lo, hi = args
    counts: Counter = Counter()
    dart_count = graph.dart_count
    for i in range(lo, hi):
        counts[_walk_count(dart_count, rotation_by_index(graph, i).cycles)] += 1
    return counts


def boundary_profile(
    graph: MetricGraph, cap: int = DEFAULT_ROTATION_CAP, threads: int = 1
) -> dict[int, int]:
    """Histogram {walk count: rotation count} over all rotation systems.

    With ``threads > 1`` the enumeration index space is split into that many
    contiguous ranges and processed in worker processes; the merge is a
    commutative sum, so results are identical to the sequential run.
    """
    total = count_rotations(graph)
    if total > cap:
        raise CapExceededError(f"{total} rotation systems exceed the cap of {cap}")
    if threads < 1:
        raise ValueError("threads must be at least 1")
    if threads == 1 or total < 4 * threads:
        counts: Counter = Counter()
        dart_count = graph.dart_count
        for rotation in enumerate_rotations(graph, cap):
            counts[_walk_count(dart_count, rotation.cycles)] += 1
        return dict(sorted(counts.items()))
    bounds = [total * k // threads for k in range(threads + 1)]
    jobs = [(graph, bounds[k], bounds[k + 1]) for k in range(threads)]
    merged: Counter = Counter()
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for part in pool.map(_profile_range, jobs):
            merged.update(part)
    return dict(sorted(merged.items()))


def find_rotation_with_count(
    graph: MetricGraph, walk_count: int, cap: int = DEFAULT_ROTATION_CAP
) -> RotationSystem | None:
    """First rotation in enumeration order with the given walk count."""
    dart_count = graph.dart_count
    for rotation in enumerate_rotations(graph, cap):
        if _walk_count(dart_count, rotation.cycles) == walk_count:
            return rotation
    return None


def dart_label(graph: MetricGraph, dart: int) -> str:
    """``<edge>+`` for the file-direction dart, ``<edge>-`` for its mate."""
    return graph.edge_names[edge_of(dart)] + ("+" if dart % 2 == 0 else "-")


def _dart_from_label(graph: MetricGraph, label: str) -> int:
    if len(label) < 2 or label[-1] not in "+-":
        raise GraphFormatError(f"bad dart label {label!r}")
    name = label[:-1]
    try:
        e = graph.edge_names.index(name)
    except ValueError:
        raise GraphFormatError(f"unknown edge {name!r} in dart label") from None
    return 2 * e + (0 if label[-1] == "+" else 1)


def rotation_to_lines(graph: MetricGraph, rotation: RotationSystem) -> list[str]:
    """Serialize as one ``rot <vertex> <dart> ...`` line per vertex."""
    return [
        f"rot {graph.vertex_names[v]} " + " ".join(dart_label(graph, d) for d in cycle)
        for v, cycle in enumerate(rotation.cycles)
    ]


def rotation_from_lines(graph: MetricGraph, lines: Iterable[str]) -> RotationSystem:
    """Parse the output of :func:`rotation_to_lines`."""
    cycles: dict[int, tuple[int, ...]] = {}
    vertex_ids = {name: v for v, name in enumerate(graph.vertex_names)}
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "rot" or len(parts) < 3:
            raise GraphFormatError(f"bad rotation record {raw!r}")
        if parts[1] not in vertex_ids:
            raise GraphFormatError(f"unknown vertex {parts[1]!r}")
        v = vertex_ids[parts[1]]
        if v in cycles:
            raise GraphFormatError(f"vertex {parts[1]!r} listed twice")
        cycles[v] = tuple(_dart_from_label(graph, lab) for lab in parts[2:])
    missing = [graph.vertex_names[v] for v in range(graph.vertex_count) if v not in cycles]
    if missing:
        raise GraphFormatError(f"missing rotation for vertices {missing}")
    return make_rotation(graph, [cycles[v] for v in range(graph.vertex_count)])
