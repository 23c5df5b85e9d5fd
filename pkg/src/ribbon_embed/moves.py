"""Local rotation surgery: trade boundary walks in steps of two.

A move relocates a single dart inside one vertex cycle.  When a vertex
meets at least three distinct boundary walks, some such relocation merges
three walks into one (count - 2); the mirror search looks for a relocation
that splits one walk into three (count + 2).  Rather than transcribing the
walk-splicing argument that proves the reducing relocation exists, the
implementation searches all relocations at the vertex and verifies the
recount, which is immune to orientation bookkeeping mistakes; the search
failing at an eligible vertex would disprove the underlying theory and
raises :class:`InternalInvariantError`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import (
    CapExceededError,
    InternalInvariantError,
    MovePreconditionError,
    NoIncreasingMoveError,
)
from .graph import MetricGraph
from .invariants import DEFAULT_TREE_CAP, betti_deficiency
from .rotation import (
    DEFAULT_ROTATION_CAP,
    RotationSystem,
    _walk_count,
    boundary_profile,
    canonical_cycle,
    dart_label,
    default_rotation,
    enumerate_rotations,
    find_rotation_with_count,
    vertex_boundary_incidence,
)


@dataclass(frozen=True)
class MoveRecord:
    """One applied move: a single dart relocated within one vertex cycle."""

    vertex: int
    old_cycle: tuple[int, ...]
    new_cycle: tuple[int, ...]
    boundary_delta: int

    def to_line(self, graph: MetricGraph) -> str:
        old = " ".join(dart_label(graph, d) for d in self.old_cycle)
        new = " ".join(dart_label(graph, d) for d in self.new_cycle)
        sign = f"{self.boundary_delta:+d}"
        return f"move {graph.vertex_names[self.vertex]} {old} -> {new} delta {sign}"


def single_dart_relocations(cycle: tuple[int, ...]):
    """Distinct cyclic orders that relocate exactly one dart of ``cycle``.

    Scan order is deterministic: source position ascending, then insertion
    slot ascending; cyclic duplicates and the identity are skipped.
    """
    seen = {canonical_cycle(cycle)}
    for i in range(len(cycle)):
        dart = cycle[i]
        rest = cycle[:i] + cycle[i + 1 :]
        for j in range(len(rest)):
            candidate = canonical_cycle(rest[:j] + (dart,) + rest[j:])
            if candidate not in seen:
                seen.add(candidate)
                yield candidate


def _with_cycle(rotation: RotationSystem, vertex: int, cycle: tuple[int, ...]) -> RotationSystem:
    cycles = list(rotation.cycles)
    cycles[vertex] = cycle
    return RotationSystem(tuple(cycles))


def reduce_move(
    graph: MetricGraph, rotation: RotationSystem, vertex: int
) -> tuple[RotationSystem, MoveRecord]:
    """Drop the boundary-walk count by exactly 2 with one dart relocation.

    Precondition: ``vertex`` meets at least three distinct walks.  Under
    that precondition a reducing relocation always exists at the vertex
    itself; not finding one is reported as an internal error.
    """
    incidence = vertex_boundary_incidence(graph, rotation)
    if incidence[vertex] < 3:
        raise MovePreconditionError(
            f"vertex {graph.vertex_names[vertex]} meets {incidence[vertex]} walks; "
            "a reducing move needs at least 3"
        )
    base = _walk_count(graph.dart_count, rotation.cycles)
    old_cycle = rotation.cycles[vertex]
    for candidate in single_dart_relocations(old_cycle):
        trial = _with_cycle(rotation, vertex, candidate)
        if _walk_count(graph.dart_count, trial.cycles) == base - 2:
            return trial, MoveRecord(vertex, old_cycle, candidate, -2)
    raise InternalInvariantError(
        f"no reducing relocation at vertex {graph.vertex_names[vertex]} although it "
        f"meets {incidence[vertex]} walks"
    )


def increase_move(
    graph: MetricGraph, rotation: RotationSystem
) -> tuple[RotationSystem, MoveRecord]:
    """Raise the boundary-walk count by exactly 2, scanning vertices by id."""
    base = _walk_count(graph.dart_count, rotation.cycles)
    for vertex in range(graph.vertex_count):
        old_cycle = rotation.cycles[vertex]
        for candidate in single_dart_relocations(old_cycle):
            trial = _with_cycle(rotation, vertex, candidate)
            if _walk_count(graph.dart_count, trial.cycles) == base + 2:
                return trial, MoveRecord(vertex, old_cycle, candidate, +2)
    raise NoIncreasingMoveError("no single-dart relocation increases the walk count")


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a greedy boundary-count search.

    ``greedy_count`` is the count where the first descent (or ascent) from
    the given start stalled; ``boundary_count`` the best found overall.
    ``certified`` is True only when the result provably attains the global
    optimum, via the spanning-tree identity or exhaustive enumeration.
    """

    rotation: RotationSystem
    boundary_count: int
    certified: bool
    initial_count: int
    greedy_count: int
    moves: tuple[MoveRecord, ...]
    restarts_used: int
    enumerated: bool


def _descend(graph, rotation):
    records = []
    count = _walk_count(graph.dart_count, rotation.cycles)
    while True:
        incidence = vertex_boundary_incidence(graph, rotation)
        eligible = [v for v in range(graph.vertex_count) if incidence[v] >= 3]
        if not eligible:
            return rotation, count, records
        rotation, record = reduce_move(graph, rotation, eligible[0])
        records.append(record)
        count -= 2


def _ascend(graph, rotation):
    records = []
    count = _walk_count(graph.dart_count, rotation.cycles)
    while True:
        try:
            rotation, record = increase_move(graph, rotation)
        except NoIncreasingMoveError:
            return rotation, count, records
        records.append(record)
        count += 2


def minimize_boundaries(
    graph: MetricGraph,
    start: RotationSystem | None = None,
    restarts: int = 0,
    seed: int = 0,
    tree_cap: int = DEFAULT_TREE_CAP,
    rotation_cap: int = DEFAULT_ROTATION_CAP,
) -> SearchResult:
    """Greedy walk-count minimization with verified fallbacks.

    Applies reducing moves until no vertex meets three walks.  If the stall
    is above the spanning-tree target 1 + zeta, retries from seeded random
    rotations, then falls back to scanning the full enumeration.  When the
    target is unknown (tree cap exceeded) certification comes only from a
    full enumeration scan; if that is also capped out, the best rotation
    found is returned uncertified.
    """
    if start is None:
        start = default_rotation(graph, 0)
    initial = _walk_count(graph.dart_count, start.cycles)
    try:
        target = 1 + betti_deficiency(graph, tree_cap)
    except CapExceededError:
        target = None

    rotation, count, records = _descend(graph, start)
    greedy_count = count
    best = (count, rotation, tuple(records))
    restarts_used = 0
    enumerated = False

    if target is None or best[0] > target:
        rng = random.Random(seed)
        for _ in range(restarts):
            if target is not None and best[0] == target:
                break
            restarts_used += 1
            retry_start = default_rotation(graph, rng.randrange(1, 2**30))
            rotation, count, records = _descend(graph, retry_start)
            if count < best[0]:
                best = (count, rotation, tuple(records))
    if target is None or best[0] > target:
        try:
            for candidate in enumerate_rotations(graph, rotation_cap):
                count = _walk_count(graph.dart_count, candidate.cycles)
                if count < best[0]:
                    best = (count, candidate, ())
                if target is not None and count == target:
                    break
            enumerated = True
        except CapExceededError:
            pass
    if enumerated and target is not None and best[0] != target:
        raise InternalInvariantError(
            f"exhaustive minimum {best[0]} disagrees with 1 + zeta = {target}"
        )

    certified = (target is not None and best[0] == target) or enumerated
    return SearchResult(
        rotation=best[1],
        boundary_count=best[0],
        certified=certified,
        initial_count=initial,
        greedy_count=greedy_count,
        moves=best[2],
        restarts_used=restarts_used,
        enumerated=enumerated,
    )


def maximize_boundaries(
    graph: MetricGraph,
    start: RotationSystem | None = None,
    restarts: int = 0,
    seed: int = 0,
    rotation_cap: int = DEFAULT_ROTATION_CAP,
) -> SearchResult:
    """Greedy walk-count maximization, certified against the enumeration
    profile when that fits under the cap."""
    if start is None:
        start = default_rotation(graph, 0)
    initial = _walk_count(graph.dart_count, start.cycles)
    try:
        profile = boundary_profile(graph, rotation_cap)
        target = max(profile)
    except CapExceededError:
        target = None

    rotation, count, records = _ascend(graph, start)
    greedy_count = count
    best = (count, rotation, tuple(records))
    restarts_used = 0
    enumerated = False

    if target is None or best[0] < target:
        rng = random.Random(seed)
        for _ in range(restarts):
            if target is not None and best[0] == target:
                break
            restarts_used += 1
            retry_start = default_rotation(graph, rng.randrange(1, 2**30))
            rotation, count, records = _ascend(graph, retry_start)
            if count > best[0]:
                best = (count, rotation, tuple(records))
    if target is not None and best[0] < target:
        witness = find_rotation_with_count(graph, target, rotation_cap)
        if witness is None:
            raise InternalInvariantError("profile maximum vanished on re-enumeration")
        best = (target, witness, ())
        enumerated = True

    certified = target is not None and best[0] == target
    return SearchResult(
        rotation=best[1],
        boundary_count=best[0],
        certified=certified,
        initial_count=initial,
        greedy_count=greedy_count,
        moves=best[2],
        restarts_used=restarts_used,
        enumerated=enumerated,
    )
