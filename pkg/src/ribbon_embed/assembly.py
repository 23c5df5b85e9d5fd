"""Embedding schemas: hyperbolic block decompositions with verified bookkeeping.

A schema carries two kinds of blocks, distinguished by ``layer``:

* ``surface`` blocks tile the surface the schema denotes.  Euler
  characteristic is additive over them and must match
  ``2 - 2 genus - boundary_count`` of the summary.
* ``construction`` blocks are the build recipe that realizes the graph
  inside a surface: one sphere per vertex with a unit cuff per dart, in
  rotation order, and one pants per edge whose two unit cuffs glue to the
  endpoint spheres.  For the naive closed surface these blocks ARE the
  surface, so they are marked ``surface`` there.  For the rotation-respecting
  bordered surface they are kept as the recipe only: the denoted surface is
  the tightened neighborhood of the embedded graph inside that complex,
  which deformation-retracts onto the graph and therefore has the graph's
  Euler characteristic.  That neighborhood appears as the single
  ``spine_surface`` block; its boundary circles are the boundary walks of
  the rotation, with symbolic lengths, and the cap operations attach caps
  to exactly those circles.

Keeping the recipe and the denoted surface in separate ledgers is what
makes chi additivity an exact checkable invariant on both the naive and the
capped constructions rather than an approximate story.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .errors import (
    CycleGraphError,
    GraphValidationError,
    InternalInvariantError,
    SchemaFormatError,
    TargetGenusError,
)
from .graph import (
    MetricGraph,
    betti,
    euler_char,
    graph_hash,
    is_cycle_graph,
)
from .hyperbolic import F_MIN, ScaleParams, choose_scale, waist_distance
from .invariants import DEFAULT_TREE_CAP, betti_deficiency, capped_genus, qr_split
from .rotation import (
    RotationSystem,
    boundary_walks,
    default_rotation,
    rotation_from_lines,
    rotation_to_lines,
)

SCHEMA_VERSION = 1
LENGTH_TOLERANCE = 1e-9

SURFACE = "surface"
CONSTRUCTION = "construction"

BLOCK_KINDS = (
    "vertex_sphere",
    "edge_pants",
    "spine_surface",
    "cap_pants",
    "cap_torus",
    "cap_surface",
)


@dataclass(frozen=True)
class Boundary:
    """One boundary circle of a block: numeric length or ``sym:<label>``."""

    label: str
    length: float | str


@dataclass(frozen=True)
class Block:
    id: str
    kind: str
    genus: int
    layer: str
    boundaries: tuple[Boundary, ...]
    payload: dict

    @property
    def euler(self) -> int:
        return 2 - 2 * self.genus - len(self.boundaries)


@dataclass(frozen=True)
class Gluing:
    """An isometric identification of two block boundaries, zero twist."""

    side_a: tuple[str, str]
    side_b: tuple[str, str]
    twist: float = 0.0


@dataclass(frozen=True)
class Summary:
    genus: int
    boundary_count: int
    minimal: bool | None  # None for bordered schemas
    construction: str  # "naive" | "sigma" | "sigma_target(g)"


@dataclass(frozen=True)
class SurfaceSchema:
    graph: MetricGraph
    rotation: RotationSystem | None
    scale: ScaleParams
    blocks: tuple[Block, ...]
    gluings: tuple[Gluing, ...]
    summary: Summary


@dataclass(frozen=True)
class Diagnostics:
    """Verification outcome: hard errors and informational notes."""

    errors: tuple[str, ...]
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.errors


def _walk_label(index: int) -> str:
    return f"w{index}"


def _require_embeddable(graph: MetricGraph) -> None:
    if is_cycle_graph(graph):
        raise CycleGraphError(
            "cycle graphs embed on every surface after rescaling; no schema needed"
        )
    bad = [v for v in range(graph.vertex_count) if graph.degree(v) < 3]
    if bad:
        names = ", ".join(graph.vertex_names[v] for v in bad)
        raise GraphValidationError(
            f"schema construction needs minimum degree 3; offending vertices: {names} "
            "(smooth degree-2 vertices first)"
        )


def _construction_blocks(
    graph: MetricGraph, rotation: RotationSystem, scale: ScaleParams, layer: str
) -> tuple[list[Block], list[Gluing]]:
    blocks: list[Block] = []
    gluings: list[Gluing] = []
    for v in range(graph.vertex_count):
        blocks.append(
            Block(
                id=f"sphere:{graph.vertex_names[v]}",
                kind="vertex_sphere",
                genus=0,
                layer=layer,
                boundaries=tuple(
                    Boundary(f"dart:{d}", 1.0) for d in rotation.cycles[v]
                ),
                payload={"vertex": graph.vertex_names[v], "foot": scale.foot[v]},
            )
        )
    for e in range(graph.edge_count):
        name = graph.edge_names[e]
        u, v = graph.endpoints(e)
        blocks.append(
            Block(
                id=f"pants:{name}",
                kind="edge_pants",
                genus=0,
                layer=layer,
                boundaries=(
                    Boundary("end0", 1.0),
                    Boundary("end1", 1.0),
                    Boundary("waist", 2.0 * scale.waist[e]),
                ),
                payload={"edge": name, "scaled_length": scale.t * graph.lengths[e]},
            )
        )
        gluings.append(Gluing((f"pants:{name}", "end0"), (f"sphere:{graph.vertex_names[u]}", f"dart:{2 * e}")))
        gluings.append(Gluing((f"pants:{name}", "end1"), (f"sphere:{graph.vertex_names[v]}", f"dart:{2 * e + 1}")))
    return blocks, gluings


def naive_embedding(
    graph: MetricGraph, margin: float = 0.1, rotation: RotationSystem | None = None
) -> SurfaceSchema:
    """Closed surface of genus |E| + beta containing the rescaled graph.

    Vertex spheres and edge pants realize the graph; every leftover waist
    cuff is filled with a one-holed torus.  The genus does not depend on
    the rotation, which only fixes the gluing order around each sphere.
    """
    _require_embeddable(graph)
    if rotation is None:
        rotation = default_rotation(graph, 0)
    scale = choose_scale(graph, margin)
    blocks, gluings = _construction_blocks(graph, rotation, scale, layer=SURFACE)
    for e in range(graph.edge_count):
        name = graph.edge_names[e]
        cap_id = f"cap:{name}"
        blocks.append(
            Block(
                id=cap_id,
                kind="cap_torus",
                genus=1,
                layer=SURFACE,
                boundaries=(Boundary("b0", 2.0 * scale.waist[e]),),
                payload={"fills": "waist", "edge": name},
            )
        )
        gluings.append(Gluing((f"pants:{name}", "waist"), (cap_id, "b0")))
    genus = graph.edge_count + betti(graph)
    return SurfaceSchema(
        graph=graph,
        rotation=rotation,
        scale=scale,
        blocks=tuple(blocks),
        gluings=tuple(gluings),
        summary=Summary(genus=genus, boundary_count=0, minimal=False, construction="naive"),
    )


def assemble_sigma_surface(
    graph: MetricGraph, rotation: RotationSystem, margin: float = 0.1
) -> SurfaceSchema:
    """Bordered surface that deformation-retracts onto the fat graph.

    The denoted surface is the tightened neighborhood of the graph inside
    the sphere-and-pants complex: genus and boundary count are determined
    by chi(graph) and the boundary walks of the rotation.  Its boundary
    lengths have no closed form, so they are symbolic, labeled by walk.
    """
    _require_embeddable(graph)
    scale = choose_scale(graph, margin)
    walks = boundary_walks(graph, rotation)
    b = len(walks)
    genus = (2 - euler_char(graph) - b) // 2
    blocks, gluings = _construction_blocks(graph, rotation, scale, layer=CONSTRUCTION)
    spine = Block(
        id="spine",
        kind="spine_surface",
        genus=genus,
        layer=SURFACE,
        boundaries=tuple(
            Boundary(_walk_label(i), f"sym:{_walk_label(i)}") for i in range(b)
        ),
        payload={"walks": [list(w.darts) for w in walks]},
    )
    return SurfaceSchema(
        graph=graph,
        rotation=rotation,
        scale=scale,
        blocks=tuple([*blocks, spine]),
        gluings=tuple(gluings),
        summary=Summary(genus=genus, boundary_count=b, minimal=None, construction="sigma"),
    )


def _unglued_surface_boundaries(schema: SurfaceSchema) -> list[tuple[str, str]]:
    glued = set()
    for g in schema.gluings:
        glued.add(g.side_a)
        glued.add(g.side_b)
    out = []
    for block in schema.blocks:
        if block.layer != SURFACE:
            continue
        for boundary in block.boundaries:
            if (block.id, boundary.label) not in glued:
                out.append((block.id, boundary.label))
    return out


def cap_standard(schema: SurfaceSchema) -> SurfaceSchema:
    """Cap every boundary of a bordered schema as cheaply as possible.

    With b = 3q + r boundaries, the q triples of boundaries (taken in label
    order) each receive one three-holed sphere and the r stragglers each a
    one-holed torus.  Every cap has chi = -1, so the result is a minimal
    essential embedding of closed genus g + 2q + r.
    """
    b = schema.summary.boundary_count
    if b < 1:
        raise ValueError("schema is already closed; nothing to cap")
    spine = next((blk for blk in schema.blocks if blk.kind == "spine_surface"), None)
    if spine is None:
        raise ValueError("capping applies to the bordered spine construction")
    q, r = qr_split(b)
    labels = [bd.label for bd in spine.boundaries]
    blocks = list(schema.blocks)
    gluings = list(schema.gluings)
    cap_index = 0
    for k in range(q):
        triple = labels[3 * k : 3 * k + 3]
        cap_id = f"cap:{cap_index}"
        cap_index += 1
        blocks.append(
            Block(
                id=cap_id,
                kind="cap_pants",
                genus=0,
                layer=SURFACE,
                boundaries=tuple(
                    Boundary(f"b{j}", f"sym:{lab}") for j, lab in enumerate(triple)
                ),
                payload={"fills": triple},
            )
        )
        for j, lab in enumerate(triple):
            gluings.append(Gluing(("spine", lab), (cap_id, f"b{j}")))
    for lab in labels[3 * q :]:
        cap_id = f"cap:{cap_index}"
        cap_index += 1
        blocks.append(
            Block(
                id=cap_id,
                kind="cap_torus",
                genus=1,
                layer=SURFACE,
                boundaries=(Boundary("b0", f"sym:{lab}"),),
                payload={"fills": [lab]},
            )
        )
        gluings.append(Gluing(("spine", lab), (cap_id, "b0")))
    genus = schema.summary.genus + 2 * q + r
    return replace(
        schema,
        blocks=tuple(blocks),
        gluings=tuple(gluings),
        summary=Summary(genus=genus, boundary_count=0, minimal=True, construction="sigma"),
    )


def cap_target_genus(
    schema: SurfaceSchema, target: int, tree_cap: int = DEFAULT_TREE_CAP
) -> SurfaceSchema:
    """Close the minimal-boundary bordered schema at an exact chosen genus.

    Requires the schema's boundary count to be 1 + zeta, so the standard
    capping realizes the essential genus g_e.  For target > g_e one cap is
    upgraded: when b is a multiple of 3, a three-holed cap becomes a
    three-holed surface of genus g' = target - g_e; otherwise a torus cap
    becomes a one-holed surface of genus g' + 1.  Only the target g_e
    itself yields a minimal embedding.
    """
    b = schema.summary.boundary_count
    if b < 1:
        raise ValueError("schema is already closed; nothing to cap")
    z = betti_deficiency(schema.graph, tree_cap)
    if b != 1 + z:
        raise ValueError(
            f"target-genus capping needs the minimal-boundary surface: "
            f"boundary count is {b}, 1 + zeta is {1 + z}"
        )
    g_e = capped_genus(schema.graph, b)
    if target < g_e:
        raise TargetGenusError(
            f"target genus {target} is below the essential genus {g_e}"
        )
    closed = cap_standard(schema)
    extra = target - g_e
    if extra == 0:
        return closed
    if b % 3 == 0:
        wanted, new_kind, new_genus = "cap_pants", "cap_surface", extra
    else:
        wanted, new_kind, new_genus = "cap_torus", "cap_surface", extra + 1
    blocks = list(closed.blocks)
    for i, block in enumerate(blocks):
        if block.kind == wanted:
            blocks[i] = replace(block, kind=new_kind, genus=new_genus)
            break
    else:
        raise InternalInvariantError(f"no {wanted} cap available for genus upgrade")
    return replace(
        closed,
        blocks=tuple(blocks),
        summary=Summary(
            genus=target,
            boundary_count=0,
            minimal=False,
            construction=f"sigma_target({target})",
        ),
    )


# ---------------------------------------------------------------------------
# verification

def _check_block_shapes(schema: SurfaceSchema, errors: list[str]) -> None:
    graph = schema.graph
    vertex_ids = {name: v for v, name in enumerate(graph.vertex_names)}
    edge_ids = {name: e for e, name in enumerate(graph.edge_names)}
    for block in schema.blocks:
        if block.kind not in BLOCK_KINDS:
            errors.append(f"block {block.id}: unknown kind {block.kind}")
            continue
        if block.kind == "vertex_sphere":
            vname = block.payload.get("vertex")
            if vname not in vertex_ids:
                errors.append(f"block {block.id}: unknown vertex {vname!r}")
                continue
            deg = graph.degree(vertex_ids[vname])
            if block.genus != 0:
                errors.append(f"block {block.id}: vertex sphere must have genus 0")
            if len(block.boundaries) != deg:
                errors.append(
                    f"block {block.id}: {len(block.boundaries)} cuffs for degree {deg}"
                )
            for bd in block.boundaries:
                if not isinstance(bd.length, float) or abs(bd.length - 1.0) > LENGTH_TOLERANCE:
                    errors.append(f"block {block.id}: cuff {bd.label} is not unit length")
        elif block.kind == "edge_pants":
            ename = block.payload.get("edge")
            if ename not in edge_ids:
                errors.append(f"block {block.id}: unknown edge {ename!r}")
                continue
            e = edge_ids[ename]
            if block.genus != 0 or len(block.boundaries) != 3:
                errors.append(f"block {block.id}: edge pants must be a genus-0 3-holed sphere")
                continue
            expected = {
                "end0": 1.0,
                "end1": 1.0,
                "waist": 2.0 * schema.scale.waist[e],
            }
            for bd in block.boundaries:
                want = expected.get(bd.label)
                if want is None:
                    errors.append(f"block {block.id}: unexpected cuff {bd.label}")
                elif not isinstance(bd.length, float) or abs(bd.length - want) > LENGTH_TOLERANCE:
                    errors.append(
                        f"block {block.id}: cuff {bd.label} has length {bd.length!r}, "
                        f"expected {want:.12g}"
                    )
        elif block.kind == "cap_pants":
            if block.genus != 0 or len(block.boundaries) != 3:
                errors.append(f"block {block.id}: three-holed cap must have genus 0")
        elif block.kind == "cap_torus":
            if block.genus != 1 or len(block.boundaries) != 1:
                errors.append(f"block {block.id}: torus cap must be one-holed genus 1")
        elif block.kind == "cap_surface":
            if block.genus < 1 or len(block.boundaries) not in (1, 3):
                errors.append(
                    f"block {block.id}: upgraded cap must have genus >= 1 and 1 or 3 holes"
                )
        elif block.kind == "spine_surface":
            if block.euler != euler_char(graph):
                errors.append(
                    f"block {block.id}: chi {block.euler} differs from the graph's "
                    f"{euler_char(graph)}"
                )


def _check_gluings(schema: SurfaceSchema, errors: list[str]) -> None:
    lengths: dict[tuple[str, str], float | str] = {}
    for block in schema.blocks:
        for bd in block.boundaries:
            key = (block.id, bd.label)
            if key in lengths:
                errors.append(f"block {block.id}: duplicate boundary label {bd.label}")
            lengths[key] = bd.length
    used: set[tuple[str, str]] = set()
    for g in schema.gluings:
        for side in (g.side_a, g.side_b):
            if side not in lengths:
                errors.append(f"gluing references missing boundary {side}")
            elif side in used:
                errors.append(f"boundary {side} appears in more than one gluing")
            else:
                used.add(side)
        if g.twist != 0.0:
            errors.append(f"gluing {g.side_a} ~ {g.side_b}: nonzero twist {g.twist}")
        la, lb = lengths.get(g.side_a), lengths.get(g.side_b)
        if la is None or lb is None:
            continue
        if isinstance(la, str) or isinstance(lb, str):
            if la != lb:
                errors.append(
                    f"gluing {g.side_a} ~ {g.side_b}: symbolic lengths {la!r} vs {lb!r}"
                )
        elif abs(la - lb) > LENGTH_TOLERANCE:
            errors.append(
                f"gluing {g.side_a} ~ {g.side_b}: lengths {la:.12g} vs {lb:.12g}"
            )


def _check_bookkeeping(schema: SurfaceSchema, errors: list[str], notes: list[str]) -> None:
    summary = schema.summary
    surface_chi = sum(b.euler for b in schema.blocks if b.layer == SURFACE)
    expected_chi = 2 - 2 * summary.genus - summary.boundary_count
    if surface_chi != expected_chi:
        errors.append(
            f"chi additivity broken: surface blocks sum to {surface_chi}, "
            f"summary implies {expected_chi}"
        )
    free = _unglued_surface_boundaries(schema)
    if len(free) != summary.boundary_count:
        errors.append(
            f"{len(free)} unglued surface boundaries, summary says {summary.boundary_count}"
        )
    graph = schema.graph
    if summary.construction == "naive":
        want = graph.edge_count + betti(graph)
        if summary.genus != want:
            errors.append(f"naive genus {summary.genus}, expected |E| + beta = {want}")
        handshake = sum(graph.degree(v) - 2 for v in range(graph.vertex_count))
        if 2 * summary.genus - 2 != handshake + 2 * graph.edge_count:
            errors.append("naive identity 2g - 2 = sum(deg - 2) + 2|E| fails")
        if summary.minimal:
            errors.append("naive construction must not claim minimality")
    caps = [b for b in schema.blocks if b.kind in ("cap_pants", "cap_torus", "cap_surface")]
    if summary.construction != "naive" and summary.boundary_count == 0:
        heavy = [c for c in caps if c.euler != -1]
        is_minimal = not heavy
        if summary.minimal != is_minimal:
            errors.append(
                f"summary.minimal={summary.minimal} but caps "
                f"{'all have' if is_minimal else 'do not all have'} chi = -1"
            )
        for c in heavy:
            notes.append(f"non-minimal cap {c.id}: chi = {c.euler} (genus upgrade)")
    if summary.boundary_count > 0 and summary.minimal is not None:
        errors.append("bordered schema must leave minimality undecided")


def _check_construction_layer(schema: SurfaceSchema, errors: list[str]) -> None:
    graph = schema.graph
    spheres = {b.payload.get("vertex"): b for b in schema.blocks if b.kind == "vertex_sphere"}
    pants = {b.payload.get("edge"): b for b in schema.blocks if b.kind == "edge_pants"}
    if not spheres and not pants:
        return
    if set(spheres) != set(graph.vertex_names):
        errors.append("vertex spheres do not match the vertex set")
    if set(pants) != set(graph.edge_names):
        errors.append("edge pants do not match the edge set")
    if schema.rotation is None:
        errors.append("construction blocks present but no rotation recorded")
        return
    for v, cycle in enumerate(schema.rotation.cycles):
        block = spheres.get(graph.vertex_names[v])
        if block is None:
            continue
        want = tuple(f"dart:{d}" for d in cycle)
        got = tuple(bd.label for bd in block.boundaries)
        if got != want:
            errors.append(
                f"block {block.id}: cuff order {got} differs from rotation order {want}"
            )
    glued = {frozenset((g.side_a, g.side_b)) for g in schema.gluings}
    for e in range(graph.edge_count):
        name = graph.edge_names[e]
        u, v = graph.endpoints(e)
        for end_label, dart, vert in (("end0", 2 * e, u), ("end1", 2 * e + 1, v)):
            pair = frozenset(
                ((f"pants:{name}", end_label), (f"sphere:{graph.vertex_names[vert]}", f"dart:{dart}"))
            )
            if pair not in glued:
                errors.append(
                    f"edge {name}: cuff {end_label} is not glued to dart {dart} "
                    f"of vertex {graph.vertex_names[vert]}"
                )


def _check_scale(schema: SurfaceSchema, errors: list[str]) -> None:
    graph = schema.graph
    scale = schema.scale
    for e in range(graph.edge_count):
        gap = scale.t * graph.lengths[e] - scale.clearance[e]
        if gap <= F_MIN:
            errors.append(
                f"edge {graph.edge_names[e]}: scaled length leaves gap {gap:.12g} <= f_min"
            )
            continue
        if abs(waist_distance(scale.waist[e]) - gap) > LENGTH_TOLERANCE:
            errors.append(
                f"edge {graph.edge_names[e]}: waist does not invert the cuff distance"
            )


def _check_spine(schema: SurfaceSchema, errors: list[str]) -> None:
    spines = [b for b in schema.blocks if b.kind == "spine_surface"]
    if not spines:
        return
    if len(spines) > 1:
        errors.append("more than one spine block")
    spine = spines[0]
    if schema.rotation is None:
        errors.append("spine present but no rotation recorded")
        return
    walks = boundary_walks(schema.graph, schema.rotation)
    if len(spine.boundaries) != len(walks):
        errors.append(
            f"spine has {len(spine.boundaries)} boundaries for {len(walks)} walks"
        )
        return
    recorded = spine.payload.get("walks")
    if recorded is not None and [list(w.darts) for w in walks] != [
        list(w) for w in recorded
    ]:
        errors.append("spine walk payload disagrees with the rotation's walks")
    for i, bd in enumerate(spine.boundaries):
        if bd.label != _walk_label(i) or bd.length != f"sym:{_walk_label(i)}":
            errors.append(f"spine boundary {i} is not labeled {_walk_label(i)}")


def verify_schema(schema: SurfaceSchema) -> Diagnostics:
    """Re-derive every checkable fact of a schema and report disagreements.

    Hard errors mean the schema does not describe what its summary claims.
    Notes flag legitimate but noteworthy facts (a genus-upgraded cap, for
    example).  Verification recomputes from the graph and rotation; it
    never trusts counts stored in the schema.
    """
    errors: list[str] = []
    notes: list[str] = []
    ids = [b.id for b in schema.blocks]
    if len(ids) != len(set(ids)):
        errors.append("duplicate block ids")
    _check_block_shapes(schema, errors)
    _check_gluings(schema, errors)
    _check_bookkeeping(schema, errors, notes)
    _check_construction_layer(schema, errors)
    _check_scale(schema, errors)
    _check_spine(schema, errors)
    return Diagnostics(errors=tuple(errors), notes=tuple(notes))


# ---------------------------------------------------------------------------
# serialization

def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _length_out(length: float | str):
    return length if isinstance(length, str) else _round12(length)


def schema_to_json(schema: SurfaceSchema) -> str:
    graph = schema.graph
    doc = {
        "schema_version": SCHEMA_VERSION,
        "meta": {
            "graph": {
                "hash": graph_hash(graph),
                "edges": [
                    [
                        graph.edge_names[e],
                        graph.vertex_names[graph.endpoints(e)[0]],
                        graph.vertex_names[graph.endpoints(e)[1]],
                        _round12(graph.lengths[e]),
                    ]
                    for e in range(graph.edge_count)
                ],
            },
            "t": _round12(schema.scale.t),
            "margin": _round12(schema.scale.margin),
            "f_min": _round12(schema.scale.f_floor),
            "foot": {
                graph.vertex_names[v]: _round12(x) for v, x in sorted(schema.scale.foot.items())
            },
            "clearance": {
                graph.edge_names[e]: _round12(x)
                for e, x in sorted(schema.scale.clearance.items())
            },
            "waist": {
                graph.edge_names[e]: _round12(x) for e, x in sorted(schema.scale.waist.items())
            },
            "rotation": (
                rotation_to_lines(graph, schema.rotation)
                if schema.rotation is not None
                else None
            ),
        },
        "blocks": [
            {
                "id": b.id,
                "kind": b.kind,
                "genus": b.genus,
                "layer": b.layer,
                "boundaries": [
                    {"label": bd.label, "length": _length_out(bd.length)}
                    for bd in b.boundaries
                ],
                "payload": b.payload,
            }
            for b in schema.blocks
        ],
        "gluings": [
            {"a": list(g.side_a), "b": list(g.side_b), "twist": _round12(g.twist)}
            for g in schema.gluings
        ],
        "summary": {
            "genus": schema.summary.genus,
            "boundary_count": schema.summary.boundary_count,
            "minimal": schema.summary.minimal,
            "construction": schema.summary.construction,
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def _graph_from_meta(meta: dict) -> MetricGraph:
    vertex_ids: dict[str, int] = {}
    vertex_of: list[int] = []
    lengths: list[float] = []
    edge_names: list[str] = []
    for record in meta["graph"]["edges"]:
        name, u, v, length = record
        for endpoint in (u, v):
            vertex_of.append(vertex_ids.setdefault(endpoint, len(vertex_ids)))
        lengths.append(float(length))
        edge_names.append(name)
    names = [""] * len(vertex_ids)
    for vname, vid in vertex_ids.items():
        names[vid] = vname
    return MetricGraph(tuple(vertex_of), tuple(lengths), tuple(edge_names), tuple(names))


def schema_from_json(text: str) -> SurfaceSchema:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaFormatError(f"not valid JSON: {exc}") from None
    try:
        if doc["schema_version"] != SCHEMA_VERSION:
            raise SchemaFormatError(
                f"unsupported schema_version {doc['schema_version']!r}"
            )
        meta = doc["meta"]
        graph = _graph_from_meta(meta)
        vertex_ids = {name: v for v, name in enumerate(graph.vertex_names)}
        edge_ids = {name: e for e, name in enumerate(graph.edge_names)}
        rotation = (
            rotation_from_lines(graph, meta["rotation"])
            if meta.get("rotation") is not None
            else None
        )
        scale = ScaleParams(
            t=float(meta["t"]),
            margin=float(meta["margin"]),
            f_floor=float(meta["f_min"]),
            foot={vertex_ids[k]: float(v) for k, v in meta["foot"].items()},
            clearance={edge_ids[k]: float(v) for k, v in meta["clearance"].items()},
            waist={edge_ids[k]: float(v) for k, v in meta["waist"].items()},
        )
        blocks = tuple(
            Block(
                id=b["id"],
                kind=b["kind"],
                genus=int(b["genus"]),
                layer=b["layer"],
                boundaries=tuple(
                    Boundary(bd["label"], bd["length"]) for bd in b["boundaries"]
                ),
                payload=b.get("payload", {}),
            )
            for b in doc["blocks"]
        )
        gluings = tuple(
            Gluing(tuple(g["a"]), tuple(g["b"]), float(g.get("twist", 0.0)))
            for g in doc["gluings"]
        )
        s = doc["summary"]
        summary = Summary(
            genus=int(s["genus"]),
            boundary_count=int(s["boundary_count"]),
            minimal=s["minimal"],
            construction=s["construction"],
        )
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, SchemaFormatError):
            raise
        raise SchemaFormatError(f"malformed schema document: {exc!r}") from None
    return SurfaceSchema(
        graph=graph,
        rotation=rotation,
        scale=scale,
        blocks=blocks,
        gluings=gluings,
        summary=summary,
    )
