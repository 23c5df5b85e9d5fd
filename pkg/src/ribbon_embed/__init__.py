"""Surface-embedding invariants of finite metric graphs.

The package computes combinatorial embedding invariants (Betti number,
Betti deficiency, girth, maximum genus, essential genus and its
adversarial counterpart), optimizes rotation systems by local dart moves,
and assembles verified block decompositions that realize a rescaled graph
isometrically on a closed hyperbolic surface.
"""

from .assembly import (
    Block,
    Boundary,
    Diagnostics,
    Gluing,
    Summary,
    SurfaceSchema,
    assemble_sigma_surface,
    cap_standard,
    cap_target_genus,
    naive_embedding,
    schema_from_json,
    schema_to_json,
    verify_schema,
)
from .errors import (
    CapExceededError,
    CycleGraphError,
    GraphFormatError,
    GraphValidationError,
    InternalInvariantError,
    MovePreconditionError,
    NoIncreasingMoveError,
    SchemaFormatError,
    TargetGenusError,
)
from .graph import (
    MetricGraph,
    betti,
    connected_components,
    edge_of,
    euler_char,
    format_graph,
    girth,
    graph_hash,
    is_cycle_graph,
    mate,
    parse_graph,
    smooth,
    subdivide,
    validate,
)
from .hyperbolic import (
    F_MIN,
    ScaleParams,
    choose_scale,
    edge_clearance,
    f_inv,
    f_min,
    foot_length,
    waist_distance,
)
from .invariants import (
    InvariantReport,
    analyze,
    betti_deficiency,
    capped_genus,
    essential_genus,
    ge_max_bound,
    ge_max_exact,
    max_genus,
    min_capped_genus,
    qr_split,
    spanning_trees,
    xi,
)
from .moves import (
    MoveRecord,
    SearchResult,
    increase_move,
    maximize_boundaries,
    minimize_boundaries,
    reduce_move,
)
from .rotation import (
    BoundaryWalk,
    RotationSystem,
    boundary_count,
    boundary_profile,
    boundary_walks,
    count_rotations,
    default_rotation,
    enumerate_rotations,
    fat_genus,
    find_rotation_with_count,
    make_rotation,
    rotation_by_index,
    vertex_boundary_incidence,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "Boundary",
    "BoundaryWalk",
    "CapExceededError",
    "CycleGraphError",
    "Diagnostics",
    "F_MIN",
    "Gluing",
    "GraphFormatError",
    "GraphValidationError",
    "InternalInvariantError",
    "InvariantReport",
    "MetricGraph",
    "MoveRecord",
    "MovePreconditionError",
    "NoIncreasingMoveError",
    "RotationSystem",
    "ScaleParams",
    "SchemaFormatError",
    "SearchResult",
    "Summary",
    "SurfaceSchema",
    "TargetGenusError",
    "analyze",
    "assemble_sigma_surface",
    "betti",
    "betti_deficiency",
    "boundary_count",
    "boundary_profile",
    "boundary_walks",
    "cap_standard",
    "cap_target_genus",
    "capped_genus",
    "choose_scale",
    "connected_components",
    "count_rotations",
    "default_rotation",
    "edge_clearance",
    "edge_of",
    "enumerate_rotations",
    "essential_genus",
    "euler_char",
    "f_inv",
    "f_min",
    "fat_genus",
    "find_rotation_with_count",
    "foot_length",
    "format_graph",
    "ge_max_bound",
    "ge_max_exact",
    "girth",
    "graph_hash",
    "increase_move",
    "is_cycle_graph",
    "make_rotation",
    "mate",
    "max_genus",
    "maximize_boundaries",
    "min_capped_genus",
    "minimize_boundaries",
    "naive_embedding",
    "parse_graph",
    "qr_split",
    "reduce_move",
    "rotation_by_index",
    "schema_from_json",
    "schema_to_json",
    "smooth",
    "spanning_trees",
    "subdivide",
    "validate",
    "verify_schema",
    "vertex_boundary_incidence",
    "waist_distance",
    "xi",
]
