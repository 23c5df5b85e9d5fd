"""Command-line front end.

Four subcommands:

* ``analyze``  invariant report for a graph file (text or JSON)
* ``embed``    build a verified embedding schema and print it as JSON
* ``oracle``   brute-force re-verification of the theory on one graph
* ``verify``   recheck a schema document produced by ``embed``

Exit codes: 0 success, 1 verification found errors, 2 bad input,
3 cycle graph, 4 unreachable target genus, 5 enumeration cap exceeded,
6 internal invariant violation (always a bug).

Human-oriented chatter goes to stderr; stdout carries only the payload
(report or schema), so output can be piped.  For a fixed input file, seed
and flags, the emitted schema is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .assembly import (
    assemble_sigma_surface,
    cap_standard,
    cap_target_genus,
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
    SchemaFormatError,
    TargetGenusError,
)
from .graph import MetricGraph, euler_char, parse_graph, smooth
from .invariants import (
    DEFAULT_TREE_CAP,
    analyze,
    betti_deficiency,
    essential_genus,
)
from .moves import _descend, maximize_boundaries, minimize_boundaries, reduce_move
from .rotation import (
    DEFAULT_ROTATION_CAP,
    _walk_count,
    boundary_profile,
    enumerate_rotations,
    vertex_boundary_incidence,
)

OK = 0
VERIFY_FAILED = 1
BAD_INPUT = 2
CYCLE_GRAPH = 3
TARGET_UNREACHABLE = 4
CAP_EXCEEDED = 5
INVARIANT_VIOLATION = 6


def _default_threads() -> int:
    raw = os.environ.get("RIBBON_EMBED_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _load_graph(path: str) -> MetricGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _target_kind(value: str):
    if value in ("minimal", "maximal"):
        return value
    if value.startswith("genus="):
        try:
            return ("genus", int(value[len("genus="):]))
        except ValueError:
            raise argparse.ArgumentTypeError(
                f"bad genus in target {value!r}; expected genus=<int>"
            ) from None
    raise argparse.ArgumentTypeError(
        f"unknown target {value!r}; expected minimal, maximal or genus=<int>"
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    graph = _load_graph(args.graph)
    report = analyze(
        graph,
        tree_cap=args.max_trees,
        rotation_cap=args.max_rotations,
        threads=args.threads,
    )
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        print(report.to_text())
    return OK


def cmd_embed(args: argparse.Namespace) -> int:
    graph = smooth(_load_graph(args.graph))
    target = args.target
    if target == "maximal":
        result = maximize_boundaries(
            graph,
            restarts=args.restarts,
            seed=args.seed,
            rotation_cap=args.max_rotations,
        )
    else:
        result = minimize_boundaries(
            graph,
            restarts=args.restarts,
            seed=args.seed,
            tree_cap=args.max_trees,
            rotation_cap=args.max_rotations,
        )
    if not result.certified:
        _say(
            "warning: optimum not certified within the enumeration caps; "
            "using the best rotation found"
        )
    bordered = assemble_sigma_surface(graph, result.rotation, margin=args.margin)
    if isinstance(target, tuple):
        wanted = target[1]
        if not result.certified:
            _say(
                "an exact genus target needs a certified minimal-boundary "
                "surface; raise --max-trees / --max-rotations"
            )
            return CAP_EXCEEDED
        schema = cap_target_genus(bordered, wanted, tree_cap=args.max_trees)
    else:
        schema = cap_standard(bordered)
    diagnostics = verify_schema(schema)
    for note in diagnostics.notes:
        _say(f"note: {note}")
    if diagnostics.errors:
        for err in diagnostics.errors:
            _say(f"fail: {err}")
        _say("refusing to emit a schema that does not verify")
        return INVARIANT_VIOLATION
    text = schema_to_json(schema)
    if args.output is None or args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    _say(
        f"schema: genus {schema.summary.genus}, "
        f"{result.boundary_count} boundary walk(s) before capping, "
        f"{len(result.moves)} move(s), "
        f"{'certified' if result.certified else 'not certified'}"
    )
    return OK


def cmd_oracle(args: argparse.Namespace) -> int:
    graph = smooth(_load_graph(args.graph))
    failures: list[str] = []

    profile = boundary_profile(graph, cap=args.max_rotations, threads=args.threads)
    total = sum(profile.values())
    print(f"rotations enumerated: {total}")
    print(f"boundary profile: {profile}")

    z = betti_deficiency(graph, args.max_trees)
    lo, hi = min(profile), max(profile)
    print(f"min boundaries: {lo}  (1 + zeta = {1 + z})")
    print(f"max boundaries: {hi}")
    print(f"essential genus: {essential_genus(graph, args.max_trees)}")
    if lo != 1 + z:
        failures.append(f"minimum {lo} differs from 1 + zeta = {1 + z}")

    chi = euler_char(graph)
    bad_parity = [b for b in profile if (b - chi) % 2]
    if bad_parity:
        failures.append(f"walk counts with wrong parity: {bad_parity}")
    print("parity check: " + ("FAIL" if bad_parity else "ok (all counts match chi mod 2)"))

    move_cases = 0
    stalls = 0
    for rotation in enumerate_rotations(graph, cap=args.max_rotations):
        base = _walk_count(graph.dart_count, rotation.cycles)
        incidence = vertex_boundary_incidence(graph, rotation)
        for v in range(graph.vertex_count):
            if incidence[v] < 3:
                continue
            move_cases += 1
            # reduce_move raises InternalInvariantError itself if no -2
            # relocation exists; recount anyway, double entry is the point
            moved, _ = reduce_move(graph, rotation, v)
            got = _walk_count(graph.dart_count, moved.cycles)
            if got != base - 2:
                failures.append(
                    f"reduce_move at vertex {v} changed {base} -> {got}, not -2"
                )
        _, count, _ = _descend(graph, rotation)
        if count != lo:
            stalls += 1
    print(
        "move check: "
        + ("FAIL" if failures else f"ok ({move_cases} reducing moves, every delta -2)")
    )
    # Greedy descent minimality is a tested observation, not a theorem:
    # rotations of loop-carrying graphs can stall above the minimum with
    # every vertex meeting <= 2 walks.  Report, never fail.
    if stalls:
        print(
            f"descent report: stalled above the minimum from {stalls} of {total} "
            "starts (enumeration fallback covers these)"
        )
    else:
        print(f"descent report: greedy reaches {lo} from all {total} starts")

    if failures:
        for f in failures:
            print(f"fail: {f}")
        return INVARIANT_VIOLATION
    print("oracle: all checks passed")
    return OK


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.schema, encoding="utf-8") as fh:
        schema = schema_from_json(fh.read())
    diagnostics = verify_schema(schema)
    for note in diagnostics.notes:
        print(f"note: {note}")
    if diagnostics.errors:
        for err in diagnostics.errors:
            print(f"fail: {err}")
        return VERIFY_FAILED
    s = schema.summary
    print(
        f"ok: genus {s.genus}, {s.boundary_count} boundary circle(s), "
        f"construction {s.construction}"
    )
    return OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ribbon-embed",
        description="Surface-embedding invariants and verified hyperbolic "
        "embedding schemas for metric graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_caps(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--max-trees",
            type=int,
            default=DEFAULT_TREE_CAP,
            help="abort if the graph has more spanning trees than this",
        )
        p.add_argument(
            "--max-rotations",
            type=int,
            default=DEFAULT_ROTATION_CAP,
            help="abort exhaustive rotation sweeps above this count",
        )

    p_analyze = sub.add_parser("analyze", help="print the invariant report")
    p_analyze.add_argument("graph", help="graph file (edge lines)")
    p_analyze.add_argument("--json", action="store_true", help="emit JSON")
    add_caps(p_analyze)
    p_analyze.add_argument(
        "--threads", type=int, default=_default_threads(),
        help="worker processes for the rotation sweep",
    )
    p_analyze.set_defaults(func=cmd_analyze)

    p_embed = sub.add_parser("embed", help="emit a verified embedding schema")
    p_embed.add_argument("graph", help="graph file (edge lines)")
    p_embed.add_argument(
        "--target",
        type=_target_kind,
        default="minimal",
        help="minimal (essential genus), maximal, or genus=<int>",
    )
    p_embed.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    p_embed.add_argument("--margin", type=float, default=0.1, help="scaling slack, > 0")
    p_embed.add_argument("--seed", type=int, default=0, help="seed for restart rotations")
    p_embed.add_argument(
        "--restarts", type=int, default=8,
        help="random restarts before falling back to enumeration",
    )
    add_caps(p_embed)
    p_embed.set_defaults(func=cmd_embed)

    p_oracle = sub.add_parser(
        "oracle", help="re-verify the boundary-walk theory by brute force"
    )
    p_oracle.add_argument("graph", help="graph file (edge lines)")
    add_caps(p_oracle)
    p_oracle.add_argument(
        "--threads", type=int, default=_default_threads(),
        help="worker processes for the rotation sweep",
    )
    p_oracle.set_defaults(func=cmd_oracle)

    p_verify = sub.add_parser("verify", help="recheck a schema document")
    p_verify.add_argument("schema", help="schema JSON file")
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad usage, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except CycleGraphError as exc:
        _say(f"cycle graph: {exc}")
        return CYCLE_GRAPH
    except TargetGenusError as exc:
        _say(f"error: {exc}")
        return TARGET_UNREACHABLE
    except CapExceededError as exc:
        _say(f"error: {exc}")
        return CAP_EXCEEDED
    except InternalInvariantError as exc:
        _say(f"internal invariant violation: {exc}")
        return INVARIANT_VIOLATION
    except (
        GraphFormatError,
        GraphValidationError,
        SchemaFormatError,
        MovePreconditionError,
        ValueError,
    ) as exc:
        _say(f"error: {exc}")
        return BAD_INPUT
    except OSError as exc:
        _say(f"error: {exc}")
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
