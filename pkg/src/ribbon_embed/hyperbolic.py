"""Hyperbolic block geometry: pair-of-pants waists, sphere feet, scaling.

All blocks are built from pants with two unit-length cuffs and one waist of
length 2x.  The distance between the two unit cuffs of such a pants is

    f(x) = acosh((cosh^2(1/2) + cosh x) / sinh^2(1/2)),

a strictly increasing bijection from (0, inf) onto (f_min, inf) with

    f_min = acosh((cosh^2(1/2) + 1) / sinh^2(1/2)) = 2.81365822749...

Both come from the right-angled hexagon relations, as does the foot length
x_v = asinh(coth(1/4) coth(pi/deg v)): the orthogonal distance from the
center of a regular deg-holed sphere with unit cuffs to each cuff.  Given
edge lengths, ``choose_scale`` finds the smallest uniform rescaling t at
which every edge is long enough to cross its two feet plus an f_min-wide
pants, with ``margin`` to spare; the leftover distance determines each
edge's waist via the inverse of f.

Everything is double precision; the formulas are well-conditioned on the
domains used here, and the round-trip f(f_inv(L)) = L holds to 1e-9 across
the working range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graph import MetricGraph

_COSH_SQ_HALF = math.cosh(0.5) ** 2
_SINH_SQ_HALF = math.sinh(0.5) ** 2

F_MIN = math.acosh((_COSH_SQ_HALF + 1.0) / _SINH_SQ_HALF)


def f_min() -> float:
    """Infimum of cuff-to-cuff distances over all waist lengths."""
    return F_MIN


def waist_distance(x: float) -> float:
    """f(x): distance between the two unit cuffs of a (1, 1, 2x) pants."""
    if x <= 0.0:
        raise ValueError(f"waist half-length must be positive, got {x}")
    return math.acosh((_COSH_SQ_HALF + math.cosh(x)) / _SINH_SQ_HALF)


def f_inv(distance: float) -> float:
    """Inverse of :func:`waist_distance`; defined for distance > f_min."""
    if distance <= F_MIN:
        raise ValueError(f"distance must exceed f_min={F_MIN:.9f}, got {distance}")
    return math.acosh(math.cosh(distance) * _SINH_SQ_HALF - _COSH_SQ_HALF)


def foot_length(degree: int) -> float:
    """x_v: center-to-cuff distance on a regular degree-holed unit-cuff sphere."""
    if degree < 3:
        raise ValueError(f"foot length needs degree >= 3, got {degree}")
    quarter = 0.25
    return math.asinh(
        (math.cosh(quarter) / math.sinh(quarter)) / math.tanh(math.pi / degree)
    )


def edge_clearance(graph: MetricGraph, edge: int) -> float:
    """l(e) = x_u + x_v: the part of an edge spent inside vertex spheres."""
    u, v = graph.endpoints(edge)
    return foot_length(graph.degree(u)) + foot_length(graph.degree(v))


@dataclass(frozen=True)
class ScaleParams:
    """Rescaling factor and all per-vertex / per-edge block measurements.

    Keys of ``foot`` are vertex ids, keys of ``clearance`` and ``waist``
    edge ids; ``waist[e]`` stores the half-length x_e, so the waist cuff of
    the edge pants has length 2 * waist[e].
    """

    t: float
    margin: float
    f_floor: float
    foot: dict[int, float]
    clearance: dict[int, float]
    waist: dict[int, float]


def choose_scale(graph: MetricGraph, margin: float = 0.1) -> ScaleParams:
    """Smallest t with t*d(e) >= l(e) + f_min + margin on every edge.

    At that t the binding edge has exactly ``margin`` to spare and every
    waist x_e = f_inv(t*d(e) - l(e)) is well-defined and positive.  Degrees
    below 3 are rejected by :func:`foot_length`.
    """
    if margin <= 0.0:
        raise ValueError(f"margin must be positive, got {margin}")
    foot = {v: foot_length(graph.degree(v)) for v in range(graph.vertex_count)}
    clearance = {}
    for e in range(graph.edge_count):
        u, v = graph.endpoints(e)
        clearance[e] = foot[u] + foot[v]
    t = max(
        (clearance[e] + F_MIN + margin) / graph.lengths[e] for e in range(graph.edge_count)
    )
    waist = {e: f_inv(t * graph.lengths[e] - clearance[e]) for e in range(graph.edge_count)}
    return ScaleParams(
        t=t, margin=margin, f_floor=F_MIN, foot=foot, clearance=clearance, waist=waist
    )
