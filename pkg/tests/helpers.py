"""Independent oracles and generators used by several test modules.

Everything here is deliberately written against different algorithms than
the package under test: the tree count comes from the matrix-tree theorem
over exact rationals, and the random graphs are built by stub pairing.
"""

import random
from fractions import Fraction

from ribbon_embed import MetricGraph, connected_components, is_cycle_graph


def kirchhoff_tree_count(graph: MetricGraph) -> int:
    """Spanning-tree count via a Laplacian cofactor determinant.

    Loops never enter a spanning tree, so they are skipped; parallel edges
    accumulate in the off-diagonal entries.  Exact over Fractions.
    """
    n = graph.vertex_count
    if n == 1:
        return 1
    lap = [[Fraction(0)] * n for _ in range(n)]
    for e in range(graph.edge_count):
        u, v = graph.endpoints(e)
        if u == v:
            continue
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    # determinant of the (n-1)x(n-1) cofactor, Gaussian elimination
    m = [row[1:] for row in lap[1:]]
    det = Fraction(1)
    for col in range(n - 1):
        pivot = next((r for r in range(col, n - 1) if m[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n - 1):
            factor = m[r][col] * inv
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    assert det.denominator == 1
    return abs(int(det))


def random_multigraph(seed: int, max_edges: int = 12) -> MetricGraph:
    """Connected multigraph with every degree >= 3 (loops allowed).

    Each vertex gets three stubs plus a few extras; a random pairing of the
    stubs becomes the edge list.  Rejection keeps resampling from the same
    stream until the result is connected, not a bare cycle, and small
    enough, so the map seed -> graph is deterministic.
    """
    rng = random.Random(seed)
    while True:
        nv = rng.randint(2, 4)
        stubs = []
        for v in range(nv):
            stubs += [v] * 3
        for _ in range(rng.randint(0, 4)):
            stubs.append(rng.randrange(nv))
        if len(stubs) % 2:
            stubs.append(rng.randrange(nv))
        if len(stubs) // 2 > max_edges:
            continue
        rng.shuffle(stubs)
        vertex_of = tuple(stubs)
        ne = len(stubs) // 2
        graph = MetricGraph(
            vertex_of,
            tuple(1.0 + 0.25 * (i % 3) for i in range(ne)),
            tuple(f"e{i}" for i in range(ne)),
            tuple(f"v{i}" for i in range(nv)),
        )
        if len(connected_components(graph)) != 1 or is_cycle_graph(graph):
            continue
        if min(graph.degree(v) for v in range(nv)) < 3:
            continue
        return graph
