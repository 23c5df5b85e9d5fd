import pytest

from ribbon_embed import (
    MetricGraph,
    MovePreconditionError,
    NoIncreasingMoveError,
    betti_deficiency,
    boundary_count,
    boundary_profile,
    count_rotations,
    default_rotation,
    enumerate_rotations,
    increase_move,
    make_rotation,
    maximize_boundaries,
    minimize_boundaries,
    reduce_move,
    vertex_boundary_incidence,
)
from ribbon_embed.moves import _descend

from helpers import random_multigraph

# Loops mixed with ordinary edges can strand the greedy descent: all four
# vertices meet <= 2 walks at a 3-walk rotation whose graph admits a
# 1-walk rotation.  Found by exhaustive search; kept as a regression
# anchor for why minimize_boundaries needs its enumeration fallback.
STALLING = MetricGraph(
    (0, 0, 1, 2, 1, 0, 0, 1, 2, 1, 2, 2),
    (1.0,) * 6,
    ("e0", "e1", "e2", "e3", "e4", "e5"),
    ("v0", "v1", "v2"),
)


def test_reduce_move_on_theta(theta):
    rot = make_rotation(theta, [(0, 4, 2), (1, 3, 5)])
    assert boundary_count(theta, rot) == 3
    new_rot, record = reduce_move(theta, rot, 0)
    assert boundary_count(theta, new_rot) == 1
    assert record.boundary_delta == -2
    assert record.vertex == 0
    line = record.to_line(theta)
    assert line.startswith("move u ") and line.endswith("delta -2")


def test_reduce_move_precondition(theta):
    one_walk = make_rotation(theta, [(0, 2, 4), (1, 3, 5)])
    with pytest.raises(MovePreconditionError):
        reduce_move(theta, one_walk, 0)


def test_reduce_move_sweep_fixtures(theta, bouquet2, k4):
    # every vertex of every rotation meeting >= 3 walks admits a -2 move
    cases = 0
    for g in (theta, bouquet2, k4):
        for rot in enumerate_rotations(g, 10**6):
            base = boundary_count(g, rot)
            incidence = vertex_boundary_incidence(g, rot)
            for v in range(g.vertex_count):
                if incidence[v] >= 3:
                    new_rot, record = reduce_move(g, rot, v)
                    assert boundary_count(g, new_rot) == base - 2
                    assert record.boundary_delta == -2
                    cases += 1
    assert cases > 0


def test_increase_move(theta):
    one_walk = make_rotation(theta, [(0, 2, 4), (1, 3, 5)])
    rot, record = increase_move(theta, one_walk)
    assert boundary_count(theta, rot) == 3
    assert record.boundary_delta == 2


def test_increase_move_exhausted(theta):
    three_walk = make_rotation(theta, [(0, 4, 2), (1, 3, 5)])
    assert boundary_count(theta, three_walk) == 3  # the maximum for theta
    with pytest.raises(NoIncreasingMoveError):
        increase_move(theta, three_walk)


def test_minimize_fixtures(theta, bouquet2, k4, k5, dumbbell):
    for g, want in ((theta, 1), (bouquet2, 1), (k4, 2), (k5, 1), (dumbbell, 3)):
        res = minimize_boundaries(g, restarts=4)
        assert res.boundary_count == want == 1 + betti_deficiency(g)
        assert res.certified
        assert boundary_count(g, res.rotation) == want


def test_minimize_records_compose_when_greedy_wins(k4):
    res = minimize_boundaries(k4)
    if res.restarts_used == 0 and not res.enumerated:
        assert res.initial_count - res.boundary_count == 2 * len(res.moves)
    assert all(m.boundary_delta == -2 for m in res.moves)


def test_minimize_from_given_start(k4):
    start = default_rotation(k4, 11)
    res = minimize_boundaries(k4, start=start, restarts=2)
    assert res.initial_count == boundary_count(k4, start)
    assert res.boundary_count == 2


def test_maximize_fixtures(theta, bouquet2, k4, k5):
    for g, want in ((theta, 3), (bouquet2, 3), (k4, 4), (k5, 5)):
        res = maximize_boundaries(g, restarts=4)
        assert res.boundary_count == want == max(boundary_profile(g, 10**6))
        assert res.certified
        assert all(m.boundary_delta == 2 for m in res.moves)


def test_descent_can_stall_above_minimum():
    # resolves the open question negatively: greedy descent is not always
    # enough, so certification must not assume it
    g = STALLING
    target = 1 + betti_deficiency(g)
    assert target == 1
    stalled = 0
    reached = 0
    for rot in enumerate_rotations(g, 10**6):
        _, count, _ = _descend(g, rot)
        if count == target:
            reached += 1
        else:
            stalled += 1
    assert stalled > 0
    assert reached > 0
    # the driver still certifies the true minimum via its fallback
    res = minimize_boundaries(g, restarts=2)
    assert res.boundary_count == target
    assert res.certified


def test_minimize_random_graphs_certified():
    for seed in range(10):
        g = random_multigraph(seed)
        res = minimize_boundaries(g, restarts=6, rotation_cap=10**6)
        assert res.certified, f"seed {seed}"
        assert res.boundary_count == 1 + betti_deficiency(g), f"seed {seed}"


def test_maximize_random_graphs_certified():
    for seed in range(6):
        g = random_multigraph(seed)
        if count_rotations(g) > 10**5:
            continue
        res = maximize_boundaries(g, restarts=6, rotation_cap=10**5)
        assert res.certified, f"seed {seed}"
        assert res.boundary_count == max(boundary_profile(g, 10**5)), f"seed {seed}"


def test_uncertified_when_stalled_and_capped():
    # start at a stalling rotation, forbid restarts, cap out the fallback:
    # the driver must hand back its best honestly flagged as uncertified
    g = STALLING
    stalled_start = None
    for rot in enumerate_rotations(g, 10**6):
        _, count, _ = _descend(g, rot)
        if count > 1:
            stalled_start = rot
            break
    assert stalled_start is not None
    res = minimize_boundaries(g, start=stalled_start, restarts=0, rotation_cap=10)
    assert not res.certified
    assert not res.enumerated
    assert res.boundary_count == 3


def test_certified_by_parity_floor_despite_tree_cap(k5):
    # one spanning tree with xi = beta mod 2 already pins zeta, so a tiny
    # tree cap does not block certification on K5
    res = minimize_boundaries(k5, restarts=0, tree_cap=10, rotation_cap=10)
    assert res.certified
    assert res.boundary_count == 1
