import pytest

from ribbon_embed import parse_graph

THETA = """\
# two vertices joined by three parallel unit edges
edge a u v 1.0
edge b u v 1.0
edge c u v 1.0
"""

BOUQUET2 = """\
# one vertex carrying two unit loops
edge p w w 1.0
edge q w w 1.0
"""

K4 = """\
edge e01 v0 v1 1.0
edge e02 v0 v2 1.0
edge e03 v0 v3 1.0
edge e12 v1 v2 1.0
edge e13 v1 v3 1.0
edge e23 v2 v3 1.0
"""

K5 = """\
edge e01 v0 v1 1.0
edge e02 v0 v2 1.0
edge e03 v0 v3 1.0
edge e04 v0 v4 1.0
edge e12 v1 v2 1.0
edge e13 v1 v3 1.0
edge e14 v1 v4 1.0
edge e23 v2 v3 1.0
edge e24 v2 v4 1.0
edge e34 v3 v4 1.0
"""

DUMBBELL = """\
# loop - bridge - loop; the unique spanning tree is the bridge
edge lu u u 1.0
edge m u v 1.0
edge lv v v 1.0
"""


@pytest.fixture(scope="session")
def theta():
    return parse_graph(THETA)


@pytest.fixture(scope="session")
def bouquet2():
    return parse_graph(BOUQUET2)


@pytest.fixture(scope="session")
def k4():
    return parse_graph(K4)


@pytest.fixture(scope="session")
def k5():
    return parse_graph(K5)


@pytest.fixture(scope="session")
def dumbbell():
    return parse_graph(DUMBBELL)
