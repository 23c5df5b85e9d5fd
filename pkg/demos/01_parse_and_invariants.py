# Parsing metric graphs and reading off their embedding invariants.
#
# A graph file is a list of `edge <name> <u> <v> <length>` lines.  Loops
# and parallel edges are welcome; degree-2 vertices are smoothed away
# automatically by the analyzer, since subdividing an edge changes nothing
# that matters here.

from pathlib import Path

from ribbon_embed import analyze, parse_graph

HERE = Path(__file__).parent

for name in ("theta", "bouquet2", "k4", "k5", "dumbbell"):
    graph = parse_graph((HERE / "graphs" / f"{name}.graph").read_text())
    report = analyze(graph)
    print(f"--- {name} ---")
    print(report.to_text())
    print()

# Things to notice:
#
# * beta - zeta is always even; the maximum genus is half of it.
# * The dumbbell has zeta = 2: its unique spanning tree is the bridge, and
#   the two leftover loops are two odd components.  No rotation of it has
#   fewer than 3 boundary walks.
# * ge_max_exact is the worst essential genus an adversary can force by
#   choosing the rotation; it never exceeds the printed girth bound
#   (beta + 1)/2 + |E|/girth.
