# The hyperbolic side: how long must edges be?
#
# Every block in an embedding schema is a hyperbolic surface with geodesic
# boundary.  A vertex of degree k becomes a sphere with k unit-length
# cuffs; an edge becomes a pair of pants with two unit cuffs and one free
# waist.  Right-angled hexagon trigonometry gives three functions:
#
#   foot_length(k)     how much edge length the degree-k sphere consumes
#   waist_distance(x)  distance between the two unit cuffs of a pants
#                      whose waist has half-length x
#   f_inv(d)           the inverse: which waist realizes distance d
#
# waist_distance has an infimum F_MIN > 0 as x -> 0, so an edge is
# realizable only if its scaled length exceeds the feet plus F_MIN.  The
# scaler picks the smallest global factor t that gives every edge a
# positive margin.

from pathlib import Path

from ribbon_embed import (
    F_MIN,
    choose_scale,
    f_inv,
    foot_length,
    parse_graph,
    waist_distance,
)

print(f"F_MIN            = {F_MIN:.12f}")
print(f"foot_length(3)   = {foot_length(3):.12f}")
print(f"foot_length(4)   = {foot_length(4):.12f}")
print(f"waist_distance(1) = {waist_distance(1.0):.12f}")
print(f"f_inv of that     = {f_inv(waist_distance(1.0)):.12f}  (round trip)")
print()

HERE = Path(__file__).parent
theta = parse_graph((HERE / "graphs" / "theta.graph").read_text())
scale = choose_scale(theta, margin=0.1)
print(f"theta scale factor t = {scale.t:.12f}")
for e in range(theta.edge_count):
    gap = scale.t * theta.lengths[e] - scale.clearance[e]
    print(
        f"edge {theta.edge_names[e]}: scaled length {scale.t * theta.lengths[e]:.6f}, "
        f"feet {scale.clearance[e]:.6f}, gap {gap:.6f}, waist x = {scale.waist[e]:.6f}"
    )

# All three theta edges are interchangeable, so the scaler leaves each of
# them exactly the requested margin of 0.1 above F_MIN.  On graphs with
# uneven lengths only the shortest (binding) edge sits at the margin; the
# rest get wider waists.
uneven = parse_graph("edge a u v 0.5\nedge b u v 1.0\nedge c u v 8.0")
s2 = choose_scale(uneven)
print()
print("uneven lengths:", [round(s2.waist[e], 4) for e in range(3)])
