"""
Embedding the 14-edge witness into the built family
===================================================

g1 is a hand-sized 4-partite family with nu=2 and tau=6, small enough
to check by eye.  The claim that the glued construction generalizes it
is made precise by a side-respecting injective embedding that sends
edges onto edges.
"""

from ryserplanes import (
    build_g1,
    build_h1,
    find_embedding,
    is_arc,
    is_ryser,
    parse_point_label,
    plane_build,
)

g = build_g1()
v = is_ryser(g).value
print("g1:", len(g.vertices), "vertices,", len(g.edges), "edges,",
      f"nu={v['nu']} tau={v['tau']} extremal={v['is_ryser']}")

h, _ = build_h1(3, 2)
m = find_embedding(g, h)
print("embedding found:", m is not None)
print("hub vertex v12 ->", m[1], "(the point shared by both glued planes)")

# the three image vertices below plus the deleted point form a 4-arc,
# the seed of the conic used by the general construction
plane = plane_build(3)
pids = []
for gvid in (4, 22, 7):
    plane_no, triple = parse_point_label(h.vertex(m[gvid]).label)
    pids.append(plane.point_id(triple))
    print(f"  g1 vertex {gvid} -> plane {plane_no} point {triple}")
pids.append(plane.point_id((0, 0, 1)))
print("arc check on images + deleted point:", is_arc(plane, pids))
