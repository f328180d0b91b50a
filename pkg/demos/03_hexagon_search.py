"""
Finding the hexagon figure-eight
================================

On the doubled hexagon the loop faces must hold x = 2 cone points and turn
by 2pi/3.  The search enumerates geodesic loops at the midpoint of edge 0 by
their crossing words (depth-first over corridors of unfolded hexagons),
pairs each loop with its image under the half turn about the midpoint, and
keeps embedded pairs.
"""

import time

from netlab import SearchConfig, search_figure8, verify

t = time.perf_counter()
report = search_figure8(SearchConfig(6, max_word_length=24))
print(f"{report.candidates_examined} corridor words, {report.loops_examined} loops, "
      f"{len(report.solutions)} figure-eight(s) in {time.perf_counter() - t:.1f}s")

for words, net in zip(report.solution_words, report.solutions):
    rep = verify(net)
    print("words:", words)
    v = net.vertices[0]
    print(f"vertex ({v.coords[0]:.4f}, {v.coords[1]:.4f}) on the seam")
    for f in rep.faces:
        kind = "loop" if f.y == 1 else "outer"
        print(f"  {kind} face: x = {f.x}, turning = {[round(a, 6) for a in f.turning_angles]}")

# %%
# Loops with the right turning angle that were thrown out, and why.
for word, why in report.rejected[:5]:
    print("rejected", word, "-", why)

# %%
# The loops cross the polygon edges away from their midpoints, so unlike the
# odd-gon examples this net does not extend to 12-gons by cutting corners.
net = report.solutions[0]
print("crossing parameters:", [round(t, 4) for e in net.edges for t in e.path.crossing_params])
