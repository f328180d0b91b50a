"""
The octagon: a bounded search comes back empty
==============================================

On the doubled octagon the only admissible loop face turns by pi/2 around
three cone points.  Every geodesic loop at the midpoint of edge 0, up to 24
crossings, turns by 0 instead.  Two independent methods agree on that list
of loops: the corridor enumeration and plain direction sampling (10^5
launch directions here; the acceptance test uses 10^6).
"""

import math

from netlab import PolygonSpec, SearchConfig, brute_force_closed, build_surface, search_figure8
from netlab.search import collect_loops

report = search_figure8(SearchConfig(8))
print(f"solutions: {len(report.solutions)}; {report.notes[0]}")

s = build_surface(PolygonSpec.regular(8))
M = s.edge_midpoint(0)
loops, _ = collect_loops(s, M, 24, 20.0)
sampled = brute_force_closed(s, M, 10 ** 5, 20.0)
print(f"enumerated loops: {len(loops)}, sampled loops: {len(sampled)}")
print("turning angles seen:", sorted({round(lp.alpha, 9) for lp in loops}))

gap = max(min(abs((x.direction - lp.departure + math.pi) % (2 * math.pi) - math.pi)
              for x in sampled) for lp in loops)
print(f"largest direction gap between the two methods: {gap:.1e} rad")
