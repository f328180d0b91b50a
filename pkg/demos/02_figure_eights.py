"""
Figure-eights: loop angles and closed-form examples
===================================================

A figure-eight is one balanced degree-4 vertex carrying two geodesic loops.
A loop face enclosing x cone points turns by alpha = 2pi - 4pi x/n at its
corner, and a genuine corner needs 0 < alpha < pi.
"""

from netlab import (construct_figure8_isosceles, construct_figure8_odd, figure8_loop_angles,
                    verify)

for n in range(3, 13):
    opts = ", ".join(f"x={x}: alpha={a}pi" for x, a in figure8_loop_angles(n).entries)
    print(f"n = {n:2d}: {opts or 'none'}")

# %%
# On odd polygons the loops are perpendicular bounces off the far edges,
# based at the midpoint of edge 0.
for n in (3, 5, 7):
    net = construct_figure8_odd(n)
    words = [e.path.word for e in net.edges]
    print(f"odd {n}-gon: words {words}, verified: {verify(net).passed}")

# %%
# Every isosceles triangle carries one, including the 30-30-120 triangle.
for angles in [(70, 70, 40), (30, 30, 120), ("22.5", "22.5", 135)]:
    net = construct_figure8_isosceles(angles)
    print(f"triangle {angles}: verified {verify(net).passed}")
