"""
Three-regular nets on doubled regular polygons
==============================================

A doubled regular n-gon is a flat sphere with n cone points, each of
curvature 4pi/n.  A face of a 3-regular geodesic net with y corners and x
cone points inside must satisfy n(6 - y) = 12x, so such nets can only exist
when 3 | n or 4 | n.  Both cases are realised below.
"""

from netlab import (construct_3regular_4n, construct_theta_regular, corner_cut_extend,
                    solve_3regular, verify)

# the face types the curvature budget allows
for n in (5, 6, 8, 12):
    print(f"n = {n:2d}: faces (x, y) = {solve_3regular(n).solutions}")

# %%
# n divisible by 3: a theta-graph through the centres of both sheets.
net = construct_theta_regular(9)
rep = verify(net)
print("\ntheta on the 9-gon:", "passes" if rep.passed else "fails")
for f in rep.faces:
    print(f"  face {f.face}: y = {f.y}, x = {f.x}, residual = {f.residual:.1e}")

# %%
# n divisible by 4: a tetrahedral net, two vertices per sheet, all seam
# crossings at edge midpoints.
net = construct_3regular_4n(8)
rep = verify(net)
print("\ntetrahedral net on the 8-gon:", "passes" if rep.passed else "fails",
      f"(V, E, F) = ({rep.V}, {rep.E}, {rep.F}),",
      f"largest balancing defect {max(rep.balanced):.1e}")

# %%
# Nets that meet the seam only at edge midpoints survive cutting the corners
# off the polygon: the 4-gon net becomes a 12-gon net.
big = corner_cut_extend(construct_3regular_4n(4), 4, 12)
print("corner-cut 4 -> 12:", "passes" if verify(big).passed else "fails")
