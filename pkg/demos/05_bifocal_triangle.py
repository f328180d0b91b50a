"""
A bifocal on the doubled 30-30-120 triangle
===========================================

Each 30-degree corner doubles to a cone of total angle 60 degrees.  A
geodesic loop around such a cone unrolls to a chord of an equilateral
triangle, so its corner is exactly 2pi/3 -- the angle a balanced degree-3
vertex needs.  Joining the two loop vertices along the base of the triangle
gives a bifocal: two loops and one connecting edge.
"""

from netlab import construct_bifocal_30_30_120, verify
from netlab.net import classify_partition

for size in (0.05, 0.2, 0.45):
    net = construct_bifocal_30_30_120(loop_size=size)
    rep = verify(net)
    print(f"loop size {size}: {classify_partition(net)}, passed {rep.passed}, "
          f"defects {[f'{d:.1e}' for d in rep.balanced]}")

rep = verify(construct_bifocal_30_30_120())
for f in rep.faces:
    print(f"face with {f.y} corner(s): cones {f.cones}, curvature {f.curvature:.4f}, "
          f"residual {f.residual:.1e}")

# %%
# On regular polygons the curvature budget asks for 12 | n; none has been
# found on the 12-gon (see ``netlab search --n 12 --target bifocal``).
