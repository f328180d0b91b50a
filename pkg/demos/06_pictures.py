"""
Pictures
========

SVG drawings of a few nets: both sheets side by side (Top left, Bottom
right) and the unfolding of one edge along its crossing word.  Files go to
the directory given on the command line (default: the current directory).
"""

import sys
from pathlib import Path

from netlab import (construct_bifocal_30_30_120, construct_figure8_hexagon,
                    construct_theta_regular)
from netlab.render import render_development, render_sheets

out = Path(sys.argv[1] if len(sys.argv) > 1 else ".")
out.mkdir(parents=True, exist_ok=True)

nets = {
    "theta6": construct_theta_regular(6),
    "hexagon_figure8": construct_figure8_hexagon(),
    "bifocal_triangle": construct_bifocal_30_30_120(),
}
for name, net in nets.items():
    (out / f"{name}.svg").write_text(render_sheets(net))
(out / "hexagon_figure8_edge0.svg").write_text(
    render_development(nets["hexagon_figure8"], 0))
print("wrote", sorted(p.name for p in out.glob("*.svg")))
