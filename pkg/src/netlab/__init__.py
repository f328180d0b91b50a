"""Geodesic nets on doubled polygons."""

from .admissibility import (bifocal_admissible, classify_triangle, classify_triangle_deg,
                            figure8_loop_angles, solve_3regular, theta_admissible)
from .construct import (construct_3regular_4n, construct_bifocal_30_30_120,
                        construct_figure8_hexagon, construct_figure8_isosceles,
                        construct_figure8_odd, construct_theta_regular, corner_cut_extend)
from .io import load_net, net_from_json, net_to_json, save_net
from .net import Net, balancing_defect, classify_partition, verify
from .search import SearchConfig, brute_force_closed, search_bifocal, search_figure8
from .surface import (BOTTOM, TOP, InvalidSpec, Locus, OutsidePolygon, PolygonSpec,
                      Surface, SurfacePoint, build_surface, classify_point, edge_midpoint)
from .tracer import (GeodesicPath, NotGeodesic, SingularHit, StartAtCone, develop,
                     develop_word, solve_closed, trace)

__version__ = "0.1.0"
