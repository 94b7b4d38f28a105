"""Minimal generators of a toric surface ideal.

Runs the triangle conv{(0,1),(7,0),(2,4)} through toric_ideal and compares
the quadric count with the kernel of chi_2.
"""

import time

from canforge import convex_hull, toric_ideal
from canforge.lattice import format_polygon
from canforge.io import form_to_text
from canforge.verify import oracle_dim_toric

P = convex_hull([(0, 1), (7, 0), (2, 4)])
print(format_polygon(P), "with", len(P.lattice_points), "lattice points")

t0 = time.perf_counter()
T = toric_ideal(P)
print(f"{len(T.quadrics)} quadrics, {len(T.cubics)} cubic  ({time.perf_counter() - t0:.3f}s)")

# the cubic is the one relation not generated in degree 2
print("cubic:", form_to_text(T.cubics[0]))

# quadric count against the kernel of chi_2
print("kernel of chi_2 has dimension", oracle_dim_toric(P, 2))
