"""One curve per case of the canonical generator classification.

For each polygon a random-coefficient curve is built, its canonical ideal
computed, and the degree 2 and 3 pieces compared with the Hilbert function
of a canonical curve.
"""

import random
from math import comb

from canforge import QQ, canonical_ideal, convex_hull
from canforge.lattice import SIGMA, UPSILON, dilate
from canforge.laurent import LaurentPoly
from canforge.verify import span_and_minimality

polygons = {
    "4 Sigma": dilate(SIGMA, 4),
    "2 Upsilon": dilate(UPSILON, 2),
    "5 Sigma": dilate(SIGMA, 5),
    "6 Sigma": dilate(SIGMA, 6),
    "7x3 triangle": convex_hull([(0, 0), (7, 0), (0, 3)]),
}

rng = random.Random(1)
for name, P in polygons.items():
    f = LaurentPoly({p: QQ(rng.randint(1, 30)) for p in P.lattice_points})
    C = canonical_ideal(f)
    g = C.genus
    dims = []
    for d in (2, 3):
        low = [G for G in C.generators if G.degree <= d]
        dims.append(span_and_minimality(low, d, 0, C.points).computed)
    want = [comb(g + d - 1, d) - (2 * d - 1) * (g - 1) for d in (2, 3)]
    c = C.counts
    print(f"{name:13s} g={g:2d} {C.case.value:16s} q={c['quadric_count']:2d} c={c['cubic_count']} "
          f"qu={c['quartic_count']}  dim I2, I3 = {dims} (expected {want})")
