"""Face-by-face non-degeneracy checks."""

import random

from canforge import GF, check_nondegenerate, convex_hull, parse_laurent
from canforge.laurent import LaurentPoly

for text in ["x + y + 1", "x^2 + 2*x*y + y^2 + x + y"]:
    v = check_nondegenerate(parse_laurent(text))
    print(f"{text:28s} {v.status.value:14s} {v.face or ''} {v.explanation}")

# dense random coefficients on the 3x3 square are almost always fine
F = GF(1009)
square = convex_hull([(0, 0), (3, 0), (0, 3), (3, 3)])
rng = random.Random(0)
tally = {}
for _ in range(100):
    f = LaurentPoly({p: F(rng.randrange(1, 1009)) for p in square.lattice_points}, F)
    s = check_nondegenerate(f).status.value
    tally[s] = tally.get(s, 0) + 1
print("random dense polynomials over F_1009:", tally)
