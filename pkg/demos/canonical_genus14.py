"""Canonical ideal of a genus 14 curve, then an independent check.

The generators come straight from the Newton polygon: 55 toric quadrics of
the interior hull plus one rolling-factor quadric per interior point of the
second interior hull.
"""

import time

from canforge import canonical_ideal, parse_laurent
from canforge.io import form_to_text
from canforge.lattice import format_polygon
from canforge.verify import verify_canonical

f = parse_laurent("13*x^6*y^5 - 6*x^6*y^4 + 2*x^3*y^5 + 4*x^3*y^4 + x^3 + 3*y^4")

t0 = time.perf_counter()
C = canonical_ideal(f)
print(f"genus {C.genus}, case {C.case.value}, {C.counts['quadric_count']} quadrics ({time.perf_counter() - t0:.2f}s)")
print("interior hull:", format_polygon(C.context.delta1))
print("second interior hull:", format_polygon(C.context.delta2))

for w, F in C.extra:
    print(f"F_w for w = {w}:", form_to_text(F))

# sample points mod 10007, evaluate, and compare span dimensions with C(g+d-1,d) - (2d-1)(g-1)
for r in verify_canonical(C, f, p=10007, count=100):
    print(f"{'PASS' if r['pass'] else 'FAIL'} {r['check']:22s} expected {r['expected']}, computed {r['computed']}")
