"""
Counting the maximal inversion-LCD double-circulant codes
=========================================================

Among 1-generator codes with two blocks of length m, the m-dimensional
(maximal) inversion-LCD ones are exactly q^m in number, and over GF(2)
each is generated by a canonical pair (c(x), c(x)+1).  This script
enumerates every generator pair for q=2, m=3, watches 24 qualifying pairs
collapse onto 8 = 2^3 distinct codes, and prints the canonical forms.
"""

from collections import defaultdict

from sigmalcd import gqc, poly
from sigmalcd.field import field

F2 = field(2)
M = 3


def all_polys():
    for t in range(2 ** M):
        yield poly.from_seq([(t >> i) & 1 for i in range(M)])


# ---------------------------------------------------------------- enumerate

by_code = defaultdict(list)
for c1 in all_polys():
    for c2 in all_polys():
        r = gqc.maximal_one_gen_check(F2, (M, M), (c1, c2), -1)
        if r.lcd and r.maximal:
            code = gqc.one_gen_code(F2, (M, M), (c1, c2))
            key = code.flat.gen.tobytes()
            by_code[key].append((c1, c2, tuple(int(v) for v in r.canonical)))

print("qualifying pairs:", sum(len(v) for v in by_code.values()))
print("distinct codes:  ", len(by_code), "= 2^%d" % M)

for key, members in sorted(by_code.items()):
    canons = {c for _, _, c in members}
    assert len(canons) == 1  # one canonical form per code
    c = canons.pop()
    print("  canonical c(x) coeffs %-10s from %d generator pairs" % (c, len(members)))

# ---------------------------------------------------------------- a non-example

r = gqc.maximal_one_gen_check(F2, (M, M), (poly.from_seq([1]), poly.from_seq([0, 1])), -1)
print("\n(1, x): maximal:", r.maximal, " lcd:", r.lcd, "-- maximal but not LCD")
