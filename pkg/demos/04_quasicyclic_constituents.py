"""
Quasi-cyclic codes through their constituents
=============================================

A length-lm code invariant under blockwise shifts splits, one cyclotomic
coset at a time, into small "constituent" codes over extension fields.
Whether the big code meets its mu_a-twisted dual trivially can be read off
leader by leader -- no work at length lm at all.  The same verdict comes
out of a polynomial-gcd computation for 1-generator codes, and both agree
with the brute-force hull.
"""

import numpy as np

from sigmalcd import gqc, oracle, poly
from sigmalcd.cyclotomic import CyclotomicContext
from sigmalcd.field import field

F2 = field(2)

# ---------------------------------------------------------------- constituents

code = gqc.GqcCode.from_generators(F2, (7, 7), [
    (poly.from_seq([1, 1]), poly.from_seq([1, 0, 1])),
])
ctx = gqc.context_for(code)
print("two-block code, n=%d k=%d" % (code.flat.n, code.k))
for i in ctx.leaders:
    con = gqc.constituent(code, ctx, i)
    print("  leader %d (coset size %d): constituent dim %d" % (
        i, len(ctx.coset(i)), con.dim))

for a in (1, -1, 3):
    print("a=%2d: criterion %-5s  oracle hull %d" % (
        a, gqc.is_mua_lcd(code, ctx, a),
        oracle.brute_hull_dim(code.flat, code.mu_map(a))))

# ---------------------------------------------------------------- one generator

# for a single generator (c1(x), ..., cl(x)) the constituents are spanned by
# evaluations, and the verdict reduces to gcds with x^m - 1
c = (poly.from_seq([1, 1]), poly.from_seq([1, 0, 1]))
ctx3 = CyclotomicContext(F2, 3)
print("\n(1+x, 1+x^2) mod x^3-1:")
print("  eval form:", gqc.one_gen_lcd_eval(ctx3, (3, 3), c, -1))
print("  gcd form: ", gqc.one_gen_lcd_gcd(F2, (3, 3), c, -1))

# ---------------------------------------------------------------- disjoint support

# two generators whose evaluation supports never overlap give LCD for free;
# the classical pair of quadratic-residue idempotents at length 7 is one
c1 = poly.from_seq([1, 1, 1, 0, 1])          # evaluates to 1 exactly on {3,5,6}
c2 = poly.from_seq([1, 0, 0, 1, 0, 1, 1])    # evaluates to 1 exactly on {1,2,4}
ctx7 = CyclotomicContext(F2, 7)
S1, S2 = gqc.support_sets(ctx7, (7, 7), (c1, c2))
print("\nsupports:", sorted(S1), "and", sorted(S2))
print("disjoint-support shortcut:", gqc.disjoint_support_lcd(ctx7, (7, 7), (c1, c2)))
qr = gqc.one_gen_code(F2, (7, 7), (c1, c2))
print("full criterion agrees:", gqc.is_mua_lcd(qr, gqc.context_for(qr), -1))
