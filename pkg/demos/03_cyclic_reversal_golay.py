"""
Cyclic codes are always reversal-LCD
====================================

A cyclic code rarely avoids its Euclidean dual, but it always avoids its
reversed dual.  The binary [23,12,7] code is the showpiece: its Euclidean
hull is 11-dimensional (so no Euclidean-LCD code with these parameters
exists by equivalence), yet under the coordinate inversion map it is
complementary-dual, with an idempotent generator to certify it.
"""

from sigmalcd import abelian, gqc, oracle
from sigmalcd.codes import hull_dim
from sigmalcd.cyclotomic import CyclotomicContext
from sigmalcd.field import field

F2 = field(2)

# ---------------------------------------------------------------- small sweep

ctx7 = CyclotomicContext(F2, 7)
print("every divisor code of x^7-1 over GF(2):")
for zeros, code in gqc.divisor_cyclic_codes(ctx7):
    print("  zeros %-12s k=%d  reversal-LCD: %s  euclidean hull: %d" % (
        zeros, code.k, gqc.reversal_sigma_lcd(code), hull_dim(code.flat)))

# ---------------------------------------------------------------- length 23

ctx = CyclotomicContext(F2, 23)
print("\ncyclotomic cosets mod 23:", [len(ctx.coset(i)) for i in ctx.leaders])

golay = next(code for _, code in gqc.divisor_cyclic_codes(ctx) if code.k == 12)
d = oracle.brute_min_distance(golay.flat)
print("picked the [23,%d,%d] divisor code" % (golay.k, d))

print("inversion-twisted hull:", hull_dim(golay.flat, golay.mu_map(-1)))
print("euclidean hull:        ", hull_dim(golay.flat))

# the ideal view: inside the group algebra of Z_23 the code is generated
# by a single idempotent, which is exactly what being inversion-LCD means
G = abelian.cyclic_group(23)
e = abelian.find_idempotent_generator(golay.flat, G)
print("idempotent generator found:", e is not None,
      " weight:", int((e.coeffs != 0).sum()))
print("regenerates the code:", abelian.ideal_from_generator(e) == golay.flat)
