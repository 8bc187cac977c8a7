"""
Every code is complementary-dual after an equivalence
=====================================================

A code whose hull (intersection with its dual) is nonzero can always be
fixed: there is a coordinate map sigma under which the same code meets its
twisted dual trivially.  Over fields with more than two elements a
diagonal rescaling suffices and the code itself is untouched; over GF(2)
one extra zero coordinate and a pure permutation do the job.
"""

import numpy as np

from sigmalcd.codes import (
    LinearCode, build_lcp, hull_dim, is_sigma_lcd, make_lcd_sigma,
    normalize_hull,
)
from sigmalcd.field import field
from sigmalcd.oracle import brute_intersection_dim

# ---------------------------------------------------------------- GF(5)

F5 = field(5)
c = LinearCode(F5, 2, np.array([[1, 2]], dtype=np.int16))
print("code:", c, " euclidean hull:", hull_dim(c))  # 1+4=5=0: self-orthogonal

sigma, out = make_lcd_sigma(c)
print("sigma diag:", sigma.diag, " perm:", sigma.perm)
print("now LCD:", is_sigma_lcd(out, sigma), " (same code:", out == c, ")")

# behind the scenes: a coordinate permutation splits the generator into a
# hull part with A'A'^T = -I and a complement part of full gram rank
pi, g, h = normalize_hull(c)
print("hull dimension after normalization:", h)

# ---------------------------------------------------------------- GF(2)

F2 = field(2)
b = LinearCode(F2, 3, np.array([[1, 1, 0]], dtype=np.int16))
print("\nbinary code:", b, " hull:", hull_dim(b))

sigma, out = make_lcd_sigma(b)
print("extended to length", out.n, "; permutation only:",
      bool(np.all(sigma.diag == 1) and sigma.frob == 0))
print("perm:", sigma.perm, " LCD:", is_sigma_lcd(out, sigma))

# ---------------------------------------------------------------- pairs

# the same machinery turns any two same-sized codes into a complementary
# pair: C1 + C2' = F^n with zero intersection
F3 = field(3)
c1 = LinearCode(F3, 3, np.array([[1, 1, 1]], dtype=np.int16))
c2 = LinearCode(F3, 3, np.array([[1, 0, 2]], dtype=np.int16))
pair = build_lcp(c1, c2)
print("\npair params [n,k,d1,d2] = [%d,%d,%d,%d]" % (pair.n, pair.k, pair.d1, pair.d2))
print("dims %d + %d = %d, intersection %d" % (
    pair.c1.k, pair.c2.k, pair.n, brute_intersection_dim(pair.c1, pair.c2)))
