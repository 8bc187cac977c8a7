"""
Semi-linear maps and twisted duals
==================================

A code can be paired against a rearranged, rescaled, conjugated copy of
itself instead of against itself.  This script builds a few of those maps,
shows how the twisted dual specializes to the familiar Euclidean and
Hermitian duals, and measures the hull (code cap twisted-dual) of the
[7,4] Hamming code under each choice.
"""

import numpy as np

from sigmalcd.codes import LinearCode, SemiLinearMap, hull_dim, sigma_dual
from sigmalcd.field import field

# ---------------------------------------------------------------- the code

F2 = field(2)
hamming = LinearCode(F2, 7, np.array(
    [[1, 0, 0, 0, 1, 1, 0],
     [0, 1, 0, 0, 0, 1, 1],
     [0, 0, 1, 0, 1, 1, 1],
     [0, 0, 0, 1, 1, 0, 1]], dtype=np.int16))
print("code:", hamming)

# ---------------------------------------------------------------- maps

# identity map: the twisted dual is the ordinary Euclidean dual
ident = SemiLinearMap.identity(F2, 7)
print("euclidean dual dims:", sigma_dual(hamming, ident).k)
print("euclidean hull:", hull_dim(hamming, ident))
# the Hamming code contains its dual, so the hull is the whole dual: dim 3

# coordinate reversal
rev = SemiLinearMap.reversal(F2, 7)
print("reversal hull:", hull_dim(hamming, rev))
# 0 -- the code and its reversed dual only share the zero word

# ---------------------------------------------------------------- over GF(4)

# with a proper extension field the Frobenius component matters
F4 = field(2, 2)
c4 = LinearCode(F4, 3, np.array([[1, 2, 0], [0, 1, 1]], dtype=np.int16))
frob = SemiLinearMap.frobenius_map(F4, 3, 1)
print("GF(4) code, conjugation-twisted dual = Hermitian dual")
print("  hermitian hull:", hull_dim(c4, frob))
print("  euclidean hull:", hull_dim(c4))

# a full map: permute, rescale, conjugate, in that order of application
sigma = SemiLinearMap(F4, perm=[2, 0, 1], diag=[1, 2, 3], frob=1)
dual = sigma_dual(c4, sigma)
print("twisted dual dims:", dual.k, "(always n - k)")
print("twisted hull:", hull_dim(c4, sigma))
