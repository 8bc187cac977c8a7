"""
Abelian codes: LCD means idempotent-generated
=============================================

Ideals of F_q[G] for a finite abelian group G are "abelian codes".  Such
an ideal meets its inversion-twisted dual trivially exactly when a single
idempotent generates it -- in every characteristic, including the modular
case gcd(|G|, q) > 1.  When gcd(|G|, q) = 1 the algebra is semisimple,
every ideal is idempotent-generated, and so every abelian code is
inversion-LCD.
"""

from math import gcd

from sigmalcd import abelian
from sigmalcd.field import field

# ---------------------------------------------------------------- survey

for q, factors in [(2, (3,)), (3, (3,)), (2, (4,)), (3, (4,)), (2, (3, 3))]:
    F = field(q)
    G = abelian.AbelianGroup(factors)
    ideals = abelian.enumerate_ideals(F, G)
    lcd = [c for c in ideals if abelian.is_abelian_mu1_lcd(c, G)]
    tag = "semisimple" if gcd(G.order, q) == 1 else "modular"
    print("F_%d[Z%s]: %2d ideals, %2d LCD  (%s)" % (
        q, "x".join(map(str, factors)), len(ideals), len(lcd), tag))
    for c in ideals:
        e = abelian.find_idempotent_generator(c, G)
        assert (e is not None) == abelian.is_abelian_mu1_lcd(c, G)

print("idempotent generator exists <=> inversion-LCD: verified above")

# ---------------------------------------------------------------- up close

# F3[Z3] is modular: x-1 generates a nilpotent ideal with no idempotent
F3 = field(3)
Z3 = abelian.cyclic_group(3)
print("\nideals of F3[Z3]:")
for c in abelian.enumerate_ideals(F3, Z3):
    e = abelian.find_idempotent_generator(c, Z3)
    print("  k=%d  LCD: %-5s  idempotent: %s" % (
        c.k, abelian.is_abelian_mu1_lcd(c, Z3),
        None if e is None else e.coeffs.tolist()))

# algebra arithmetic is available directly
F2 = field(2)
e = abelian.ga_element(F2, Z3, [0, 1, 1])  # x + x^2
print("\n(x+x^2)^2 =", abelian.ga_mul(e, e).coeffs.tolist(), "-- an idempotent")
print("its ideal has dimension", abelian.ideal_from_generator(e).k)
