"""The gap-closing product: given a homogeneous F that is nonzero on only a
small set of points, multiply it by separating linear forms so that exactly
one point survives.

Starting from F = x0*x1 over GF(2) (nonzero at two points of the plane),
the product H = F * G_1 vanishes everywhere except the last point, and each
extra point costs exactly one degree.
"""

import random

from prmcodes import (
    SeparationInstance,
    gap_product,
    make_field,
    nonvanishing_set,
    random_poly,
    zero_set,
)
from prmcodes.homopoly import HomPoly

f2 = make_field(2, 1)
F = HomPoly(3, 2, {(1, 1, 0): 1}, f2)
nonvan = nonvanishing_set(F, 2)
print(f"F = {F}, nonzero at {nonvan}")
inst = SeparationInstance(points=tuple(nonvan), field=f2)
H = gap_product(F, inst)
print(f"H = {H}, degree {H.degree}, |Z(H)| = {len(zero_set(H, 2))} of 7")
print(f"surviving point: {inst.points[-1]}")
print()

# same story with random polynomials over GF(3)
f3 = make_field(3, 1)
rng = random.Random(2)
shown = 0
while shown < 3:
    F = random_poly(3, 3, f3, rng)
    if F.is_zero():
        continue
    nonvan = nonvanishing_set(F, 2)
    t = len(nonvan)
    if not 2 <= t <= f3.q + 1:
        continue
    shown += 1
    inst = SeparationInstance(points=tuple(nonvan), field=f3)
    H = gap_product(F, inst)
    print(f"random F of degree 3 with t = {t} non-vanishing points:")
    print(f"  F = {F}")
    print(f"  deg H = {H.degree} = deg F + t - 1, "
          f"survives only at {inst.points[-1]}")
