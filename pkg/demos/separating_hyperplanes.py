"""Build separating hyperplanes for a set of points in P^3(F_3).

For each point P_i of the set we grow a chain of flats
point = V_0 < V_1 < ... < V_{m-1} = H_i where every member contains P_i and
none of the other points; the final member is a hyperplane whose defining
linear form G_i vanishes at P_i and nowhere else on the set.
"""

from prmcodes import (
    SeparationInstance,
    hyperplane_form,
    make_field,
    separating_family,
    separating_hyperplane,
)

field = make_field(3, 1)
points = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 1), (1, 1, 1, 0))
inst = SeparationInstance(points=points, field=field)

print(f"instance: {inst.t} points of P^3(F_3)")
for p in points:
    print("   ", p)
print()

hyp, chain = separating_hyperplane(inst, 0)
print("chain for the first point:")
for f in chain.flats:
    rows = " | ".join(",".join(map(str, r)) for r in f.basis)
    print(f"  dim {f.dim}: {rows}")
print(f"hyperplane form: {hyperplane_form(hyp)}")
print()

print("full separating family; the evaluation matrix G_i(P_j) has a zero")
print("diagonal and nonzero entries everywhere else:")
fam = separating_family(inst)
for i, (h, g) in enumerate(fam):
    vals = [g.evaluate(p) for p in points]
    print(f"  G_{i + 1} = {str(g):24s} values {vals}")
