"""Walk through first-order deformations of the dual numbers k[x]/(x^2).

Run with ``python3 demos/obstruction_tour.py``.
"""

from embrace import DeformationLab, FirstOrderDeformation, documents, find_gauge, gauge_apply
from embrace.deformation import hochschild_cohomology

prob = documents.corpus("e1")
cat = prob.category

print("Hochschild cohomology of", cat.name)
for p in range(4):
    print("  HH^%d: dim %d" % (p, hochschild_cohomology(cat, p).dim))

# phi1(x, x) = 1 spans HH^2; it deforms x^2 = 0 into x^2 = eps.
phi1 = prob.cochains["phi1"]
defo = FirstOrderDeformation(cat, phi1, "phi1")
lab = DeformationLab(defo, list(prob.complexes.values()))



def show(matrix):
    return {pos: {cat.quiver.arrows[f].name: str(c) for f, c in lc.items()} for pos, lc in matrix.items()} or "0"


print("\nWhich x-complexes survive the deformation?")
for name in ("C1", "C2", "C3", "C4"):
    rep = lab.obstruction_and_lift(name)
    verdict = "lifts" if rep.lifts else "obstructed"
    print("  %-3s %-10s class %-40s lift ranks %s" % (name, verdict, show(rep.representative), rep.lift_ranks))

# A cohomologous cocycle gives an isomorphic deformation: find the gauge.
other = FirstOrderDeformation(cat, prob.cochains["phi1_dpsi"], "phi1_dpsi")
h = find_gauge(defo, other)
res = gauge_apply(defo, other, h)
print("\nGauge phi1 ~ phi1 + d(psi): h =", h.to_records(), "functor identity:", res.functor_check)

two = FirstOrderDeformation(cat, prob.cochains["two_phi1"], "two_phi1")
print("Gauge phi1 ~ 2 phi1:", find_gauge(defo, two))
