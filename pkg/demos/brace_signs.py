"""Braces, the Gerstenhaber bracket and the composition sign on a twisted complex.

Run with ``python3 demos/brace_signs.py``.
"""

import random

from embrace import TwistedQuiver, a_brace, brace, hochschild_differential, lie_bracket, library, suspend
from embrace.cochains import plug, project_zero, random_cochain
from embrace.twisted import ComplexWindow

cat = library.dual_numbers()
Q = cat.quiver
rng = random.Random(3)

b = cat.b  # suspended composition
print("b{b} vanishes:", brace(b, [b]).is_zero())
print("[b, b] vanishes:", lie_bracket(b, b).is_zero())

phi = random_cochain(Q, rng, 2, 0, density=1)
print("[b, s phi] == s d(phi):", lie_bracket(b, suspend(phi)) == suspend(hochschild_differential(cat, phi)))

# The three-term complex A -x-> A -x-> A, and the "identity precomplex" A -1-> A -1-> A.
x, one = Q.arrow_id("A", "A", "x"), Q.arrow_id("A", "A", "1")
C3 = ComplexWindow("C3", {0: "A", 1: "A", 2: "A"}, {0: {x: 1}, 1: {x: 1}})
P3 = ComplexWindow("P3", {0: "A", 1: "A", 2: "A"}, {0: {one: 1}, 1: {one: 1}})
tw = TwistedQuiver(Q, [C3, P3])
M, delta = tw.embed(cat.mu), tw.delta_cochain()

m_dd = a_brace(M, [delta, delta])
print("m{delta, delta} == -m(delta, delta):", m_dd == -1 * plug(plug(M, delta, 0), delta, 0))
for name, lc in sorted(project_zero(m_dd).items()):
    entries = {pos: {Q.arrows[f].name: str(c) for f, c in v.items()} for pos, v in tw.to_matrix(lc).items()}
    print("  curvature on %s: %s" % (name, entries))
print("  (C3 has none: x * x = 0)")
