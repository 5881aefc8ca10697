"""
Three-qubit observables as points
=================================

The 63 nontrivial three-qubit Pauli operators, up to phase, are the points of
the symplectic polar space W(5,2).  Each one is stored as a pair of 3-bit
vectors, and commutation is a bilinear form over GF(2).
"""
from collections import Counter

from pentagram_atlas.pauli import OBSERVABLES, is_symmetric, parse, signed_product, symplectic_form

# Labels round-trip through the (x, z) encoding; ids run over 1..63.
o = parse("YYX")
print(o.label, f"x={o.x:03b} z={o.z:03b} id={o.id} kind={o.kind.value}")

# Kinds count identity letters: A has two, B one, C none.
print(Counter(p.kind.value for p in OBSERVABLES))
print("symmetric:", sum(map(is_symmetric, OBSERVABLES)))

# XII and ZII anticommute; XII and IZI commute.
print(symplectic_form(parse("XII"), parse("ZII")), symplectic_form(parse("XII"), parse("IZI")))

# Products keep track of the exact phase.  XXX.XYY.YXY.YYX = -III is the
# relation behind the GHZ version of the pentagram.
rest, phase = signed_product(parse(s) for s in ["XXX", "XYY", "YXY", "YYX"])
print("product:", "III" if rest is None else rest.label, "phase", phase)
