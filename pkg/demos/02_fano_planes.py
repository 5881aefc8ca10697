"""
Signed Fano planes
==================

Maximal sets of mutually commuting observables are Fano planes.  A line or
plane is negative when the product of its points is -III.  Every plane falls
into one of four classes: negative, or positive of class a, b or c.
"""
from collections import Counter

from pentagram_atlas.polar_space import enumerate_lines, enumerate_planes, extend_to_fano, line_at_infinity, make_context

lines = enumerate_lines()
planes = enumerate_planes()
print(len(lines), "lines,", sum(line.negative for line in lines), "of them negative")
print(len(planes), "planes:", Counter(p.plane_class.value for p in planes))

# A context (four commuting observables with scalar product) is an affine
# plane of order two; adding its line at infinity gives a unique Fano plane.
edge = make_context(["XXX", "XYY", "YXY", "YYX"])
plane = extend_to_fano(edge)
print("context sign", edge.sign, "-> plane", plane.plane_class.value)
print("line at infinity", line_at_infinity(edge).labels)
for line in plane.negative_lines:
    print("  negative line", line.labels)
