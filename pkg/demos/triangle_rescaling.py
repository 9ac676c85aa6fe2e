"""Rescale one edge of a triangle and watch the other norms follow.

Stretch the edge from p1 to p2 by q while the edge from p2 to p3 keeps its
length and direction. The new squared lengths are linear in the old ones, and
the coefficients are polynomials in q.
"""

from fractions import Fraction

from braidsimplex import EdgeNormVector, embed, norms_from_points
from braidsimplex.rescale import RescalingSpec, build_tree, rescale_points, rescaling_matrix

spec = RescalingSpec.make(3, [[1, 2]], [[2, 3]])
R = rescaling_matrix(spec)
print("rescaling matrix", spec)
print(R.pretty())

# a 3-4-5 right triangle, as squared lengths a12, a13, a23
v = EdgeNormVector.of([9, 25, 16])
p = embed(v)

for q0 in (Fraction(1, 2), Fraction(2), Fraction(3)):
    by_matrix = R.evaluate(q0).apply(v.a)
    by_geometry = norms_from_points(rescale_points(p, build_tree(spec), q0)).a
    print(f"q = {q0}: matrix {[str(x) for x in by_matrix]}  geometry {[str(x) for x in by_geometry]}")
    assert tuple(by_matrix) == by_geometry

# at q = 1 nothing moves
assert R.evaluate(1).is_identity()
