"""Follow a tetrahedron through repeated applications of a braid.

Starting from the regular tetrahedron, apply s12 s23 s34 (the rotation delta) and
its mixed-sign cousin several times at a few values of q. Every stage must stay a
genuine tetrahedron: positive norms and a positive definite Gram matrix. The last
run writes the stages as an OFF mesh next to this script.
"""

from fractions import Fraction
from pathlib import Path

from braidsimplex import BraidWord, EdgeNormVector, is_nondegenerate
from braidsimplex.cli import off_mesh, orbit_stages
from braidsimplex.rep import act_word_on_norms

start = EdgeNormVector.of([1] * 6)

for text in ("s12 s23 s34", "s13 s24'"):
    w = BraidWord.parse(text, 4)
    for q0 in (Fraction(1, 3), Fraction(2)):
        v = start
        for step in range(1, 6):
            v = act_word_on_norms(w, v, q0)
            assert is_nondegenerate(v)
        largest = max(v.a)
        print(f"{text!r:>14} q={q0}: after 5 steps max norm {float(largest):.6g}, still nondegenerate")

# at q = 1 the word only permutes edges
w = BraidWord.parse("s12 s23 s34", 4)
assert sorted(act_word_on_norms(w, EdgeNormVector.of(range(1, 7)), 1).a) == list(range(1, 7))

stages = orbit_stages(4, BraidWord.parse("s13 s24'", 4), Fraction(3, 2), steps=4)
out = Path(__file__).with_name("orbit.off")
out.write_text(off_mesh(stages, 4))
print(f"wrote {len(stages)} stages to {out}")
