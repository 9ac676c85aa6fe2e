"""Greedy normal forms of dual positive braids and the degree of their matrices.

A dual positive word is a product of dual simples. Sliding pieces leftward until
no more fit gives the greedy normal form; its length is the dual length. The
experiment compares the top power of q in S_w with twice that length.
"""

import random

from braidsimplex.garside import DualPositiveWord, max_q_degree, normal_form, qdegree_experiment, random_dual_positive_word

w = DualPositiveWord.parse("{1,2} {2,3} {3,4} {1,4}", 4)
nf = normal_form(w)
print(f"{w}  ->  {nf}")
print(f"dual length {len(nf)}, max q-degree {max_q_degree(w.matrix())}")
assert nf.matrix() == w.matrix()

rng = random.Random(3)
for _ in range(5):
    w = random_dual_positive_word(4, 5, rng)
    nf = normal_form(w)
    print(f"{str(w):<40} length {len(nf)}  degree {max_q_degree(w.matrix())}")

for n in (3, 4, 5):
    rep = qdegree_experiment(n, trials=50, max_factors=5, seed=0)
    print(f"n={n}: degree = 2 x length in {rep.meta['agreement_rate']:.0%} of {len(rep.checks)} words")
    for c in rep.failures:
        print("   mismatch:", c.detail)
