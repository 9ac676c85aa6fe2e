"""Every dual simple braid acts on simplices as a rescaling followed by a relabeling.

For a noncrossing permutation sigma the simplicial matrix S_sigma factors two
ways, P_sigma R^sigma_rc(sigma) and R^sigma_lc(sigma) P_sigma. Here S_sigma is
built independently, as a product of dual generators, and compared with both.
"""

from braidsimplex import NCPartition, Permutation, enumerate_nc, permutation_matrix
from braidsimplex.noncrossing import left_complement, right_complement
from braidsimplex.rep import dual_simple_by_generators, generator_factorization
from braidsimplex.rescale import R

sigma = NCPartition.parse("{1,3,4|5,6}", 6)
perm = sigma.to_permutation()
rc, lc = right_complement(perm), left_complement(perm)
print(f"sigma = {perm}, rc = {rc}, lc = {lc}")
print("as dual generators:", " ".join(f"s{i}{j}" for i, j in generator_factorization(sigma)))

S = dual_simple_by_generators(sigma)
P = permutation_matrix(perm)
assert S == P @ R(6, perm, rc)
assert S == R(6, perm, lc) @ P
print("S = P R_rc = R_lc P holds")

for n in range(2, 7):
    parts = enumerate_nc(n)
    good = sum(
        dual_simple_by_generators(p) == permutation_matrix(p.to_permutation()) @ R(n, p, right_complement(p.to_permutation()))
        for p in parts
    )
    print(f"n = {n}: {good}/{len(parts)} dual simples relabel and rescale")

# the standard generator s12 in four strands
s = Permutation.parse("(1,2)", 4)
print("S_12 =")
print((permutation_matrix(s) @ R(4, s, right_complement(s))).pretty())
