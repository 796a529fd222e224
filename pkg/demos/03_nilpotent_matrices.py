# Nilpotent matrices and their digraphs: acyclicity, the longest-path /
# nilpotency-index connection, and exact counting over finite entire antirings.
#
# Run:  python demos/03_nilpotent_matrices.py

import antiring as ar

c3 = ar.chain(3)
a = ar.Matrix(c3, [[0, 2, 1], [0, 0, 2], [0, 0, 0]])
g = ar.digraph_of(a)
print("digraph of A:")
print(g)
print("acyclic?", ar.is_acyclic(g))
print("nilpotent?", ar.is_nilpotent(a))
print("nilpotency index:", ar.nilpotency_index(a), "= longest path + 1 =",
      ar.longest_path(g) + 1)

# scrambled nilpotent matrices triangularize by reordering vertices
scrambled = ar.conjugate_by_permutation(a, ar.Permutation((3, 1, 2)))
upper, p = ar.triangularize(scrambled)
print("\nscrambled:", scrambled)
print("reordered by", p.images, "->", upper)

# over a NON-entire antiring the digraph can lie: this matrix has a 2-cycle
# in its pattern yet squares to zero, because {1} and {2} multiply to nothing
p2 = ar.powerset(2)
m = ar.Matrix(p2, [[set(), {1}], [{2}, set()]])
print("\npattern has a cycle:", not ar.is_acyclic(ar.digraph_of(m)),
      "| nilpotent anyway:", ar.is_nilpotent(m))

# --- counting ----------------------------------------------------------------

# the count over an entire antiring with q elements depends only on q:
# it is A_n(q-1) for the acyclic-digraph polynomial A_n
print("\nnilpotent counts over chain(q):")
for n, q in ((2, 2), (2, 3), (3, 2), (3, 3), (4, 2)):
    formula = ar.count_nilpotent(n, q)
    brute = ar.count_nilpotent_bruteforce(ar.chain(q), n)
    print(f"  n={n} q={q}: formula {formula:4d}  brute force {brute:4d}")

terms = [
    f"{c:+d}q^{d}"
    for d, c in sorted(enumerate(ar.nilpotent_count_polynomial(4).coeffs), reverse=True)
    if c
]
print("\nA_4(q-1) =", " ".join(terms).lstrip("+"))

# entireness is essential: the 4-element powerset lattice has 9 = 3^2
# nilpotent 2x2 matrices, not 2q-1 = 7
print("\npowerset(2) count:", ar.count_nilpotent_bruteforce(ar.powerset(2), 2),
      "vs the entire-case value", ar.count_nilpotent(2, 4))
