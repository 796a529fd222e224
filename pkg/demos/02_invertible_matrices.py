# Invertible matrices over an antiring: the diagonal-times-permutations
# factorization, explicit inverses, and the coordinates of the full group.
#
# Run:  python demos/02_invertible_matrices.py

import antiring as ar

p2 = ar.powerset(2)

# a matrix that mixes two "orthogonal channels": {1} rides the identity
# permutation, {2} rides the swap
a = ar.Matrix(p2, [[{1}, {2}], [{2}, {1}]])
print("A =", a)
print("invertible?", ar.is_invertible(a))

fact = ar.factorize_invertible(a)
print("diagonal:", [p2.format_element(d) for d in fact.diag])
for coeff, perm in fact.terms:
    print(f"  coefficient {p2.format_element(coeff)}  permutation {perm.images}")
print("reconstructs A?", fact.reconstruct() == a)

b = ar.invert(a)
print("A^-1 == A?", b == a, " (A is self-inverse)")

# a non-invertible matrix is rejected with the violated condition
bad = ar.Matrix(ar.boolean(), [[1, 1], [0, 1]])
print("\nwhy [[1,1],[0,1]] fails:", ar.invertibility_failure(bad))

# --- the group of invertible matrices ----------------------------------------

# every invertible matrix = units along the diagonal + one permutation per
# atom of the maximal orthogonal decomposition of 1
atoms = ar.max_orthogonal_decomposition(p2)
print("\natoms of 1 in powerset(2):", [p2.format_element(x) for x in atoms.parts])

coords = ar.gl_encode(a)
print("gl_encode(A): units =", [p2.format_element(u) for u in coords.units],
      " perms =", [p.images for p in coords.perms])
print("decode(encode(A)) == A?", ar.gl_decode(coords) == a)

# brute-force the whole group and compare with |U(S)|^n * (n!)^k
for sr, n in ((ar.boolean(), 3), (ar.chain(3), 2), (p2, 2)):
    gl = ar.enumerate_gl(sr, n)
    k = ar.max_orthogonal_decomposition(sr).length
    print(f"|GL_{n}({sr.descriptor()})| = {len(gl)}   (k = {k})")
