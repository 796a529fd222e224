# Splitting matrices into square-zero summands via arc colorings.
#
# A matrix B has B^2 = 0 exactly when its digraph has no 2-edge path, so
# coloring the edges of the full pattern with no vertex carrying a
# same-colored in-edge and out-edge splits any matrix into square-zero parts.
#
# Run:  python demos/04_squarezero_decompositions.py

import antiring as ar

# --- nilpotent case: ceil(log2 n) summands suffice ----------------------------

b = ar.boolean()
full_upper = ar.Matrix(b, [[0, 1, 1, 1], [0, 0, 1, 1], [0, 0, 0, 1], [0, 0, 0, 0]])
dec = ar.decompose_nilpotent(full_upper)
print(f"full strictly-upper 4x4 splits into {len(dec)} square-zero summands:")
for s in dec:
    print("  support", sorted(s.support()))

# the binary-label coloring behind it
coloring = ar.tournament_coloring(4)
print("tournament coloring classes:",
      {c: sorted(e) for c, e in coloring.color_classes().items()})

# at n = 32 five summands always suffice
import random

rng = random.Random(0)
rows = [[0] * 32 for _ in range(32)]
for i in range(32):
    for j in range(i + 1, 32):
        rows[i][j] = rng.randint(0, 1)
big = ar.Matrix(b, rows)
print(f"\nrandom 32x32 nilpotent: {len(ar.decompose_nilpotent(big))} summands",
      f"(bound: {ar.tournament_coloring(32).num_colors})")

# --- trace-zero case: the capacity function ------------------------------------

# any matrix with zero diagonal splits; the summand count is governed by
# central binomial coefficients
print("\ncapacity (summands needed) by dimension:",
      [ar.tracezero_capacity(n) for n in range(1, 11)])
print("largest dimension per summand count: ",
      [ar.tracezero_max_dimension(k) for k in range(1, 8)])

nat = ar.naturals()
a = ar.Matrix(nat, [[0, 1, 2], [3, 0, 4], [5, 6, 0]])
print("\ngeneric 3x3 trace-zero matrix splits into:")
for s in ar.decompose_trace_zero(a):
    print("  ", s)

# works over non-entire antirings too
p2 = ar.powerset(2)
m = ar.Matrix(p2, [[set(), {1}], [{2}, set()]])
print("\npowerset(2) [[0,{1}],[{2},0]]:",
      len(ar.decompose_trace_zero(m)), "summands")

# --- sharpness: exhaustive search finds no smaller colorings -------------------

print("\n2 colors for the 5-vertex tournament? ",
      ar.min_coloring_search(ar.transitive_tournament(5), 2))
print("3 colors for the complete digraph on 4?",
      ar.min_coloring_search(ar.complete_digraph(4), 3))
print("so ceil(log2 5) = 3 and capacity(4) = 4 are exact.")
