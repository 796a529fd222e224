# Tour of the built-in semirings and the axiom validator.
#
# Run:  python demos/01_semirings.py

import antiring as ar

# --- built-in carriers -------------------------------------------------------

b = ar.boolean()  # {0, 1} with OR / AND
c5 = ar.chain(5)  # levels 0..4 with max / min
p3 = ar.powerset(3)  # subsets of {1,2,3} with union / intersection
nat = ar.naturals()  # 0, 1, 2, ... with + / *
trop = ar.tropical()  # integers + infinity with min / +

print("chain(5):   1 + 3 =", (c5.element(1) + c5.element(3)).value, " (max)")
print("chain(5):   1 * 3 =", (c5.element(1) * c5.element(3)).value, " (min)")
print("powerset:   {1}+{2,3} =", (p3.element({1}) + p3.element({2, 3})))
print("tropical:   5 + inf =", (trop.element(5) + trop.element(ar.INF)))
print("tropical:   5 * 7   =", (trop.element(5) * trop.element(7)), " (integer sum)")

# units: which elements have a multiplicative inverse?
print("\nunits:")
print("  tropical 5    ->", trop.element(5).inverse())
print("  naturals 2    ->", nat.element(2).inverse())
print("  powerset {1}  ->", p3.element({1}).inverse())
print("  powerset top  ->", p3.element({1, 2, 3}).inverse())

# --- user-defined semirings from operation tables ----------------------------

# integers mod 2 under XOR/AND: a semiring, but NOT zerosumfree (1 + 1 = 0)
mod2 = ar.FiniteTables(
    size=2,
    add_table=((0, 1), (1, 0)),
    mul_table=((0, 0), (0, 1)),
    zero_index=0,
    one_index=1,
)
report = ar.validate_axioms(mod2)
print("\nintegers mod 2:")
for flag in ar.AxiomReport.FLAGS:
    print(f"  {flag:28s} {getattr(report, flag)}")
print("  witness for zerosumfree:", report.witnesses["zerosumfree"][0])

# materialize a built-in and check it exhaustively
report = ar.validate_axioms(ar.to_tables(ar.powerset(2)))
print("\npowerset(2): commutative antiring =", report.is_commutative_antiring,
      "| entire =", report.is_entire, " (disjoint sets are zero divisors)")
