"""
Pell polynomial sequences and the three generator-triple families
=================================================================

A walk through the building blocks: the sequence P_n(u) defined by
P_0 = 0, P_1 = 1, P_n = u*P_{n-1} + P_{n-2}, and the parity-indexed
triples of its values that the closed-form machinery works on.
"""

from pellsg import Family, build_family, check_addition_identity, pell, pell_sequence

# The sequence for u = 2 is the classical Pell sequence; u = 1 gives
# the Fibonacci numbers.
print("P_n(2) for n = 0..10:", pell_sequence(2, 11))
print("P_n(1) for n = 0..10:", pell_sequence(1, 11))
print("P_n(3) for n = 0..10:", pell_sequence(3, 11))
print()

# Values grow like the powers of (u + sqrt(u^2 + 4)) / 2, so indices
# stay small even when the numbers do not.
print("P_50(2) =", pell(2, 50))
print()

# The addition identity P_{i+k} = P_{i+1} P_k + P_i P_{k-1} is what
# makes the third generator of each family representable in terms of
# the other two once the index gap is large enough.
print("addition identity on a grid of (i, k):",
      all(check_addition_identity(2, i, k) for i in range(10) for k in range(1, 10)))
print()

# Three families of triples, named by the parity of the indices involved:
#
#   even      (P_{2i},   P_{2i+2}, P_{2i+2k+1})   with k >= i
#   odd-odd   (P_{2i+1}, P_{2i+3}, P_{2i+k+1})    with k odd,  3 <= k
#   odd-even  (P_{2i+1}, P_{2i+3}, P_{2i+k+1})    with k even, 4 <= k
#
# build_family checks the index constraints, verifies the triple is
# coprime, and attaches the level range on which the closed forms are
# guaranteed to agree with direct computation.
for family, u, i, k in [("even", 2, 2, 2), ("odd-odd", 2, 4, 3), ("odd-even", 2, 3, 4)]:
    inst = build_family(family, u, i, k)
    print(f"{family:9s} u={u} i={i} k={k}: generators {inst.triple}, "
          f"formulas guaranteed for p <= {inst.max_p}")
print()

# When k >= 2i + 1 (odd families) the third generator is itself a
# combination of the first two, so the triple collapses to a pair.
# Such instances are flagged as degenerate and only the classical
# two-generator Frobenius formula applies, at level 0.
inst = build_family(Family.ODD_ODD, 2, 2, 5)
a, b, c = inst.triple.generators
print(f"odd-odd u=2 i=2 k=5: generators {inst.triple}, degenerate={inst.degenerate}")
print(f"  here {c} = {c // a} * {a}, already representable by the first generator")
