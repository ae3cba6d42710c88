"""
Counting representations: denumerants, levels, and Apery sets
=============================================================

The engine's view of a numerical semigroup: how often an integer can
be written as a non-negative combination of the generators, which
integers clear a representation-count threshold, and the modular
skeleton (Apery set) from which every invariant is read off.
"""

from pellsg import GeneratorSet, apery_set, compute_stats, denumerant, is_member

A = GeneratorSet((2, 5, 7))
print("generators:", A)

# The denumerant d(n) counts representations n = 2x + 5y + 7z with
# x, y, z >= 0.  It is 0 on gaps and grows roughly quadratically.
for n in [1, 3, 10, 20, 42, 43]:
    print(f"  d({n}) = {denumerant(A, n)}")
print()

# Level p collects the integers with d(n) >= p + 1.  Level 0 is the
# ordinary semigroup; higher levels are smaller sets with their own
# Frobenius number, genus, and gap sum.  Note that 0 has exactly one
# representation (the empty one), so it drops out at every p >= 1.
for p in range(3):
    members = [n for n in range(25) if is_member(A, p, n)]
    print(f"  level {p} members below 25: {members}")
print()

# The Apery set at level p holds, for each residue class j mod a1, the
# smallest member of level p congruent to j.  Everything below those
# thresholds in each class is a gap, everything at or above is a member
# -- so a1 numbers summarize the whole set.
for p in range(3):
    ap = apery_set(A, p)
    print(f"  level {p} Apery set mod {A.a1}: {ap.elements}")
print()

# Frobenius number, genus and gap sum come from three exact summation
# formulas over the Apery elements (no integer is ever tested twice).
for p in range(3):
    st = compute_stats(A, p)
    print(f"  level {p}: frobenius={st.frobenius}  genus={st.genus}  "
          f"gap sum={st.sylvester_sum}")
print()

# The same machinery scales to generators in the thousands, where
# enumeration switches to a vectorized residue-table sweep.
big = GeneratorSet((985, 5741, 13860))
st = compute_stats(big, 0)
print(f"generators {big}: frobenius={st.frobenius}  genus={st.genus}")
