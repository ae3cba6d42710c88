"""
Where the closed forms stop working
===================================

Each formula comes with a level cap, and the caps are sharp: one step
past the cap the formula value and the true value part ways.  This
script walks up to the edge on two instances and shows the first
disagreement, the way the `pellsg verify` subcommand reports it.
"""

from pellsg import build_family, compute_stats_range, formula_stats
from pellsg.closedform import theorem4_corner_values

# Frobenius number of the odd-odd instance (985, 5741, 13860).  The
# guarantee ends at p = 98; forcing the formula past it drifts away
# from the enumerated truth almost immediately.
inst = build_family("odd-odd", 2, 4, 3)
print(f"odd-odd u=2 i=4 k=3: generators {inst.triple}, cap p <= {inst.max_p}")
stats = compute_stats_range(inst.triple, 101)
for p in [97, 98, 99, 100, 101]:
    forced = formula_stats(inst, p, force=True)["frobenius"]
    true = stats[p].frobenius
    mark = "ok" if forced == true else f"off by {forced - true:+d}"
    print(f"  p={p:>3}: formula {forced:>9}  engine {true:>9}  {mark}")
print()

# The odd-even Frobenius formula is the larger of two candidate corner
# values.  Inside the guarantee the winning corner is the answer; right
# after the cap, *neither* corner is -- the true largest gap moves to a
# residue class the two corners never see.
inst = build_family("odd-even", 2, 3, 4)
print(f"odd-even u=2 i=3 k=4: generators {inst.triple}, cap p <= {inst.max_p}")
stats = compute_stats_range(inst.triple, 29)
for p in [27, 28, 29]:
    first, second = theorem4_corner_values(2, 3, 4, p)
    true = stats[p].frobenius
    mark = "ok" if max(first, second) == true else "neither corner"
    print(f"  p={p:>2}: corners ({first}, {second})  engine {true}  {mark}")
print()

# The verify subcommand automates this scan: inside the cap any
# mismatch is a hard failure (exit code 2), past the cap it simply
# reports where the formulas stop matching.
print("try:  pellsg verify --family odd-even --u 2 --i 3 --k 4 --p-max 29")
