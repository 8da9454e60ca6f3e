#!/usr/bin/env python3
# Mechanically checking the structural identities.
#
# The verification layer compiles each space's definition into an exact
# linear constraint system (the oracle), then checks dimension formulas,
# the graded-algebra product laws, rank bounds and the impossibility
# results against it.

import json

from symalg import (
    build_constraints,
    dimension_probe,
    grading_check,
    rank_bound_check,
    run_suite,
    rv_equals_av,
)

# Dimension formulas: semimagic has dimension n²−2n+2, vertex-cross 2n−2.
print("dimensions:")
for n in range(2, 7):
    print(
        f"  n={n}:  dim S = {dimension_probe('S', n):>2}   "
        f"dim V = {dimension_probe('V', n):>2}"
    )

# At odd n the literal 2×2-sum property admits only the zero matrix.
for n in (3, 5, 7):
    assert build_constraints("MENTRY", n).nullity == 0
print("\nodd-dimensional array-sum impossibility: nullity 0 at n = 3, 5, 7")

# The graded-algebra laws: even·even ⊂ even, odd·odd ⊂ even,
# mixed ⊂ odd — for all seven pairings.
print("\ngrading spot-checks (60 random trials per law):")
for pair in ("BA", "QP", "SV", "NM", "R", "NQS-MPS", "BS-RV"):
    n = 5 if pair not in ("QP", "NQS-MPS") else 6
    res = grading_check(pair, n, trials=60, seed=1)
    print(f"  {pair:>8} at n={n}: {res.failures} failures")

# Rank bounds: weightless most perfect squares cap at rank 2 (and reach
# it), weighted ones at 3, reversible squares at 2.
print("\nrank bounds (120 members each):")
for space, n in (("MPS", 6), ("MPS+WE", 6), ("REVERSIBLE", 6), ("V", 8)):
    res = rank_bound_check(space, n, trials=120, seed=2)
    print(f"  {space:>10} n={n}: max rank {res.max_rank} ≤ {res.bound}")

# Weightless reversible squares coincide with associated ∧ vertex-cross.
assert all(rv_equals_av(n) for n in range(2, 7))
print("\nreversible = associated ∧ vertex-cross: mutual span inclusion, n = 2..6")

# The same machinery drives `symalg verify`; here is the compact report.
report = run_suite("dimensions", n_max=5)
print("\nsuite report:", json.dumps({k: report[k] for k in ("suite", "passed", "failed", "ok")}))
