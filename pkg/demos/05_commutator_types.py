"""Empirical exploration of loop-pair commutator types.

Pairs of strictly upper-triangular matrices are automatically jointly
nilpotent (they share the standard flag), so sampling them explores the
loop-pair variety directly.  The Jordan type of the commutator then shows
(a) which strata are reachable at all, and (b) which stratum is dominant.

Run:  python demos/05_commutator_types.py
"""

from nilcone import (
    balanced_two_row,
    commutator_type_histogram,
    jordan_type,
    loop_pair_search,
    partitions_of,
    staircase_pair,
    xlambda_is_empty,
)

TRIALS = 3000

print(f"=== Commutator type histograms ({TRIALS} trials, entries -2..2) ===")
for d in range(1, 7):
    counts = commutator_type_histogram(d, TRIALS, seed=0)
    top = list(counts.items())[:3]
    summary = ", ".join(f"{tuple(k)}: {v}" for k, v in top)
    print(f"  d={d}: {summary}" + ("  ..." if len(counts) > 3 else ""))
print()

print("Observations:")
print("  * for d <= 2 the commutator is always zero (strictly upper 2x2")
print("    matrices commute after one product), so only the one-column type")
print("    appears;")
print("  * no sampled type is ever wider than (d+1)/2 columns, matching the")
print("    emptiness criterion;")
print("  * the balanced two-row type dominates for moderate d - it is the")
print("    dense stratum.")
print()

print("=== Emptiness criterion vs observed support ===")
for d in (4, 5, 6):
    counts = commutator_type_histogram(d, TRIALS, seed=1)
    seen = {tuple(k) for k in counts}
    allowed = {tuple(p) for p in partitions_of(d) if not xlambda_is_empty(p)}
    missed = sorted(allowed - seen)
    print(f"  d={d}: observed {len(seen)}/{len(allowed)} admissible types; "
          f"balanced {tuple(balanced_two_row(d))} has share "
          f"{counts.get(balanced_two_row(d), 0) / TRIALS:.0%}"
          + (f"; not yet sampled: {missed}" if missed else ""))
print()

print("=== Deterministic pairs vs random search ===")
f, g = staircase_pair(5)
print("splitting the superdiagonal between the two matrices realizes the")
print(f"balanced type deterministically: d=5 gives {tuple(jordan_type(g @ f - f @ g))}")
pair = loop_pair_search(4, (2, 1, 1), trials=500, seed=0)
if pair is not None:
    f, g = pair
    print(f"random search for (2,1,1) at d=4: found, commutator type "
          f"{tuple(jordan_type(g @ f - f @ g))}")
print("search for (2,) at d=2 (an empty stratum) returns None:",
      loop_pair_search(2, (2,), trials=200, seed=0))
