"""Partition combinatorics walkthrough: transposes, truncation, and the
proper-pairing criterion that governs which Jordan types can sit on the two
ends of a quiver edge.

Run:  python demos/01_partitions_and_pairings.py
"""

from nilcone import (
    Partition,
    enumerate_admissible,
    enumerate_proper_pairings,
    has_proper_pairing,
    orbit_dim,
    partitions_of,
    transpose,
    truncate_first_column,
    xlambda_is_empty,
)

print("=== Young diagram basics ===")
lam = Partition([4, 2, 1])
print(f"lambda            = {tuple(lam)}  (size {lam.size})")
print(f"transpose         = {tuple(transpose(lam))}")
print(f"drop first column = {tuple(truncate_first_column(lam))}")
print(f"orbit dimension   = {orbit_dim(lam)}  (= d^2 - sum of squared column lengths)")
print()

print("=== Proper pairings ===")
print("A pairing matches every part >= 2 to a part on the other side that")
print("differs by at most 1; parts equal to 1 may stay unmatched.")
for lam, mu in [((2, 1), (2, 2)), ((3,), (1, 1)), ((1, 1, 1), (1, 1)), ((2, 2), (2,))]:
    verdict = has_proper_pairing(lam, mu)
    print(f"  {lam} ~ {mu}: pairable = {verdict}")
    for pp in enumerate_proper_pairings(lam, mu):
        values = pp.value_pairs(Partition(lam), Partition(mu))
        print(f"      matching (by part values): {list(values) or 'empty'}")
print()

print("The diagram criterion is equivalent: a pairing exists iff each side,")
print("with its first column removed, fits inside the other.")
print()

print("=== Admissible multipartitions ===")
v = (1, 2, 2)
print(f"All chains of Jordan types over v = {v} with one-column ends:")
for m in enumerate_admissible(v, (1,), (1, 1)):
    print("  ", " | ".join(str(tuple(p)) for p in m))
print()

print("=== Which commutator types exist at all ===")
print("On a d-dimensional space, a jointly nilpotent pair can only have a")
print("commutator whose diagram has at most (d+1)/2 columns:")
for d in (3, 4):
    allowed = [tuple(p) for p in partitions_of(d) if not xlambda_is_empty(p)]
    excluded = [tuple(p) for p in partitions_of(d) if xlambda_is_empty(p)]
    print(f"  d={d}: allowed {allowed}, excluded {excluded}")
