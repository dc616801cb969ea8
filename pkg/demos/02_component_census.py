"""Component census walkthrough: the Kostant count for line quivers, the
chi recursion for per-stratum counts, and the tadpole census with its
partially-unknown loop factor.

Run:  python demos/02_component_census.py
"""

from nilcone import (
    ChiSolver,
    census_An,
    census_Tn_strata,
    kostant,
    small_loop_census,
    top_stratum_components,
)

print("=== Line quivers ===")
print("The nilpotent cone of a line quiver has kostant(v) irreducible")
print("components, all of dimension sum v_i v_{i+1}:")
for v in [(2, 3), (1, 2, 1), (2, 2, 2)]:
    res = census_An(v)
    print(f"  v={v}: {res.count} components of dimension {res.dim}")
    for m, c in res.strata:
        print(f"      stratum {'|'.join(str(tuple(p)) for p in m)}: {c} components")
print()

print("=== The chi recursion ===")
print("chi(lam, mu) counts components of one edge stratum.  Each value is")
print("solved from the identity kostant(v) = sum of products of chi over a")
print("line quiver assembled from truncation iterates of the pair:")
solver = ChiSolver()
for lam, mu in [((1, 1, 1), (1, 1)), ((2,), (1, 1)), ((2, 1), (2, 1)), ((3,), ())]:
    print(f"  chi({lam}, {mu}) = {solver.chi(lam, mu)}")
print()
print("Sanity: the one-column family reproduces the two-vertex Kostant count,")
print(f"e.g. chi((1,1,1),(1,1)) = {solver.chi((1,1,1),(1,1))} = K((3,2)) = {kostant((3,2))}.")
print()

print("=== Tadpole strata ===")
print("Each stratum contributes chi(Lambda) times the number of components")
print("of the loop-pair stratum (psi).  psi is known only for the one-column")
print("and balanced two-row loop types; other records stay symbolic:")
for record in census_Tn_strata((2, 4)):
    strata = "|".join(str(tuple(p)) for p in record.stratum)
    if record.count is not None:
        print(f"  {strata}: count {record.count}, dim {record.dim}")
    else:
        print(f"  {strata}: count {record.chi} * psi{tuple(record.loop_type)} (unknown), "
              f"dim {record.base_dim} + dim_X{tuple(record.loop_type)}")
print()

print("=== Two fully-resolved families ===")
res = small_loop_census((2, 2))
print(f"Loop vertex of dimension 2, v=(2,2): {res.count} components, all of dim {res.dim}")
top = top_stratum_components((1, 3))
print(f"Widest loop stratum for v=(1,3): loop type {tuple(top.loop_type)}, "
      f"{top.count} component(s) of dim {top.dim}, codim {top.codim} in the cone")
print()
print("The codimension grows linearly with the number of vertices: for")
print("eligible v the widest-stratum components have codim n-1:")
for v in [(2,), (2, 4), (2, 4, 6)]:
    top = top_stratum_components(v)
    print(f"  v={v}: dim {top.dim}, codim {top.codim}")
