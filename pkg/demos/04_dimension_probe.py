"""Dimension certificates from exact Jacobian ranks.

At a point B of the moment fiber, ambient_dim - rank(d mu_B) bounds the
local dimension of the fiber from above, and the fiber contains every
component of the nilpotent cone through B, so the bound always sits at or
above the component dimension.  Equality certifies both smoothness and the
predicted dimension.  On line quivers the fiber IS the cone and the
certificate closes; on tadpoles the fiber is strictly larger, so the bound
stays informative but cannot reach the cone dimension - this demo shows
both behaviors.

Run:  python demos/04_dimension_probe.py
"""

from nilcone import (
    build_An_point,
    build_Tn_point,
    census_An,
    enumerate_proper_pairings,
    one_sided_line_point,
    probe_component_dim,
    top_stratum_components,
)

print("=== Line quivers: certificates close ===")
for v in [(1, 1), (2, 2), (1, 2, 1), (2, 3, 2)]:
    target = census_An(v).dim
    rep = one_sided_line_point(v, seed=0)
    report = probe_component_dim(rep, predicted=target)
    print(f"  v={v}: ambient {report.ambient_dim}, rank {report.jac_rank}, "
          f"bound {report.local_dim_bound}, predicted {target}, "
          f"certified={report.certified}")
print()

print("=== The origin is singular ===")
# the empty matching gives the zero representation
empty = next(p for p in enumerate_proper_pairings((1,), (1,)) if not p.matches)
rep = build_An_point([(1,), (1,)], pairings=[empty])
report = probe_component_dim(rep, predicted=1)
print(f"zero point of v=(1,1): bound {report.local_dim_bound} > 1, no certificate")
print("(every component passes through the origin, so the rank drops there)")
print()

print("=== Tadpoles: the fiber exceeds the cone ===")
top = top_stratum_components((1, 3))
rep = build_Tn_point([(1,), (2, 1)])
report = probe_component_dim(rep, predicted=top.dim)
print(f"v=(1,3), loop type (2,1): component dimension {top.dim} (from the census)")
print(f"probe: ambient {report.ambient_dim}, rank {report.jac_rank}, "
      f"bound {report.local_dim_bound}")
print("The bound honors component dim <= bound, but cannot close: the rank is")
print("capped by the codomain dimension (10, and 9 after the trace relation),")
print("so bound >= 15 at every point.  The moment fiber of a tadpole carries")
print("extra non-nilpotent directions through every nilpotent point.")
