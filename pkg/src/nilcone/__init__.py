"""Component censuses and exact point builders for nilpotent cones of line
and tadpole quivers.

The library splits into:

* :mod:`nilcone.partitions` -- exact partition combinatorics (transposes,
  proper pairings, admissible multipartitions, orbit dimensions);
* :mod:`nilcone.census` -- Kostant counts, the chi recursion and the
  per-stratum component censuses;
* :mod:`nilcone.reps` -- exact rational quiver representations: moment map,
  nilpotency tests, Jordan types, and constructors for points of prescribed
  strata;
* :mod:`nilcone.probe` -- Jacobian-rank dimension certificates and
  commutator-type sampling;
* :mod:`nilcone.cli` -- the ``nilcone`` command.
"""

from .census import (
    CensusRecord,
    ChiCycleError,
    ChiSolveError,
    ChiSolver,
    ChiTable,
    LineCensus,
    PsiOracle,
    SmallLoopCensus,
    TopStratumCensus,
    census_An,
    census_Tn_strata,
    chi,
    chi_multipartition,
    kostant,
    small_loop_census,
    top_stratum_components,
)
from .linalg import jordan_matrix, jordan_type, nilpotent_jordan_transform, rational_matrix
from .partitions import (
    Multipartition,
    Partition,
    ProperPairing,
    balanced_two_row,
    contains,
    dominance_geq,
    enumerate_admissible,
    enumerate_proper_pairings,
    has_proper_pairing,
    one_column,
    orbit_dim,
    partitions_of,
    transpose,
    truncate_first_column,
    xlambda_is_empty,
)
from .probe import (
    JacobianReport,
    ambient_dim,
    commutator_type_histogram,
    moment_jacobian_rank,
    probe_component_dim,
)
from .reps import (
    PointReport,
    QuiverRep,
    QuiverShape,
    VertexOperators,
    build_An_point,
    build_H_point,
    build_Tn_point,
    direct_loop_pair,
    is_nilpotent_rep,
    is_nilpotent_set,
    loop_pair_search,
    moment_map,
    one_sided_line_point,
    staircase_pair,
    verify_point,
    vertex_operators,
)

__version__ = "0.1.0"
