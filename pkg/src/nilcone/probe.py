"""Local dimension probing via exact ranks of the moment-map differential,
plus empirical sampling of loop-pair commutator types.

The rank of the differential at a point bounds the local dimension of the
moment fiber from above; when the bound meets the predicted component
dimension the point is certified smooth and the component dimension is
pinned exactly.  Inequality is reported neutrally: the point may be
singular, or the prediction may not apply there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linalg import jordan_type, rank, zeros
from .partitions import Partition
from .reps import QuiverRep, sample_strict_upper_pair, trial_rng


def ambient_dim(rep: QuiverRep) -> int:
    """Dimension of the whole representation space (both map directions)."""
    return sum(2 * rep.v[src - 1] * rep.v[dst - 1] for src, dst in rep.shape.edges)


def moment_jacobian(rep: QuiverRep) -> np.ndarray:
    """The differential of the moment map at ``rep`` as one exact matrix.

    Rows run over the entries of the per-vertex outputs, columns over the
    entries of all edge maps (forward slots first per edge, then backward).
    """
    v = rep.v
    n = len(v)
    row_off = [0]
    for d in v:
        row_off.append(row_off[-1] + d * d)
    total_rows = row_off[-1]

    columns: list[np.ndarray] = []

    def column_from(blocks: list[tuple[int, np.ndarray]]) -> np.ndarray:
        col = zeros(total_rows, 1)
        for vertex, mat in blocks:
            base = row_off[vertex]
            d = v[vertex]
            for r in range(d):
                for c in range(d):
                    col[base + r * d + c, 0] += mat[r, c]
        return col

    for (src, dst), (fwd, bwd) in zip(rep.shape.edges, rep.maps):
        a, b = src - 1, dst - 1
        for r in range(v[b]):
            for c in range(v[a]):
                delta = zeros(v[b], v[a])
                delta[r, c] = Fraction(1)
                columns.append(column_from([(a, bwd @ delta), (b, -(delta @ bwd))]))
        for r in range(v[a]):
            for c in range(v[b]):
                delta = zeros(v[a], v[b])
                delta[r, c] = Fraction(1)
                columns.append(column_from([(a, delta @ fwd), (b, -(fwd @ delta))]))
    if not columns:
        return zeros(total_rows, 0)
    return np.hstack(columns)


def moment_jacobian_rank(rep: QuiverRep) -> int:
    """Exact rank of the moment-map differential at ``rep``."""
    return rank(moment_jacobian(rep))


@dataclass(frozen=True)
class JacobianReport:
    """Rank probe outcome at one point of the moment fiber."""

    label: str
    ambient_dim: int
    jac_rank: int
    local_dim_bound: int
    predicted_dim: int | None
    certified: bool | None

    def to_json(self) -> dict:
        return {
            "point": self.label,
            "ambient_dim": self.ambient_dim,
            "jac_rank": self.jac_rank,
            "local_dim_bound": self.local_dim_bound,
            "predicted_dim": self.predicted_dim,
            "certified": self.certified,
        }


def probe_component_dim(
    rep: QuiverRep, predicted: int | None = None, label: str = "point"
) -> JacobianReport:
    """Probe the local dimension of the moment fiber at ``rep``.

    The fiber contains the component through the point, so the bound is
    always >= the true component dimension; equality with ``predicted``
    certifies both smoothness and the predicted dimension.
    """
    amb = ambient_dim(rep)
    r = moment_jacobian_rank(rep)
    bound = amb - r
    return JacobianReport(
        label=label,
        ambient_dim=amb,
        jac_rank=r,
        local_dim_bound=bound,
        predicted_dim=predicted,
        certified=(bound == predicted) if predicted is not None else None,
    )


def commutator_type_histogram(d: int, trials: int, seed: int = 0) -> dict[Partition, int]:
    """Histogram of commutator Jordan types over sampled loop pairs.

    Sampling matches :func:`nilcone.reps.loop_pair_search` (strictly upper
    triangular, entries -2..2, per-trial seeded generators), so frequencies
    are comparable with search hit rates.  Every sampled type lands in a
    nonempty stratum, so the support avoids the types excluded by the
    width criterion.
    """
    if d < 1 or trials < 1:
        raise ValueError("need d >= 1 and trials >= 1")
    counts: dict[Partition, int] = {}
    for trial in range(trials):
        fwd, bwd = sample_strict_upper_pair(d, trial_rng(seed, trial))
        typ = jordan_type(bwd @ fwd - fwd @ bwd)
        counts[typ] = counts.get(typ, 0) + 1
    return dict(sorted(counts.items(), key=lambda kv: (-kv[1], kv[0])))


def histogram_to_json(d: int, trials: int, seed: int, counts: dict[Partition, int]) -> dict:
    return {
        "d": d,
        "trials": trials,
        "seed": seed,
        "counts": {str(list(k)): v for k, v in counts.items()},
    }
