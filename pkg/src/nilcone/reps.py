"""Exact quiver representations for line and tadpole quivers.

Everything here is exact rational arithmetic: moment map values, nilpotency
decisions and Jordan types are computed without tolerances, so "the moment
map vanishes" means literally zero.

Vertices are numbered 1..n.  Edge i runs from vertex i to i+1 for i < n;
the tadpole has one extra loop edge at vertex n.  Each edge carries a
forward matrix B and a backward matrix Bbar; the moment map at a vertex
sums Bbar B over outgoing directions minus B Bbar over incoming ones, with
the loop contributing its commutator.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg
from .linalg import (
    block_diag,
    eye,
    inverse,
    is_zero,
    jordan_matrix,
    jordan_type,
    matrix_from_pairs,
    matrix_to_pairs,
    mats_equal,
    nilpotent_jordan_transform,
    nullspace,
    zeros,
)
from .partitions import (
    Multipartition,
    Partition,
    ProperPairing,
    as_dimension_vector,
    enumerate_proper_pairings,
    one_column,
    validate_pairing,
)


@dataclass(frozen=True)
class QuiverShape:
    """Line quiver ("A") or tadpole ("T") on n vertices."""

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("A", "T"):
            raise ValueError(f"kind must be 'A' or 'T', got {self.kind!r}")
        if self.n < 1:
            raise ValueError("need at least one vertex")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """1-based (source, target) pairs; the loop is last for tadpoles."""
        line = tuple((i, i + 1) for i in range(1, self.n))
        return line + (((self.n, self.n),) if self.kind == "T" else ())


@dataclass(eq=False)
class QuiverRep:
    """Matrices (B, Bbar) per edge of a line or tadpole quiver."""

    shape: QuiverShape
    v: tuple[int, ...]
    maps: tuple[tuple[np.ndarray, np.ndarray], ...]

    def __post_init__(self):
        self.v = as_dimension_vector(self.v)
        if len(self.v) != self.shape.n:
            raise ValueError("dimension vector length does not match vertex count")
        edges = self.shape.edges
        if len(self.maps) != len(edges):
            raise ValueError(f"expected {len(edges)} edge map pairs, got {len(self.maps)}")
        for (src, dst), (fwd, bwd) in zip(edges, self.maps):
            want_f = (self.v[dst - 1], self.v[src - 1])
            want_b = (self.v[src - 1], self.v[dst - 1])
            if fwd.shape != want_f or bwd.shape != want_b:
                raise ValueError(
                    f"edge {src}->{dst}: map shapes {fwd.shape}, {bwd.shape}"
                    f" do not match dimensions {want_f}, {want_b}"
                )

    def to_json(self) -> dict:
        return {
            "kind": self.shape.kind,
            "v": list(self.v),
            "maps": [
                {"edge": i + 1, "B": matrix_to_pairs(f), "Bbar": matrix_to_pairs(g)}
                for i, (f, g) in enumerate(self.maps)
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "QuiverRep":
        shape = QuiverShape(data["kind"], len(data["v"]))
        v = as_dimension_vector(data["v"])
        by_edge = {entry["edge"]: entry for entry in data["maps"]}
        maps = []
        for i, (src, dst) in enumerate(shape.edges):
            entry = by_edge[i + 1]
            f = matrix_from_pairs(entry["B"], (v[dst - 1], v[src - 1]))
            g = matrix_from_pairs(entry["Bbar"], (v[src - 1], v[dst - 1]))
            maps.append((f, g))
        return cls(shape=shape, v=v, maps=tuple(maps))


@dataclass(eq=False)
class VertexOperators:
    """One square matrix per vertex (moment map values or stratification ops)."""

    ops: tuple[np.ndarray, ...]

    def is_zero(self) -> bool:
        return all(is_zero(op) for op in self.ops)


def moment_map(rep: QuiverRep) -> VertexOperators:
    """Exact moment map: per vertex, signed sums of composite edge maps."""
    ops = [zeros(d, d) for d in rep.v]
    for (src, dst), (fwd, bwd) in zip(rep.shape.edges, rep.maps):
        a, b = src - 1, dst - 1
        ops[a] = ops[a] + bwd @ fwd
        ops[b] = ops[b] - fwd @ bwd
    return VertexOperators(tuple(ops))


def vertex_operators(rep: QuiverRep) -> VertexOperators:
    """The per-vertex operators whose Jordan types label the stratum.

    Vertex i < n carries Bbar_i B_i.  The last vertex carries the loop
    commutator for tadpoles and B_{n-1} Bbar_{n-1} for line quivers (zero
    on the moment fiber).
    """
    n = rep.shape.n
    ops = []
    for i in range(n - 1):
        fwd, bwd = rep.maps[i]
        ops.append(bwd @ fwd)
    if rep.shape.kind == "T":
        fwd, bwd = rep.maps[-1]
        ops.append(bwd @ fwd - fwd @ bwd)
    elif n >= 2:
        fwd, bwd = rep.maps[n - 2]
        ops.append(fwd @ bwd)
    else:
        ops.append(zeros(rep.v[0], rep.v[0]))
    return VertexOperators(tuple(ops))


def is_nilpotent_set(mats: Sequence[np.ndarray], dim: int | None = None) -> bool:
    """Whether all long products of the given operators vanish.

    Computes the joint kernel filtration V_0 = 0,
    V_{k+1} = {w : X w in V_k for every X}; the set is nilpotent iff the
    filtration exhausts the space (it ascends strictly until it stabilizes,
    so at most dim steps are needed).
    """
    mats = list(mats)
    if dim is None:
        if not mats:
            raise ValueError("need a dimension when the operator set is empty")
        dim = mats[0].shape[0]
    for m in mats:
        if m.shape != (dim, dim):
            raise ValueError(f"operator of shape {m.shape} on a {dim}-dim space")
    if dim == 0 or not mats:
        return True
    basis = zeros(dim, 0)
    while True:
        r = basis.shape[1]
        if r == dim:
            return True
        functionals = nullspace(basis.T).T
        stacked = np.vstack([functionals @ x for x in mats])
        new_basis = nullspace(stacked)
        if new_basis.shape[1] == r:
            return False
        basis = new_basis


def _local_operator_set(rep: QuiverRep) -> list[np.ndarray]:
    """Operators on the last vertex whose joint nilpotency decides the rep's.

    Valid on the moment fiber only: the line tail contributes the reversed
    composite at the last vertex, the loop contributes both of its maps.
    """
    mats = []
    n = rep.shape.n
    if n >= 2:
        fwd, bwd = rep.maps[n - 2]
        mats.append(-(fwd @ bwd))
    if rep.shape.kind == "T":
        fwd, bwd = rep.maps[-1]
        mats.extend([fwd, bwd])
    return mats


def is_nilpotent_rep(rep: QuiverRep, mode: str = "path") -> bool:
    """Decide nilpotency of a representation.

    "path" mode checks the definition directly: the spans of images of all
    length-k path compositions (tracked per vertex) must die out.  "local"
    mode is valid only on the moment fiber and reduces to joint nilpotency
    of a few operators at the last vertex.
    """
    if mode == "path":
        return _path_nilpotent(rep)
    if mode == "local":
        if not moment_map(rep).is_zero():
            raise ValueError("local mode requires a vanishing moment map")
        mats = _local_operator_set(rep)
        return is_nilpotent_set(mats, dim=rep.v[-1])
    raise ValueError(f"unknown mode {mode!r}")


def _path_nilpotent(rep: QuiverRep) -> bool:
    directed = []
    for (src, dst), (fwd, bwd) in zip(rep.shape.edges, rep.maps):
        directed.append((src - 1, dst - 1, fwd))
        directed.append((dst - 1, src - 1, bwd))
    if not directed:
        return True
    spans = [eye(d) for d in rep.v]
    cap = sum(rep.v) * len(directed) + 1
    for _ in range(cap):
        total = sum(s.shape[1] for s in spans)
        if total == 0:
            return True
        new_spans = []
        for i, d in enumerate(rep.v):
            pieces = [m @ spans[a] for a, b, m in directed if b == i]
            stacked = np.hstack(pieces) if pieces else zeros(d, 0)
            new_spans.append(linalg.column_space(stacked))
        if sum(s.shape[1] for s in new_spans) == total:
            return False
        spans = new_spans
    return sum(s.shape[1] for s in spans) == 0


def build_H_point(
    lam: Iterable[int], mu: Iterable[int], pairing: ProperPairing | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """An exact edge-map pair (h, hbar) realizing the Jordan types (lam, mu).

    Built as a direct sum of zig-zag string summands, one per match: a
    matched pair of parts (p, q) spans a chain of p + q basis vectors
    alternating between the two spaces, shifted by h and hbar.  Unmatched
    parts (necessarily 1) contribute one-dimensional kernel summands.  In
    the chosen bases the products come out as the Jordan matrices
    themselves: hbar h = J(lam) and h hbar = J(mu) exactly, which is what
    makes several of these glue into a representation with a literally zero
    moment map.
    """
    lam, mu = Partition(lam), Partition(mu)
    if pairing is None:
        options = enumerate_proper_pairings(lam, mu)
        if not options:
            raise ValueError(f"no proper pairing exists between {lam} and {mu}")
        pairing = options[-1]
    validate_pairing(lam, mu, pairing)
    d1, d2 = lam.size, mu.size
    h = zeros(d2, d1)
    hbar = zeros(d1, d2)
    off1 = [sum(lam[:i]) for i in range(len(lam))]
    off2 = [sum(mu[:j]) for j in range(len(mu))]
    for i, j in sorted(pairing.matches):
        p, q = lam[i], mu[j]
        a, b = off1[i], off2[j]
        if p > q:
            # h drops the chain bottom, hbar maps straight back
            for k in range(2, p + 1):
                h[b + k - 2, a + k - 1] = Fraction(1)
            for k in range(1, q + 1):
                hbar[a + k - 1, b + k - 1] = Fraction(1)
        else:
            # h maps straight across, hbar drops the chain bottom
            for k in range(1, p + 1):
                h[b + k - 1, a + k - 1] = Fraction(1)
            for k in range(2, q + 1):
                hbar[a + k - 2, b + k - 1] = Fraction(1)
    if not mats_equal(hbar @ h, jordan_matrix(lam)) or not mats_equal(
        h @ hbar, jordan_matrix(mu)
    ):
        raise RuntimeError("string-module construction failed its self-check")
    return h, hbar


def _line_maps(
    strata: Multipartition, pairings: Sequence[ProperPairing] | None
) -> list[tuple[np.ndarray, np.ndarray]]:
    n = len(strata)
    if pairings is None:
        pairings = [None] * (n - 1)
    if len(pairings) != n - 1:
        raise ValueError(f"expected {n - 1} pairings, got {len(pairings)}")
    return [
        build_H_point(strata[i], strata[i + 1], pairings[i]) for i in range(n - 1)
    ]


def build_An_point(
    strata: Iterable[Iterable[int]],
    pairings: Sequence[ProperPairing] | None = None,
) -> QuiverRep:
    """A line-quiver representation with moment map exactly zero and the
    prescribed Jordan type at every vertex.

    The first and last entries must be one-column partitions (the only types
    compatible with the vanishing end conditions).  If ``pairings`` is None
    a deterministic choice is made per edge.
    """
    strata = Multipartition(strata)
    v = strata.dims
    if strata[0] != one_column(v[0]) or strata[-1] != one_column(v[-1]):
        raise ValueError("first and last entries must be one-column partitions")
    maps = _line_maps(strata, pairings)
    rep = QuiverRep(shape=QuiverShape("A", len(v)), v=v, maps=tuple(maps))
    if not moment_map(rep).is_zero():
        raise RuntimeError("line gluing failed: moment map is not zero")
    return rep


def build_Tn_point(
    strata: Iterable[Iterable[int]],
    pairings: Sequence[ProperPairing] | None = None,
    loop: tuple[np.ndarray, np.ndarray] | None = None,
) -> QuiverRep:
    """A tadpole representation with moment map exactly zero and the
    prescribed Jordan types, the last one realized by the loop commutator.

    The supplied loop pair must be jointly nilpotent with commutator type
    equal to the last entry; it is conjugated so that its commutator equals
    the Jordan matrix the line part produces, which is the entire gluing
    condition.  If ``loop`` is None a pair is constructed (or searched for).
    """
    strata = Multipartition(strata)
    v = strata.dims
    if strata[0] != one_column(v[0]):
        raise ValueError("first entry must be a one-column partition")
    maps = _line_maps(strata, pairings)
    eta = strata[-1]
    if loop is None:
        loop = direct_loop_pair(eta)
        if loop is None:
            loop = loop_pair_search(v[-1], eta, trials=5000, seed=0)
        if loop is None:
            raise ValueError(f"could not produce a loop pair with commutator type {eta}")
    fwd, bwd = loop
    if fwd.shape != (v[-1], v[-1]) or bwd.shape != (v[-1], v[-1]):
        raise ValueError("loop pair has wrong dimensions")
    if not is_nilpotent_set([fwd, bwd], dim=v[-1]):
        raise ValueError("loop pair is not jointly nilpotent")
    commutator = bwd @ fwd - fwd @ bwd
    p, typ = nilpotent_jordan_transform(commutator)
    if typ != eta:
        raise ValueError(f"commutator type mismatch: got {typ}, expected {eta}")
    p_inv = inverse(p)
    maps.append((p_inv @ fwd @ p, p_inv @ bwd @ p))
    rep = QuiverRep(shape=QuiverShape("T", len(v)), v=v, maps=tuple(maps))
    if not moment_map(rep).is_zero():
        raise RuntimeError("tadpole gluing failed: moment map is not zero")
    return rep


def _random_strict_upper(d: int, rng: random.Random, spread: int = 2) -> np.ndarray:
    out = zeros(d, d)
    for i in range(d):
        for j in range(i + 1, d):
            out[i, j] = Fraction(rng.randint(-spread, spread))
    return out


def trial_rng(seed: int, trial: int) -> random.Random:
    """Deterministic per-trial generator, independent of execution order."""
    return random.Random(f"{seed}:{trial}")


def sample_strict_upper_pair(d: int, rng: random.Random) -> tuple[np.ndarray, np.ndarray]:
    """A pair of strictly upper-triangular integer matrices, entries in -2..2.

    Sharing a complete flag makes every such pair jointly nilpotent, so the
    samples all lie in the loop-pair variety; only the commutator type
    varies.
    """
    return _random_strict_upper(d, rng), _random_strict_upper(d, rng)


def loop_commutator_type(pair: tuple[np.ndarray, np.ndarray]) -> Partition:
    fwd, bwd = pair
    return jordan_type(bwd @ fwd - fwd @ bwd)


def loop_pair_search(
    d: int, lam: Iterable[int], trials: int = 1000, seed: int = 0
) -> tuple[np.ndarray, np.ndarray] | None:
    """Seeded random search for a loop pair with commutator type lam.

    Returns the first hit among ``trials`` strictly upper-triangular samples,
    or None; exhausting the budget is a result, not an error.  The
    one-column type is returned immediately (a single Jordan block and zero
    commute).
    """
    lam = Partition(lam)
    if lam.size != d:
        raise ValueError(f"{lam} is not a partition of {d}")
    if lam == one_column(d):
        block = jordan_matrix(Partition([d] if d else []))
        return block, zeros(d, d)
    for trial in range(trials):
        pair = sample_strict_upper_pair(d, trial_rng(seed, trial))
        if loop_commutator_type(pair) == lam:
            return pair
    return None


def staircase_pair(d: int) -> tuple[np.ndarray, np.ndarray]:
    """Superdiagonal split: odd positions in one matrix, even in the other.

    The commutator has the balanced two-row Jordan type (the widest
    possible), exactly for every d.
    """
    fwd = zeros(d, d)
    bwd = zeros(d, d)
    for i in range(1, d):
        target = fwd if i % 2 == 1 else bwd
        target[i - 1, i] = Fraction(1)
    return fwd, bwd


def direct_loop_pair(lam: Iterable[int]) -> tuple[np.ndarray, np.ndarray] | None:
    """Deterministic loop pair with commutator type lam, if block-buildable.

    Splits lam into near-balanced row pairs realized by staircase blocks
    plus singleton rows equal to 1; returns None when no such split exists
    (the random search may still succeed for those types).
    """
    lam = Partition(lam)
    big = [p for p in lam if p >= 2]
    ones = sum(1 for p in lam if p == 1)
    sizes = []
    i = 0
    while i < len(big):
        if i + 1 < len(big) and big[i] - big[i + 1] <= 1:
            sizes.append(big[i] + big[i + 1])
            i += 2
        elif big[i] == 2 and ones > 0:
            sizes.append(3)
            ones -= 1
            i += 1
        else:
            return None
    sizes.extend([1] * ones)
    parts = [staircase_pair(s) for s in sizes]
    pair = (
        block_diag([f for f, _ in parts]),
        block_diag([g for _, g in parts]),
    )
    if loop_commutator_type(pair) != lam:
        raise RuntimeError(f"block loop pair does not realize {lam}")
    return pair


def one_sided_line_point(v: Sequence[int], seed: int = 0) -> QuiverRep:
    """A random point of the one-sided family: forward maps random, backward
    maps zero.  Always on the moment fiber and nilpotent; for generic
    entries its component closure is a full irreducible component of the
    line-quiver cone, which makes these good probe points."""
    dims = as_dimension_vector(v)
    rng = random.Random(f"one-sided:{seed}")
    maps = []
    for i in range(len(dims) - 1):
        fwd = zeros(dims[i + 1], dims[i])
        for r in range(dims[i + 1]):
            for c in range(dims[i]):
                fwd[r, c] = Fraction(rng.randint(-3, 3))
        maps.append((fwd, zeros(dims[i], dims[i + 1])))
    return QuiverRep(shape=QuiverShape("A", len(dims)), v=dims, maps=tuple(maps))


@dataclass(eq=False)
class PointReport:
    """Exact verification outcome for a representation against a stratum."""

    expected: Multipartition
    moment_zero: bool
    nilpotent_path: bool
    nilpotent_local: bool | None
    jordan_types: tuple[Partition | None, ...]
    vertex_ok: tuple[bool, ...]
    passed: bool
    first_mismatch: int | None

    def to_json(self) -> dict:
        return {
            "expected": [list(p) for p in self.expected],
            "moment_zero": self.moment_zero,
            "nilpotent_path": self.nilpotent_path,
            "nilpotent_local": self.nilpotent_local,
            "jordan_types": [list(t) if t is not None else None for t in self.jordan_types],
            "vertex_ok": list(self.vertex_ok),
            "first_mismatch": self.first_mismatch,
            "pass": self.passed,
        }


def verify_point(rep: QuiverRep, strata: Iterable[Iterable[int]]) -> PointReport:
    """Check a representation against a stratum: zero moment map, nilpotency
    in both modes, and the prescribed Jordan type at every vertex.

    Failures are report content, not errors.
    """
    strata = Multipartition(strata)
    if len(strata) != rep.shape.n or strata.dims != rep.v:
        raise ValueError(
            f"stratum shape {strata.dims} does not match representation {rep.v}"
        )
    mz = moment_map(rep).is_zero()
    path = is_nilpotent_rep(rep, mode="path")
    local = is_nilpotent_rep(rep, mode="local") if mz else None
    types: list[Partition | None] = []
    for op in vertex_operators(rep).ops:
        try:
            types.append(jordan_type(op))
        except ValueError:
            types.append(None)
    vertex_ok = tuple(t == expected for t, expected in zip(types, strata))
    first_mismatch = next((i + 1 for i, ok in enumerate(vertex_ok) if not ok), None)
    passed = bool(mz and path and (local is True) and all(vertex_ok))
    return PointReport(
        expected=strata,
        moment_zero=mz,
        nilpotent_path=path,
        nilpotent_local=local,
        jordan_types=tuple(types),
        vertex_ok=vertex_ok,
        passed=passed,
        first_mismatch=first_mismatch,
    )
