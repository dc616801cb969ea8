"""Component censuses for nilpotent cones of line and tadpole quivers.

The central quantity is chi(lam, mu), the number of irreducible components
of the edge stratum attached to a pair of Jordan types.  It is recovered
recursively from the identity

    kostant(v) = sum over admissible multipartitions of prod of pairwise chi

on a line quiver assembled from the truncation iterates of the pair.  The
tadpole census multiplies chi by an injected table of loop-stratum component
counts (``PsiOracle``), which is known only for two families of types.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Sequence

from .partitions import (
    Multipartition,
    Partition,
    as_dimension_vector,
    balanced_two_row,
    enumerate_admissible,
    has_proper_pairing,
    one_column,
    orbit_dim,
    partitions_of,
    truncate_first_column,
    xlambda_is_empty,
)


class ChiSolveError(RuntimeError):
    """The consistency equation has no nonnegative integer solution."""


class ChiCycleError(RuntimeError):
    """The recursion revisited a pair currently being solved."""


PairKey = tuple[tuple[int, ...], tuple[int, ...]]


def pair_key(lam: Iterable[int], mu: Iterable[int]) -> PairKey:
    """Canonical unordered key for a pair of partitions."""
    a, b = tuple(Partition(lam)), tuple(Partition(mu))
    return (a, b) if a >= b else (b, a)


class ChiTable:
    """Memo table for chi values, keyed by unordered partition pair.

    Optionally persists to a JSON file so expensive values are reused across
    runs.  The cache never changes numeric results, only their cost.
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = Path(path) if path is not None else None
        self.values: dict[PairKey, int] = {}
        if self.path is not None and self.path.exists():
            self.load()

    def get(self, key: PairKey) -> int | None:
        return self.values.get(key)

    def put(self, key: PairKey, value: int) -> None:
        if value < 0:
            raise ChiSolveError(f"negative chi value for {key}")
        self.values[key] = value

    def load(self) -> None:
        raw = json.loads(self.path.read_text())
        for key_str, value in raw.items():
            a, b = json.loads(key_str)
            self.values[pair_key(a, b)] = int(value)

    def save(self) -> None:
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            json.dumps([list(a), list(b)]): v for (a, b), v in sorted(self.values.items())
        }
        self.path.write_text(json.dumps(payload, indent=0, sort_keys=True))


@lru_cache(maxsize=None)
def _kostant_cached(v: tuple[int, ...]) -> int:
    n = len(v)
    # positive roots of the line quiver: interval vectors e_i + ... + e_j
    roots = [(i, j) for i in range(n) for j in range(i, n)]
    roots.sort(key=lambda r: r[0] - r[1])  # longest intervals first

    def count(rem: tuple[int, ...], idx: int) -> int:
        if all(x == 0 for x in rem):
            return 1
        if idx == len(roots):
            return 0
        i, j = roots[idx]
        total = 0
        cur = list(rem)
        m = 0
        while True:
            total += count(tuple(cur), idx + 1)
            if any(cur[t] == 0 for t in range(i, j + 1)):
                break
            for t in range(i, j + 1):
                cur[t] -= 1
            m += 1
        return total

    return count(v, 0)


def kostant(v: Sequence[int]) -> int:
    """Number of ways to write ``v`` as a nonnegative sum of interval vectors.

    Intervals are e_i + ... + e_j for 1 <= i <= j <= n (the positive roots
    of a line quiver); multiplicities are unordered.
    """
    return _kostant_cached(as_dimension_vector(v))


def _tower_dimension_vector(lam: Partition, mu: Partition) -> tuple[int, ...]:
    """Sizes of the truncation iterates: rising to lam, then falling from mu."""
    left = []
    cur = lam
    for _ in range(lam[0]):
        left.append(cur)
        cur = truncate_first_column(cur)
    right = []
    cur = mu
    for _ in range(mu[0]):
        right.append(cur)
        cur = truncate_first_column(cur)
    entries = list(reversed(left)) + right
    return tuple(p.size for p in entries)


class ChiSolver:
    """Resolves chi values against a (possibly persistent) memo table."""

    def __init__(self, table: ChiTable | None = None):
        self.table = table if table is not None else ChiTable()
        self._in_progress: set[PairKey] = set()

    def chi(self, lam: Iterable[int], mu: Iterable[int]) -> int:
        lam, mu = Partition(lam), Partition(mu)
        key = pair_key(lam, mu)
        cached = self.table.get(key)
        if cached is not None:
            return cached
        if not has_proper_pairing(lam, mu):
            self.table.put(key, 0)
            return 0
        if key in self._in_progress:
            raise ChiCycleError(f"chi recursion cycled on pair {key}")
        self._in_progress.add(key)
        try:
            value = self._solve(lam, mu)
        finally:
            self._in_progress.discard(key)
        self.table.put(key, value)
        return value

    def chi_multipartition(self, strata: Iterable[Iterable[int]]) -> int:
        strata = Multipartition(strata)
        result = 1
        for left, right in zip(strata, strata[1:]):
            result *= self.chi(left, right)
            if result == 0:
                return 0
        return result

    def _solve(self, lam: Partition, mu: Partition) -> int:
        # A pair with an empty side pairs only with a one-column partition,
        # whose edge stratum is a single point: one component.
        if lam.size == 0 or mu.size == 0:
            return 1

        v = _tower_dimension_vector(lam, mu)
        target = kostant(v)
        unknown = pair_key(lam, mu)

        # kostant(v) = sum over multipartitions of products of pairwise chi;
        # the pair under study is the only unresolved factor, but it can
        # occur up to twice per multipartition (its mirror image fits one
        # position over when truncation sizes coincide), so collect a
        # polynomial in the unknown rather than assuming linearity.
        coeffs: dict[int, int] = {}
        for strata in enumerate_admissible(v, one_column(v[0]), one_column(v[-1])):
            power = 0
            known = 1
            for left, right in zip(strata, strata[1:]):
                if pair_key(left, right) == unknown:
                    power += 1
                else:
                    known *= self.chi(left, right)
                    if known == 0:
                        break
            if known:
                coeffs[power] = coeffs.get(power, 0) + known

        if not any(k > 0 for k in coeffs):
            raise ChiSolveError(
                f"pair {unknown} never occurs in its own consistency equation"
            )
        # coefficients are nonnegative and some positive power occurs, so the
        # polynomial is strictly increasing on x >= 0: unique solution if any
        for x in range(target + 1):
            value = sum(c * x**k for k, c in coeffs.items())
            if value == target:
                return x
            if value > target:
                break
        raise ChiSolveError(
            f"no nonnegative integer chi for pair {unknown}: "
            f"coefficients {coeffs}, kostant target {target}"
        )


def chi(lam: Iterable[int], mu: Iterable[int], table: ChiTable | None = None) -> int:
    """Number of irreducible components of the edge stratum of (lam, mu)."""
    return ChiSolver(table).chi(lam, mu)


def chi_multipartition(strata: Iterable[Iterable[int]], table: ChiTable | None = None) -> int:
    """Product of chi over adjacent pairs of a multipartition."""
    return ChiSolver(table).chi_multipartition(strata)


@dataclass(frozen=True)
class PsiOracle:
    """Component counts and dimensions for loop-pair strata.

    Maps a Jordan type lam to (number of components, their dimension) for
    the stratum of jointly nilpotent loop pairs whose commutator has type
    lam.  Only two families are known:

    * one-column (1^d): irreducible of dimension d^2 - 1 (commuting pairs);
    * balanced two-row: irreducible of dimension 3d(d-1)/2 (the dense
      stratum of all jointly nilpotent pairs).

    Other types must be injected explicitly via ``extra``; nothing is ever
    fabricated for them.
    """

    extra: dict[Partition, tuple[int, int]] = field(default_factory=dict)

    def lookup(self, lam: Iterable[int]) -> tuple[int, int] | None:
        lam = Partition(lam)
        if lam in self.extra:
            return self.extra[lam]
        d = lam.size
        if lam == one_column(d):
            return (1, d * d - 1 if d else 0)
        if lam == balanced_two_row(d):
            return (1, 3 * d * (d - 1) // 2)
        return None


@dataclass(frozen=True)
class CensusRecord:
    """One tadpole stratum: component count and dimension, possibly symbolic.

    ``count`` is chi * psi when the oracle resolves the loop type, otherwise
    None (symbolic).  ``dim`` adds the loop-stratum dimension to ``base_dim``
    = sum of products of adjacent dimensions minus half the orbit dimension
    of the loop type.
    """

    stratum: Multipartition
    chi: int
    base_dim: int
    psi: int | None
    x_dim: int | None

    @property
    def loop_type(self) -> Partition:
        return self.stratum[-1]

    @property
    def count(self) -> int | None:
        return self.chi * self.psi if self.psi is not None else None

    @property
    def dim(self) -> int | None:
        return self.base_dim + self.x_dim if self.x_dim is not None else None

    def to_json(self) -> dict:
        unknown = f"unknown({list(self.loop_type)})"
        return {
            "stratum": [list(p) for p in self.stratum],
            "count": self.count if self.psi is not None else {"chi": self.chi, "psi": unknown},
            "dim": self.dim if self.x_dim is not None else {"base": self.base_dim, "x_dim": unknown},
        }


@dataclass(frozen=True)
class LineCensus:
    count: int
    dim: int
    strata: tuple[tuple[Multipartition, int], ...]

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "dim": self.dim,
            "strata": [
                {"stratum": [list(p) for p in m], "chi": c} for m, c in self.strata
            ],
        }


def census_An(v: Sequence[int], table: ChiTable | None = None) -> LineCensus:
    """Census of the line-quiver nilpotent cone: kostant(v) components, all of
    dimension sum v_i v_{i+1}, with the per-stratum chi breakdown."""
    dims = as_dimension_vector(v)
    solver = ChiSolver(table)
    strata = []
    total = 0
    for m in enumerate_admissible(dims, one_column(dims[0]), one_column(dims[-1])):
        c = solver.chi_multipartition(m)
        strata.append((m, c))
        total += c
    count = kostant(dims)
    if total != count:
        raise ChiSolveError(
            f"stratum chi sum {total} disagrees with kostant {count} for v={dims}"
        )
    dim = sum(a * b for a, b in zip(dims, dims[1:]))
    return LineCensus(count=count, dim=dim, strata=tuple(strata))


def census_Tn_strata(
    v: Sequence[int],
    psi: PsiOracle | None = None,
    table: ChiTable | None = None,
) -> list[CensusRecord]:
    """Per-stratum upper-bound census of the tadpole nilpotent cone.

    One record per admissible multipartition with one-column first entry and
    a loop type with nonempty commutator stratum.  Closures of higher strata
    may in principle absorb lower-stratum components, so this is an upper
    bound on the component set, reported stratum by stratum.
    """
    dims = as_dimension_vector(v)
    psi = psi if psi is not None else PsiOracle()
    solver = ChiSolver(table)
    line_dim = sum(a * b for a, b in zip(dims, dims[1:]))
    records = []
    for eta in partitions_of(dims[-1]):
        if xlambda_is_empty(eta):
            continue
        for m in enumerate_admissible(dims, one_column(dims[0]), eta):
            c = solver.chi_multipartition(m)
            looked = psi.lookup(eta)
            psi_val, x_dim = looked if looked is not None else (None, None)
            records.append(
                CensusRecord(
                    stratum=m,
                    chi=c,
                    base_dim=line_dim - orbit_dim(eta) // 2,
                    psi=psi_val,
                    x_dim=x_dim,
                )
            )
    return records


@dataclass(frozen=True)
class SmallLoopCensus:
    count: int
    dim: int


def small_loop_census(v: Sequence[int], table: ChiTable | None = None) -> SmallLoopCensus:
    """Census when the loop vertex has dimension 1 or 2.

    The cone is then a product of the line-quiver cone with the irreducible
    variety of commuting nilpotent loop pairs, so every component has the
    same dimension and the count is kostant(v).
    """
    dims = as_dimension_vector(v)
    if dims[-1] not in (1, 2):
        raise ValueError(f"loop vertex dimension must be 1 or 2, got {dims[-1]}")
    dim = sum(a * b for a, b in zip(dims, dims[1:])) + dims[-1] ** 2 - 1
    return SmallLoopCensus(count=kostant(dims), dim=dim)


@dataclass(frozen=True)
class TopStratumCensus:
    count: int
    dim: int
    codim: int
    loop_type: Partition


def top_stratum_components(v: Sequence[int], table: ChiTable | None = None) -> TopStratumCensus:
    """Components over the widest loop stratum: codimension n-1 in the cone.

    Requires v_i >= 2i with v_n = 2n, or v_i >= 2i-1 with v_n = 2n-1.  The
    loop type is the balanced two-row partition of v_n; these components
    have dimension sum v_i v_{i+1} + v_n^2 - n.
    """
    dims = as_dimension_vector(v)
    n = len(dims)
    even_case = dims[-1] == 2 * n and all(dims[i] >= 2 * (i + 1) for i in range(n))
    odd_case = dims[-1] == 2 * n - 1 and all(dims[i] >= 2 * (i + 1) - 1 for i in range(n))
    if not (even_case or odd_case):
        raise ValueError(
            f"v={dims} violates the growth conditions (v_i >= 2i with v_n = 2n,"
            " or v_i >= 2i-1 with v_n = 2n-1)"
        )
    lam = balanced_two_row(dims[-1])
    solver = ChiSolver(table)
    count = sum(
        solver.chi_multipartition(m)
        for m in enumerate_admissible(dims, one_column(dims[0]), lam)
    )
    dim = sum(a * b for a, b in zip(dims, dims[1:])) + dims[-1] ** 2 - n
    return TopStratumCensus(count=count, dim=dim, codim=n - 1, loop_type=lam)
