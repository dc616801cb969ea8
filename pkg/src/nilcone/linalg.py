"""Exact linear algebra over the rationals.

Matrices are numpy object arrays filled with ``fractions.Fraction`` (or
ints, which interoperate exactly).  All eliminations use exact pivots, so
ranks, nullspaces, inverses and Jordan bases are free of rounding.
Intended for the desk-scale matrices of this package, not for bulk numerics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition, transpose


def rational_matrix(rows: Sequence[Sequence], shape: tuple[int, int] | None = None) -> np.ndarray:
    """Build an exact matrix from nested sequences of ints/Fractions/strings."""
    data = [[Fraction(x) for x in row] for row in rows]
    if shape is None:
        m = len(data)
        n = len(data[0]) if m else 0
        shape = (m, n)
    out = np.empty(shape, dtype=object)
    for i, row in enumerate(data):
        if len(row) != shape[1]:
            raise ValueError("ragged rows in matrix input")
        for j, x in enumerate(row):
            out[i, j] = x
    if not data:
        out[...] = Fraction(0)
    return out


def zeros(m: int, n: int) -> np.ndarray:
    out = np.empty((m, n), dtype=object)
    out[...] = Fraction(0)
    return out


def eye(n: int) -> np.ndarray:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def is_zero(a: np.ndarray) -> bool:
    return all(x == 0 for x in a.flat)


def mats_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """In-place forward elimination; returns (rows, pivot column indices)."""
    if not rows:
        return rows, []
    n_rows, n_cols = len(rows), len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / Fraction(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return rows, pivots


def _as_rows(a: np.ndarray) -> list[list[Fraction]]:
    return [[Fraction(x) for x in row] for row in a.tolist()]


def rank(a: np.ndarray) -> int:
    """Exact rank over the rationals."""
    if a.size == 0:
        return 0
    _, pivots = _echelon(_as_rows(a))
    return len(pivots)


def nullspace(a: np.ndarray) -> np.ndarray:
    """Columns form an exact basis of the right kernel of ``a``."""
    m, n = a.shape
    if n == 0:
        return zeros(0, 0)
    if m == 0:
        return eye(n)
    rows, pivots = _echelon(_as_rows(a))
    free = [c for c in range(n) if c not in pivots]
    basis = zeros(n, len(free))
    for k, fc in enumerate(free):
        basis[fc, k] = Fraction(1)
        for r, pc in enumerate(pivots):
            basis[pc, k] = -rows[r][fc]
    return basis


def column_space(a: np.ndarray) -> np.ndarray:
    """A matrix whose columns are an exact basis of the column space of ``a``."""
    m, n = a.shape
    if n == 0 or m == 0:
        return zeros(m, 0)
    _, pivots = _echelon(_as_rows(a))
    cols = [[a[i, c] for i in range(m)] for c in pivots]
    out = zeros(m, len(pivots))
    for k, col in enumerate(cols):
        for i, x in enumerate(col):
            out[i, k] = Fraction(x)
    return out


def inverse(a: np.ndarray) -> np.ndarray:
    """Exact inverse; raises ValueError if singular."""
    m, n = a.shape
    if m != n:
        raise ValueError("only square matrices are invertible")
    if n == 0:
        return zeros(0, 0)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a.tolist())]
    aug, pivots = _echelon(aug)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return rational_matrix([row[n:] for row in aug])


class SpanTracker:
    """Incrementally tracks the span of a set of vectors (exact)."""

    def __init__(self, dim: int):
        self.dim = dim
        self.rows: dict[int, list[Fraction]] = {}

    def _reduce(self, vec: list[Fraction]) -> list[Fraction]:
        vec = list(vec)
        for p, row in self.rows.items():
            if vec[p] != 0:
                f = vec[p]
                vec = [x - f * y for x, y in zip(vec, row)]
        return vec

    def add(self, vec: Iterable) -> bool:
        """Add a vector; returns True if it enlarged the span."""
        vec = self._reduce([Fraction(x) for x in vec])
        pivot = next((i for i, x in enumerate(vec) if x != 0), None)
        if pivot is None:
            return False
        inv = Fraction(1) / vec[pivot]
        self.rows[pivot] = [x * inv for x in vec]
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def jordan_matrix(lam: Iterable[int]) -> np.ndarray:
    """The nilpotent Jordan matrix with block sizes lam (1s on superdiagonals)."""
    lam = Partition(lam)
    d = lam.size
    out = zeros(d, d)
    off = 0
    for part in lam:
        for k in range(part - 1):
            out[off + k, off + k + 1] = Fraction(1)
        off += part
    return out


def nilpotency_index(a: np.ndarray) -> int | None:
    """Smallest k with a^k = 0, or None if ``a`` is not nilpotent."""
    d = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ValueError("nilpotency is a property of square matrices")
    if d == 0:
        return 0
    power = eye(d)
    for k in range(d + 1):
        if is_zero(power):
            return k
        power = power @ a
    return None


def jordan_type(a: np.ndarray) -> Partition:
    """Jordan type of a nilpotent matrix, via exact ranks of powers.

    The transpose of the type at index i is dim Ker(a^i) - dim Ker(a^(i-1)).
    Raises ValueError if ``a`` is not nilpotent.
    """
    d = a.shape[0]
    if a.shape[0] != a.shape[1]:
        raise ValueError("Jordan type needs a square matrix")
    ranks = [d]
    power = a.copy()
    while ranks[-1] > 0:
        if len(ranks) > d:
            raise ValueError("matrix is not nilpotent")
        ranks.append(rank(power))
        power = power @ a
    cols = [ranks[i - 1] - ranks[i] for i in range(1, len(ranks))]
    return transpose(Partition(c for c in cols if c > 0))


def nilpotent_jordan_transform(a: np.ndarray) -> tuple[np.ndarray, Partition]:
    """Exact base change to Jordan form for a nilpotent matrix.

    Returns (P, lam) with P^-1 a P = jordan_matrix(lam).  Uses the classic
    chain construction: pick chain tops level by level, descending from the
    nilpotency index, each independent from the lower kernel plus the
    already-propagated chains.
    """
    d = a.shape[0]
    k = nilpotency_index(a)
    if k is None:
        raise ValueError("matrix is not nilpotent")
    if d == 0:
        return zeros(0, 0), Partition()

    powers = [eye(d)]
    for _ in range(k):
        powers.append(powers[-1] @ a)
    kernels = [nullspace(powers[j]) for j in range(k + 1)]

    chains: list[tuple[np.ndarray, int]] = []  # (top vector as column, level)
    for level in range(k, 0, -1):
        tracker = SpanTracker(d)
        for col in range(kernels[level - 1].shape[1]):
            tracker.add(kernels[level - 1][:, col])
        for top, top_level in chains:
            tracker.add((powers[top_level - level] @ top)[:, 0])
        for col in range(kernels[level].shape[1]):
            vec = kernels[level][:, col]
            if tracker.add(vec):
                chains.append((vec.reshape(d, 1), level))

    chains.sort(key=lambda c: -c[1])
    columns = []
    for top, level in chains:
        for j in range(level - 1, -1, -1):
            columns.append(powers[j] @ top)
    p = np.hstack(columns)
    lam = Partition(level for _, level in chains)
    if not mats_equal(a @ p, p @ jordan_matrix(lam)):
        raise RuntimeError("Jordan chain construction failed self-check")
    return p, lam


def block_diag(blocks: Sequence[np.ndarray]) -> np.ndarray:
    m = sum(b.shape[0] for b in blocks)
    n = sum(b.shape[1] for b in blocks)
    out = zeros(m, n)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def matrix_to_pairs(a: np.ndarray) -> list[list[list[int]]]:
    """Serialize entries as [numerator, denominator] pairs."""
    return [[[Fraction(x).numerator, Fraction(x).denominator] for x in row]
            for row in a.tolist()]


def matrix_from_pairs(rows: Sequence[Sequence[Sequence[int]]], shape: tuple[int, int]) -> np.ndarray:
    out = zeros(*shape)
    for i, row in enumerate(rows):
        for j, (num, den) in enumerate(row):
            out[i, j] = Fraction(num, den)
    return out
