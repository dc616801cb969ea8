"""Exact partition combinatorics for Jordan-stratum bookkeeping.

Partitions are weakly decreasing tuples of positive integers; the empty
partition ``()`` is the unique partition of 0.  Everything here is pure and
exact, so results are safe to memoize and to use as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class Partition(tuple):
    """A partition, stored as a weakly decreasing tuple of positive parts.

    The constructor sorts its input, so ``Partition([1, 3])`` and
    ``Partition([3, 1])`` denote the same partition.  Nonpositive parts are
    rejected.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        norm = sorted((int(p) for p in parts), reverse=True)
        if norm and norm[-1] < 1:
            raise ValueError(f"partition parts must be positive, got {norm}")
        return super().__new__(cls, norm)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition{tuple(self)}"


class Multipartition(tuple):
    """A tuple of partitions, one per quiver vertex."""

    def __new__(cls, entries: Iterable[Iterable[int]]):
        return super().__new__(cls, tuple(Partition(e) for e in entries))

    @property
    def dims(self) -> tuple[int, ...]:
        """The dimension vector spanned by the entry sizes."""
        return tuple(p.size for p in self)

    def __repr__(self) -> str:
        return f"Multipartition{tuple(tuple(p) for p in self)}"


def as_dimension_vector(v: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalize a dimension vector (nonnegative, length >= 1)."""
    dims = tuple(int(x) for x in v)
    if not dims:
        raise ValueError("dimension vector must have at least one entry")
    if any(x < 0 for x in dims):
        raise ValueError(f"dimension vector entries must be nonnegative: {dims}")
    return dims


def one_column(d: int) -> Partition:
    """The one-column partition (1^d)."""
    return Partition([1] * d)


def balanced_two_row(d: int) -> Partition:
    """(ceil(d/2), floor(d/2)): the widest nonempty commutator stratum on d dims."""
    return Partition(p for p in ((d + 1) // 2, d // 2) if p > 0)


def transpose(lam: Iterable[int]) -> Partition:
    """Column lengths of the Young diagram of ``lam``."""
    lam = Partition(lam)
    if not lam:
        return lam
    cols = [0] * lam[0]
    for part in lam:
        for i in range(part):
            cols[i] += 1
    return Partition(cols)


def truncate_first_column(lam: Iterable[int]) -> Partition:
    """Drop the first column: parts decrease by one, parts equal to 1 vanish."""
    return Partition(p - 1 for p in Partition(lam) if p >= 2)


def contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """Whether the diagram of ``mu`` fits inside the diagram of ``lam``."""
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam):
        return False
    return all(mu[i] <= lam[i] for i in range(len(mu)))


def dominance_geq(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """lam >= mu: dominance order at equal size, size comparison otherwise.

    At equal size this is only a partial order; incomparable pairs fail in
    both directions.
    """
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        return lam.size > mu.size
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in lexicographic descending order."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    return [Partition(p) for p in _partitions_bounded(d, d)]


@lru_cache(maxsize=None)
def _partitions_bounded(d: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if d == 0:
        return ((),)
    out = []
    for first in range(min(d, max_part), 0, -1):
        for rest in _partitions_bounded(d - first, first):
            out.append((first,) + rest)
    return tuple(out)


@dataclass(frozen=True)
class ProperPairing:
    """A matching between parts of two partitions.

    ``matches`` holds 0-based index pairs (i, j) linking part ``lam[i]`` to
    part ``mu[j]``.  Validity (checked by :func:`validate_pairing`): every
    part >= 2 on either side is matched, parts equal to 1 may stay
    unmatched, no part is used twice, and matched parts differ by at most 1.
    """

    matches: frozenset[tuple[int, int]]

    def value_pairs(self, lam: Partition, mu: Partition) -> tuple[tuple[int, int], ...]:
        """The matched part values, as a canonically sorted tuple of pairs."""
        return tuple(sorted((lam[i], mu[j]) for i, j in self.matches))


EMPTY_PAIRING = ProperPairing(frozenset())


def validate_pairing(lam: Iterable[int], mu: Iterable[int], pairing: ProperPairing) -> None:
    """Raise ValueError unless ``pairing`` is a proper pairing of (lam, mu)."""
    lam, mu = Partition(lam), Partition(mu)
    used_i = [i for i, _ in pairing.matches]
    used_j = [j for _, j in pairing.matches]
    if len(set(used_i)) != len(used_i) or len(set(used_j)) != len(used_j):
        raise ValueError("a part may appear in at most one match")
    for i, j in pairing.matches:
        if not (0 <= i < len(lam) and 0 <= j < len(mu)):
            raise ValueError(f"match index ({i}, {j}) out of range")
        if abs(lam[i] - mu[j]) > 1:
            raise ValueError(f"matched parts {lam[i]} and {mu[j]} differ by more than 1")
    for i, p in enumerate(lam):
        if p >= 2 and i not in used_i:
            raise ValueError(f"part {p} of {lam} is unmatched")
    for j, q in enumerate(mu):
        if q >= 2 and j not in used_j:
            raise ValueError(f"part {q} of {mu} is unmatched")


def has_proper_pairing(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """Diagram criterion: t(lam) fits in mu and t(mu) fits in lam.

    Agrees with existence of a matching (see
    :func:`enumerate_proper_pairings`); the equivalence is exercised by the
    test suite.
    """
    lam, mu = Partition(lam), Partition(mu)
    return contains(mu, truncate_first_column(lam)) and contains(
        lam, truncate_first_column(mu)
    )


def enumerate_proper_pairings(lam: Iterable[int], mu: Iterable[int]) -> list[ProperPairing]:
    """All proper pairings of (lam, mu), up to exchanging equal part values.

    Matchings that link the same multiset of part values are the same
    geometric datum, so only one representative per value-multiset is
    returned (with deterministically chosen indices).  The list is empty
    exactly when :func:`has_proper_pairing` is false.
    """
    lam, mu = Partition(lam), Partition(mu)
    lam_vals = sorted(set(lam), reverse=True)
    mu_vals = sorted(set(mu), reverse=True)
    lam_mult = {a: lam.count(a) for a in lam_vals}
    mu_mult = {b: mu.count(b) for b in mu_vals}
    slots = [(a, b) for a in lam_vals for b in mu_vals if abs(a - b) <= 1]

    solutions: list[dict[tuple[int, int], int]] = []

    def assign(idx: int, lam_used: dict, mu_used: dict, counts: dict) -> None:
        if idx == len(slots):
            if all(lam_used[a] == lam_mult[a] for a in lam_vals if a >= 2) and all(
                mu_used[b] == mu_mult[b] for b in mu_vals if b >= 2
            ):
                solutions.append(dict(counts))
            return
        a, b = slots[idx]
        cap = min(lam_mult[a] - lam_used[a], mu_mult[b] - mu_used[b])
        for m in range(cap + 1):
            if m:
                counts[(a, b)] = m
            lam_used[a] += m
            mu_used[b] += m
            assign(idx + 1, lam_used, mu_used, counts)
            lam_used[a] -= m
            mu_used[b] -= m
            counts.pop((a, b), None)

    assign(0, {a: 0 for a in lam_vals}, {b: 0 for b in mu_vals}, {})

    index_of = {a: [i for i, p in enumerate(lam) if p == a] for a in lam_vals}
    jndex_of = {b: [j for j, q in enumerate(mu) if q == b] for b in mu_vals}
    pairings = []
    for counts in solutions:
        taken_i = {a: 0 for a in lam_vals}
        taken_j = {b: 0 for b in mu_vals}
        matches = []
        for (a, b), m in sorted(counts.items()):
            for _ in range(m):
                matches.append((index_of[a][taken_i[a]], jndex_of[b][taken_j[b]]))
                taken_i[a] += 1
                taken_j[b] += 1
        pairings.append(ProperPairing(frozenset(matches)))
    pairings.sort(key=lambda pp: (len(pp.matches), pp.value_pairs(lam, mu)))
    return pairings


def enumerate_admissible(
    v: Sequence[int], first: Iterable[int], last: Iterable[int]
) -> list[Multipartition]:
    """All multipartitions of ``v`` with the given ends and pairable neighbors.

    Entry i is a partition of v[i]; the first and last entries are fixed and
    every adjacent pair admits a proper pairing.  Enumeration order is
    deterministic (lexicographic descending per position).
    """
    dims = as_dimension_vector(v)
    first, last = Partition(first), Partition(last)
    if first.size != dims[0]:
        raise ValueError(f"first partition {first} is not a partition of {dims[0]}")
    if last.size != dims[-1]:
        raise ValueError(f"last partition {last} is not a partition of {dims[-1]}")
    n = len(dims)
    if n == 1:
        return [Multipartition([first])] if first == last else []

    out: list[Multipartition] = []

    def extend(prefix: list[Partition]) -> None:
        i = len(prefix)
        if i == n - 1:
            if has_proper_pairing(prefix[-1], last):
                out.append(Multipartition(prefix + [last]))
            return
        for cand in partitions_of(dims[i]):
            if has_proper_pairing(prefix[-1], cand):
                extend(prefix + [cand])

    extend([first])
    return out


def orbit_dim(lam: Iterable[int]) -> int:
    """Dimension of the conjugation orbit of a nilpotent with Jordan type lam.

    Equals d^2 minus the centralizer dimension sum((lam^T_i)^2); the test
    suite checks this closed form against an exact centralizer-rank oracle.
    """
    lam = Partition(lam)
    d = lam.size
    return d * d - sum(c * c for c in transpose(lam))


def xlambda_is_empty(lam: Iterable[int]) -> bool:
    """Whether no jointly nilpotent pair has a commutator of type lam.

    Empty iff the diagram has more than (d+1)/2 columns, reading "columns"
    as the diagram width lam[0].
    """
    lam = Partition(lam)
    width = lam[0] if lam else 0
    return 2 * width > lam.size + 1
