"""Independent oracles shared by the test modules.

These deliberately avoid the library's own computation paths: brute-force
enumeration for the Kostant count, an exact centralizer-rank computation for
orbit dimensions, and literal word-product enumeration for joint nilpotency.
"""

from fractions import Fraction
from itertools import product

from nilcone.linalg import eye, is_zero, jordan_matrix, rank, zeros
from nilcone.partitions import Partition


def kostant_bruteforce(v):
    """Count root-multiset decompositions by direct enumeration."""
    n = len(v)
    roots = [
        tuple(1 if i <= t <= j else 0 for t in range(n))
        for i in range(n)
        for j in range(i, n)
    ]

    def count(rem, idx):
        if all(x == 0 for x in rem):
            return 1
        if idx == len(roots):
            return 0
        r = roots[idx]
        total = 0
        cur = list(rem)
        while True:
            total += count(tuple(cur), idx + 1)
            if any(cur[t] < r[t] for t in range(n)):
                break
            cur = [c - x for c, x in zip(cur, r)]
        return total

    return count(tuple(v), 0)


def centralizer_orbit_dim(lam):
    """d^2 minus the exact nullity of X -> X J - J X at the Jordan matrix."""
    lam = Partition(lam)
    d = lam.size
    if d == 0:
        return 0
    j = jordan_matrix(lam)
    rows = []
    for r in range(d):
        for c in range(d):
            e = zeros(d, d)
            e[r, c] = Fraction(1)
            rows.append([x for x in (e @ j - j @ e).flat])
    # rows[i] is the image of the i-th basis matrix; transpose to a map matrix
    m = zeros(d * d, d * d)
    for i, row in enumerate(rows):
        for k, x in enumerate(row):
            m[k, i] = x
    centralizer = d * d - rank(m)
    return d * d - centralizer


def random_invertible(d, rng):
    """Product of unipotent upper and lower triangulars: exactly invertible."""
    up = eye(d)
    lo = eye(d)
    for i in range(d):
        for j in range(i + 1, d):
            up[i, j] = Fraction(rng.randint(-2, 2))
            lo[j, i] = Fraction(rng.randint(-2, 2))
    return up @ lo


def words_all_vanish(mats, length):
    """Literal check: every product of exactly `length` operators is zero."""
    if not mats:
        return True
    d = mats[0].shape[0]
    for combo in product(range(len(mats)), repeat=length):
        prod = eye(d)
        for idx in combo:
            prod = prod @ mats[idx]
        if not is_zero(prod):
            return False
    return True
