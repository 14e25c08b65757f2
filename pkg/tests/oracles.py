"""Slow, obviously-correct reference computations used only by the tests."""
import cmath
import itertools
import math

from catsieve.qpoly import Polynomial


def poly_product(factors):
    out = Polynomial([1])
    for f in factors:
        out = out * f
    return out


def q_binomial_by_inversions(n, k):
    # [n choose k]_q counts 0/1 words with k ones by number of inversions
    coeffs = [0] * (k * (n - k) + 1) if 0 <= k <= n else []
    for ones in itertools.combinations(range(n), k):
        word = [1 if i in ones else 0 for i in range(n)]
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if word[i] > word[j])
        coeffs[inv] += 1
    return Polynomial(coeffs)


def q_catalan_by_dyck_paths(n):
    # sum over Dyck paths of q^(sum of valley positions)
    coeffs = [0] * (n * n + 1)
    for w in itertools.product((1, -1), repeat=2 * n):
        heights = list(itertools.accumulate(w))
        if min(heights, default=0) < 0 or (heights and heights[-1] != 0):
            continue
        maj = sum(i + 1 for i in range(2 * n - 1) if w[i] == -1 and w[i + 1] == 1)
        coeffs[maj] += 1
    return Polynomial(coeffs)


def cyclotomic_from_roots(d):
    # expand prod over primitive d-th roots of (q - zeta) numerically, then round
    coeffs = [complex(1)]
    for j in range(1, d + 1):
        if math.gcd(j, d) != 1:
            continue
        z = cmath.exp(2j * math.pi * j / d)
        new = [0j] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            new[i + 1] += c
            new[i] -= z * c
        coeffs = new
    return Polynomial(round(c.real) for c in coeffs)


def _crossing(a, b):
    (i1, i2), (j1, j2) = sorted([a, b])
    return i1 < j1 < i2 < j2


def brute_configurations(m):
    """All noncrossing (1,2)-configurations of [m] as (balls, arcs) pairs of frozensets."""
    points = range(1, m + 1)
    all_arcs = list(itertools.combinations(points, 2))
    out = set()
    for r in range(m // 2 + 1):
        for arcs in itertools.combinations(all_arcs, r):
            covered = [x for a in arcs for x in a]
            if len(set(covered)) != len(covered):
                continue
            if any(_crossing(a, b) for a, b in itertools.combinations(arcs, 2)):
                continue
            free = [x for x in points if x not in covered]
            for s in range(len(free) + 1):
                for balls in itertools.combinations(free, s):
                    out.add((frozenset(balls), frozenset(arcs)))
    return out


def brute_matchings(n):
    """Noncrossing perfect matchings of [2n] via all perfect matchings."""
    def perfect(points):
        if not points:
            yield ()
            return
        first, rest = points[0], points[1:]
        for i, p in enumerate(rest):
            for tail in perfect(rest[:i] + rest[i + 1:]):
                yield ((first, p),) + tail
    out = set()
    for m in perfect(tuple(range(1, 2 * n + 1))):
        if not any(_crossing(a, b) for a, b in itertools.combinations(m, 2)):
            out.add(frozenset(m))
    return out


def brute_triangulations(m):
    """Maximal sets of pairwise noncrossing diagonals of the convex m-gon."""
    diags = [(i, j) for i, j in itertools.combinations(range(1, m + 1), 2) if j - i > 1 and (i, j) != (1, m)]
    return {
        frozenset(ds)
        for ds in itertools.combinations(diags, m - 3)
        if not any(_crossing(a, b) for a, b in itertools.combinations(ds, 2))
    }
