"""
Integer closed forms for Catalan numbers and for the fixed-point counts of the
rotation action on noncrossing (1,2)-configurations.

Nothing here enumerates objects or touches polynomials: these are the
independent oracles the brute-force and cyclotomic computations are checked
against.
"""
from __future__ import annotations

import dataclasses
from math import comb, gcd


def catalan(n: int) -> int:
    """C_n = binom(2n, n) / (n + 1), exactly."""
    if n < 0:
        raise ValueError(f"catalan needs n >= 0, got {n}")
    q, r = divmod(comb(2 * n, n), n + 1)
    assert r == 0
    return q


def catalan_sum_identity(n: int) -> tuple[int, int]:
    """
    Count configurations of [n-1] by number of arcs a.

    Choose the 2a arc-covered points, a noncrossing matching on them, and a
    subset of the rest as balls. Returns (that sum, C_n); equality is what the
    caller checks.
    """
    if n < 1:
        raise ValueError(f"catalan_sum_identity needs n >= 1, got {n}")
    m = n - 1
    left = sum(comb(m, 2 * a) * catalan(a) * 2 ** (m - 2 * a) for a in range(m // 2 + 1))
    return left, catalan(n)


def half_catalan_at_root(a: int, d: int) -> int:
    """
    Value of C_{da/2}(q) at q = exp(2 pi i a / (da)), a primitive d-th root.

    This is the number of noncrossing matchings of [da] invariant under
    rotation by a. Zero when da is odd.
    """
    if a < 0 or d < 1:
        raise ValueError(f"need a >= 0 and d >= 1, got a={a}, d={d}")
    if (d * a) % 2:
        return 0
    if d == 1:
        # q = 1: plain Catalan number
        return catalan(a // 2)
    if a % 2 == 0:
        return comb(a, a // 2)
    if d == 2:
        return comb(a, (a - 1) // 2)
    return 0


@dataclasses.dataclass(frozen=True)
class FixedCountTerm:
    a: int
    binomial: int
    inner: int
    power_of_two: int

    @property
    def product(self) -> int:
        return self.binomial * self.inner * self.power_of_two


@dataclasses.dataclass(frozen=True)
class FixedCountBreakdown:
    """Term-by-term count of configurations fixed by g^k, where d*k = n-1."""
    n: int
    k: int
    d: int
    terms: tuple[FixedCountTerm, ...]

    @property
    def total(self) -> int:
        return sum(t.product for t in self.terms)


def fixed_count_formula(n: int, k: int) -> FixedCountBreakdown:
    """
    Count g^k-fixed configurations of [n-1] constructively.

    With d = (n-1)/k, a fixed configuration is determined by its restriction
    to [k]: a points there are arc-covered (binom(k, a) ways), the arc-covered
    set of size da carries a rotation-invariant noncrossing matching, and the
    remaining k - a points of [k] are balls or not.
    """
    if n < 2 or k < 1 or (n - 1) % k:
        raise ValueError(f"fixed_count_formula needs k >= 1 dividing n-1; got n={n}, k={k}")
    d = (n - 1) // k
    terms = tuple(
        FixedCountTerm(a, comb(k, a), half_catalan_at_root(a, d), 2 ** (k - a))
        for a in range(k + 1)
    )
    return FixedCountBreakdown(n, k, d, terms)


def rhs_closed_form(n: int, k: int) -> int:
    """
    C_n(q) at q = exp(2 pi i k / (n-1)) in closed form.

    With k' = gcd(k, n-1) and d = (n-1)/k': C_n if d = 1,
    binom(n, (n-1)/2) if d = 2, binom(2k', k') otherwise. For n = 1 the group
    is trivial and the value is C_1.
    """
    if n < 1:
        raise ValueError(f"rhs_closed_form needs n >= 1, got {n}")
    if n == 1:
        return catalan(1)
    kk = gcd(k, n - 1)
    d = (n - 1) // kk
    if d == 1:
        return catalan(n)
    if d == 2:
        return comb(n, (n - 1) // 2)
    return comb(2 * kk, kk)
