"""
Rotation actions on the Catalan families, fixed points and orbits.

The generator always sends label i to i + 1, wrapping the largest label back
to 1. Family sizes follow the usual indexing so that every family of size n
has C_n elements:

* ``config``: configurations of [n - 1], group order n - 1 (trivial when n = 1);
* ``matching``: matchings of [2n], group order 2n;
* ``triangulation``: triangulations of the (n + 2)-gon, group order n + 2.
"""
from __future__ import annotations

import dataclasses
import functools
import math
from typing import Callable, Sequence

from .objects import (
    CONFIG_CAP,
    MATCHING_CAP,
    TRIANGULATION_CAP,
    Configuration,
    Matching,
    Pair,
    Triangulation,
    enumerate_configurations,
    enumerate_matchings,
    enumerate_triangulations,
)

FAMILY_NAMES = ("config", "matching", "triangulation")


@functools.lru_cache(maxsize=256)
def _shift_table(m: int, s: int) -> tuple[int, ...]:
    # table[i] is the image of label i under i -> i + s (mod m, labels 1..m)
    return (0,) + tuple((i + s - 1) % m + 1 for i in range(1, m + 1))


def _rotate_pairs(pairs: tuple[Pair, ...], table: tuple[int, ...]) -> tuple[Pair, ...]:
    out = []
    for i, j in pairs:
        i, j = table[i], table[j]
        out.append((i, j) if i < j else (j, i))
    out.sort()
    return tuple(out)


def rotate_configuration(F: Configuration, s: int) -> Configuration:
    m = F.ground_size
    if m == 0 or s % m == 0:
        return F
    table = _shift_table(m, s % m)
    return Configuration(m, tuple(sorted([table[b] for b in F.balls])), _rotate_pairs(F.arcs, table))


def rotate_matching(M: Matching, s: int) -> Matching:
    m = 2 * M.n
    if m == 0 or s % m == 0:
        return M
    return Matching(M.n, _rotate_pairs(M.arcs, _shift_table(m, s % m)))


def rotate_triangulation(T: Triangulation, s: int) -> Triangulation:
    m = T.gon
    if s % m == 0:
        return T
    return Triangulation(m, _rotate_pairs(T.diagonals, _shift_table(m, s % m)))


@dataclasses.dataclass(frozen=True)
class CyclicAction:
    """A cyclic group of the given order acting on one family instance."""
    family: str
    n: int
    order: int
    ground_size: int
    enumerate: Callable[[], Sequence]
    rotate: Callable[[object, int], object]

    def objects(self) -> Sequence:
        return self.enumerate()

    def act(self, x, k: int):
        return self.rotate(x, k)


def cyclic_action(family: str, n: int, cap: int | None = None) -> CyclicAction:
    """
    Build the rotation action for a family of size n.

    ``cap`` overrides the family's enumeration cap, in that family's own
    size unit (ground size, matching n, or gon).
    """
    if family == "config":
        if n < 1:
            raise ValueError(f"config family needs n >= 1, got {n}")
        m = n - 1
        c = CONFIG_CAP if cap is None else cap
        return CyclicAction(family, n, max(m, 1), m, lambda: enumerate_configurations(m, cap=c), rotate_configuration)
    if family == "matching":
        if n < 0:
            raise ValueError(f"matching family needs n >= 0, got {n}")
        c = MATCHING_CAP if cap is None else cap
        return CyclicAction(family, n, max(2 * n, 1), 2 * n, lambda: enumerate_matchings(n, cap=c), rotate_matching)
    if family == "triangulation":
        if n < 1:
            raise ValueError(f"triangulation family needs n >= 1, got {n}")
        c = TRIANGULATION_CAP if cap is None else cap
        return CyclicAction(family, n, n + 2, n + 2, lambda: enumerate_triangulations(n + 2, cap=c), rotate_triangulation)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILY_NAMES}")


def _as_action(family: str | CyclicAction, n: int | None) -> CyclicAction:
    if not isinstance(family, str):
        return family
    if n is None:
        raise TypeError("size is required when family is given by name")
    return cyclic_action(family, n)


def fixed_point_count(family: str | CyclicAction, n: int | None = None, k: int = 0) -> int:
    """Number of objects x with g^k(x) == x, by brute force."""
    action = _as_action(family, n)
    objs = action.objects()
    if k % action.order == 0:
        return len(objs)
    return sum(1 for x in objs if action.act(x, k) == x)


def orbit_decomposition(family: str | CyclicAction, n: int | None = None) -> list[list]:
    """Orbits of the rotation action, each listed from its smallest element."""
    action = _as_action(family, n)
    seen: set = set()
    orbits = []
    for x in action.objects():
        if x in seen:
            continue
        orbit = [x]
        y = action.act(x, 1)
        while y != x:
            orbit.append(y)
            y = action.act(y, 1)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def burnside_orbit_count(fixed_counts: Sequence[int]) -> int | None:
    """Average of the fixed counts over the group, or None if not integral."""
    total, order = sum(fixed_counts), len(fixed_counts)
    q, r = divmod(total, order)
    return None if r else q


def reduced_power(k: int, order: int) -> int:
    """gcd(k, order): g^k and g^gcd generate the same subgroup."""
    return math.gcd(k, order)
