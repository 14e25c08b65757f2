"""
The three Catalan families: noncrossing (1,2)-configurations, noncrossing
perfect matchings and triangulations of a convex polygon.

Every object is a frozen dataclass in canonical form (sorted balls, arcs as
(smaller, larger) pairs sorted by first endpoint), so equality of objects is
equality of the underlying sets and dataclass ordering gives a total order.
Enumerators return tuples sorted in that order.
"""
from __future__ import annotations

import dataclasses
import functools
import itertools
from typing import Iterable

Pair = tuple[int, int]

CONFIG_CAP = 16
MATCHING_CAP = 8
TRIANGULATION_CAP = 12


class SizeLimitError(ValueError):
    """Requested enumeration exceeds the configured cap."""


def _check_cap(what: str, value: int, cap: int) -> None:
    if value > cap:
        raise SizeLimitError(f"{what}={value} exceeds cap {cap}")


def _canon_pairs(pairs: Iterable[Iterable[int]]) -> tuple[Pair, ...]:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))


def _fmt_pairs(pairs: Iterable[Pair]) -> str:
    return "[" + ",".join(f"({i},{j})" for i, j in pairs) + "]"


def arcs_cross(a: Pair, b: Pair) -> bool:
    """Arcs (i1, i2), (j1, j2) cross when i1 < j1 < i2 < j2 (either way round)."""
    (i1, i2), (j1, j2) = a, b
    return i1 < j1 < i2 < j2 or j1 < i1 < j2 < i2


def _noncrossing(pairs: tuple[Pair, ...]) -> bool:
    return not any(arcs_cross(a, b) for a, b in itertools.combinations(pairs, 2))


@dataclasses.dataclass(frozen=True, order=True, slots=True)
class Configuration:
    """A (1,2)-configuration on [ground_size]: disjoint balls and arcs.

    Points that are neither a ball nor an arc endpoint are simply uncovered.
    """
    ground_size: int
    balls: tuple[int, ...] = ()
    arcs: tuple[Pair, ...] = ()

    @classmethod
    def make(cls, ground_size: int, balls: Iterable[int] = (), arcs: Iterable[Iterable[int]] = ()) -> Configuration:
        return cls(ground_size, tuple(sorted(balls)), _canon_pairs(arcs))

    def points(self) -> list[int]:
        return list(self.balls) + [x for arc in self.arcs for x in arc]

    def is_valid(self) -> bool:
        """Canonical, inside [m], pairwise disjoint."""
        pts = self.points()
        m = self.ground_size
        return (
            self.balls == tuple(sorted(self.balls))
            and self.arcs == _canon_pairs(self.arcs)
            and all(i < j for i, j in self.arcs)
            and all(1 <= x <= m for x in pts)
            and len(set(pts)) == len(pts)
        )

    def to_text(self) -> str:
        balls = "[" + ",".join(map(str, self.balls)) + "]"
        return f"m={self.ground_size}; balls={balls}; arcs={_fmt_pairs(self.arcs)}"


@dataclasses.dataclass(frozen=True, order=True, slots=True)
class Matching:
    """A noncrossing perfect matching of [2n]."""
    n: int
    arcs: tuple[Pair, ...] = ()

    @classmethod
    def make(cls, n: int, arcs: Iterable[Iterable[int]]) -> Matching:
        return cls(n, _canon_pairs(arcs))

    def is_valid(self) -> bool:
        pts = sorted(x for arc in self.arcs for x in arc)
        return (
            self.arcs == _canon_pairs(self.arcs)
            and pts == list(range(1, 2 * self.n + 1))
            and _noncrossing(self.arcs)
        )

    def to_text(self) -> str:
        return f"n={self.n}; arcs={_fmt_pairs(self.arcs)}"


def _diagonals_cross(a: Pair, b: Pair) -> bool:
    # vertex labels are already in cyclic order, so strict interleaving of the
    # sorted pairs is exactly interior crossing
    return arcs_cross(a, b)


@dataclasses.dataclass(frozen=True, order=True, slots=True)
class Triangulation:
    """A triangulation of the convex gon-gon, stored as its set of diagonals."""
    gon: int
    diagonals: tuple[Pair, ...] = ()

    @classmethod
    def make(cls, gon: int, diagonals: Iterable[Iterable[int]]) -> Triangulation:
        return cls(gon, _canon_pairs(diagonals))

    def is_valid(self) -> bool:
        m = self.gon
        if m < 3 or len(self.diagonals) != m - 3 or self.diagonals != _canon_pairs(self.diagonals):
            return False
        if len(set(self.diagonals)) != len(self.diagonals):
            return False
        for i, j in self.diagonals:
            # a polygon edge joins neighbours, including the wrap-around edge (1, m)
            if not 1 <= i < j <= m or j - i == 1 or (i, j) == (1, m):
                return False
        return not any(_diagonals_cross(a, b) for a, b in itertools.combinations(self.diagonals, 2))

    def to_text(self) -> str:
        return f"gon={self.gon}; diagonals={_fmt_pairs(self.diagonals)}"


def is_noncrossing(obj: Configuration | Matching | Triangulation) -> bool:
    pairs = obj.diagonals if isinstance(obj, Triangulation) else obj.arcs
    return _noncrossing(pairs)


def _config_arcs(m: int) -> Iterable[tuple[tuple[int, ...], tuple[Pair, ...]]]:
    # Scan left to right; the smallest unassigned point is left uncovered,
    # made a ball, or opens an arc to a later free point that crosses nothing.
    taken = [False] * (m + 2)
    balls: list[int] = []
    arcs: list[Pair] = []

    def rec(i: int):
        while i <= m and taken[i]:
            i += 1
        if i > m:
            yield tuple(balls), tuple(sorted(arcs))
            return
        taken[i] = True
        yield from rec(i + 1)
        balls.append(i)
        yield from rec(i + 1)
        balls.pop()
        for j in range(i + 1, m + 1):
            if taken[j] or any(a < i < b < j for a, b in arcs):
                continue
            taken[j] = True
            arcs.append((i, j))
            yield from rec(i + 1)
            arcs.pop()
            taken[j] = False
        taken[i] = False

    yield from rec(1)


@functools.lru_cache(maxsize=None)
def _configurations(m: int) -> tuple[Configuration, ...]:
    return tuple(sorted(Configuration(m, b, a) for b, a in _config_arcs(m)))


def enumerate_configurations(m: int, cap: int = CONFIG_CAP) -> tuple[Configuration, ...]:
    """All noncrossing (1,2)-configurations of [m], sorted."""
    if m < 0:
        raise ValueError(f"ground size must be >= 0, got {m}")
    _check_cap("ground size", m, cap)
    return _configurations(m)


def _matchings_of(points: tuple[int, ...]) -> list[tuple[Pair, ...]]:
    # the first point pairs with a point leaving an even number on each side
    if not points:
        return [()]
    out = []
    first = points[0]
    for idx in range(1, len(points), 2):
        inner, outer = points[1:idx], points[idx + 1:]
        for a in _matchings_of(inner):
            for b in _matchings_of(outer):
                out.append(((first, points[idx]),) + a + b)
    return out


@functools.lru_cache(maxsize=None)
def _matchings(n: int) -> tuple[Matching, ...]:
    return tuple(sorted(Matching(n, _canon_pairs(ms)) for ms in _matchings_of(tuple(range(1, 2 * n + 1)))))


def enumerate_matchings(n: int, cap: int = MATCHING_CAP) -> tuple[Matching, ...]:
    """All noncrossing perfect matchings of [2n], sorted."""
    if n < 0:
        raise ValueError(f"matching size must be >= 0, got {n}")
    _check_cap("matching n", n, cap)
    return _matchings(n)


def _triangulations_of(vertices: tuple[int, ...]) -> list[tuple[Pair, ...]]:
    # the edge (first, last) lies in exactly one triangle (first, v, last)
    if len(vertices) < 3:
        return [()]
    first, last = vertices[0], vertices[-1]
    out = []
    for idx in range(1, len(vertices) - 1):
        apex = vertices[idx]
        own = []
        if idx > 1:
            own.append((first, apex))
        if idx < len(vertices) - 2:
            own.append((apex, last))
        for left in _triangulations_of(vertices[: idx + 1]):
            for right in _triangulations_of(vertices[idx:]):
                out.append(tuple(own) + left + right)
    return out


@functools.lru_cache(maxsize=None)
def _triangulations(m: int) -> tuple[Triangulation, ...]:
    return tuple(sorted(Triangulation(m, _canon_pairs(ds)) for ds in _triangulations_of(tuple(range(1, m + 1)))))


def enumerate_triangulations(m: int, cap: int = TRIANGULATION_CAP) -> tuple[Triangulation, ...]:
    """All triangulations of the convex m-gon, sorted."""
    if m < 3:
        raise ValueError(f"a polygon needs at least 3 vertices, got {m}")
    _check_cap("gon", m, cap)
    return _triangulations(m)
