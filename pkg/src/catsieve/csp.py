"""
Cyclic sieving checks.

A triple (X, C, X(q)) sieves when, for every power g^k of a generator of C,
the number of elements fixed by g^k equals X(q) at q = exp(2 pi i k / |C|).
The right-hand side is computed exactly by reduction modulo the cyclotomic
polynomial of order |C| / gcd(k, |C|); floating-point evaluation is only an
optional diagnostic column.
"""
from __future__ import annotations

import dataclasses
import json
import math
import time
from typing import Callable, Sequence

from .actions import cyclic_action, orbit_decomposition
from .closedform import rhs_closed_form
from .qpoly import Polynomial, eval_at_primitive_root, eval_complex, q_catalan


@dataclasses.dataclass(frozen=True)
class FamilyDescriptor:
    name: str
    n: int
    group_order: int
    enumerate: Callable[[], Sequence]
    act: Callable[[object, int], object]
    polynomial: Polynomial
    closed_form: Callable[[int], int] | None = None


def family_descriptor(family: str, n: int, cap: int | None = None) -> FamilyDescriptor:
    """Descriptor for one of the built-in families, sieved by C_n(q)."""
    action = cyclic_action(family, n, cap=cap)
    closed = (lambda k: rhs_closed_form(n, k)) if family == "config" else None
    return FamilyDescriptor(family, n, action.order, action.enumerate, action.rotate, q_catalan(n), closed)


@dataclasses.dataclass
class CspRow:
    k: int
    d: int
    fixed: int
    eval: int | None
    closed_form: int | None = None
    residue: str | None = None
    float_eval: complex | None = None

    @property
    def match(self) -> bool:
        return self.eval is not None and self.fixed == self.eval

    @property
    def closed_form_match(self) -> bool | None:
        return None if self.closed_form is None else self.closed_form == self.fixed

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "d": self.d,
            "fixed": str(self.fixed),
            "eval": None if self.eval is None else str(self.eval),
            "closed_form": None if self.closed_form is None else str(self.closed_form),
            "match": self.match,
        }


@dataclasses.dataclass
class CspReport:
    family: str
    n: int
    group_order: int
    rows: list[CspRow]
    orbits: int
    elapsed: float = 0.0

    @property
    def csp_holds(self) -> bool:
        return all(r.match for r in self.rows)

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "n": self.n,
            "group_order": self.group_order,
            "rows": [r.to_json() for r in self.rows],
            "orbits": self.orbits,
            "csp_holds": self.csp_holds,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_text(self) -> str:
        def cell(v) -> str:
            return "-" if v is None else str(v)

        header = ("k", "d", "fixed", "eval", "closed_form", "match")
        body = [
            (str(r.k), str(r.d), str(r.fixed), cell(r.eval if r.eval is not None else r.residue),
             cell(r.closed_form), "yes" if r.match else "NO")
            for r in self.rows
        ]
        widths = [max(len(line[i]) for line in [header, *body]) for i in range(len(header))]
        lines = [f"family={self.family} n={self.n} group_order={self.group_order}"]
        for line in [header, *body]:
            lines.append("  ".join(c.rjust(w) for c, w in zip(line, widths)))
        lines.append(
            f"orbits={self.orbits} burnside={'ok' if burnside_check(self) else 'FAIL'} "
            f"csp_holds={'true' if self.csp_holds else 'false'}"
        )
        return "\n".join(lines)


def verify_csp(descriptor: FamilyDescriptor, with_float: bool = False) -> CspReport:
    """Check the sieving identity at every power k = 0 .. N-1."""
    start = time.perf_counter()
    N = descriptor.group_order
    if N < 1:
        raise ValueError(f"group order must be >= 1, got {N}")
    objs = descriptor.enumerate()
    rows = []
    for k in range(N):
        d = N // math.gcd(k, N)
        if d == 1:
            fixed = len(objs)
        else:
            fixed = sum(1 for x in objs if descriptor.act(x, k) == x)
        value = eval_at_primitive_root(descriptor.polynomial, d)
        row = CspRow(k, d, fixed, value.as_int())
        if not value.is_integer():
            row.residue = f"[{value.residue.to_str()}]"
        if descriptor.closed_form is not None:
            row.closed_form = descriptor.closed_form(k)
        if with_float:
            row.float_eval = eval_complex(descriptor.polynomial, N, k)
        rows.append(row)
    orbits = len(orbit_decomposition(_OrbitView(descriptor)))
    return CspReport(descriptor.name, descriptor.n, N, rows, orbits, time.perf_counter() - start)


class _OrbitView:
    # adapts a descriptor to the interface orbit_decomposition expects
    def __init__(self, descriptor: FamilyDescriptor):
        self._d = descriptor

    def objects(self):
        return self._d.enumerate()

    def act(self, x, k):
        return self._d.act(x, k)


def burnside_check(report: CspReport) -> bool:
    """Fixed counts average to an integer equal to the orbit count."""
    total = sum(r.fixed for r in report.rows)
    N = report.group_order
    return N >= 1 and total % N == 0 and total // N == report.orbits
