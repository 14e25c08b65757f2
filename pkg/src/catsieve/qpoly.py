"""
Exact integer polynomials in one variable q.

A polynomial is a dense tuple of Python ints, index i holding the coefficient
of q^i, with trailing zeros stripped. The zero polynomial is the empty tuple.
Besides ring arithmetic this module builds the usual q-analogues and evaluates
polynomials at primitive roots of unity exactly, by reducing modulo the
cyclotomic polynomial of the root's order.
"""
from __future__ import annotations

import cmath
import dataclasses
import itertools
import math
import threading
from typing import Iterable

__all__ = [
    "CYCLOTOMIC_CAP",
    "CyclotomicValue",
    "ExactDivisionError",
    "Polynomial",
    "Q",
    "QCATALAN_FORMS",
    "cyclotomic",
    "eval_at_primitive_root",
    "eval_complex",
    "q_binomial",
    "q_catalan",
    "q_factorial",
    "q_integer",
]


class ExactDivisionError(ArithmeticError):
    """A division that had to be exact left a remainder."""


@dataclasses.dataclass(frozen=True, init=False)
class Polynomial:
    """
    Integer polynomial in q, constant term first.

    >>> Polynomial([1, 0, 1])
    Polynomial('q^2 + 1')
    >>> Polynomial([1, 1]) * Polynomial([1, -1])
    Polynomial('-q^2 + 1')
    """
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, c: int) -> Polynomial:
        return cls([c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def __call__(self, x):
        # Horner; works for ints, Fractions, complex, and Polynomials alike
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @staticmethod
    def _coerce(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(a + b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(a - b for a, b in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = Polynomial([1]), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> Polynomial:
        """Multiply by q^k."""
        if not self.coeffs:
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def __divmod__(self, divisor: Polynomial) -> tuple[Polynomial, Polynomial]:
        """
        Long division over the integers.

        Every step must divide the running leading coefficient exactly by the
        divisor's leading coefficient, which always holds for monic divisors.
        """
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, lead = divisor.degree, divisor.leading()
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [0] * (len(rem) - dd)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            t, r = divmod(c, lead)
            if r:
                raise ExactDivisionError(f"leading coefficient {c} not divisible by {lead}")
            quot[i - dd] = t
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= t * b
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, divisor: Polynomial) -> Polynomial:
        return divmod(self, divisor)[0]

    def __mod__(self, divisor: Polynomial) -> Polynomial:
        return divmod(self, divisor)[1]

    def exact_div(self, divisor: Polynomial) -> Polynomial:
        """Quotient of a division that must leave no remainder."""
        quot, rem = divmod(self, divisor)
        if not rem.is_zero():
            raise ExactDivisionError(f"{self!r} / {divisor!r} leaves remainder {rem!r}")
        return quot

    def to_str(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in reversed(list(enumerate(self.coeffs))):
            if c == 0:
                continue
            sign = (" + " if c > 0 else " - ") if parts else ("" if c > 0 else "-")
            term = "" if i == 0 else var if i == 1 else f"{var}^{i}"
            mag = str(abs(c)) if (abs(c) != 1 or not term) else ""
            parts.append(sign + mag + term)
        return "".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return f"Polynomial('{self.to_str()}')"


Q = Polynomial([0, 1])
ONE = Polynomial([1])


def q_integer(n: int) -> Polynomial:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    if n < 0:
        raise ValueError(f"q_integer needs n >= 0, got {n}")
    return Polynomial([1] * n)


def q_factorial(n: int) -> Polynomial:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    out = ONE
    for i in range(2, n + 1):
        out = out * q_integer(i)
    return out


def q_binomial(n: int, k: int) -> Polynomial:
    """Gaussian binomial [n choose k]_q; zero when k is outside [0, n]."""
    if n < 0:
        raise ValueError(f"q_binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return Polynomial()
    return q_factorial(n).exact_div(q_factorial(n - k) * q_factorial(k))


QCATALAN_FORMS = ("standard", "n-plus-one", "two-n")


def q_catalan(n: int, form: str = "standard") -> Polynomial:
    """
    MacMahon's q-Catalan number C_n(q).

    ``standard`` is [2n choose n]_q / [n+1]_q; ``n-plus-one`` is
    [2n choose n+1]_q / [n]_q; ``two-n`` is
    [2n]_q [2n-1 choose n]_q / ([n]_q [n+1]_q). All three agree; the last two
    need n >= 1.
    """
    if n < 0:
        raise ValueError(f"q_catalan needs n >= 0, got {n}")
    if form == "standard":
        return q_binomial(2 * n, n).exact_div(q_integer(n + 1))
    if form not in QCATALAN_FORMS:
        raise ValueError(f"unknown q-Catalan form {form!r}; expected one of {QCATALAN_FORMS}")
    if n < 1:
        raise ValueError(f"q_catalan form {form!r} needs n >= 1")
    if form == "n-plus-one":
        return q_binomial(2 * n, n + 1).exact_div(q_integer(n))
    return (q_integer(2 * n) * q_binomial(2 * n - 1, n)).exact_div(q_integer(n) * q_integer(n + 1))


CYCLOTOMIC_CAP = 64

_cyclotomic_cache: dict[int, Polynomial] = {}
_cyclotomic_lock = threading.Lock()


def _divisors(d: int) -> list[int]:
    small = [e for e in range(1, math.isqrt(d) + 1) if d % e == 0]
    return sorted(set(small + [d // e for e in small]))


def cyclotomic(d: int, cap: int = CYCLOTOMIC_CAP) -> Polynomial:
    """
    The d-th cyclotomic polynomial, from q^d - 1 = prod over e | d of Phi_e.

    >>> cyclotomic(6)
    Polynomial('q^2 - q + 1')
    """
    if d < 1:
        raise ValueError(f"cyclotomic order must be positive, got {d}")
    if d > cap:
        raise ValueError(f"cyclotomic order {d} exceeds cap {cap}")
    with _cyclotomic_lock:
        hit = _cyclotomic_cache.get(d)
        if hit is not None:
            return hit
        # fill divisors bottom-up so no recursion is needed
        for e in _divisors(d):
            if e in _cyclotomic_cache:
                continue
            denom = ONE
            for f in _divisors(e)[:-1]:
                denom = denom * _cyclotomic_cache[f]
            _cyclotomic_cache[e] = (Polynomial.monomial(e) - 1).exact_div(denom)
        return _cyclotomic_cache[d]


@dataclasses.dataclass(frozen=True)
class CyclotomicValue:
    """
    An element of Z[q] / (Phi_d), i.e. a value at a primitive d-th root of unity.

    ``residue`` always has degree below deg Phi_d.
    """
    d: int
    residue: Polynomial

    def is_integer(self) -> bool:
        return self.residue.is_constant()

    @property
    def value(self) -> int:
        if not self.is_integer():
            raise ValueError(f"value at a primitive {self.d}-th root is not an integer: {self.residue}")
        return self.residue.constant_term()

    def as_int(self) -> int | None:
        return self.value if self.is_integer() else None

    def to_complex(self, k: int = 1) -> complex:
        """Numerical value at exp(2 pi i k / d); k should be coprime to d."""
        return complex(self.residue(cmath.exp(2j * math.pi * k / self.d)))

    def __str__(self) -> str:
        return str(self.value) if self.is_integer() else self.residue.to_str()


def eval_at_primitive_root(p: Polynomial, d: int, cap: int = CYCLOTOMIC_CAP) -> CyclotomicValue:
    return CyclotomicValue(d, p % cyclotomic(d, cap=cap))


def eval_complex(p: Polynomial, d: int, k: int) -> complex:
    """Floating-point value of p at exp(2 pi i k / d); a cross-check only."""
    if d < 1:
        raise ValueError(f"root order must be positive, got {d}")
    return complex(p(cmath.exp(2j * math.pi * k / d)))
