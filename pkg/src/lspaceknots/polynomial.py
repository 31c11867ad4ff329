"""Exact polynomial arithmetic over arbitrary-precision integers.

A polynomial is a dense tuple of coefficients indexed by exponent, so
``IntPolynomial([1, -1, 1])`` is ``1 - t + t^2``.  Everything stays inside
Z[t]: division is only defined for divisors whose leading coefficient is +1
or -1, which is the only kind of divisor this package ever meets (cyclotomic
polynomials and torus-knot Alexander polynomials are monic up to sign), so
quotients never leave the integers.  Coefficients are plain Python ints and
therefore never overflow; high powers of Alexander polynomials rely on that.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable


@dataclass(init=False, frozen=True)
class IntPolynomial:
    """Dense integer-coefficient polynomial, normalized.

    The last stored coefficient is nonzero; the zero polynomial stores the
    empty tuple and has degree -1.

    >>> IntPolynomial([1, -1, 1]) * IntPolynomial([1, 1])
    IntPolynomial('1 + t^3')
    >>> IntPolynomial([1, -1]) + IntPolynomial([0, 1])
    IntPolynomial('1')
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> IntPolynomial:
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return IntPolynomial([0] * exponent + [coefficient])

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coefficient(self, exponent: int) -> int:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return 0

    @property
    def support(self) -> tuple[int, ...]:
        """Exponents carrying a nonzero coefficient, ascending."""
        return tuple(i for i, c in enumerate(self.coeffs) if c)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        if len(a) > len(b):
            a, b = b, a
        out = [0] * (len(a) + len(b) - 1)
        for i, c in enumerate(a):
            # +-1 coefficients dominate in this package; skip the multiply.
            if c == 0:
                continue
            if c == 1:
                for j, d in enumerate(b):
                    out[i + j] += d
            elif c == -1:
                for j, d in enumerate(b):
                    out[i + j] -= d
            else:
                for j, d in enumerate(b):
                    out[i + j] += c * d
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPolynomial:
        if n < 0:
            raise ValueError("negative powers of a polynomial are not defined")
        result = IntPolynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def divide(self, divisor: IntPolynomial) -> DivisionResult:
        """Euclidean division by a divisor with leading coefficient +1 or -1.

        Returns quotient and remainder with
        ``self == divisor * quotient + remainder`` and
        ``remainder.degree < divisor.degree``.

        >>> IntPolynomial([-1, 0, 1]).divide(IntPolynomial([1, 1])).quotient
        IntPolynomial('-1 + t')
        """
        if divisor.is_zero():
            raise ValueError("division by the zero polynomial")
        lead = divisor.leading_coefficient
        if lead not in (1, -1):
            raise ValueError(
                f"divisor must have leading coefficient +1 or -1, got {lead}"
            )
        ddeg = divisor.degree
        if self.degree < ddeg:
            return DivisionResult(IntPolynomial(), self, self.is_zero())
        rem = list(self.coeffs)
        quot = [0] * (self.degree - ddeg + 1)
        lower = [(j, c) for j, c in enumerate(divisor.coeffs[:-1]) if c]
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + ddeg]
            if not c:
                continue
            qc = c * lead  # exact since lead is a unit
            quot[k] = qc
            rem[k + ddeg] = 0
            for j, d in lower:
                rem[k + j] -= qc * d
        remainder = IntPolynomial(rem)
        return DivisionResult(IntPolynomial(quot), remainder, remainder.is_zero())

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "t" if i == 1 else f"t^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPolynomial('{self}')"


@dataclass(frozen=True)
class DivisionResult:
    quotient: IntPolynomial
    remainder: IntPolynomial
    exact: bool


def t_power_minus_one(n: int) -> IntPolynomial:
    """The polynomial t^n - 1."""
    if n < 1:
        raise ValueError("exponent must be positive")
    return IntPolynomial([-1] + [0] * (n - 1) + [1])


@functools.lru_cache(maxsize=None)
def cyclotomic(n: int) -> IntPolynomial:
    """The n-th cyclotomic polynomial.

    Computed by exact division of t^n - 1 by the cyclotomic polynomials of
    the proper divisors of n; the memo table makes the recursion cheap.  The
    cache is safe under concurrent use: entries are immutable and recomputing
    one is idempotent.

    >>> str(cyclotomic(6))
    '1 - t + t^2'
    """
    if n < 1:
        raise ValueError("cyclotomic index must be a positive integer")
    poly = t_power_minus_one(n)
    for d in range(1, n):
        if n % d == 0:
            step = poly.divide(cyclotomic(d))
            assert step.exact
            poly = step.quotient
    return poly


def cyclotomic_multiplicity(p: IntPolynomial, c: int) -> int:
    """Largest k such that cyclotomic(c)^k divides p, by repeated division."""
    if p.is_zero():
        raise ValueError("multiplicity undefined for the zero polynomial")
    phi = cyclotomic(c)
    k = 0
    while True:
        step = p.divide(phi)
        if not step.exact:
            return k
        p = step.quotient
        k += 1
