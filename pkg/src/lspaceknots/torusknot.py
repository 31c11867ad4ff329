"""Torus knots, formal integer combinations, and their classical invariants.

The Alexander polynomial of T(p,q) comes in three equivalent guises: a
rational expression (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1)), a product of
cyclotomic polynomials phi_{h*l} over divisor pairs h|p, l|q (h,l > 1), and a
telescoping sum over the numerical semigroup generated by p and q.  All three
are implemented and tested against each other; ``alexander`` is the cached
canonical entry point.

Alexander polynomials are normalized as honest polynomials (not Laurent) with
positive constant term, which all three formulas produce as written.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator

from .polynomial import IntPolynomial, cyclotomic, t_power_minus_one


def _validate_strands(p: int, q: int) -> None:
    if not (2 <= p < q):
        raise ValueError(f"need 2 <= p < q, got ({p},{q})")
    if math.gcd(p, q) != 1:
        raise ValueError(f"p and q must be coprime, got ({p},{q})")


@dataclass(frozen=True, order=True)
class TorusKnot:
    """The positive torus knot T(p,q) with 2 <= p < q and gcd(p,q) = 1.

    T(1,n) is the unknot and is deliberately not representable here; the
    unknot is the empty ``TorusSum``.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        _validate_strands(self.p, self.q)

    @property
    def genus(self) -> int:
        """Seifert genus (p-1)(q-1)/2, also the tau invariant."""
        return (self.p - 1) * (self.q - 1) // 2

    @property
    def tau(self) -> int:
        return self.genus

    def semigroup(self) -> Semigroup:
        return Semigroup(self.p, self.q)

    def __str__(self) -> str:
        return f"T({self.p},{self.q})"

    # Expression-building sugar: 3 * T(5,6) - T(2,5) is a TorusSum.
    def __neg__(self) -> TorusSum:
        return TorusSum([(self, -1)])

    def __add__(self, other: TorusKnot | TorusSum) -> TorusSum:
        return TorusSum([(self, 1)]) + other

    def __sub__(self, other: TorusKnot | TorusSum) -> TorusSum:
        return TorusSum([(self, 1)]) - other

    def __rmul__(self, mult: int) -> TorusSum:
        return TorusSum([(self, mult)])


@dataclass(frozen=True)
class Semigroup:
    """The numerical semigroup {a*p + b*q : a, b >= 0} for coprime p < q."""

    p: int
    q: int

    def __post_init__(self) -> None:
        _validate_strands(self.p, self.q)

    def __contains__(self, s: int) -> bool:
        if s < 0:
            return False
        return any((s - a * self.q) % self.p == 0 for a in range(s // self.q + 1))

    @property
    def frobenius(self) -> int:
        """Largest integer not in the semigroup: pq - p - q."""
        return self.p * self.q - self.p - self.q

    def elements_upto(self, bound: int | None = None) -> list[int]:
        """Members <= bound, ascending, by dynamic programming.

        The default bound (p-1)(q-1) + 1 covers everything interesting: past
        the Frobenius number every integer is a member.
        """
        if bound is None:
            bound = (self.p - 1) * (self.q - 1) + 1
        reachable = [False] * (bound + 1)
        if bound >= 0:
            reachable[0] = True
        for s in range(1, bound + 1):
            reachable[s] = (s >= self.p and reachable[s - self.p]) or (
                s >= self.q and reachable[s - self.q]
            )
        return [s for s, r in enumerate(reachable) if r]

    def gaps(self) -> tuple[int, ...]:
        """All nonnegative integers missing from the semigroup."""
        members = set(self.elements_upto(self.frobenius))
        return tuple(s for s in range(self.frobenius + 1) if s not in members)


@dataclass(init=False, frozen=True)
class TorusSum:
    """Formal integer combination of torus knots (a connected sum).

    Terms are merged by knot and zero multiplicities dropped, so the empty
    sum is the unknot and mirrored summands carry negative multiplicity.
    """

    terms: tuple[tuple[TorusKnot, int], ...]

    def __init__(self, terms: Iterable[tuple[TorusKnot, int]] = ()):
        acc: dict[TorusKnot, int] = {}
        for knot, mult in terms:
            acc[knot] = acc.get(knot, 0) + mult
        merged = tuple(sorted((k, m) for k, m in acc.items() if m))
        object.__setattr__(self, "terms", merged)

    @staticmethod
    def unknot() -> TorusSum:
        return TorusSum()

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[TorusKnot, int]]:
        return iter(self.terms)

    def multiplicity(self, knot: TorusKnot) -> int:
        return dict(self.terms).get(knot, 0)

    def positive_part(self) -> TorusSum:
        return TorusSum((k, m) for k, m in self.terms if m > 0)

    def negative_part(self) -> TorusSum:
        """The mirrored summands, with positive multiplicities."""
        return TorusSum((k, -m) for k, m in self.terms if m < 0)

    def positive_multiplicity(self) -> int:
        """Total number of positive summands, counted with multiplicity."""
        return sum(m for _, m in self.terms if m > 0)

    def negative_multiplicity(self) -> int:
        return sum(-m for _, m in self.terms if m < 0)

    def tau(self) -> int:
        """Tau invariant: additive, (p-1)(q-1)/2 per positive torus knot."""
        return sum(m * k.genus for k, m in self.terms)

    def total_genus(self) -> int:
        """Seifert genus of the underlying connected sum (mirror-invariant)."""
        return sum(abs(m) * k.genus for k, m in self.terms)

    def __add__(self, other: TorusSum | TorusKnot) -> TorusSum:
        if isinstance(other, TorusKnot):
            other = TorusSum([(other, 1)])
        return TorusSum(self.terms + other.terms)

    def __sub__(self, other: TorusSum | TorusKnot) -> TorusSum:
        return self + (-other if isinstance(other, TorusSum) else TorusSum([(other, -1)]))

    def __neg__(self) -> TorusSum:
        return TorusSum((k, -m) for k, m in self.terms)

    def __rmul__(self, mult: int) -> TorusSum:
        return TorusSum((k, mult * m) for k, m in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = [(k, m) for k, m in self.terms if m > 0]
        ordered += [(k, m) for k, m in self.terms if m < 0]
        out = ""
        for knot, mult in ordered:
            mag = abs(mult)
            body = str(knot) if mag == 1 else f"{mag}*{knot}"
            if not out:
                out = body if mult > 0 else f"-{body}"
            else:
                out += f" + {body}" if mult > 0 else f" - {body}"
        return out


def _proper_divisors_above_one(n: int) -> list[int]:
    return [d for d in range(2, n + 1) if n % d == 0]


def cyclotomic_orders(knot: TorusKnot) -> tuple[int, ...]:
    """Indexes c of the cyclotomic factors of the Alexander polynomial.

    These are the products h*l over divisor pairs h|p, l|q with h,l > 1; by
    coprimality of p and q the products are pairwise distinct, so each factor
    appears with multiplicity one.
    """
    return tuple(
        sorted(
            h * l
            for h in _proper_divisors_above_one(knot.p)
            for l in _proper_divisors_above_one(knot.q)
        )
    )


def alexander_fraction(knot: TorusKnot) -> IntPolynomial:
    """Alexander polynomial as (t^{pq}-1)(t-1) / ((t^p-1)(t^q-1))."""
    p, q = knot.p, knot.q
    numerator = t_power_minus_one(p * q) * t_power_minus_one(1)
    first = numerator.divide(t_power_minus_one(p))
    assert first.exact
    second = first.quotient.divide(t_power_minus_one(q))
    assert second.exact
    return second.quotient


def alexander_cyclotomic(knot: TorusKnot) -> IntPolynomial:
    """Alexander polynomial as the product of its cyclotomic factors."""
    result = IntPolynomial([1])
    for c in cyclotomic_orders(knot):
        result = result * cyclotomic(c)
    return result


def alexander_semigroup(knot: TorusKnot) -> IntPolynomial:
    """Alexander polynomial as the telescoping sum of t^s - t^{s+1} over the
    semigroup generated by p and q.

    Only members s <= 2g contribute; beyond the top exponent the tail
    telescopes away because every integer past the Frobenius number is a
    member.
    """
    top = 2 * knot.genus
    members = set(knot.semigroup().elements_upto(top))
    coeffs = [0] * (top + 1)
    for s in members:
        coeffs[s] += 1
        if s + 1 <= top:
            coeffs[s + 1] -= 1
    return IntPolynomial(coeffs)


@functools.lru_cache(maxsize=None)
def alexander(knot: TorusKnot) -> IntPolynomial:
    """Cached Alexander polynomial of a torus knot."""
    return alexander_semigroup(knot)
