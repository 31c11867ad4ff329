"""Staircase shapes of L-space knot complexes, read off the Alexander polynomial.

The Alexander polynomial of an L-space knot has coefficients +1 and -1 only,
alternating in sign, starting 1 - t and ending t^{2g} - t^{2g-1}.  When a
polynomial has that shape, the gaps between consecutive exponents are the
alternating horizontal/vertical step lengths of a staircase descending from
(0, g) to (g, 0); only the outer corner vertices are recorded since they are
all the Upsilon computation consumes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polynomial import IntPolynomial

KIND_COEFFICIENT = "coefficient_outside_unit"
KIND_NON_ALTERNATING = "non_alternating"
KIND_BAD_LOWEST = "bad_lowest_terms"
KIND_BAD_HIGHEST = "bad_highest_terms"


@dataclass(frozen=True)
class LSpaceFormViolation:
    """First reason a polynomial fails the L-space Alexander shape."""

    kind: str
    exponent: int


class LSpaceFormError(ValueError):
    def __init__(self, violation: LSpaceFormViolation):
        super().__init__(f"{violation.kind} at exponent {violation.exponent}")
        self.violation = violation


@dataclass(frozen=True)
class Staircase:
    """Step lengths, genus, and outer corner vertices of a staircase complex.

    ``steps`` alternate horizontal, vertical, ...; they form a palindrome and
    sum to 2g.  Corners run from (0, g) down to (g, 0).
    """

    steps: tuple[int, ...]
    genus: int
    corners: tuple[tuple[int, int], ...]


def lspace_form_check(poly: IntPolynomial) -> LSpaceFormViolation | None:
    """Check the L-space Alexander shape; None means the shape holds.

    Required shape: nonzero coefficients exactly +1/-1 alternating from +1 at
    t^0, with lowest terms 1 - t and highest terms t^{2g} - t^{2g-1}.  The
    scan runs from exponent 0 upward and reports the first violation; at a
    given exponent a coefficient-magnitude violation wins over an alternation
    violation.
    """
    if poly.is_zero():
        raise ValueError("the zero polynomial has no L-space form")
    deg = poly.degree

    c0 = poly.coefficient(0)
    if abs(c0) >= 2:
        return LSpaceFormViolation(KIND_COEFFICIENT, 0)
    if c0 != 1:
        return LSpaceFormViolation(KIND_BAD_LOWEST, 0)
    c1 = poly.coefficient(1)
    if abs(c1) >= 2:
        return LSpaceFormViolation(KIND_COEFFICIENT, 1)
    if c1 != -1:
        return LSpaceFormViolation(KIND_BAD_LOWEST, 1)

    seen = 2  # nonzero terms consumed so far; expected sign is (-1)^seen
    previous_exponent = 1
    for e in range(2, deg + 1):
        c = poly.coefficient(e)
        if c == 0:
            continue
        if abs(c) >= 2:
            return LSpaceFormViolation(KIND_COEFFICIENT, e)
        expected = 1 if seen % 2 == 0 else -1
        if c != expected:
            return LSpaceFormViolation(KIND_NON_ALTERNATING, e)
        seen += 1
        previous_exponent = e

    # Top of the polynomial must read t^{2g} - t^{2g-1}.
    if poly.coefficient(deg) != 1:
        return LSpaceFormViolation(KIND_BAD_HIGHEST, deg)
    if deg >= 2 and previous_exponent == deg:
        # locate the second-highest nonzero exponent
        below = max(e for e in range(deg) if poly.coefficient(e))
        if below != deg - 1:
            return LSpaceFormViolation(KIND_BAD_HIGHEST, deg - 1)
    return None


def staircase_from_alexander(poly: IntPolynomial) -> Staircase:
    """Build the staircase of an L-space-form Alexander polynomial.

    Steps are the consecutive differences of the exponent sequence
    a_0 < a_1 < ... < a_d carrying nonzero coefficients.  Corner k sits at
    x_k = sum of the horizontal steps among the first 2k and
    y_k = g - a_{2k} + x_k, which places the stair between (0, g) and (g, 0).

    Raises ``LSpaceFormError`` when the polynomial is not of L-space form.
    """
    violation = lspace_form_check(poly)
    if violation is not None:
        raise LSpaceFormError(violation)
    exponents = poly.support
    steps = tuple(b - a for a, b in zip(exponents, exponents[1:]))
    genus = exponents[-1] // 2
    corners = []
    x = 0
    for k in range(0, len(exponents), 2):
        if k:
            x += steps[k - 2]
        corners.append((x, genus - exponents[k] + x))
    return Staircase(steps=steps, genus=genus, corners=tuple(corners))
