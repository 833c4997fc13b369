"""Class calculus for Severi-Brauer schemes.

A Severi-Brauer scheme P(E) attached to a twisted bundle of rank ``d`` whose
Brauer class has index ``r`` has class ``P * (1 + L^r + ... + L^(d-r))``.
The Brauer class itself is never modelled; callers supply ``(P, r, d)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IndexMismatch, InvalidInput, NotDivisible
from .ring import LEFSCHETZ, RingElement, Scalar, divmod_lefschetz, lefschetz_polynomial


def ladder(r: int, d: int) -> RingElement:
    """1 + L^r + L^(2r) + ... + L^(d-r)."""
    if r < 1 or d < 1:
        raise InvalidInput("index and rank must be positive")
    if d % r:
        raise IndexMismatch(f"index {r} does not divide rank {d}")
    return lefschetz_polynomial({k: 1 for k in range(0, d, r)})


@dataclass(frozen=True)
class SBClassData:
    reduced: RingElement
    r: int
    d: int

    def __post_init__(self):
        object.__setattr__(self, "reduced", RingElement.coerce(self.reduced))
        ladder(self.r, self.d)


def sb_isotypic_class(c: SBClassData) -> RingElement:
    return c.reduced * ladder(c.r, c.d)


def sb_reduced_class(full: Scalar, r: int, d: int) -> RingElement:
    """Recover P from P * ladder(r, d) by exact division in the L-grading."""
    full = RingElement.coerce(full)
    quotient, remainder = divmod_lefschetz(full, ladder(r, d))
    if not remainder.is_zero():
        raise NotDivisible(f"{full} is not a multiple of {ladder(r, d)} (remainder {remainder})")
    return quotient


def sb_filtration_class(
    c1: Scalar, r1: int, c3: Scalar, r3: int
) -> tuple[RingElement, bool]:
    """Class of P(E2) for 0 -> E1 -> E2 -> E3 -> 0 with rank(E_i) = r_i.

    Returns ``c1 + L^r1 * c3`` and whether it equals ``c3 + L^r3 * c1``; the
    two agree for genuine bundles but need not for arbitrary symbolic input.
    """
    if r1 < 1 or r3 < 1:
        raise InvalidInput("ranks must be positive")
    c1, c3 = RingElement.coerce(c1), RingElement.coerce(c3)
    left = c1 + RingElement.symbol(LEFSCHETZ, r1) * c3
    right = c3 + RingElement.symbol(LEFSCHETZ, r3) * c1
    return left, left == right
