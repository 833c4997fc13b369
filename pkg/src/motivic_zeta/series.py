"""Truncated power series in t over the symbolic ring, and rational forms.

Denominators are kept factored as products of ``(1 - L^a t^b)``.  Expanding a
rational form divides by one factor at a time with the recursion
``g_k = f_k + L^a g_{k-b}``; clearing multiplies factor by factor.  Neither
direction ever loses exactness below the stated precision.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import NamedTuple

from .errors import InvalidInput, NonUnitConstantTerm, NotPolynomialWithinPrecision
from .ring import ONE, ZERO, RingElement, Scalar, elements


class DenominatorFactor(NamedTuple):
    """The factor ``1 - L^a t^b``."""

    a: int
    b: int

    @classmethod
    def make(cls, a: int, b: int) -> "DenominatorFactor":
        if a < 0 or b < 1:
            raise InvalidInput(f"invalid denominator factor (a={a}, b={b})")
        return cls(int(a), int(b))


def _factors(factors: Iterable) -> tuple[DenominatorFactor, ...]:
    return tuple(sorted(DenominatorFactor.make(*f) for f in factors))


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_{N-1} t^{N-1} + O(t^N)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        self.coeffs = elements(coeffs)
        if not self.coeffs:
            raise InvalidInput("a truncated series needs precision >= 1")

    @classmethod
    def from_polynomial(cls, coeffs: Sequence[Scalar], precision: int) -> "TruncatedSeries":
        cs = list(elements(coeffs[:precision]))
        return cls(cs + [ZERO] * (precision - len(cs)))

    @classmethod
    def one(cls, precision: int) -> "TruncatedSeries":
        return cls.from_polynomial([ONE], precision)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> RingElement:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, precision: int) -> "TruncatedSeries":
        if precision > self.precision:
            raise InvalidInput("cannot raise the precision of a truncated series")
        return TruncatedSeries(self.coeffs[:precision])

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedSeries([{body}])"

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.precision, other.precision)
        return TruncatedSeries(self.coeffs[k] + other.coeffs[k] for k in range(n))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.precision, other.precision)
        return TruncatedSeries(self.coeffs[k] - other.coeffs[k] for k in range(n))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-c for c in self.coeffs)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            c = RingElement.coerce(other)
            return TruncatedSeries(c * x for x in self.coeffs)
        n = min(self.precision, other.precision)
        out = []
        for k in range(n):
            acc = ZERO
            for i in range(k + 1):
                a, b = self.coeffs[i], other.coeffs[k - i]
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.constant_term() not in (1, -1):
            raise NonUnitConstantTerm(f"constant term {c0} is not +-1")
        u = c0.constant_term()
        g = [RingElement.const(u)]
        for k in range(1, self.precision):
            acc = ZERO
            for i in range(1, k + 1):
                if self.coeffs[i]:
                    acc = acc + self.coeffs[i] * g[k - i]
            g.append(acc * (-u))
        return TruncatedSeries(g)

    def times_factor(self, f: DenominatorFactor) -> "TruncatedSeries":
        """Multiply by ``1 - L^a t^b``; exact to the same precision."""
        la = RingElement.lefschetz(f.a)
        return TruncatedSeries(
            c - la * self.coeffs[k - f.b] if k >= f.b else c
            for k, c in enumerate(self.coeffs)
        )

    def over_factor(self, f: DenominatorFactor) -> "TruncatedSeries":
        """Divide by ``1 - L^a t^b``; exact to the same precision."""
        la = RingElement.lefschetz(f.a)
        out: list[RingElement] = []
        for k, c in enumerate(self.coeffs):
            out.append(c + la * out[k - f.b] if k >= f.b else c)
        return TruncatedSeries(out)

    def count_specialize(self, q: int, assignment=None) -> list[int]:
        return [c.count_specialize(q, assignment) for c in self.coeffs]


def series_arithmetic(f: TruncatedSeries, g: TruncatedSeries, op: str) -> TruncatedSeries:
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    raise InvalidInput(f"unknown series operation {op!r}")


def series_inverse(f: TruncatedSeries) -> TruncatedSeries:
    return f.inverse()


def geometric(ratio: Scalar, precision: int) -> TruncatedSeries:
    """1 + r t + r^2 t^2 + ... = 1 / (1 - r t)."""
    r = RingElement.coerce(ratio)
    out = [ONE]
    for _ in range(precision - 1):
        out.append(out[-1] * r)
    return TruncatedSeries(out)


def _trim(coeffs: Sequence[RingElement]) -> tuple[RingElement, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1].is_zero():
        end -= 1
    return tuple(coeffs[:end])


@dataclass(frozen=True)
class RationalForm:
    """numerator(t) / prod (1 - L^a t^b), with numerator constant term 1."""

    numerator: tuple[RingElement, ...]
    denominator: tuple[DenominatorFactor, ...]

    def __init__(self, numerator: Sequence[Scalar], denominator: Iterable = ()):
        num = _trim(elements(numerator))
        if not num or num[0] != ONE:
            raise InvalidInput("numerator must have constant term 1")
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", _factors(denominator))

    @property
    def degree(self) -> int:
        return len(self.numerator) - 1

    @property
    def denominator_degree(self) -> int:
        return sum(f.b for f in self.denominator)

    def expand(self, precision: int) -> TruncatedSeries:
        return expand(self, precision)

    def to_json(self) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator],
            "denominator": [[f.a, f.b] for f in self.denominator],
            "numerator_degree": self.degree,
        }

    def __str__(self) -> str:
        num = " + ".join(
            f"({c})" + ("" if k == 0 else "*t" if k == 1 else f"*t^{k}")
            for k, c in enumerate(self.numerator)
            if c
        )
        den = "".join(
            "(1 - " + ("" if f.a == 0 else "L*" if f.a == 1 else f"L^{f.a}*")
            + ("t" if f.b == 1 else f"t^{f.b}") + ")"
            for f in self.denominator
        )
        return f"[{num}] / [{den or '1'}]"


def expand(r: RationalForm, precision: int) -> TruncatedSeries:
    if precision < 1:
        raise InvalidInput("precision must be at least 1")
    s = TruncatedSeries.from_polynomial(r.numerator, precision)
    for f in r.denominator:
        s = s.over_factor(f)
    return s


def clear_denominator(
    f: TruncatedSeries, factors: Iterable, max_degree: int | None = None
) -> tuple[RingElement, ...]:
    """Multiply ``f`` by the factors and return the resulting polynomial.

    The product is exact below ``f.precision``.  With ``max_degree`` given,
    every coefficient above it must vanish and the precision must exceed
    ``max_degree + sum(b)``.  Without it, the last ``max(sum(b), 1)``
    coefficients must vanish.  Returns the trimmed coefficient tuple; its
    length minus one is the degree.
    """
    fs = _factors(factors)
    tdeg = sum(x.b for x in fs)
    n = f.precision
    prod = f
    for x in fs:
        prod = prod.times_factor(x)
    if max_degree is None:
        start = max(n - max(tdeg, 1), 0)
    else:
        if n <= max_degree + tdeg:
            raise InvalidInput(
                f"precision {n} must exceed degree bound {max_degree} + denominator degree {tdeg}"
            )
        start = max_degree + 1
    for k in range(start, n):
        if not prod.coeffs[k].is_zero():
            raise NotPolynomialWithinPrecision(k, n)
    return _trim(prod.coeffs[:start])
