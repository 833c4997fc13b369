"""Exact arithmetic in the free commutative ring Z[L, s1, s2, ...].

``L`` is the Lefschetz class (the class of the affine line); every other
symbol stands for a named class such as ``Pic0`` or ``X``.  The ring is
treated as free: two elements are equal iff their term maps agree, which is
symbolic equality, not equality of classes of varieties.

Elements are immutable and canonical.  A monomial is a tuple of
``(symbol, exponent)`` pairs sorted by symbol name; the empty tuple is the
constant monomial.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from typing import Union

from .errors import MissingSymbol, ParseError, ReservedSymbol, InvalidInput

LEFSCHETZ = "L"

Monomial = tuple[tuple[str, int], ...]
Scalar = Union[int, "RingElement"]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    exps = dict(m1)
    for s, e in m2:
        exps[s] = exps.get(s, 0) + e
    return tuple(sorted(exps.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _term_key(m: Monomial):
    return (_mono_degree(m), m)


class RingElement:
    """An integer polynomial in L and named class symbols."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: dict[Monomial, int] = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[mono] = int(c)
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> "RingElement":
        return cls({(): c})

    @classmethod
    def symbol(cls, name: str, exponent: int = 1) -> "RingElement":
        if not name or not _IDENT.fullmatch(name):
            raise InvalidInput(f"invalid symbol name {name!r}")
        if exponent < 0:
            raise InvalidInput("negative exponents are not supported")
        if exponent == 0:
            return cls.const(1)
        return cls({((name, exponent),): 1})

    @classmethod
    def lefschetz(cls, exponent: int = 1) -> "RingElement":
        return cls.symbol(LEFSCHETZ, exponent)

    @classmethod
    def coerce(cls, x: Scalar) -> "RingElement":
        if isinstance(x, RingElement):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return cls.const(x)
        if isinstance(x, str):
            return parse(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RingElement")

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items(), key=lambda kv: _term_key(kv[0]))

    def symbols(self) -> set[str]:
        return {s for mono in self._terms for s, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((), 0)

    def degree_in(self, symbol: str) -> int:
        """Highest exponent of ``symbol``; -1 for the zero element."""
        if not self._terms:
            return -1
        return max(dict(mono).get(symbol, 0) for mono in self._terms)

    def coefficients_in(self, symbol: str) -> dict[int, "RingElement"]:
        """Split as sum_k c_k * symbol^k with c_k free of ``symbol``."""
        parts: dict[int, dict[Monomial, int]] = {}
        for mono, c in self._terms.items():
            exps = dict(mono)
            k = exps.pop(symbol, 0)
            parts.setdefault(k, {})[tuple(sorted(exps.items()))] = c
        return {k: RingElement(v) for k, v in parts.items()}

    # arithmetic ---------------------------------------------------------

    def __add__(self, other: Scalar) -> "RingElement":
        try:
            other = RingElement.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for mono, c in other._terms.items():
            out[mono] = out.get(mono, 0) + c
        return RingElement(out)

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        return RingElement({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: Scalar) -> "RingElement":
        try:
            other = RingElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "RingElement":
        return RingElement.coerce(other) - self

    def __mul__(self, other: Scalar) -> "RingElement":
        try:
            other = RingElement.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return RingElement(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        if not isinstance(k, int) or k < 0:
            raise InvalidInput("only nonnegative integer powers are supported")
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = RingElement.const(other)
        if not isinstance(other, RingElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # homomorphisms ------------------------------------------------------

    def substitute(self, assignment: Mapping[str, Scalar]) -> "RingElement":
        """Ring homomorphism fixing every symbol not listed in ``assignment``.

        ``L`` may be sent to another non-constant element or to +-1, but not to
        any other constant; use :meth:`count_specialize` for that.
        """
        images = {s: RingElement.coerce(v) for s, v in assignment.items()}
        if LEFSCHETZ in images:
            img = images[LEFSCHETZ]
            if img.is_constant() and img.constant_term() not in (1, -1):
                raise ReservedSymbol(
                    "L may only be specialised to an integer through count_specialize"
                )
        powers: dict[tuple[str, int], RingElement] = {}
        result = ZERO
        for mono, c in self._terms.items():
            term = RingElement.const(c)
            for s, e in mono:
                if s in images:
                    key = (s, e)
                    if key not in powers:
                        powers[key] = images[s] ** e
                    term = term * powers[key]
                else:
                    term = term * RingElement.symbol(s, e)
            result = result + term
        return result

    def count_specialize(self, q: int, assignment: Mapping[str, int] | None = None) -> int:
        """Evaluate with L -> q and every other symbol through ``assignment``."""
        values = dict(assignment or {})
        if LEFSCHETZ in values and values[LEFSCHETZ] != q:
            raise InvalidInput(f"assignment maps L to {values[LEFSCHETZ]}, expected q={q}")
        values[LEFSCHETZ] = q
        total = 0
        for mono, c in self._terms.items():
            v = c
            for s, e in mono:
                if s not in values:
                    raise MissingSymbol(s)
                v *= int(values[s]) ** e
            total += v
        return total

    # text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self.items():
            if not mono:
                parts.append(str(c))
                continue
            factors = "*".join(s if e == 1 else f"{s}^{e}" for s, e in mono)
            if c == 1:
                parts.append(factors)
            elif c == -1:
                parts.append("-" + factors)
            else:
                parts.append(f"{c}*{factors}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"RingElement({str(self)!r})"


ZERO = RingElement()
ONE = RingElement.const(1)
L = RingElement.lefschetz()


def projective_space_class(n: int) -> RingElement:
    """[P^n] = 1 + L + ... + L^n."""
    if n < 0:
        raise InvalidInput("projective space dimension must be nonnegative")
    return RingElement({(((LEFSCHETZ, i),) if i else ()): 1 for i in range(n + 1)})


def lefschetz_polynomial(coeffs: Mapping[int, int]) -> RingElement:
    """Build sum_i c_i L^i from an exponent -> coefficient map."""
    return RingElement({(((LEFSCHETZ, i),) if i else ()): c for i, c in coeffs.items()})


def ring_arithmetic(a: Scalar, b: Scalar, op: str) -> RingElement:
    a, b = RingElement.coerce(a), RingElement.coerce(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise InvalidInput(f"unknown ring operation {op!r}")


def substitute(e: Scalar, assignment: Mapping[str, Scalar]) -> RingElement:
    return RingElement.coerce(e).substitute(assignment)


def count_specialize(e: Scalar, q: int, assignment: Mapping[str, int] | None = None) -> int:
    return RingElement.coerce(e).count_specialize(q, assignment)


def divmod_lefschetz(dividend: RingElement, divisor: RingElement) -> tuple[RingElement, RingElement]:
    """Long division in the L-grading, other symbols acting as coefficients.

    ``divisor`` must involve only L and have leading coefficient +-1, so each
    elimination step is exact over Z[other symbols].
    """
    if divisor.is_zero():
        raise ZeroDivisionError("division by zero ring element")
    if divisor.symbols() - {LEFSCHETZ}:
        raise InvalidInput("divisor must be a polynomial in L alone")
    dcoeffs = {k: v.constant_term() for k, v in divisor.coefficients_in(LEFSCHETZ).items()}
    top = max(dcoeffs)
    lead = dcoeffs[top]
    if lead not in (1, -1):
        raise InvalidInput("divisor must have unit leading coefficient in L")
    rem = dividend.coefficients_in(LEFSCHETZ)
    quot: dict[int, RingElement] = {}
    while rem:
        k = max(rem)
        if k < top:
            break
        c = rem.pop(k) * lead
        if c.is_zero():
            continue
        shift = k - top
        quot[shift] = quot.get(shift, ZERO) + c
        for j, dj in dcoeffs.items():
            if j == top:
                continue
            idx = shift + j
            new = rem.get(idx, ZERO) - c * dj
            if new.is_zero():
                rem.pop(idx, None)
            else:
                rem[idx] = new
    q = sum((c * RingElement.lefschetz(k) for k, c in quot.items()), ZERO)
    r = sum((c * RingElement.lefschetz(k) for k, c in rem.items()), ZERO)
    return q, r


# parsing ----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character at position {pos} in {text!r}")
        num, ident, op = m.groups()
        if num is not None:
            tokens.append(("int", num))
        elif ident is not None:
            tokens.append(("ident", ident))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, value):
        kind, v = self.take()
        if v != value:
            raise ParseError(f"expected {value!r} in {self.text!r}")

    def expr(self) -> RingElement:
        result = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> RingElement:
        result = self.unary()
        while self.peek() == ("op", "*"):
            self.take()
            result = result * self.unary()
        return result

    def unary(self) -> RingElement:
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> RingElement:
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, v = self.take()
            if kind != "int":
                raise ParseError(f"exponent must be a nonnegative integer in {self.text!r}")
            return base ** int(v)
        return base

    def atom(self) -> RingElement:
        kind, v = self.take()
        if kind == "int":
            return RingElement.const(int(v))
        if kind == "ident":
            return RingElement.symbol(v)
        if v == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected token {v!r} in {self.text!r}")


def parse(text: str) -> RingElement:
    """Parse a ring element; accepts the canonical text form and common variants."""
    p = _Parser(text)
    if not p.tokens:
        raise ParseError("empty ring element")
    result = p.expr()
    if p.i != len(p.tokens):
        raise ParseError(f"trailing input in {text!r}")
    return result


def elements(items: Iterable[Scalar]) -> tuple[RingElement, ...]:
    return tuple(RingElement.coerce(x) for x in items)
