"""Small finite fields with table-driven arithmetic.

Elements of F_{p^e} are encoded as integers ``sum c_i p^i`` where
``c_0 + c_1 x + ...`` is the residue modulo the field's modulus.  The prime
subfield is therefore ``0 .. p-1``.  Multiplication goes through discrete
log / antilog tables built from the smallest primitive element, so every
operation also has a vectorised numpy form used by point enumeration.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded, InvalidInput

# Upper bound on the size of any field we build tables for.
FIELD_TABLE_CAP = 1 << 22
BASE_FIELD_CAP = 2048


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, e) with q = p^e, or None."""
    if q < 2:
        return None
    ps = prime_factors(q)
    if len(ps) != 1:
        return None
    p, e = ps[0], 0
    while q > 1:
        q //= p
        e += 1
    return p, e


def _digits(a: int, p: int, e: int) -> list[int]:
    out = []
    for _ in range(e):
        a, r = divmod(a, p)
        out.append(r)
    return out


def _poly_rem(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over F_p (coefficients low-to-high)."""
    num = num[:]
    dd = len(den) - 1
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k] % p
        if c:
            for j in range(dd + 1):
                num[k - dd + j] = (num[k - dd + j] - c * den[j]) % p
    return [c % p for c in num[:dd]]


def is_irreducible(modulus: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    e = len(modulus) - 1
    for d in range(1, e // 2 + 1):
        for v in range(p**d):
            cand = _digits(v, p, d) + [1]
            if not any(_poly_rem(modulus, cand, p)):
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Monic irreducible of degree e whose low coefficients, read as a base-p
    integer (low-to-high), are smallest."""
    if e == 1:
        return (0, 1)
    for v in range(p**e):
        cand = _digits(v, p, e) + [1]
        if cand[0] and is_irreducible(cand, p):
            return tuple(cand)
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """F_q with q = p^e and table-driven arithmetic."""

    def __init__(self, p: int, e: int = 1):
        if not is_prime(p):
            raise InvalidInput(f"{p} is not prime")
        if e < 1:
            raise InvalidInput("extension degree must be positive")
        self.p = p
        self.e = e
        self.q = p**e
        if self.q > FIELD_TABLE_CAP:
            raise BudgetExceeded(f"field of size {self.q} exceeds table cap {FIELD_TABLE_CAP}")
        self.modulus = smallest_irreducible(p, e)
        self._build_tables()

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, e={self.e})"

    def __reduce__(self):
        return (cached_field, (self.p, self.e))

    # table construction -------------------------------------------------

    def _mul_slow(self, a: int, b: int) -> int:
        p, e = self.p, self.e
        da, db = _digits(a, p, e), _digits(b, p, e)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        rem = _poly_rem(prod, list(self.modulus), p) if e > 1 else [prod[0] % p]
        return sum(c * p**i for i, c in enumerate(rem))

    def _build_tables(self) -> None:
        q = self.q
        powers = np.array([self.p**i for i in range(self.e)], dtype=np.int64)
        elems = np.arange(q, dtype=np.int64)
        self.digit_table = (elems[:, None] // powers[None, :]) % self.p
        self._powers = powers
        if q == 2:
            self.exp = np.array([1], dtype=np.int64)
        else:
            self.exp = self._primitive_powers()
        self.log = np.zeros(q, dtype=np.int64)
        self.log[self.exp] = np.arange(q - 1, dtype=np.int64)
        self.generator = int(self.exp[1 % (q - 1)]) if q > 2 else 1

    def _primitive_powers(self) -> np.ndarray:
        q = self.q
        factors = prime_factors(q - 1)
        for g in range(2, q):
            if all(self._pow_slow(g, (q - 1) // ell) != 1 for ell in factors):
                out = np.empty(q - 1, dtype=np.int64)
                x = 1
                if self.e == 1:
                    for k in range(q - 1):
                        out[k] = x
                        x = x * g % self.p
                else:
                    for k in range(q - 1):
                        out[k] = x
                        x = self._mul_slow(x, g)
                return out
        raise AssertionError("no primitive element found")

    def _pow_slow(self, a: int, k: int) -> int:
        result, base = 1, a
        while k:
            if k & 1:
                result = self._mul_slow(result, base)
            base = self._mul_slow(base, base)
            k >>= 1
        return result

    # scalar arithmetic --------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        d = (self.digit_table[a] + self.digit_table[b]) % self.p
        return int(d @ self._powers)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        d = (-self.digit_table[a]) % self.p
        return int(d @ self._powers)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return int(self.exp[(-self.log[a]) % (self.q - 1)])

    def pow(self, a: int, k: int) -> int:
        if k == 0:
            return 1
        if a == 0:
            return 0
        return int(self.exp[(self.log[a] * k) % (self.q - 1)])

    def from_int(self, c: int) -> int:
        """Interpret an integer coefficient as a field element.

        Over a prime field this is reduction mod p.  Over F_{p^e}, values in
        ``0 .. q-1`` are encoded elements and negative values denote the
        additive inverse of the encoded element ``-c``.
        """
        if self.e == 1:
            return c % self.p
        if c >= 0:
            if c >= self.q:
                raise InvalidInput(f"coefficient {c} is not an element of F_{self.q}")
            return c
        return self.neg(self.from_int(-c))

    # vectorised arithmetic ----------------------------------------------

    def vadd(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.e == 1:
            return (a + b) % self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for pw in self._powers:
            out += ((a // pw + b // pw) % self.p) * pw
        return out

    def vmul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        res = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, res)

    def vpow(self, a: np.ndarray, k: int) -> np.ndarray:
        if k == 0:
            return np.ones_like(a)
        res = self.exp[(self.log[a] * k) % (self.q - 1)]
        return np.where(a == 0, 0, res)

    def vis_square(self, a: np.ndarray) -> np.ndarray:
        """Nonzero squares (odd characteristic)."""
        return (a != 0) & (self.log[a] % 2 == 0)

    # embeddings ---------------------------------------------------------

    def embedding_from(self, sub: "FiniteField") -> np.ndarray:
        """Array mapping encoded elements of ``sub`` into this field.

        Uses the smallest root (by encoding) of sub's modulus.
        """
        if sub.p != self.p or self.e % sub.e:
            raise InvalidInput(f"{sub} does not embed in {self}")
        if sub.e == 1:
            return np.arange(sub.q, dtype=np.int64)
        root = None
        for alpha in range(1, self.q):
            acc = 0
            for c in reversed(sub.modulus):
                acc = self.add(self.mul(acc, alpha), c)
            if acc == 0:
                root = alpha
                break
        assert root is not None
        alpha_pows = [self.pow(root, i) for i in range(sub.e)]
        out = np.zeros(sub.q, dtype=np.int64)
        for a in range(sub.q):
            acc = 0
            for i, c in enumerate(_digits(a, sub.p, sub.e)):
                for _ in range(c):
                    acc = self.add(acc, alpha_pows[i])
            out[a] = acc
        return out


@lru_cache(maxsize=16)
def cached_field(p: int, e: int = 1) -> FiniteField:
    return FiniteField(p, e)
