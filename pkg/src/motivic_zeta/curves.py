"""Curve models over small finite fields and brute-force point counts."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BudgetExceeded, InvalidInput
from .finite_field import BASE_FIELD_CAP, FIELD_TABLE_CAP, FiniteField, cached_field

# Maximum number of candidate points examined by one count (q^{2m} for plane
# models, q^m for hyperelliptic ones).
DEFAULT_BUDGET = 10**8
# Affine grid cells evaluated per numpy batch.
_BATCH_CELLS = 1 << 20


@dataclass(frozen=True)
class PlaneCurve:
    """Zero locus of a homogeneous F(x, y, z) in P^2 over F_q.

    ``terms`` are ``(coefficient, (i, j, k))`` with coefficients already
    encoded as elements of the base field.  Smoothness is not checked.
    """

    p: int
    e: int
    terms: tuple[tuple[int, tuple[int, int, int]], ...]

    kind = "plane"

    @property
    def field(self) -> FiniteField:
        return cached_field(self.p, self.e)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def degree(self) -> int:
        return sum(self.terms[0][1])

    @property
    def genus(self) -> int:
        d = self.degree
        return (d - 1) * (d - 2) // 2


@dataclass(frozen=True)
class HyperellipticCurve:
    """y^2 = f(x) with deg f = 2g+1 odd; one point at infinity."""

    p: int
    e: int
    f: tuple[int, ...]

    kind = "hyperelliptic"

    @property
    def field(self) -> FiniteField:
        return cached_field(self.p, self.e)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def genus(self) -> int:
        return (len(self.f) - 2) // 2


CurveModel = PlaneCurve | HyperellipticCurve


def _poly_trim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_gcd(fld: FiniteField, a: list[int], b: list[int]) -> list[int]:
    a, b = _poly_trim(a[:]), _poly_trim(b[:])
    while b:
        inv = fld.inv(b[-1])
        while len(a) >= len(b) and a:
            c = fld.mul(a[-1], inv)
            shift = len(a) - len(b)
            for j, bj in enumerate(b):
                a[shift + j] = fld.sub(a[shift + j], fld.mul(c, bj))
            _poly_trim(a)
        a, b = b, a
    return a


def is_squarefree(fld: FiniteField, f: list[int]) -> bool:
    deriv = [fld.mul(fld.from_int(i % fld.p), c) for i, c in enumerate(f)][1:]
    if not any(deriv):
        return False
    return len(_poly_gcd(fld, f, deriv)) == 1


def model_from_json(data: dict) -> CurveModel:
    """Build a model from its JSON record (see the CLI schema)."""
    p, e = int(data["p"]), int(data.get("e", 1))
    if p**e > BASE_FIELD_CAP:
        raise InvalidInput(f"base field size {p**e} exceeds cap {BASE_FIELD_CAP}")
    fld = cached_field(p, e)
    kind = data["kind"]
    if kind == "plane":
        merged: dict[tuple[int, int, int], int] = {}
        for coef, exps in data["poly"]:
            exps = tuple(int(x) for x in exps)
            if len(exps) != 3 or min(exps) < 0:
                raise InvalidInput(f"bad exponent triple {exps}")
            merged[exps] = fld.add(merged.get(exps, 0), fld.from_int(int(coef)))
        terms = tuple(sorted((c, m) for m, c in merged.items() if c))
        if not terms:
            raise InvalidInput("plane curve polynomial is zero")
        degrees = {sum(m) for _, m in terms}
        if len(degrees) != 1:
            raise InvalidInput("plane curve polynomial is not homogeneous")
        model: CurveModel = PlaneCurve(p, e, terms)
    elif kind == "hyperelliptic":
        if p == 2:
            raise InvalidInput("hyperelliptic models require odd characteristic")
        f = _poly_trim([fld.from_int(int(c)) for c in data["f"]])
        if len(f) % 2 or len(f) < 2:
            raise InvalidInput("f must have odd degree")
        if not is_squarefree(fld, f):
            raise InvalidInput("f is not squarefree")
        model = HyperellipticCurve(p, e, tuple(f))
    else:
        raise InvalidInput(f"unknown curve kind {kind!r}")
    if "genus" in data and int(data["genus"]) != model.genus:
        raise InvalidInput(f"declared genus {data['genus']} != degree formula {model.genus}")
    return model


def model_to_json(model: CurveModel) -> dict:
    if isinstance(model, PlaneCurve):
        return {
            "kind": "plane",
            "p": model.p,
            "e": model.e,
            "poly": [[c, list(m)] for c, m in model.terms],
        }
    return {"kind": "hyperelliptic", "p": model.p, "e": model.e, "f": list(model.f)}


# enumeration ------------------------------------------------------------


@lru_cache(maxsize=32)
def _embedding(p: int, e: int, m: int) -> np.ndarray:
    return cached_field(p, e * m).embedding_from(cached_field(p, e))


def _extension(model: CurveModel, m: int) -> tuple[FiniteField, np.ndarray]:
    size = model.q**m
    if size > FIELD_TABLE_CAP:
        raise BudgetExceeded(f"F_{size} exceeds the field table cap {FIELD_TABLE_CAP}")
    return cached_field(model.p, model.e * m), _embedding(model.p, model.e, m)


def _eval_plane(fld: FiniteField, terms, xs, ys, z_is_one: bool) -> np.ndarray:
    """Evaluate F at (x, y, 1) or (x, y, 0) on broadcast arrays."""
    acc = np.zeros(np.broadcast(xs, ys).shape, dtype=np.int64)
    for c, (i, j, k) in terms:
        if not z_is_one and k > 0:
            continue
        v = fld.vmul(fld.vpow(xs, i), fld.vpow(ys, j))
        acc = fld.vadd(acc, fld.vmul(np.full_like(v, c), v))
    return acc


def _plane_affine_chunk(model: PlaneCurve, m: int, lo: int, hi: int) -> int:
    ext, emb = _extension(model, m)
    terms = [(int(emb[c]), mono) for c, mono in model.terms]
    ys = np.arange(ext.q, dtype=np.int64)[None, :]
    step = max(1, _BATCH_CELLS // ext.q)
    total = 0
    for start in range(lo, hi, step):
        xs = np.arange(start, min(hi, start + step), dtype=np.int64)[:, None]
        total += int(np.count_nonzero(_eval_plane(ext, terms, xs, ys, True) == 0))
    return total


def _hyper_chunk(model: HyperellipticCurve, m: int, lo: int, hi: int) -> int:
    ext, emb = _extension(model, m)
    coeffs = [int(emb[c]) for c in model.f]
    total = 0
    for start in range(lo, hi, _BATCH_CELLS):
        xs = np.arange(start, min(hi, start + _BATCH_CELLS), dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in reversed(coeffs):
            acc = ext.vadd(ext.vmul(acc, xs), np.full_like(xs, c))
        total += int(np.count_nonzero(acc == 0)) + 2 * int(np.count_nonzero(ext.vis_square(acc)))
    return total


def _partitions(n: int, jobs: int) -> list[tuple[int, int]]:
    jobs = max(1, min(jobs, n))
    bounds = [n * i // jobs for i in range(jobs + 1)]
    return [(bounds[i], bounds[i + 1]) for i in range(jobs) if bounds[i] < bounds[i + 1]]


def count_points(
    model: CurveModel, m: int = 1, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> int:
    """Exact number of F_{q^m}-points by exhaustive enumeration."""
    if m < 1:
        raise InvalidInput("extension degree m must be positive")
    size = model.q**m
    cost = size * size if isinstance(model, PlaneCurve) else size
    if cost > budget:
        raise BudgetExceeded(f"enumeration cost {cost} exceeds budget {budget}")
    worker = _plane_affine_chunk if isinstance(model, PlaneCurve) else _hyper_chunk
    parts = _partitions(size, jobs)
    if len(parts) > 1:
        with ProcessPoolExecutor(max_workers=len(parts)) as pool:
            futures = [pool.submit(worker, model, m, lo, hi) for lo, hi in parts]
            total = sum(f.result() for f in futures)
    else:
        total = worker(model, m, 0, size)

    if isinstance(model, HyperellipticCurve):
        return total + 1
    ext, emb = _extension(model, m)
    terms = [(int(emb[c]), mono) for c, mono in model.terms]
    xs = np.arange(ext.q, dtype=np.int64)
    total += int(np.count_nonzero(_eval_plane(ext, terms, xs, np.ones_like(xs), False) == 0))
    # the point (1 : 0 : 0)
    acc = 0
    for c, (_, j, k) in terms:
        if j == 0 and k == 0:
            acc = ext.add(acc, c)
    return total + (acc == 0)
