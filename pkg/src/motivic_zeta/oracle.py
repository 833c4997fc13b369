"""Ground truth over finite fields.

Everything here works with plain integers and ``Fraction``: point counts
N_m, closed-point counts a_d, effective divisor counts b_n, and the
L-polynomial P(t) of the Weil zeta function.  Symbolic zeta functions are
checked by specialising them coefficientwise and comparing with
``P(t) / ((1 - t)(1 - q t))``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .constructors import PointedCurveData, zeta_pointed_curve
from .curves import DEFAULT_BUDGET, CurveModel, count_points
from .errors import (
    FunctionalEquationViolated,
    InconsistentCounts,
    InvalidInput,
    NotIntegral,
    WeilBoundViolated,
)
from .finite_field import prime_power
from .ring import ONE, RingElement
from .series import RationalForm


def mobius(n: int) -> int:
    result, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    return -result if n > 1 else result


def closed_point_counts(counts: Sequence[int]) -> list[int]:
    """Möbius inversion of N_m = sum_{d | m} d a_d."""
    out = []
    for d in range(1, len(counts) + 1):
        total = sum(mobius(d // e) * counts[e - 1] for e in range(1, d + 1) if d % e == 0)
        if total % d or total < 0:
            raise InconsistentCounts(f"closed point count a_{d} = {Fraction(total, d)} is not a nonnegative integer")
        out.append(total // d)
    return out


def effective_divisor_counts(closed: Sequence[int], n: int) -> int:
    """Coefficient of t^n in prod_d (1 - t^d)^(-a_d)."""
    if n > len(closed):
        raise InvalidInput(f"need closed point counts up to degree {n}, have {len(closed)}")
    coeffs = [1] + [0] * n
    for d, a in enumerate(closed[:n], start=1):
        if a == 0:
            continue
        new = [0] * (n + 1)
        for k in range(0, n // d + 1):
            w = comb(a + k - 1, k)
            for i in range(0, n + 1 - k * d):
                if coeffs[i]:
                    new[i + k * d] += w * coeffs[i]
        coeffs = new
    return coeffs[n]


def divisor_counts_by_exp(counts: Sequence[int], n: int) -> list[int]:
    """b_0 .. b_n from exp(sum N_m t^m / m), checking integrality."""
    if n > len(counts):
        raise InvalidInput(f"need point counts up to N_{n}, have {len(counts)}")
    b = _exp_of_counts(counts, n)
    if any(x.denominator != 1 for x in b):
        raise NotIntegral("divisor counts are not integers")
    return [int(x) for x in b]


@dataclass(frozen=True)
class ZetaProfile:
    q: int
    g: int
    lpoly: tuple[int, ...]

    def to_json(self) -> dict:
        return {"q": self.q, "g": self.g, "lpoly": list(self.lpoly)}


def _check_prime_power(q: int) -> None:
    if prime_power(q) is None:
        raise InvalidInput(f"{q} is not a prime power")


def counts_from_lpoly(q: int, lpoly: Sequence[int], count: int) -> list[int]:
    """N_1 .. N_count from P(t) = prod (1 - alpha_i t) via Newton's identities."""
    elem = [(-1) ** k * c for k, c in enumerate(lpoly)]  # e_k of the alpha_i
    power_sums: list[int] = []
    for m in range(1, count + 1):
        s = m * elem[m] * (-1) ** (m - 1) if m < len(elem) else 0
        for k in range(1, m):
            if k < len(elem):
                s += (-1) ** (k - 1) * elem[k] * power_sums[m - k - 1]
        power_sums.append(s)
    return [q**m + 1 - s for m, s in zip(range(1, count + 1), power_sums)]


def weil_zeta_from_counts(counts: Sequence[int], q: int, g: int) -> ZetaProfile:
    """Extract the L-polynomial from N_1 .. N_B (B >= max(2g, 1))."""
    _check_prime_power(q)
    if g < 0:
        raise InvalidInput("genus must be nonnegative")
    if len(counts) < max(2 * g, 1):
        raise InvalidInput(f"genus {g} needs at least {max(2 * g, 1)} point counts")
    dev = counts[0] - (q + 1)
    if dev * dev > 4 * g * g * q:
        raise WeilBoundViolated(f"|N_1 - (q+1)| = {abs(dev)} exceeds 2g*sqrt(q) for g={g}, q={q}")
    top = 2 * g
    b = _exp_of_counts(counts, top)
    # P(t) = (1 - t)(1 - q t) * zeta(t), truncated at degree 2g
    p = []
    for k in range(top + 1):
        v = b[k]
        if k >= 1:
            v -= (q + 1) * b[k - 1]
        if k >= 2:
            v += q * b[k - 2]
        p.append(v)
    if any(x.denominator != 1 for x in p):
        raise NotIntegral(f"L-polynomial coefficients {[str(x) for x in p]} are not integers")
    lpoly = tuple(int(x) for x in p)
    for i in range(g + 1):
        if lpoly[top - i] != q ** (g - i) * lpoly[i]:
            raise FunctionalEquationViolated(
                f"p_{top - i} = {lpoly[top - i]} but q^{g - i} p_{i} = {q ** (g - i) * lpoly[i]}"
            )
    if len(counts) > top:
        predicted = counts_from_lpoly(q, lpoly, len(counts))
        for m, (got, want) in enumerate(zip(counts, predicted), start=1):
            if got != want:
                raise InconsistentCounts(f"N_{m} = {got} but the L-polynomial predicts {want}")
    return ZetaProfile(q, g, lpoly)


def _exp_of_counts(counts: Sequence[int], n: int) -> list[Fraction]:
    # b' = b * (sum N_m t^{m-1}) gives k b_k = sum_{m=1}^k N_m b_{k-m}
    b = [Fraction(1)]
    for k in range(1, n + 1):
        b.append(sum(counts[m - 1] * b[k - m] for m in range(1, k + 1)) / k)
    return b


def pic0_order(profile: ZetaProfile) -> int:
    """Class number h = P(1)."""
    return sum(profile.lpoly)


def weil_zeta_series(profile: ZetaProfile, precision: int) -> list[int]:
    """Coefficients of P(t) / ((1 - t)(1 - q t)) below t^precision."""
    out = []
    for k in range(precision):
        v = profile.lpoly[k] if k < len(profile.lpoly) else 0
        if k >= 1:
            v += (profile.q + 1) * out[k - 1]
        if k >= 2:
            v -= profile.q * out[k - 2]
        out.append(v)
    return out


@dataclass
class VerificationReport:
    verdict: str
    checked_coefficients: int
    first_mismatch: int | None
    specialized: list[int] = field(default_factory=list)
    expected: list[int] = field(default_factory=list)

    @property
    def agrees(self) -> bool:
        return self.verdict == "agree"

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "checked_coefficients": self.checked_coefficients,
            "first_mismatch": self.first_mismatch,
            "specialized": self.specialized,
            "expected": self.expected,
        }


def verify_specialization(
    form: RationalForm,
    assignment: Mapping[str, int],
    q: int,
    profile: ZetaProfile,
    precision: int,
) -> VerificationReport:
    """Compare count_specialize(form) with the Weil zeta of ``profile``."""
    _check_prime_power(q)
    if profile.q != q:
        raise InvalidInput(f"profile is over F_{profile.q}, not F_{q}")
    got = form.expand(precision).count_specialize(q, assignment)
    want = weil_zeta_series(profile, precision)
    mismatch = next((k for k, (a, b) in enumerate(zip(got, want)) if a != b), None)
    return VerificationReport(
        "agree" if mismatch is None else "mismatch", precision, mismatch, got, want
    )


# curve pipeline ---------------------------------------------------------


def curve_counts(
    model: CurveModel, count: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> list[int]:
    return [count_points(model, m, budget=budget, jobs=jobs) for m in range(1, count + 1)]


def curve_profile(
    model: CurveModel, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> tuple[list[int], ZetaProfile]:
    counts = curve_counts(model, max(2 * model.genus, 1), budget, jobs)
    return counts, weil_zeta_from_counts(counts, model.q, model.genus)


def symbolic_pointed_data(g: int) -> PointedCurveData:
    """Pointed-curve input with symbols Sym1 .. Sym{2g-2} and Pic0."""
    low = [ONE] + [RingElement.symbol(f"Sym{m}") for m in range(1, 2 * g - 1)]
    pic0 = ONE if g == 0 else RingElement.symbol("Pic0")
    return PointedCurveData(g, low if g > 0 else [], pic0)


def curve_assignment(counts: Sequence[int], profile: ZetaProfile) -> dict[str, int]:
    """Integer values for Sym_m (divisor counts) and Pic0 (class number)."""
    g = profile.g
    closed = closed_point_counts(counts)
    values = {f"Sym{m}": effective_divisor_counts(closed, m) for m in range(1, 2 * g - 1)}
    if g > 0:
        values["Pic0"] = pic0_order(profile)
    return values


@dataclass
class CurveVerification:
    counts: list[int]
    profile: ZetaProfile
    form: RationalForm
    assignment: dict[str, int]
    report: VerificationReport


def verify_curve(
    model: CurveModel, precision: int, budget: int = DEFAULT_BUDGET, jobs: int = 1
) -> CurveVerification:
    """Full pipeline: enumerate, extract P(t), build the symbolic zeta, compare."""
    counts, profile = curve_profile(model, budget, jobs)
    form = zeta_pointed_curve(symbolic_pointed_data(profile.g))
    assignment = curve_assignment(counts, profile)
    report = verify_specialization(form, assignment, profile.q, profile, precision)
    return CurveVerification(counts, profile, form, assignment, report)

