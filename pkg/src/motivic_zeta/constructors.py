"""Motivic zeta functions of projective spaces, curves and 0-dimensional schemes.

Curve constructors take the low symmetric-power classes as input, extend the
coefficient sequence by the appropriate stable-range formula, and return the
rational form obtained by clearing the expected denominator.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import CapExceeded, InsufficientInitialData, InvalidInput, PrecisionTooSmall
from .ring import ONE, ZERO, RingElement, Scalar, elements, projective_space_class
from .series import DenominatorFactor, RationalForm, TruncatedSeries, clear_denominator

MAX_GENUS = 10
MAX_CYCLE_DEGREE = 10
MAX_PRECISION = 512


def _check_precision(precision: int, minimum: int) -> None:
    if precision > MAX_PRECISION:
        raise CapExceeded(f"precision {precision} exceeds cap {MAX_PRECISION}")
    if precision < minimum:
        raise PrecisionTooSmall(f"precision {precision} below required minimum {minimum}")


def _check_genus(g: int) -> None:
    if g < 0:
        raise InvalidInput("genus must be nonnegative")
    if g > MAX_GENUS:
        raise CapExceeded(f"genus {g} exceeds cap {MAX_GENUS}")


@dataclass(frozen=True)
class PointedCurveData:
    """Input for a curve with a rational point.

    ``low_classes`` holds [Sym^m C] for 0 <= m <= 2g-2 (empty for g = 0).
    """

    g: int
    low_classes: tuple[RingElement, ...]
    pic0: RingElement

    def __init__(self, g: int, low_classes: Sequence[Scalar], pic0: Scalar):
        object.__setattr__(self, "g", int(g))
        object.__setattr__(self, "low_classes", elements(low_classes))
        object.__setattr__(self, "pic0", RingElement.coerce(pic0))
        _check_genus(self.g)
        expected = max(2 * self.g - 1, 0)
        if len(self.low_classes) != expected:
            raise InsufficientInitialData(
                f"genus {self.g} needs {expected} low symmetric-power classes, "
                f"got {len(self.low_classes)}"
            )
        if self.low_classes and self.low_classes[0] != ONE:
            raise InvalidInput("[Sym^0 C] must be 1")


@dataclass(frozen=True)
class PointlessCurveData:
    """Input for a curve carrying a rational effective 0-cycle of degree n.

    ``sym_classes`` holds [Sym^m C] for m = 0 .. 2g+2n-2 at least; any extra
    entries are used as given and must be consistent with the recursion.
    """

    g: int
    n: int
    sym_classes: tuple[RingElement, ...]

    def __init__(self, g: int, n: int, sym_classes: Sequence[Scalar]):
        object.__setattr__(self, "g", int(g))
        object.__setattr__(self, "n", int(n))
        object.__setattr__(self, "sym_classes", elements(sym_classes))
        _check_genus(self.g)
        if self.n < 1:
            raise InvalidInput("cycle degree n must be positive")
        if self.n > MAX_CYCLE_DEGREE:
            raise CapExceeded(f"cycle degree {self.n} exceeds cap {MAX_CYCLE_DEGREE}")
        if len(self.sym_classes) < self.required_length:
            raise InsufficientInitialData(
                f"need [Sym^m C] for m <= {self.required_length - 1}, "
                f"got {len(self.sym_classes)} classes"
            )
        if self.sym_classes[0] != ONE:
            raise InvalidInput("[Sym^0 C] must be 1")

    @property
    def required_length(self) -> int:
        return 2 * self.g + 2 * self.n - 1

    @property
    def window(self) -> range:
        """Residue representatives m in [2g-1, 2g+n-2]."""
        return range(2 * self.g - 1, 2 * self.g + self.n - 1)

    def sym(self, m: int) -> RingElement:
        return self.sym_classes[m] if m >= 0 else ZERO


def zeta_projective_space(n: int) -> RationalForm:
    if n < 0:
        raise InvalidInput("dimension must be nonnegative")
    return RationalForm([ONE], [(i, 1) for i in range(n + 1)])


def pointed_curve_series(d: PointedCurveData, precision: int) -> TruncatedSeries:
    coeffs = []
    for m in range(precision):
        if m <= 2 * d.g - 2:
            coeffs.append(d.low_classes[m])
        else:
            coeffs.append(d.pic0 * projective_space_class(m - d.g))
    return TruncatedSeries(coeffs)


def zeta_pointed_curve(d: PointedCurveData, precision: int | None = None) -> RationalForm:
    bound = 2 * d.g
    if precision is None:
        precision = 2 * bound + 4
    _check_precision(precision, bound + 3)
    series = pointed_curve_series(d, precision)
    factors = [(0, 1), (1, 1)]
    numerator = clear_denominator(series, factors, max_degree=bound)
    return RationalForm(numerator, factors)


def periodic_parts(d: PointlessCurveData) -> dict[int, RingElement]:
    """P_m = [Sym^{m+n}] - L^n [Sym^m] for m in the recursion window."""
    ln = RingElement.lefschetz(d.n)
    return {m: d.sym(m + d.n) - ln * d.sym(m) for m in d.window}


def pointless_curve_series(d: PointlessCurveData, precision: int) -> TruncatedSeries:
    parts = periodic_parts(d)
    ln = RingElement.lefschetz(d.n)
    lo = d.window.start
    coeffs: list[RingElement] = []
    for k in range(precision):
        if k < len(d.sym_classes):
            coeffs.append(d.sym_classes[k])
            continue
        prev = k - d.n
        rep = lo + (prev - lo) % d.n
        coeffs.append(parts[rep] + ln * coeffs[prev])
    return TruncatedSeries(coeffs)


def zeta_pointless_curve(d: PointlessCurveData, precision: int | None = None) -> RationalForm:
    bound = 2 * d.g + 2 * d.n - 2
    if precision is None:
        precision = 2 * bound + 4
    _check_precision(precision, bound + 2 * d.n + 1)
    series = pointless_curve_series(d, precision)
    factors = [(0, d.n), (d.n, d.n)]
    numerator = clear_denominator(series, factors, max_degree=bound)
    return RationalForm(numerator, factors)


def zeta_zero_dim_counting(degrees: Iterable[int]) -> RationalForm:
    """Counting-level zeta of a finite set of closed points of the given degrees.

    Symbolically [Sym^m Spec K] is not a polynomial in L; the returned form is
    only meaningful after count_specialize.
    """
    degs = [int(x) for x in degrees]
    if any(x < 1 for x in degs):
        raise InvalidInput("closed point degrees must be positive")
    return RationalForm([ONE], [(0, x) for x in degs])


def normalization_transfer(
    z_tilde: TruncatedSeries, z_x: TruncatedSeries, z_y: TruncatedSeries
) -> TruncatedSeries:
    """Z_C = Z_tilde * Z_X / Z_Y when [C] = [C~] + [X] - [Y]."""
    return z_tilde * z_x * z_y.inverse()


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    bound: int
    attains_bound: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "attains_bound", self.degree == self.bound)


def pointed_degree_report(form: RationalForm, g: int) -> DegreeReport:
    return DegreeReport(form.degree, 2 * g)


def pointless_degree_report(form: RationalForm, g: int, n: int) -> DegreeReport:
    return DegreeReport(form.degree, 2 * g + 2 * n - 2)


__all__ = [
    "DenominatorFactor",
    "PointedCurveData",
    "PointlessCurveData",
    "zeta_projective_space",
    "zeta_pointed_curve",
    "zeta_pointless_curve",
    "zeta_zero_dim_counting",
    "normalization_transfer",
    "pointed_curve_series",
    "pointless_curve_series",
    "periodic_parts",
]
