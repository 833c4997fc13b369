"""Structured error types.

Every domain failure raised by the library derives from :class:`MotivicError`
and carries a stable ``name`` (the class name) that the CLI reports verbatim.
"""

from __future__ import annotations


class MotivicError(Exception):
    """Base class for all domain errors."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidInput(MotivicError, ValueError):
    """Well-typed input that violates a documented invariant."""


class CapExceeded(InvalidInput):
    """A desk-scale cap (genus, degree, precision, field size) was exceeded."""


class ParseError(InvalidInput):
    pass


class ReservedSymbol(InvalidInput):
    """Attempt to substitute the Lefschetz symbol by a non-unit constant."""


class MissingSymbol(MotivicError, KeyError):
    def __init__(self, symbol: str):
        super().__init__(symbol)
        self.symbol = symbol

    def __str__(self) -> str:
        return f"no value assigned to symbol {self.symbol!r}"


class NonUnitConstantTerm(MotivicError, ArithmeticError):
    pass


class NotPolynomialWithinPrecision(MotivicError, ArithmeticError):
    def __init__(self, index: int, precision: int):
        super().__init__(f"coefficient {index} does not vanish (precision {precision})")
        self.index = index
        self.precision = precision


class PrecisionTooSmall(InvalidInput):
    pass


class InsufficientInitialData(InvalidInput):
    pass


class IndexMismatch(InvalidInput):
    pass


class NotDivisible(MotivicError, ArithmeticError):
    pass


class BudgetExceeded(MotivicError):
    pass


class InconsistentCounts(MotivicError):
    pass


class NotIntegral(MotivicError):
    pass


class FunctionalEquationViolated(MotivicError):
    pass


class WeilBoundViolated(MotivicError):
    pass
