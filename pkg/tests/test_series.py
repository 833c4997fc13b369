import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from motivic_zeta.errors import NonUnitConstantTerm, NotPolynomialWithinPrecision
from motivic_zeta.ring import ONE, ZERO, L, RingElement, parse
from motivic_zeta.series import (
    DenominatorFactor,
    RationalForm,
    TruncatedSeries,
    clear_denominator,
    expand,
    geometric,
    series_arithmetic,
    series_inverse,
)

from oracles import Lsym, cauchy_product, to_sympy


def poly(*texts, n):
    return TruncatedSeries.from_polynomial([parse(t) for t in texts], n)


def test_product_of_binomials():
    got = series_arithmetic(poly("1", "1", n=3), poly("1", "-1", n=3), "mul")
    assert got == TruncatedSeries(["1", "0", "-1"])


def test_geometric_product():
    got = geometric(1, 3) * geometric(L, 3)
    assert list(got) == [ONE, parse("1 + L"), parse("1 + L + L^2")]


def test_additive_identity():
    f = poly("1", "X", "L^2", n=4)
    assert f + TruncatedSeries([0, 0, 0, 0]) == f


def test_precision_is_minimum():
    assert (geometric(1, 5) * geometric(1, 3)).precision == 3
    assert (geometric(1, 5) + geometric(1, 3)).precision == 3


def test_inverse_geometric():
    assert series_inverse(poly("1", "-1", n=6)) == geometric(1, 6)


def test_inverse_of_one_minus_lt_by_cauchy_oracle():
    g = series_inverse(poly("1", "-L", n=10))
    assert g == geometric(L, 10)
    prod = cauchy_product([1, -Lsym] + [0] * 8, [to_sympy(str(c)) for c in g], 10)
    assert prod == [1] + [0] * 9


def test_inverse_rejects_non_unit():
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(poly("2", "1", n=4))
    with pytest.raises(NonUnitConstantTerm):
        series_inverse(poly("L", "1", n=4))


def test_inverse_of_minus_one_constant():
    f = poly("-1", "L", n=6)
    assert f * f.inverse() == TruncatedSeries.one(6)


def test_expand_examples():
    assert list(expand(RationalForm(["1"], [(0, 1)]), 4)) == [ONE] * 4
    got = expand(RationalForm(["1"], [(0, 1), (1, 1)]), 4)
    assert [str(c) for c in got] == ["1", "1 + L", "1 + L + L^2", "1 + L + L^2 + L^3"]


def test_expand_conic_coefficient():
    # hand recursion: c3 = X + L^2 c1 with c1 = X
    got = expand(RationalForm(["1", "X", "L"], [(0, 2), (2, 2)]), 4)
    assert got[3] == parse("X*(1 + L^2)")
    assert got[1] == parse("X")


def test_clear_examples():
    z = expand(RationalForm(["1"], [(0, 1), (1, 1)]), 10)
    assert clear_denominator(z, [(0, 1), (1, 1)]) == (ONE,)
    assert clear_denominator(geometric(1, 10), [(0, 1)]) == (ONE,)


def test_clear_rejects_non_polynomial():
    with pytest.raises(NotPolynomialWithinPrecision) as exc:
        clear_denominator(geometric(1, 10), [(1, 1)])
    assert exc.value.index == 9
    with pytest.raises(NotPolynomialWithinPrecision) as exc:
        clear_denominator(geometric(1, 10), [(1, 1)], max_degree=3)
    assert exc.value.index == 4


def test_denominator_factor_validation():
    with pytest.raises(ValueError):
        DenominatorFactor.make(0, 0)
    with pytest.raises(ValueError):
        RationalForm(["2"], [])


def test_multiplicativity_for_scissor_pieces():
    # [P^1] = [A^1] + [pt]
    n = 12
    z_p1 = expand(RationalForm(["1"], [(0, 1), (1, 1)]), n)
    z_a1 = expand(RationalForm(["1"], [(1, 1)]), n)
    z_pt = expand(RationalForm(["1"], [(0, 1)]), n)
    for q in (2, 3, 5):
        assert (z_a1 * z_pt).count_specialize(q) == z_p1.count_specialize(q)
    assert z_a1 * z_pt == z_p1


coeffs = st.sampled_from(["0", "1", "-1", "L", "X", "2*L*X", "1 + L^2", "-X^2"])


@st.composite
def rational_forms(draw):
    num = ["1"] + draw(st.lists(coeffs, max_size=4))
    den = draw(st.lists(st.tuples(st.integers(0, 3), st.integers(1, 3)), max_size=3))
    return RationalForm([parse(c) for c in num], den)


@given(rational_forms())
@settings(max_examples=60, deadline=None)
def test_clear_inverts_expand(r):
    n = r.degree + r.denominator_degree + 3
    assert clear_denominator(expand(r, n), r.denominator, max_degree=r.degree) == r.numerator


@given(st.lists(coeffs, min_size=1, max_size=6), st.sampled_from(["1", "-1"]))
@settings(max_examples=60, deadline=None)
def test_inverse_property(tail, c0):
    f = TruncatedSeries([parse(c0)] + [parse(c) for c in tail])
    assert f * f.inverse() == TruncatedSeries.one(f.precision)
