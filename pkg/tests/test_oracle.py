import pytest
from hypothesis import given
from hypothesis import strategies as st

from motivic_zeta.constructors import PointedCurveData, zeta_pointed_curve
from motivic_zeta.curves import model_from_json
from motivic_zeta.errors import (
    FunctionalEquationViolated,
    InconsistentCounts,
    InvalidInput,
    MissingSymbol,
    NotIntegral,
    WeilBoundViolated,
)
from motivic_zeta.oracle import (
    ZetaProfile,
    closed_point_counts,
    counts_from_lpoly,
    divisor_counts_by_exp,
    effective_divisor_counts,
    pic0_order,
    verify_curve,
    verify_specialization,
    weil_zeta_from_counts,
    weil_zeta_series,
)

from oracles import divisors_by_multisets, hyperelliptic_points

ELLIPTIC_COUNTS = [4, 16, 28, 64]


def test_closed_point_examples():
    assert closed_point_counts([1, 1]) == [1, 0]
    assert closed_point_counts([4, 10]) == [4, 3]
    assert closed_point_counts([4, 16]) == [4, 6]
    with pytest.raises(InconsistentCounts):
        closed_point_counts([4, 5])


def test_effective_divisor_examples():
    assert effective_divisor_counts([1], 1) == 1
    assert effective_divisor_counts([4, 6], 2) == 16
    assert effective_divisor_counts([3, 1, 2], 3) == 15
    with pytest.raises(InvalidInput):
        effective_divisor_counts([3], 2)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=4))
def test_divisor_dp_matches_multisets(closed):
    for n in range(len(closed) + 1):
        assert effective_divisor_counts(closed, n) == divisors_by_multisets(closed, n)


def test_dual_route_on_elliptic_curve():
    closed = closed_point_counts(ELLIPTIC_COUNTS)
    assert closed == [4, 6, 8, 12]
    via_exp = divisor_counts_by_exp(ELLIPTIC_COUNTS, 4)
    assert via_exp == [1, 4, 16, 52, 160]
    assert via_exp == [effective_divisor_counts(closed, n) for n in range(5)]


def test_exp_rejects_non_integral():
    with pytest.raises(NotIntegral):
        divisor_counts_by_exp([1, 2], 2)


def test_weil_examples():
    assert weil_zeta_from_counts([3], 2, 0).lpoly == (1,)
    assert weil_zeta_from_counts([4, 16], 3, 1).lpoly == (1, 0, 3)
    with pytest.raises(WeilBoundViolated):
        weil_zeta_from_counts([9, 16], 3, 1)


def test_weil_failures():
    with pytest.raises(FunctionalEquationViolated):
        weil_zeta_from_counts([4, 14], 3, 1)
    with pytest.raises(NotIntegral):
        weil_zeta_from_counts([4, 15], 3, 1)
    with pytest.raises(InconsistentCounts):
        weil_zeta_from_counts([4, 16, 29], 3, 1)
    with pytest.raises(InvalidInput):
        weil_zeta_from_counts([4, 16], 6, 1)
    with pytest.raises(InvalidInput):
        weil_zeta_from_counts([4], 3, 1)


def test_weil_accepts_consistent_extra_counts():
    assert weil_zeta_from_counts(ELLIPTIC_COUNTS, 3, 1).lpoly == (1, 0, 3)


def test_pic0_order():
    assert pic0_order(ZetaProfile(2, 0, (1,))) == 1
    assert pic0_order(ZetaProfile(3, 1, (1, 0, 3))) == 4


def test_counts_from_lpoly_round_trip():
    lpoly = (1, 1, 4, 5, 25)
    counts = counts_from_lpoly(5, lpoly, 6)
    assert counts[:4] == [7, 33, 130, 689]
    f = [3, 1, 0, 1, 0, 1]
    assert counts[:4] == [hyperelliptic_points(f, 5, k) for k in range(1, 5)]
    assert weil_zeta_from_counts(counts, 5, 2).lpoly == lpoly


def test_weil_series():
    assert weil_zeta_series(ZetaProfile(3, 1, (1, 0, 3)), 5) == [1, 4, 16, 52, 160]


def test_verify_specialization():
    form = zeta_pointed_curve(PointedCurveData(1, ["1"], "Pic0"))
    profile = ZetaProfile(3, 1, (1, 0, 3))
    report = verify_specialization(form, {"Pic0": 4}, 3, profile, 10)
    assert report.agrees and report.checked_coefficients == 10
    assert report.first_mismatch is None
    bad = verify_specialization(form, {"Pic0": 5}, 3, profile, 10)
    assert bad.verdict == "mismatch" and bad.first_mismatch == 1
    with pytest.raises(MissingSymbol):
        verify_specialization(form, {}, 3, profile, 10)


def test_scissor_relation_on_elliptic_curve():
    # removing a rational point lowers a_1 by one and divides zeta by 1/(1-t)
    closed = closed_point_counts(ELLIPTIC_COUNTS)
    punctured = [closed[0] - 1] + closed[1:]
    for n in range(5):
        total = effective_divisor_counts(closed, n)
        assert total == sum(effective_divisor_counts(punctured, i) for i in range(n + 1))


def test_verify_curve_elliptic():
    model = model_from_json({"kind": "plane", "p": 3, "poly": [[1, [0, 2, 1]], [-1, [3, 0, 0]], [-1, [1, 0, 2]]]})
    result = verify_curve(model, 12)
    assert result.counts == [4, 16]
    assert result.assignment == {"Pic0": 4}
    assert result.report.agrees and result.report.checked_coefficients == 12
