import itertools

import numpy as np
import pytest

from motivic_zeta.curves import count_points, model_from_json
from motivic_zeta.errors import BudgetExceeded, InvalidInput
from motivic_zeta.finite_field import FiniteField, is_irreducible, prime_power, smallest_irreducible

from oracles import hyperelliptic_points, plane_points

ELLIPTIC = {"kind": "plane", "p": 3, "e": 1, "poly": [[1, [0, 2, 1]], [-1, [3, 0, 0]], [-1, [1, 0, 2]]]}
ELLIPTIC_TERMS = [(1, (0, 2, 1)), (-1, (3, 0, 0)), (-1, (1, 0, 2))]


def test_smallest_irreducible():
    assert smallest_irreducible(3, 2) == (1, 0, 1)  # x^2 + 1
    assert smallest_irreducible(2, 2) == (1, 1, 1)
    assert smallest_irreducible(2, 3) == (1, 1, 0, 1)
    assert not is_irreducible([1, 0, 1], 2)


@pytest.mark.parametrize("p,e", [(2, 1), (2, 3), (3, 2), (5, 1), (5, 2), (7, 1), (2, 4)])
def test_field_axioms(p, e):
    f = FiniteField(p, e)
    elems = range(f.q)
    for a, b in itertools.product(elems, repeat=2):
        assert f.mul(a, b) == f._mul_slow(a, b)
    for a in elems:
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    xs = np.arange(f.q)[:, None]
    ys = np.arange(f.q)[None, :]
    assert all(f.vadd(xs, ys)[a, b] == f.add(a, b) for a in elems for b in elems)
    assert all(f.vmul(xs, ys)[a, b] == f.mul(a, b) for a in elems for b in elems)


def test_embedding_is_a_homomorphism():
    small, big = FiniteField(2, 2), FiniteField(2, 4)
    emb = big.embedding_from(small)
    for a, b in itertools.product(range(4), repeat=2):
        assert emb[small.mul(a, b)] == big.mul(emb[a], emb[b])
        assert emb[small.add(a, b)] == big.add(emb[a], emb[b])


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None


def test_line_count():
    line = model_from_json({"kind": "plane", "p": 3, "poly": [[1, [1, 0, 0]]]})
    assert line.genus == 0
    for m in (1, 2, 3, 4):
        assert count_points(line, m) == 3**m + 1


def test_elliptic_counts():
    model = model_from_json(ELLIPTIC)
    assert model.genus == 1
    assert count_points(model, 1) == plane_points(ELLIPTIC_TERMS, 3, 1) == 4
    assert count_points(model, 2) == plane_points(ELLIPTIC_TERMS, 3, 2) == 16


def test_plane_curve_over_extension_base():
    # x^3 + a y^3 + z^3 = 0 over F_4 with a the class of the generator
    model = model_from_json({"kind": "plane", "p": 2, "e": 2, "poly": [[1, [3, 0, 0]], [2, [0, 3, 0]], [1, [0, 0, 3]]]})
    n1 = count_points(model, 1)
    brute = 0
    f = FiniteField(2, 2)
    pts = [(x, y, 1) for x in range(4) for y in range(4)] + [(x, 1, 0) for x in range(4)] + [(1, 0, 0)]
    for x, y, z in pts:
        v = f.add(f.add(f.pow(x, 3), f.mul(2, f.pow(y, 3))), f.pow(z, 3))
        brute += v == 0
    assert n1 == brute


def test_hyperelliptic_counts():
    f = [3, 1, 0, 1, 0, 1]
    model = model_from_json({"kind": "hyperelliptic", "p": 5, "f": f})
    assert model.genus == 2
    for m in (1, 2, 3):
        assert count_points(model, m) == hyperelliptic_points(f, 5, m)


def test_parallel_matches_serial():
    model = model_from_json(ELLIPTIC)
    assert count_points(model, 2, jobs=3) == count_points(model, 2)


def test_budget():
    model = model_from_json(ELLIPTIC)
    with pytest.raises(BudgetExceeded):
        count_points(model, 3, budget=100)


@pytest.mark.parametrize(
    "data",
    [
        {"kind": "hyperelliptic", "p": 5, "f": [1, 0, 0, 0, 0, 1]},  # (x+1)^5
        {"kind": "hyperelliptic", "p": 2, "f": [1, 1, 0, 1]},
        {"kind": "hyperelliptic", "p": 5, "f": [1, 0, 1]},
        {"kind": "plane", "p": 3, "poly": [[1, [2, 0, 0]], [1, [0, 1, 0]]]},
        {"kind": "plane", "p": 3, "poly": [[1, [0, 2, 1]]], "genus": 0},
        {"kind": "plane", "p": 4, "poly": [[1, [1, 0, 0]]]},
    ],
)
def test_invalid_models(data):
    with pytest.raises(InvalidInput):
        model_from_json(data)
