from __future__ import annotations

import itertools
import pickle

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from agtrellis.errors import DivisionByZero, FieldTooLarge, MixedFields, NotPrime, ReducibleModulus
from agtrellis.field import Field, canonical_modulus, get_field, is_irreducible
from oracles import NaiveField, irreducible_by_roots_or_products

SMALL = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3)]


@pytest.mark.parametrize("p,m", SMALL)
def test_tables_match_schoolbook_arithmetic(p, m):
    F = get_field(p, m)
    N = NaiveField(p, m, F.modulus)
    for a, b in itertools.product(range(F.q), repeat=2):
        assert F.add(a, b) == N.add(a, b)
        assert F.mul(a, b) == N.mul(a, b)


@pytest.mark.parametrize("p,m", SMALL)
def test_primitive_element_generates(p, m):
    F = get_field(p, m)
    N = NaiveField(p, m, F.modulus)
    seen = {N.pow(F.primitive, e) for e in range(F.q - 1)}
    assert seen == set(range(1, F.q))


def test_canonical_moduli():
    assert canonical_modulus(2, 3) == (1, 1, 0, 1)
    assert canonical_modulus(2, 4) == (1, 1, 0, 0, 1)
    assert canonical_modulus(3, 2) == (1, 0, 1)
    assert canonical_modulus(2, 2) == (1, 1, 1)


@pytest.mark.parametrize("p,deg", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (3, 4)])
def test_irreducibility_against_root_and_product_oracle(p, deg):
    for tail in itertools.product(range(p), repeat=deg):
        coeffs = [*tail, 1]
        assert is_irreducible(coeffs, p) == irreducible_by_roots_or_products(coeffs, p)


def test_gf4_product():
    assert get_field(2, 2).mul(2, 2) == 3


def test_large_field_uses_logs_and_agrees():
    F = get_field(2, 10)
    N = NaiveField(2, 10, F.modulus)
    rng = np.random.default_rng(3)
    for a, b in rng.integers(0, F.q, size=(300, 2)):
        assert F.mul(int(a), int(b)) == N.mul(int(a), int(b))


def test_errors():
    with pytest.raises(NotPrime):
        Field(4)
    with pytest.raises(ReducibleModulus):
        Field(2, 2, (1, 0, 1))
    with pytest.raises(FieldTooLarge):
        Field(2, 17)
    F = get_field(5)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(MixedFields):
        F(1) + get_field(7)(1)


def test_elements_and_operators():
    F = get_field(3, 2)
    a, b = F(4), F(7)
    assert int(a * b) == F.mul(4, 7)
    assert int(a / b) == F.mul(4, F.inv(7))
    assert int(a - b) == F.sub(4, 7)
    assert a * a.inverse() == F.one
    assert len(F.elements()) == 9
    assert pickle.loads(pickle.dumps(F)) == F


def test_pow_reduces_large_exponent():
    F = get_field(2, 8)
    assert F.pow(3, 255 * 10**9 + 1) == 3
    assert F.pow(0, 0) == 1


field_params = st.sampled_from([(2, 1), (3, 1), (5, 1), (2, 2), (2, 3), (3, 2), (2, 4), (2, 8), (3, 5)])


@settings(max_examples=200, deadline=None)
@given(field_params, st.data())
def test_field_axioms(params, data):
    F = get_field(*params)
    # 50 triples per example, 200 examples -> 10^4 triples
    elems = st.lists(st.integers(0, F.q - 1), min_size=50, max_size=50)
    a, b, c = (np.array(data.draw(elems)) for _ in range(3))
    assert np.array_equal(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)))
    assert np.array_equal(F.add(F.add(a, b), c), F.add(a, F.add(b, c)))
    assert np.array_equal(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)))
    assert np.array_equal(F.mul(a, b), F.mul(b, a))
    assert np.array_equal(F.add(a, F.neg(a)), np.zeros_like(a))


@settings(max_examples=200, deadline=None)
@given(field_params, st.integers(0, 1 << 20), st.integers(0, 1 << 20))
def test_frobenius_and_inverse(params, x, y):
    F = get_field(*params)
    a, b = x % F.q, y % F.q
    assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))
    assert F.pow(F.mul(a, b), F.p) == F.mul(F.pow(a, F.p), F.pow(b, F.p))
    if a and b:
        assert F.inv(F.mul(a, b)) == F.mul(F.inv(a), F.inv(b))
        assert F.div(F.mul(a, b), b) == a
