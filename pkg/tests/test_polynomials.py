"""Polynomial ring: arithmetic, basis change and rendering."""

import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jonesweight.polynomials import (
    LAM,
    LAM_PLUS_TWO,
    ONE,
    ZERO,
    IntPoly,
    from_d_basis,
    to_d_basis,
)

polys = st.lists(st.integers(-100, 100), max_size=9).map(IntPoly)


def test_normalization_strips_trailing_zeros():
    assert IntPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPoly((0, 0)).coeffs == ()
    assert IntPoly(()).coeffs == ()


def test_rejects_non_integer_coefficients():
    with pytest.raises(TypeError):
        IntPoly((1.5,))


def test_add_examples():
    assert LAM_PLUS_TWO + IntPoly((-2, -1)) == ZERO
    assert IntPoly((0, 0, 1)) + IntPoly((0, 2)) == IntPoly((0, 2, 1))
    p = IntPoly((3, -4, 5))
    assert ZERO + p == p


def test_mul_examples():
    assert LAM_PLUS_TWO * IntPoly((1, 1)) == IntPoly((2, 3, 1))
    assert LAM_PLUS_TWO * ZERO == ZERO
    assert LAM_PLUS_TWO * LAM_PLUS_TWO == IntPoly((4, 4, 1))


def test_int_coercion_in_operators():
    assert 2 + LAM == IntPoly((2, 1))
    assert 3 * LAM == IntPoly((0, 3))
    assert LAM - 1 == IntPoly((-1, 1))
    assert 1 - LAM == IntPoly((1, -1))
    assert LAM == IntPoly((0, 1))
    assert IntPoly((5,)) == 5


def test_degree():
    assert ZERO.degree is None
    assert ONE.degree == 0
    assert (LAM ** 7).degree == 7


def test_coefficient_examples():
    p = IntPoly((2, 3, 1))  # λ^2 + 3λ + 2
    assert p.coefficient(1) == 3
    assert p.coefficient(5) == 0
    assert IntPoly((0, -40, -4, 16, 4)).coefficient(4) == 4
    with pytest.raises(ValueError):
        p.coefficient(-1)


def test_to_d_basis_examples():
    assert to_d_basis(LAM_PLUS_TWO) == IntPoly((0, 1))
    # -λ^2 - 2λ becomes -d^2 + 2d (expand -(d-2)^2 - 2(d-2) by hand)
    assert to_d_basis(IntPoly((0, -2, -1))) == IntPoly((0, 2, -1))
    assert to_d_basis(ZERO) == ZERO


def test_ring_axioms_on_random_triples():
    rng = random.Random(1729)

    def rand_poly():
        return IntPoly([rng.randint(-100, 100) for _ in range(rng.randint(0, 9))])

    for _ in range(1000):
        p, q, r = rand_poly(), rand_poly(), rand_poly()
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        assert p + ZERO == p
        assert p * ONE == p
        assert p + (-p) == ZERO


@given(polys)
def test_d_basis_round_trip(p):
    assert from_d_basis(to_d_basis(p)) == p
    assert to_d_basis(from_d_basis(p)) == p


@given(polys, st.integers(-50, 50))
def test_d_basis_matches_integer_substitution(p, v):
    # Independent oracle: evaluating the shifted polynomial at v must agree
    # with evaluating the original at v - 2.
    assert to_d_basis(p).evaluate(v) == p.evaluate(v - 2)


@given(polys, polys)
def test_degree_law(p, q):
    if p and q:
        assert (p * q).degree == p.degree + q.degree
    else:
        assert (p * q) == ZERO


def test_pow():
    assert LAM_PLUS_TWO ** 0 == ONE
    assert LAM_PLUS_TWO ** 2 == IntPoly((4, 4, 1))
    with pytest.raises(ValueError):
        LAM ** -1


def test_immutability_and_hash():
    p = IntPoly((1, 2))
    with pytest.raises(AttributeError):
        p.coeffs = (3,)
    assert hash(IntPoly((1, 2))) == hash(p)


def test_text_rendering():
    w = IntPoly((0, -40, -4, 16, 4))
    assert w.to_text(var="x") == "4 x^4 + 16 x^3 - 4 x^2 - 40 x"
    assert w.to_text() == "4 λ^4 + 16 λ^3 - 4 λ^2 - 40 λ"
    assert ZERO.to_text() == "0"
    assert IntPoly((-2, -1)).to_text() == "-λ - 2"
    assert IntPoly((2, 1)).to_text() == "λ + 2"
    assert IntPoly((0, 0, 1)).to_text(var="x") == "x^2"
    assert IntPoly((7,)).to_text() == "7"
    assert IntPoly((0, 0, -1)).to_text() == "-λ^2"
