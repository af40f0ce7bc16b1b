import random
from fractions import Fraction

import pytest
import sympy

from gerstenhaber import Polynomial, leibniz_split
from gerstenhaber.cochains import DimensionMismatchError

from oracle_sympy import derive_expr, exprs_equal, poly_to_expr


def x(i):
    return Polynomial.variable(2, i)


def test_product_of_conjugates():
    one = Polynomial.constant(2, 1)
    assert (x(1) + one) * (x(1) - one) == Polynomial(2, {(2, 0): 1, (0, 0): -1})


def test_derive_monomial():
    u = Polynomial(2, {(2, 1): 1})  # x1^2 x2
    assert u.derive((1, 1)) == Polynomial(2, {(1, 0): 2})


def test_derive_zero_order_is_identity():
    u = Polynomial(2, {(2, 1): Fraction(3, 7), (0, 0): -2})
    assert u.derive((0, 0)) == u


def test_derive_kills_low_degree():
    assert x(1).derive((2, 0)).is_zero


def test_zero_polynomial_is_empty_map():
    assert Polynomial(2, {(1, 0): 1, (0, 0): 0}).coefficient((0, 0)) == 0
    assert (x(1) - x(1)).is_zero


def test_dimension_mismatch_rejected():
    with pytest.raises(DimensionMismatchError):
        x(1) + Polynomial.variable(3, 1)
    with pytest.raises(DimensionMismatchError):
        Polynomial(2, {(1, 0, 0): 1})


def test_negative_exponent_rejected():
    with pytest.raises(ValueError):
        Polynomial(2, {(-1, 0): 1})


def test_leibniz_split_product_rule_row():
    assert leibniz_split((1, 0)) == (((0, 0), (1, 0), 1), ((1, 0), (0, 0), 1))


def test_leibniz_split_binomial_row():
    coeffs = [c for _, _, c in leibniz_split((2, 0))]
    assert coeffs == [1, 2, 1]


def test_leibniz_split_cross_check_with_derive():
    u, v = x(1), x(2)
    total = Polynomial.zero(2)
    for b, rest, coeff in leibniz_split((1, 1)):
        total = total + u.derive(b) * v.derive(rest) * coeff
    assert total == (u * v).derive((1, 1)) == Polynomial.constant(2, 1)


def test_leibniz_split_consistency_random():
    rng = random.Random(20250809)
    for _ in range(60):
        u = _random_poly(rng)
        v = _random_poly(rng)
        a = (rng.randint(0, 3), rng.randint(0, 3 - 0))
        total = Polynomial.zero(2)
        for b, rest, coeff in leibniz_split(a):
            total = total + u.derive(b) * v.derive(rest) * coeff
        assert total == (u * v).derive(a)


def test_derive_against_sympy():
    rng = random.Random(7)
    for _ in range(40):
        u = _random_poly(rng)
        order = (rng.randint(0, 2), rng.randint(0, 2))
        ours = poly_to_expr(u.derive(order))
        theirs = derive_expr(poly_to_expr(u), order)
        assert exprs_equal(ours, theirs)


def test_arithmetic_against_sympy():
    rng = random.Random(8)
    for _ in range(40):
        u, v = _random_poly(rng), _random_poly(rng)
        assert exprs_equal(poly_to_expr(u * v), sympy.expand(poly_to_expr(u) * poly_to_expr(v)))
        assert exprs_equal(poly_to_expr(u + v), poly_to_expr(u) + poly_to_expr(v))


def _random_poly(rng):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        expo = (rng.randint(0, 3), rng.randint(0, 3))
        terms[expo] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return Polynomial(2, terms)
