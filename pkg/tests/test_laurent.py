import random
from fractions import Fraction

import pytest

from cluster import ArityMismatch, LaurentPoly, NotDivisible, exact_div, specialize
from cluster.base import ZeroToNegativePower
from cluster.laurent import add, mul, sub


def x(i, nvars=3):
    return LaurentPoly.var(nvars, i)


def random_poly(rng, nvars=3, terms=4, low=-2, high=3):
    return LaurentPoly(nvars, {
        tuple(rng.randint(low, high) for _ in range(nvars)): rng.choice([-3, -2, -1, 1, 2, 3])
        for _ in range(terms)
    })


def test_canonical_form():
    p = LaurentPoly(2, {(1, 0): 2, (0, 1): 3, (2, 0): 0})
    q = LaurentPoly(2, {(0, 1): 3, (1, 0): 2})
    assert p == q
    assert hash(p) == hash(q)
    assert len(p) == 2
    assert LaurentPoly(2, {(1, 1): 1, (0, 0): -1}) + 1 == LaurentPoly.monomial(2, {1: 1, 2: 1})


def test_graded_lex_order():
    p = x(1) + x(2) * x(2) + 1 + x(3)
    assert list(p.terms) == [(0, 2, 0), (1, 0, 0), (0, 0, 1), (0, 0, 0)]
    assert p.leading_term() == ((0, 2, 0), 1)


def test_ring_operations():
    p = x(1) + x(2)
    q = x(1) - x(2)
    assert mul(p, q) == x(1) * x(1) - x(2) * x(2)
    assert add(p, q) == 2 * x(1)
    assert sub(p, q) == x(2) * 2
    assert -p + p == 0
    assert 1 - x(1) == -(x(1) - 1)
    assert (p * 0).is_zero()


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        LaurentPoly.var(2, 1) + LaurentPoly.var(3, 1)
    with pytest.raises(ArityMismatch):
        LaurentPoly(2, {(1, 0, 0): 1})
    with pytest.raises(ArityMismatch):
        LaurentPoly.monomial(2, {3: 1})


def test_exact_division():
    assert exact_div(x(1) * x(1) - x(2) * x(2), x(1) - x(2)) == x(1) + x(2)
    inv = LaurentPoly.monomial(3, {1: -1})
    assert exact_div(inv + x(2), inv) == 1 + x(1) * x(2)
    assert (x(1) * x(3) + x(2)) / x(1) == x(3) + x(2) * inv
    assert exact_div(LaurentPoly.zero(3), x(1) + 1).is_zero()


def test_exact_division_failures():
    with pytest.raises(NotDivisible):
        exact_div(x(1) + 1, x(2) + 1)
    with pytest.raises(NotDivisible):
        exact_div(x(1) + 1, 2 * x(1) + 2 * x(2))
    with pytest.raises(NotDivisible):
        exact_div(x(1), LaurentPoly.zero(3))


def test_division_undoes_multiplication():
    rng = random.Random(11)
    for _ in range(40):
        p, q = random_poly(rng), random_poly(rng)
        if q.is_zero():
            continue
        assert exact_div(p * q, q) == p


def test_specialize():
    p = (x(1) * x(3) + x(2)) / x(1)
    assert specialize(p, {1: 2, 2: 3, 3: 5}) == Fraction(13, 2)
    assert p.specialize([Fraction(1, 2), 1, 1]) == 3
    with pytest.raises(ZeroToNegativePower):
        p.specialize([0, 1, 1])
    with pytest.raises(ArityMismatch):
        p.specialize([1, 1])
    with pytest.raises(ArityMismatch):
        p.specialize({1: 1, 2: 1})


def test_specialize_is_a_ring_map():
    rng = random.Random(3)
    point = [Fraction(2), Fraction(-3, 2), Fraction(5, 7)]
    for _ in range(20):
        p, q = random_poly(rng), random_poly(rng)
        assert (p * q).specialize(point) == p.specialize(point) * q.specialize(point)
        assert (p - q).specialize(point) == p.specialize(point) - q.specialize(point)


def test_denominator_and_numerator():
    p = (x(2) + 1) / (x(1) * x(3) * x(3))
    assert p.denominator() == LaurentPoly.monomial(3, {1: 1, 3: 2})
    assert p.numerator() == x(2) + 1
    assert p.min_exponents() == (-1, 0, -2)
    assert p.max_exponents() == (-1, 1, -2)
    assert p.variables() == (1, 2, 3)


def test_collapse():
    p = (x(1) * x(3) + x(2)) / x(1)
    assert p.collapse([3]) == 1 + x(2) / x(1)
    assert p.collapse([1, 2, 3]) == 2


def test_text_and_json():
    p = 3 * x(2) - x(1) * x(1) / x(3) + 1
    assert p.to_text() == "-1 * x1^2 x3^-1 + 3 * x2^1 + 1"
    assert str(LaurentPoly.zero(3)) == "0"
    assert LaurentPoly.constant(3, -5).to_text() == "-5"
    assert LaurentPoly.from_json(3, p.to_json()) == p


def test_constants_hash_like_ints():
    assert LaurentPoly.one(3) == 1 and hash(LaurentPoly.one(3)) == hash(1)
    assert LaurentPoly.zero(2) == 0 and hash(LaurentPoly.zero(2)) == hash(0)
    assert len({LaurentPoly.constant(3, -4), -4}) == 1
    assert x(1) != 1
