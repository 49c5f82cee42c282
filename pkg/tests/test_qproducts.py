# Standard Library
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit.combinatorics import q_pochhammer
from bcnqkit.errors import LimitError, VanishingDenominator
from bcnqkit.qproducts import Monomial, QProduct, mono, product

Q = mono(q=1)


def test_monomial_arithmetic():
    x = mono(2, a=1, q=-1)

    assert x * x == mono(4, a=2, q=-2)
    assert x**3 == mono(8, a=3, q=-3)
    assert x * x.inverse() == mono()
    assert x.evaluate({"a": Fraction(3), "b": 0, "q": Fraction(1, 2), "t": 0}) == 12


def test_monomial_needs_four_exponents():
    with pytest.raises(ValueError):
        Monomial(1, (1, 2))


def test_identical_factors_cancel():
    x = mono(a=1, b=1, q=-1)
    ratio = QProduct.factor(x) / QProduct.factor(x)

    assert not ratio.numerator
    assert not ratio.denominator


def test_pochhammer_matches_scalar():
    value = QProduct.pochhammer(mono(a=1), Q, 3).evaluate(a=Fraction(1, 2), q=Fraction(1, 3))

    assert value == q_pochhammer(Fraction(1, 2), Fraction(1, 3), 3)


def test_evaluate_vanishing_denominator():
    with pytest.raises(VanishingDenominator):
        QProduct.factor(Q).inverse().evaluate(q=1)


def test_at_q_zero():
    a, b = Fraction(1, 3), Fraction(1, 5)
    # (1 - ab/q) / (1 - a/q) -> (-ab) / (-a) = b
    ratio = QProduct.factor(mono(a=1, b=1, q=-1)) / QProduct.factor(mono(a=1, q=-1))

    assert ratio.at_q_zero(a=a, b=b) == b
    assert (QProduct.factor(Q) * mono(3)).at_q_zero() == 3
    assert QProduct.monomial(Q).at_q_zero() == 0
    assert QProduct.factor(mono(a=1, q=-1)).inverse().at_q_zero(a=a) == 0


def test_pole_at_q_zero():
    with pytest.raises(LimitError):
        QProduct.monomial(mono(q=-1)).at_q_zero()

    with pytest.raises(LimitError):
        QProduct.factor(mono(a=1, q=-1)).at_q_zero(a=Fraction(1, 2))


def test_limit_at_one():
    ratio = QProduct.factor(mono(q=4)) / QProduct.factor(mono(q=2))

    assert ratio.limit_at_one(q=1) == 2
    # q -> x^2, t -> x
    assert (QProduct.factor(Q) / QProduct.factor(mono(t=1))).limit_at_one(q=2, t=1) == 2
    assert QProduct.factor(mono(3, q=1)).limit_at_one(q=1) == -2
    assert QProduct.factor(Q).limit_at_one(q=1) == 0


def test_singular_limits():
    with pytest.raises(LimitError):
        QProduct.factor(Q).inverse().limit_at_one(q=1)

    with pytest.raises(LimitError):
        QProduct.factor(mono(a=1, b=-1)).limit_at_one(a=1, b=1)


def test_product_and_power():
    x = QProduct.factor(Q)

    assert product([x, x, x]).numerator == (x**3).numerator
    assert (x**-2).denominator[Q] == 2
    assert product([]).evaluate() == 1
