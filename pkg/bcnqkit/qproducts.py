#!/usr/bin/env python
"""Products of binomial factors kept in factored form.

A :class:`QProduct` is a monomial prefactor times a ratio of multisets of
factors ``1 - c*a^i*b^j*q^k*t^l``. Keeping the factors apart makes two
degenerations structural rather than numeric: the constant term at ``q = 0``
and factorwise limits where every symbol is a power of one variable tending
to one, replacing ``(1 - x^s)/(1 - x^u)`` by ``s/u``.
"""
# Standard Library
import collections
import logging
import math
from fractions import Fraction

# This Module
from bcnqkit.errors import LimitError, VanishingDenominator

logger = logging.getLogger(__name__)

SYMBOLS = ("a", "b", "q", "t")
Q_INDEX = SYMBOLS.index("q")


class Monomial(collections.namedtuple("Monomial", ["coeff", "powers"])):
    """``coeff * a^powers[0] * b^powers[1] * q^powers[2] * t^powers[3]``."""

    __slots__ = ()

    def __new__(cls, coeff=1, powers=(0, 0, 0, 0)):
        powers = tuple(int(p) for p in powers)

        if len(powers) != len(SYMBOLS):
            raise ValueError(f"Expected {len(SYMBOLS)} exponents, got {powers}")

        return super().__new__(cls, Fraction(coeff), powers)

    def __mul__(self, other):
        return Monomial(
            self.coeff * other.coeff,
            tuple(x + y for x, y in zip(self.powers, other.powers)),
        )

    def __pow__(self, exponent):
        return Monomial(
            self.coeff**exponent, tuple(exponent * p for p in self.powers)
        )

    def inverse(self):
        return Monomial(1 / self.coeff, tuple(-p for p in self.powers))

    def evaluate(self, values):
        result = self.coeff

        for symbol, power in zip(SYMBOLS, self.powers):
            if power:
                result *= values[symbol] ** power

        return result

    def __str__(self):
        symbols = "".join(
            f"{s}^{p}" if p != 1 else s for s, p in zip(SYMBOLS, self.powers) if p
        )
        return f"{self.coeff}{symbols}"


def mono(coeff=1, a=0, b=0, q=0, t=0):
    """Shortcut for :class:`Monomial` with keyword exponents."""
    return Monomial(coeff, (a, b, q, t))


ONE = mono()


class QProduct:
    """An exact product of binomial factors with a monomial prefactor.

    :param prefactor: the monomial in front
    :param numerator: :class:`collections.Counter` of factor monomials ``x``
                      standing for ``1 - x``
    :param denominator: the same for the denominator
    """

    __slots__ = ("prefactor", "numerator", "denominator")

    def __init__(self, prefactor=ONE, numerator=(), denominator=()):
        self.prefactor = prefactor
        numerator = collections.Counter(numerator)
        denominator = collections.Counter(denominator)
        common = numerator & denominator

        self.numerator = numerator - common
        self.denominator = denominator - common

    @classmethod
    def factor(cls, x):
        """The single factor ``1 - x``."""
        return cls(numerator=[x])

    @classmethod
    def monomial(cls, x):
        return cls(prefactor=x)

    @classmethod
    def pochhammer(cls, x, base, length):
        """``(x; base)_length`` as a product of ``length`` factors."""
        if length < 0:
            raise ValueError(f"Pochhammer length must be nonnegative, got {length}")

        return cls(numerator=[x * base**s for s in range(length)])

    def __mul__(self, other):
        if isinstance(other, Monomial):
            other = QProduct.monomial(other)

        return QProduct(
            self.prefactor * other.prefactor,
            self.numerator + other.numerator,
            self.denominator + other.denominator,
        )

    def inverse(self):
        return QProduct(self.prefactor.inverse(), self.denominator, self.numerator)

    def __truediv__(self, other):
        if isinstance(other, Monomial):
            other = QProduct.monomial(other)

        return self * other.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent

        result = QProduct()

        for _ in range(exponent):
            result = result * self

        return result

    def __repr__(self):
        num = " ".join(f"(1-{x})^{k}" for x, k in sorted(self.numerator.items()))
        den = " ".join(f"(1-{x})^{k}" for x, k in sorted(self.denominator.items()))
        return f"QProduct({self.prefactor} * [{num or 1}] / [{den or 1}])"

    def evaluate(self, **values):
        """Exact value with every symbol specialized.

        :raises VanishingDenominator: when a denominator factor is zero
        """
        values = {s: Fraction(values.get(s, 0)) for s in SYMBOLS}
        result = _evaluate_monomial(self.prefactor, values)

        for x, multiplicity in self.numerator.items():
            result *= (1 - _evaluate_monomial(x, values)) ** multiplicity

        for x, multiplicity in self.denominator.items():
            factor = 1 - _evaluate_monomial(x, values)

            if factor == 0:
                raise VanishingDenominator(f"Factor 1-{x} vanishes at {values}")

            result /= factor**multiplicity

        return result

    def at_q_zero(self, a=0, b=0, t=0):
        """The value at q = 0 of the product read as a function of q.

        :raises LimitError: when the product has a pole at q = 0
        """
        values = {"a": Fraction(a), "b": Fraction(b), "q": Fraction(1), "t": Fraction(t)}

        order = self.prefactor.powers[Q_INDEX]
        value = _evaluate_monomial(self.prefactor, values)

        for counter, sign in ((self.numerator, 1), (self.denominator, -1)):
            for x, multiplicity in counter.items():
                leading, factor_order = _leading_term(x, values)
                order += sign * factor_order * multiplicity

                if sign < 0 and leading == 0:
                    raise VanishingDenominator(f"Factor 1-{x} vanishes at q=0")

                value *= leading ** (sign * multiplicity)

        if order > 0:
            return Fraction(0)

        if order < 0:
            raise LimitError(f"{self!r} has a pole of order {-order} at q=0")

        return value

    def limit_at_one(self, **exponents):
        """Limit as x -> 1 after substituting ``symbol = x^exponent``.

        Factors ``1 - x^s`` contribute ``s`` per power of ``1 - x``; any
        other factor is a nonzero constant.

        :raises LimitError: when the substituted product diverges
        """
        exponents = tuple(int(exponents.get(s, 0)) for s in SYMBOLS)
        order = 0
        value = self.prefactor.coeff

        for counter, sign in ((self.numerator, 1), (self.denominator, -1)):
            for x, multiplicity in counter.items():
                s = sum(e * p for e, p in zip(exponents, x.powers))

                if x.coeff == 1 and s == 0:
                    raise LimitError(f"Factor 1-{x} vanishes identically")

                if x.coeff == 1:
                    order += sign * multiplicity
                    value *= Fraction(s) ** (sign * multiplicity)
                else:
                    value *= (1 - x.coeff) ** (sign * multiplicity)

        if order < 0:
            raise LimitError(f"{self!r} diverges in the limit")

        return value if order == 0 else Fraction(0)


def _evaluate_monomial(x, values):
    try:
        return x.evaluate(values)
    except ZeroDivisionError as err:
        raise VanishingDenominator(f"Monomial {x} is undefined at {values}") from err


def _leading_term(x, values):
    """Leading coefficient and q-order of the factor ``1 - x``."""
    kappa = x.powers[Q_INDEX]

    if kappa > 0:
        return Fraction(1), 0

    rest = _evaluate_monomial(x, values)

    if kappa == 0:
        return 1 - rest, 0

    return -rest, kappa


def product(items):
    """Multiply an iterable of :class:`QProduct`."""
    return math.prod(items, start=QProduct())
