#!/usr/bin/env python
"""Exact scalars, parameter points and symmetric polynomials.

Scalars are :class:`fractions.Fraction` throughout. Symmetric polynomials are
stored in the monomial basis by their dominant exponents only; orbit sums are
expanded on demand when multiplying or evaluating.
"""
# Standard Library
import collections
import dataclasses
import functools
import itertools as it
import logging
import math
import types
from fractions import Fraction

# Third Party
import numpy as np

# This Module
from bcnqkit.combinatorics import Partition, enumerate_below
from bcnqkit.errors import (
    CertificationFailure,
    DegenerateSpecialization,
    VanishingDenominator,
)

logger = logging.getLogger(__name__)

Rat = Fraction

LAURENT = "laurent_W_invariant"
POLYNOMIAL = "poly_S_invariant"
BASIS_KINDS = (LAURENT, POLYNOMIAL)

FAMILIES = ("mk", "little", "big")
FAMILY_BASIS = {"mk": LAURENT, "little": POLYNOMIAL, "big": POLYNOMIAL}
LIVE_PARAMETERS = {
    "mk": ("a", "b", "c", "d", "q", "t"),
    "little": ("a", "b", "q", "t"),
    "big": ("a", "b", "c", "d", "q", "t"),
}
PARAMETER_NAMES = ("a", "b", "c", "d", "q", "t")

MAX_ATTEMPTS = 64

# Orbit caches are shared by every job in the process.
CACHE_SIZE = 8192


def rat(value):
    """Convert ints, strings like ``"-3/4"`` and fractions to :class:`Rat`."""
    if isinstance(value, float):
        raise TypeError(f"Refusing to convert the float {value!r} to a rational")

    return Fraction(value)


def format_rat(value):
    """``"p/q"`` in lowest terms, ``"p"`` for integers."""
    value = Fraction(value)

    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def check_family(family):
    if family not in FAMILIES:
        raise ValueError(f"Unknown family {family!r}, expected one of {FAMILIES}")

    return family


@dataclasses.dataclass(frozen=True)
class ParamPoint:
    """A specialization of (a, b, c, d, q, t) to exact rationals.

    Parameters the family does not use are kept at zero and ignored.
    ``rejections`` counts the points the sampler discarded before this one.
    """

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    c: Fraction = Fraction(0)
    d: Fraction = Fraction(0)
    q: Fraction = Fraction(0)
    t: Fraction = Fraction(0)
    family: str = "mk"
    rejections: int = 0

    def __post_init__(self):
        for name in PARAMETER_NAMES:
            object.__setattr__(self, name, rat(getattr(self, name)))

        check_family(self.family)

    @property
    def used_mask(self):
        return LIVE_PARAMETERS[self.family]

    def values(self):
        return {name: getattr(self, name) for name in self.used_mask}

    def replace(self, **changes):
        return dataclasses.replace(self, **changes)

    def to_json(self):
        return {name: format_rat(value) for name, value in self.values().items()}


def check_admissible(params):
    """Reject the parameter values excluded for every degree bound."""
    if params.q in (0, 1, -1):
        raise DegenerateSpecialization(f"q={format_rat(params.q)} is not allowed")

    if params.t in (0, 1):
        raise DegenerateSpecialization(f"t={format_rat(params.t)} is not allowed")

    for name in params.used_mask:
        if name in "abcd" and getattr(params, name) == 0:
            raise DegenerateSpecialization(f"{name}=0 is not allowed")


def certify(params, degree_bound):
    """Raise :class:`DegenerateSpecialization` unless ``params`` is generic
    for every partition dominated by ``degree_bound``.

    Generic means pairwise distinct eigenvalues on the support closure and no
    vanishing denominator in any closed evaluation or norm.
    """
    # Imported here since both modules build on this one.
    from bcnqkit import closedforms, ops_polys

    check_admissible(params)
    support = enumerate_below(degree_bound)

    seen = {}

    for mu in support:
        value = ops_polys.eigenvalue(params.family, mu, params)

        if value in seen:
            raise DegenerateSpecialization(
                f"Eigenvalues of {seen[value].parts} and {mu.parts} coincide"
            )
        seen[value] = mu

    try:
        for mu in support:
            for point_kind in closedforms.POINT_KINDS[params.family]:
                closedforms.closed_evaluation(
                    closedforms.ClosedFormRequest(
                        params.family, "evaluation", mu, params, point_kind
                    )
                )

            norm = closedforms.closed_norm(
                closedforms.ClosedFormRequest(params.family, "norm", mu, params)
            )

            if norm == 0:
                raise DegenerateSpecialization(f"The norm of {mu.parts} vanishes")
    except VanishingDenominator as err:
        raise DegenerateSpecialization(str(err)) from err

    return params


def _draw_rational(rng, low, high, signed=False):
    denominator = int(rng.integers(low, high))
    numerator = int(rng.integers(1, high))

    if signed and rng.integers(0, 2):
        numerator = -numerator

    return Fraction(numerator, denominator)


def _draw_base(rng):
    denominator = int(rng.integers(2, 10))

    return Fraction(int(rng.integers(1, denominator)), denominator)


def _draw(rng, family):
    values = {"q": _draw_base(rng), "t": _draw_base(rng)}

    for name in "abcd":
        value = _draw_rational(rng, 1, 8, signed=True)

        if name in LIVE_PARAMETERS[family]:
            values[name] = value

    return ParamPoint(family=family, **values)


def sample_generic_params(seed, family, degree_bound):
    """A certified generic parameter point drawn deterministically from
    ``seed``.

    :param seed: seed of the :func:`numpy.random.default_rng` generator
    :param family: ``"mk"``, ``"little"`` or ``"big"``
    :param degree_bound: the largest partition the caller will use
    :type degree_bound: :class:`~bcnqkit.combinatorics.Partition`
    :raises CertificationFailure: when no point passes within the retry budget
    """
    check_family(family)
    rng = np.random.default_rng(seed)

    for attempt in range(MAX_ATTEMPTS):
        params = _draw(rng, family)

        try:
            certify(params, degree_bound)
        except DegenerateSpecialization as err:
            logger.debug("Seed %s: rejected %s (%s)", seed, params.to_json(), err)
            continue

        return params.replace(rejections=attempt)

    raise CertificationFailure(
        f"No generic {family} point for seed {seed} within {MAX_ATTEMPTS} draws "
        f"up to {degree_bound.parts}"
    )


#  ----------------------
#  Orbits
#  ----------------------


def check_basis_kind(basis_kind):
    if basis_kind not in BASIS_KINDS:
        raise ValueError(f"Unknown basis kind {basis_kind!r}")

    return basis_kind


@functools.lru_cache(maxsize=CACHE_SIZE)
def orbit(exponents, basis_kind):
    """The orbit of an exponent vector under S_n (polynomial case) or the
    hyperoctahedral group (Laurent case), sorted."""
    exponents = tuple(exponents)

    if basis_kind == LAURENT:
        choices = [(e, -e) if e else (0,) for e in exponents]
        signed = it.product(*choices)
    else:
        signed = [exponents]

    return tuple(sorted({p for s in signed for p in it.permutations(s)}))


def dominant(exponents, basis_kind):
    if basis_kind == LAURENT:
        return tuple(sorted((abs(e) for e in exponents), reverse=True))

    if any(e < 0 for e in exponents):
        raise ValueError(f"Negative exponent in a polynomial: {exponents}")

    return tuple(sorted(exponents, reverse=True))


@functools.lru_cache(maxsize=CACHE_SIZE)
def _monomial_product(lam, mu, basis_kind):
    """Integer structure constants of m_lam * m_mu."""
    lam_orbit = orbit(lam, basis_kind)
    mu_orbit = set(orbit(mu, basis_kind))

    candidates = {
        dominant(tuple(x + y for x, y in zip(alpha, mu)), basis_kind)
        for alpha in lam_orbit
    }
    result = {}

    for nu in candidates:
        count = sum(
            1
            for alpha in lam_orbit
            if tuple(x - y for x, y in zip(nu, alpha)) in mu_orbit
        )

        if count:
            result[nu] = count

    return tuple(sorted(result.items()))


def monomial_value(exponents, basis_kind, point):
    """m_lambda(point) as an exact orbit sum."""
    total = Fraction(0)

    for alpha in orbit(tuple(exponents), basis_kind):
        total += math.prod((x**e for x, e in zip(point, alpha)), start=Fraction(1))

    return total


#  ----------------------
#  Symmetric polynomials
#  ----------------------


class SymPoly:
    """A symmetric (Laurent) polynomial in z_1, ..., z_n.

    :param basis_kind: :data:`LAURENT` or :data:`POLYNOMIAL`
    :param n: number of variables
    :param coeffs: mapping from :class:`~bcnqkit.combinatorics.Partition` (or
                   plain tuples) to rational coefficients
    """

    __slots__ = ("basis_kind", "n", "_terms")

    def __init__(self, basis_kind, n, coeffs=None):
        self.basis_kind = check_basis_kind(basis_kind)
        self.n = int(n)
        terms = {}

        for mu, value in (coeffs or {}).items():
            if not isinstance(mu, Partition):
                mu = Partition(tuple(mu), self.n)

            if mu.n != self.n:
                raise ValueError(f"{mu!r} does not have {self.n} parts")

            value = rat(value)

            if value:
                terms[mu] = terms.get(mu, Fraction(0)) + value

                if not terms[mu]:
                    del terms[mu]

        self._terms = types.MappingProxyType(terms)

    @classmethod
    def monomial(cls, basis_kind, mu, coeff=1):
        return cls(basis_kind, mu.n, {mu: coeff})

    @classmethod
    def constant(cls, basis_kind, n, value=1):
        return cls(basis_kind, n, {Partition((), n): value})

    @property
    def terms(self):
        return self._terms

    def support(self):
        return tuple(sorted(self._terms))

    def coefficient(self, mu):
        if not isinstance(mu, Partition):
            mu = Partition(tuple(mu), self.n)

        return self._terms.get(mu, Fraction(0))

    def leading(self):
        """The graded-lexicographically largest partition in the support."""
        return max(self._terms) if self._terms else None

    def is_zero(self):
        return not self._terms

    def _check_compatible(self, other):
        if not isinstance(other, SymPoly):
            raise TypeError(f"Expected a SymPoly, got {type(other).__name__}")

        if (self.basis_kind, self.n) != (other.basis_kind, other.n):
            raise ValueError(
                f"Incompatible polynomials: {self.basis_kind}/{self.n} and "
                f"{other.basis_kind}/{other.n}"
            )

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented

        return (self.basis_kind, self.n, dict(self._terms)) == (
            other.basis_kind,
            other.n,
            dict(other._terms),
        )

    def __add__(self, other):
        self._check_compatible(other)
        terms = collections.Counter(dict(self._terms))
        terms.update(dict(other._terms))

        return SymPoly(self.basis_kind, self.n, terms)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = rat(factor)

        return SymPoly(
            self.basis_kind, self.n, {mu: factor * c for mu, c in self._terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, SymPoly):
            return sympoly_mul(self, other)

        return self.scale(other)

    __rmul__ = scale

    def __call__(self, *point):
        return sympoly_eval(self, point)

    def __repr__(self):
        terms = " + ".join(
            f"{format_rat(c)}*m{mu.parts}" for mu, c in sorted(self._terms.items())
        )
        return f"SymPoly({self.basis_kind}, n={self.n}: {terms or '0'})"

    def to_json(self):
        return {
            "basis": self.basis_kind,
            "n": self.n,
            "terms": [
                {"mu": mu.to_json(), "coeff": format_rat(c)}
                for mu, c in sorted(self._terms.items())
            ],
        }

    @classmethod
    def from_json(cls, data):
        n = int(data["n"])

        return cls(
            data["basis"],
            n,
            {
                Partition(tuple(term["mu"]), n): Fraction(term["coeff"])
                for term in data["terms"]
            },
        )


def sympoly_mul(p, r):
    """Exact product by orbit convolution of the monomial factors."""
    p._check_compatible(r)
    result = collections.defaultdict(Fraction)

    for lam, c_lam in p.terms.items():
        for mu, c_mu in r.terms.items():
            for nu, count in _monomial_product(lam.parts, mu.parts, p.basis_kind):
                result[nu] += c_lam * c_mu * count

    return SymPoly(p.basis_kind, p.n, result)


def sympoly_eval(p, point):
    """Exact value of ``p`` at ``point``."""
    point = tuple(rat(x) for x in point)

    if len(point) != p.n:
        raise ValueError(f"Expected {p.n} coordinates, got {len(point)}")

    if p.basis_kind == LAURENT and any(x == 0 for x in point):
        raise ValueError(f"Laurent polynomials cannot be evaluated at {point}")

    return sum(
        (c * monomial_value(mu.parts, p.basis_kind, point) for mu, c in p.terms.items()),
        Fraction(0),
    )


#  ----------------------
#  Evaluation points
#  ----------------------

POINT_KINDS = (
    "a_t_rho",
    "t_rho",
    "zero",
    "inv_qb_t_rho",
    "c_t_rho",
    "minus_d_t_rho",
    "c_over_qa_t_negrho",
    "minus_d_over_qb_t_negrho",
    "q_delta_image",
)


def _scaled(scale, base, exponents):
    return tuple(scale * base**e for e in exponents)


def substitute_geometric_point(kind, params, n, d=None):
    """Coordinates of the special evaluation points.

    Coordinate ``i`` (1-based) of ``t^rho`` is ``t^(n-i)``; of ``t^-rho`` it
    is ``t^(i-n)``.
    """
    a, b, c, d_, q, t = (params.a, params.b, params.c, params.d, params.q, params.t)
    rho = [n - i for i in range(1, n + 1)]
    negrho = [-e for e in rho]

    try:
        if kind == "a_t_rho":
            return _scaled(a, t, rho)
        if kind == "t_rho":
            return _scaled(Fraction(1), t, rho)
        if kind == "zero":
            return (Fraction(0),) * n
        if kind == "inv_qb_t_rho":
            return _scaled(1 / (q * b), t, negrho)
        if kind == "c_t_rho":
            return _scaled(c, t, rho)
        if kind == "minus_d_t_rho":
            return _scaled(-d_, t, rho)
        if kind == "c_over_qa_t_negrho":
            return _scaled(c / (q * a), t, negrho)
        if kind == "minus_d_over_qb_t_negrho":
            return _scaled(-d_ / (q * b), t, negrho)
        if kind == "q_delta_image":
            if d is None or d < 2 * n:
                raise ValueError(f"q_delta_image needs d >= 2n, got d={d}, n={n}")

            return _scaled(q ** (d - 2 * n + 1), q, [2 * e for e in rho])
    except ZeroDivisionError as err:
        raise VanishingDenominator(
            f"Point {kind} is undefined at {params.to_json()}"
        ) from err

    raise ValueError(f"Unknown point kind {kind!r}")
