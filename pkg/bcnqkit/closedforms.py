#!/usr/bin/env python
"""Closed product formulas for evaluations and quadratic norms, the
algebraic functional h and the pairings built on it, and the terminating
basic hypergeometric series the rank-one polynomials are written with.

Every product is evaluated factor by factor through :class:`_ProductFormula`
so that a vanishing denominator is reported together with the factor that
caused it.
"""
# Standard Library
import dataclasses
import logging
import math
from fractions import Fraction

# Third Party
from sympy import QQ, ring

# This Module
from bcnqkit import exactalg, ops_polys
from bcnqkit.combinatorics import Partition, dominance_leq, q_pochhammer
from bcnqkit.errors import VanishingDenominator
from bcnqkit.exactalg import FAMILY_BASIS, SymPoly

logger = logging.getLogger(__name__)

POINT_KINDS = {
    "mk": ("a_t_rho",),
    "little": ("zero", "t_rho", "inv_qb_t_rho"),
    "big": (
        "c_t_rho",
        "minus_d_t_rho",
        "c_over_qa_t_negrho",
        "minus_d_over_qb_t_negrho",
    ),
}
KINDS = ("evaluation", "norm", "delta")


class _ProductFormula:
    """Accumulates a product of factors, checking denominators as it goes."""

    def __init__(self, name):
        self.name = name
        self.value = Fraction(1)

    def times(self, factor):
        self.value *= factor
        return self

    def over(self, factor, label):
        if factor == 0:
            raise VanishingDenominator(f"{self.name}: the factor {label} vanishes")

        self.value /= factor
        return self

    def pochhammers(self, arguments, q, length):
        for x in arguments:
            self.times(q_pochhammer(x, q, length))

        return self


@dataclasses.dataclass(frozen=True)
class ClosedFormRequest:
    family: str
    kind: str
    lam: Partition
    params: exactalg.ParamPoint
    point_kind: str = None

    def __post_init__(self):
        exactalg.check_family(self.family)

        if self.kind not in KINDS:
            raise ValueError(f"Unknown closed form kind {self.kind!r}")

        if self.kind == "evaluation" and self.point_kind not in POINT_KINDS[self.family]:
            raise ValueError(
                f"Point {self.point_kind!r} is not an evaluation point of the "
                f"{self.family} family, expected one of {POINT_KINDS[self.family]}"
            )

    @property
    def n(self):
        return self.lam.n


def _pairs(lam):
    n = lam.n

    for j in range(1, n + 1):
        for k in range(j + 1, n + 1):
            yield 2 * n - j - k, k - j, lam[j - 1] + lam[k - 1], lam[j - 1] - lam[k - 1]


def _pair_product(formula, lam, params, scale, shift, minus_scale):
    """prod_{j<k} (scale t^{e+shift})_{l_j+l_k} (minus_scale t^{f+shift})_{l_j-l_k}
    / ((scale t^e)_{l_j+l_k} (minus_scale t^f)_{l_j-l_k}) with e = 2n-j-k and
    f = k-j."""
    q, t = params.q, params.t

    for e, f, plus, minus in _pairs(lam):
        formula.times(q_pochhammer(scale * t ** (e + shift), q, plus))
        formula.times(q_pochhammer(minus_scale * t ** (f + shift), q, minus))
        formula.over(q_pochhammer(scale * t**e, q, plus), f"pair factor e={e}")
        formula.over(q_pochhammer(minus_scale * t**f, q, minus), f"pair factor f={f}")

    return formula


def _rows(lam):
    """(i, n-i, lambda_i) for i = 1..n."""
    for i, part in enumerate(lam.parts, start=1):
        yield i, lam.n - i, part


def delta_factor(lam, params):
    """The double product Delta_lambda(a, b; q, t)."""
    formula = _ProductFormula("Delta")
    _pair_product(formula, lam, params, params.q * params.a * params.b, 1, 1)

    return formula.value


def _little_core(formula, lam, params, first, extra=()):
    """Delta times prod_i (first t^s, qab t^s, extra t^s)_{l_i} / (qab t^{2s})_{2 l_i}."""
    q, t, a, b = params.q, params.t, params.a, params.b
    formula.times(delta_factor(lam, params))

    for i, s, part in _rows(lam):
        formula.pochhammers(
            [x * t**s for x in (first, q * a * b) + tuple(extra)], q, part
        )
        formula.over(q_pochhammer(q * a * b * t ** (2 * s), q, 2 * part), f"row {i}")

    return formula


def _koornwinder_evaluation(lam, params, with_power=True):
    q, t = params.q, params.t
    a, b, c, d = params.a, params.b, params.c, params.d
    u = a * b * c * d / q
    formula = _ProductFormula("evaluation at a t^rho")

    for i, s, part in _rows(lam):
        formula.pochhammers([x * t**s for x in (a * b, a * c, a * d, u)], q, part)
        formula.over(q_pochhammer(u * t ** (2 * s), q, 2 * part), f"row {i}")

        if with_power:
            formula.over((a * t**s) ** part, f"(a t^{s})^{part}")

    return _pair_product(formula, lam, params, u, 1, 1).value


def closed_evaluation(req):
    """Closed form of P_lambda at one of the family's special points."""
    lam, params, kind = req.lam, req.params, req.point_kind
    q = params.q
    a, b, c, d = params.a, params.b, params.c, params.d

    if req.family == "mk":
        return _koornwinder_evaluation(lam, params)

    formula = _ProductFormula(f"{req.family} evaluation at {kind}")

    try:
        if kind in ("zero", "c_t_rho", "c_over_qa_t_negrho"):
            first = q * a
        else:
            first = q * b

        if kind in ("c_t_rho", "minus_d_over_qb_t_negrho"):
            extra = [-q * b * c / d]
        elif kind in ("minus_d_t_rho", "c_over_qa_t_negrho"):
            extra = [-q * a * d / c]
        else:
            extra = []

        _little_core(formula, lam, params, first, extra)

        for _, s, part in _rows(lam):
            formula.times(_row_power(kind, params, s, part))
    except VanishingDenominator:
        raise
    except ZeroDivisionError as err:
        raise VanishingDenominator(f"{formula.name}: {err}") from err

    return formula.value


def _row_power(kind, params, s, m):
    """The monomial factor of row i (with s = n-i, m = lambda_i) in the
    q-Jacobi evaluation formulas."""
    q, t = params.q, params.t
    a, b, c, d = params.a, params.b, params.c, params.d

    if kind == "zero":
        return (-1) ** m * q ** math.comb(m, 2)
    if kind == "t_rho":
        return (a * q**m * t**s) ** m
    if kind == "inv_qb_t_rho":
        return (q * b * t**s) ** -m
    if kind == "c_t_rho":
        return d**m * q ** math.comb(m, 2)
    if kind == "minus_d_t_rho":
        return (-c) ** m * q ** math.comb(m, 2)
    if kind == "c_over_qa_t_negrho":
        return (c / (q * a) * t**-s) ** m

    return (-d / (q * b) * t**-s) ** m


def _norm_little_plus(lam, params):
    formula = _ProductFormula("N_L^+")

    return _little_core(formula, lam, params, params.q * params.a).value


def _norm_little_minus(lam, params):
    q, t, a, b = params.q, params.t, params.a, params.b
    formula = _ProductFormula("N_L^-")

    for i, s, part in _rows(lam):
        formula.pochhammers([q * t**s, q * b * t**s], q, part)
        formula.over(q_pochhammer(q * q * a * b * t ** (2 * s), q, 2 * part), f"row {i}")

    return _pair_product(formula, lam, params, q * q * a * b, -1, q).value


def _norm_koornwinder(lam, params):
    q, t = params.q, params.t
    a, b, c, d = params.a, params.b, params.c, params.d
    formula = _ProductFormula("N_K^-")

    for i, s, part in _rows(lam):
        formula.pochhammers([x * t**s for x in (q, b * c, b * d, c * d)], q, part)
        formula.over(q_pochhammer(a * b * c * d * t ** (2 * s), q, 2 * part), f"row {i}")

    minus = _pair_product(formula, lam, params, a * b * c * d, -1, q).value

    return _koornwinder_evaluation(lam, params, with_power=False) * minus


def closed_norm(req):
    """The quadratic norm N_K, N_L or N_B of P_lambda."""
    lam, params = req.lam, req.params
    q, t = params.q, params.t
    a, b, c, d = params.a, params.b, params.c, params.d

    try:
        if req.family == "mk":
            return _norm_koornwinder(lam, params)

        core = _norm_little_plus(lam, params) * _norm_little_minus(lam, params)

        if req.family == "little":
            return (
                q**lam.norm_squared
                * a**lam.weight
                * t ** (2 * lam.rho_pairing)
                * core
            )

        formula = _ProductFormula("N_B")
        formula.times((c * d) ** lam.weight * t**lam.rho_pairing * core)

        for _, s, part in _rows(lam):
            formula.times(q ** math.comb(part, 2))
            formula.pochhammers(
                [-q * b * c / d * t**s, -q * a * d / c * t**s], q, part
            )

        return formula.value
    except ZeroDivisionError as err:
        if isinstance(err, VanishingDenominator):
            raise
        raise VanishingDenominator(f"N_{req.family}: {err}") from err


def closed_form(req):
    if req.kind == "evaluation":
        return closed_evaluation(req)

    if req.kind == "norm":
        return closed_norm(req)

    return delta_factor(req.lam, req.params)


#  ----------------------
#  Functionals
#  ----------------------


def h_functional(family, p, params, degree_bound=None, basis=None):
    """The linear functional with h(1) = 1 killing every P_mu, mu != 0.

    :param degree_bound: when given, the support of ``p`` must lie below it
    :param basis: a :class:`~bcnqkit.ops_polys.PolynomialBasis` to reuse
    """
    if basis is None:
        basis = ops_polys.PolynomialBasis(family, params, p.n)

    if degree_bound is not None:
        outside = [mu for mu in p.support() if not dominance_leq(mu, degree_bound)]

        if outside:
            raise ValueError(
                f"Support {[mu.parts for mu in outside]} exceeds {degree_bound.parts}"
            )

    return basis.h_functional(p)


def inner_product(family, p1, p2, params, basis=None):
    """<p1, p2> = h(p1 p2); the conjugation is trivial on rational
    coefficients."""
    if basis is None:
        basis = ops_polys.PolynomialBasis(family, params, p1.n)

    return basis.inner_product(p1, p2)


#  ----------------------
#  Terminating series
#  ----------------------


def basic_hypergeometric(numerators, denominators, q, z, terms):
    """The partial sum up to ``terms`` of the r-phi-s series.

    Lower parameters may be zero, as in 3phi2(...; qb, 0; q, q).
    """
    q, z = Fraction(q), Fraction(z)
    r, s = len(numerators), len(denominators)
    total = Fraction(0)

    for k in range(terms + 1):
        term = z**k

        for x in numerators:
            term *= q_pochhammer(x, q, k)

        for x in tuple(denominators) + (q,):
            value = q_pochhammer(x, q, k)

            if value == 0:
                raise VanishingDenominator(f"({x}; {q})_{k} vanishes")

            term /= value

        term *= ((-1) ** k * q ** math.comb(k, 2)) ** (1 + s - r)
        total += term

    return total


def terminating_series_sides(identity, m, free_params, q):
    """The series and product sides of a terminating summation formula.

    ``q_vandermonde`` takes ``(a, c)``, ``q_saalschutz`` takes ``(a, b, c)``.
    """
    q = Fraction(q)
    qm = q**-m

    if identity == "q_vandermonde":
        a, c = (Fraction(x) for x in free_params)
        lhs = basic_hypergeometric((qm, a), (c,), q, q, m)
        rhs = q_pochhammer(c / a, q, m) / q_pochhammer(c, q, m) * a**m
    elif identity == "q_saalschutz":
        a, b, c = (Fraction(x) for x in free_params)
        lhs = basic_hypergeometric((qm, a, b), (c, a * b * q ** (1 - m) / c), q, q, m)
        rhs = (
            q_pochhammer(c / a, q, m)
            * q_pochhammer(c / b, q, m)
            / (q_pochhammer(c, q, m) * q_pochhammer(c / (a * b), q, m))
        )
    else:
        raise ValueError(f"Unknown identity {identity!r}")

    return lhs, rhs


def verify_terminating_series(identity, m, free_params, q):
    """Compare a terminating summation formula with its product side."""
    lhs, rhs = terminating_series_sides(identity, m, free_params, q)

    if lhs != rhs:
        logger.warning("%s fails at m=%s: %s != %s", identity, m, lhs, rhs)

    return lhs == rhs


#  ----------------------
#  Rank one
#  ----------------------

SERIES_FORMS = {
    "mk": ("4phi3",),
    "little": ("3phi2", "2phi1"),
    "big": ("3phi2",),
}


def _qq(x):
    x = Fraction(x)
    return QQ(x.numerator, x.denominator)


def _rat(c):
    return Fraction(int(c.numerator), int(c.denominator))


def _series_polynomial(R, z, numerators, denominators, q, m, argument):
    """sum_k prod(num; q)_k / prod(den; q)_k / (q; q)_k * q^k * argument(k)."""
    total = R.zero

    for k in range(m + 1):
        scalar = q**k

        for x in numerators:
            scalar *= q_pochhammer(x, q, k)

        for x in denominators + (q,):
            scalar /= q_pochhammer(x, q, k)

        total += argument(k) * _qq(scalar)

    return total


def one_variable_series(family, form, m, params):
    """The rank-one polynomial P_m expanded from its terminating series.

    :param form: ``"3phi2"`` or ``"2phi1"`` for the little family,
                 ``"3phi2"`` for the big one, ``"4phi3"`` for Askey-Wilson
    :returns: a :class:`~bcnqkit.exactalg.SymPoly` with ``n = 1``
    """
    if form not in SERIES_FORMS[exactalg.check_family(family)]:
        raise ValueError(f"No {form} series for the {family} family")

    q, a, b, c, d = params.q, params.a, params.b, params.c, params.d
    R, z = ring("z", QQ)
    qm, top = q**-m, q ** (m + 1) * a * b

    def shifted(x):
        """(x z; q)_k as a polynomial in z."""
        return lambda k: math.prod(
            (R.one - z * _qq(x * q**s) for s in range(k)), start=R.one
        )

    if family == "little" and form == "3phi2":
        scale = q_pochhammer(q * b, q, m) / (q_pochhammer(top, q, m) * (q * b) ** m)
        series = _series_polynomial(R, z, (qm, top), (q * b, 0), q, m, shifted(q * b))
    elif family == "little":
        scale = (
            q_pochhammer(q * a, q, m)
            / q_pochhammer(top, q, m)
            * (-1) ** m
            * q ** math.comb(m, 2)
        )
        # (qz)^k = q^k z^k, the q^k is already part of every term
        series = _series_polynomial(R, z, (qm, top), (q * a,), q, m, lambda k: z**k)
    elif family == "big":
        scale = (
            q_pochhammer(q * a, q, m)
            * q_pochhammer(-q * a * d / c, q, m)
            / (q_pochhammer(top, q, m) * (q * a / c) ** m)
        )
        series = _series_polynomial(
            R, z, (qm, top), (q * a, -q * a * d / c), q, m, shifted(q * a / c)
        )
    else:
        u = q ** (m - 1) * a * b * c * d
        scale = (
            q_pochhammer(a * b, q, m)
            * q_pochhammer(a * c, q, m)
            * q_pochhammer(a * d, q, m)
            / (a**m * q_pochhammer(u, q, m))
        )

        # z^m (az, a/z; q)_k = z^(m-k) prod_s (1 - a q^s z)(z - a q^s)
        def laurent(k):
            result = z ** (m - k)

            for s in range(k):
                result *= (R.one - z * _qq(a * q**s)) * (z - _qq(a * q**s))

            return result

        series = _series_polynomial(
            R, z, (qm, u), (a * b, a * c, a * d), q, m, laurent
        )
        return _laurent_to_sympoly(series * _qq(scale), m)

    coeffs = {
        Partition((monom[0],), 1): _rat(value)
        for monom, value in (series * _qq(scale)).terms()
    }

    return SymPoly(FAMILY_BASIS[family], 1, coeffs)


def _laurent_to_sympoly(shifted_series, m):
    """Read z^m f(z) as the symmetric Laurent polynomial f."""
    values = {monom[0] - m: _rat(c) for monom, c in shifted_series.terms()}

    for j, value in values.items():
        if values.get(-j, Fraction(0)) != value:
            raise ValueError(f"The Askey-Wilson series is not symmetric at z^{j}")

    return SymPoly(
        FAMILY_BASIS["mk"],
        1,
        {Partition((j,), 1): value for j, value in values.items() if j >= 0},
    )


def one_variable_evaluation(family, point_kind, m, params):
    """The rank-one evaluation displays, coded apart from the multivariable
    products."""
    q, a, b, c, d = params.q, params.a, params.b, params.c, params.d

    def poch(*xs, length=m):
        return math.prod((q_pochhammer(x, q, length) for x in xs), start=Fraction(1))

    key = (family, point_kind)

    try:
        if key == ("mk", "a_t_rho"):
            return poch(a * b, a * c, a * d) / (
                a**m * poch(q ** (m - 1) * a * b * c * d)
            )
        if key == ("little", "zero"):
            return (
                poch(q * a, q * a * b)
                / poch(q * a * b, length=2 * m)
                * (-1) ** m
                * q ** math.comb(m, 2)
            )
        if key == ("little", "t_rho"):
            return poch(q * b, q * a * b) / poch(q * a * b, length=2 * m) * (q**m * a) ** m
        if key == ("little", "inv_qb_t_rho"):
            return poch(q * b, q * a * b) / (
                poch(q * a * b, length=2 * m) * (q * b) ** m
            )
        if key == ("big", "c_over_qa_t_negrho"):
            return (
                poch(q * a, -q * a * d / c)
                / poch(q ** (m + 1) * a * b)
                * (c / (q * a)) ** m
            )
        if key == ("big", "c_t_rho"):
            return (
                poch(q * a, q * a * b, -q * b * c / d)
                / poch(q * a * b, length=2 * m)
                * d**m
                * q ** math.comb(m, 2)
            )
        if key == ("big", "minus_d_t_rho"):
            return (
                poch(-q * a * d / c, q * b, q * a * b)
                / poch(q * a * b, length=2 * m)
                * (-c) ** m
                * q ** math.comb(m, 2)
            )
        if key == ("big", "minus_d_over_qb_t_negrho"):
            return (
                poch(q * b, -q * b * c / d, q * a * b)
                / poch(q * a * b, length=2 * m)
                * (-d / (q * b)) ** m
            )
    except ZeroDivisionError as err:
        raise VanishingDenominator(
            f"Rank-one {family} evaluation at {point_kind}: {err}"
        ) from err

    raise ValueError(f"No rank-one evaluation of the {family} family at {point_kind!r}")
