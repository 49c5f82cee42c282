#!/usr/bin/env python
"""Dimension formulas for spherical representations of Grassmannians.

The generalized dimension D_q(lambda; a, b; t) is the ratio of the squared
evaluation of the little q-Jacobi polynomial at zero and its quadratic norm.
Its product form interpolates the quantum (generic q), the classical
(q -> 1) and the p-adic (q = 0) dimensions. Products are built as
:class:`~bcnqkit.qproducts.QProduct` so that both degenerations are taken
factor by factor.
"""
# Standard Library
import dataclasses
import itertools as it
import logging
import math
from fractions import Fraction

# Third Party
import sympy
from sympy.combinatorics import Permutation

# This Module
from bcnqkit import closedforms, exactalg
from bcnqkit.combinatorics import (
    enumerate_contained,
    fundamental,
    partitions_up_to,
    q_binomial,
    q_multinomial,
    q_pochhammer,
)
from bcnqkit.errors import VanishingDenominator
from bcnqkit.qproducts import QProduct, mono, product

logger = logging.getLogger(__name__)

SPACES = ("generalized", "padic", "complex", "real", "quantum", "weyl", "q_weyl")
SPACE_PARAMETERS = {
    "generalized": ("a", "b", "q", "t"),
    "padic": ("t",),
    "complex": (),
    "real": (),
    "quantum": ("q",),
    "weyl": (),
    "q_weyl": ("q",),
}

Q = mono(q=1)
T = mono(t=1)


def check_rank(n, d):
    if n < 0 or 2 * n > d:
        raise ValueError(f"Need 0 <= n <= d/2, got n={n}, d={d}")


#  ----------------------
#  Generalized dimensions
#  ----------------------


def generalized_product(lam):
    """D_q(lambda) as a product of v_i, w^+_{j,k} and w^-_{j,k} in the
    symbols a, b, q, t."""
    n = lam.n
    factors = [QProduct.monomial(mono(a=-lam.weight, t=-2 * lam.rho_pairing))]

    for i, m in enumerate(lam.parts, start=1):
        s = n - i
        factors.append(
            QProduct.pochhammer(mono(a=1, t=s), Q, m)
            * QProduct.pochhammer(mono(a=1, b=1, q=-1, t=s), Q, m)
            * QProduct.factor(mono(a=1, b=1, q=2 * m - 1, t=2 * s))
            / (
                QProduct.pochhammer(mono(q=1, t=s), Q, m)
                * QProduct.pochhammer(mono(b=1, t=s), Q, m)
                * QProduct.factor(mono(a=1, b=1, q=-1, t=2 * s))
            )
        )

    for j, k in it.combinations(range(1, n + 1), 2):
        e, f = 2 * n - j - k, k - j
        plus, minus = lam[j - 1] + lam[k - 1], lam[j - 1] - lam[k - 1]
        factors.append(
            QProduct.pochhammer(mono(a=1, b=1, q=-1, t=e + 1), Q, plus)
            * QProduct.factor(mono(a=1, b=1, q=plus - 1, t=e))
            / (
                QProduct.pochhammer(mono(a=1, b=1, t=e - 1), Q, plus)
                * QProduct.factor(mono(a=1, b=1, q=-1, t=e))
            )
        )
        factors.append(
            QProduct.pochhammer(mono(t=f + 1), Q, minus)
            * QProduct.factor(mono(q=minus, t=f))
            / (
                QProduct.pochhammer(mono(q=1, t=f - 1), Q, minus)
                * QProduct.factor(mono(t=f))
            )
        )

    return product(factors)


def _specialize(qproduct, a, b, q, t):
    if q == 0:
        return qproduct.at_q_zero(a=a, b=b, t=t)

    return qproduct.evaluate(a=a, b=b, q=q, t=t)


def generalized_dim_product(lam, a, b, q, t):
    """D_q(lambda) from its product form; q = 0 is the constant term."""
    return _specialize(generalized_product(lam), a, b, q, t)


def generalized_fundamental_product(r, n):
    if not 0 <= r <= n:
        raise ValueError(f"Need 0 <= r <= n, got r={r}, n={n}")

    numerator = [
        mono(a=1, b=1, q=1, t=2 * n - r - 1),
        mono(t=n + 1 - r),
        mono(a=1, t=n - r),
        mono(a=1, b=1, t=2 * n - r),
    ]
    denominator = [Q, T, mono(b=1, t=n - r), mono(a=1, b=1, t=n - r - 1)]

    return product(
        [QProduct.pochhammer(x, T, r) for x in numerator]
        + [QProduct.pochhammer(x, T, r).inverse() for x in denominator]
        + [
            QProduct.factor(mono(a=1, b=1, t=2 * n - 2 * r - 1)),
            QProduct.factor(mono(a=1, b=1, t=2 * n - 1)).inverse(),
            QProduct.monomial(mono(a=-r, t=r * (r + 1 - 2 * n))),
        ]
    )


def generalized_dim_fundamental(r, a, b, q, t, n):
    """The single product for D_q(omega_r)."""
    return _specialize(generalized_fundamental_product(r, n), a, b, q, t)


def generalized_dim_via_little(lam, a, b, q, t):
    """P^L_lambda(0)^2 / N_L(lambda) at the shifted parameters (a/q, b/q)."""
    if q == 0:
        raise ValueError("The little q-Jacobi ratio needs q != 0")

    params = exactalg.ParamPoint(
        a=Fraction(a) / q, b=Fraction(b) / q, q=q, t=t, family="little"
    )
    value = closedforms.closed_evaluation(
        closedforms.ClosedFormRequest("little", "evaluation", lam, params, "zero")
    )
    norm = closedforms.closed_norm(
        closedforms.ClosedFormRequest("little", "norm", lam, params)
    )

    if norm == 0:
        raise VanishingDenominator(f"N_L{lam.parts} vanishes")

    return value**2 / norm


#  ----------------------
#  q = 0
#  ----------------------


def _ratio(numerator, denominator, label):
    if denominator == 0:
        raise VanishingDenominator(f"{label} has a vanishing denominator")

    return Fraction(numerator) / denominator


def q0_factors(lam, a, b, t):
    """D_0(lambda) assembled from the constant terms of v_i and w^{+-}_{j,k}."""
    a, b, t = Fraction(a), Fraction(b), Fraction(t)
    n = lam.n

    if a == 0 or t == 0:
        raise VanishingDenominator("D_0 needs a != 0 and t != 0")

    value = a**-lam.weight * t ** (-2 * lam.rho_pairing)

    for i, m in enumerate(lam.parts, start=1):
        if m == 0:
            continue

        s = n - i
        value *= _ratio(1 - a * t**s, 1 - b * t**s, f"v_{i}") * t**-s

        if m >= 2:
            value *= 1 - a * b * t**s

    for j, k in it.combinations(range(1, n + 1), 2):
        e, f = 2 * n - j - k, k - j
        plus, minus = lam[j - 1] + lam[k - 1], lam[j - 1] - lam[k - 1]

        if plus:
            kronecker = 1 if plus == 1 else 0
            value *= t * _ratio(
                1 - a * b * t ** (e + 1 - kronecker),
                1 - a * b * t ** (e - 1),
                f"w+_{j},{k}",
            )

        if minus:
            value *= _ratio(1 - t ** (f + 1), 1 - t**f, f"w-_{j},{k}")

    return value


def _conjugate_columns(lam):
    first = lam.length
    second = sum(1 for p in lam.parts if p >= 2)

    return first, second


def padic_dim_generic(lam, a, b, t):
    """D_0(lambda; a, b; t) in its closed form."""
    a, b, t = Fraction(a), Fraction(b), Fraction(t)
    n = lam.n
    l1, l2 = _conjugate_columns(lam)

    numerator = (
        q_multinomial(n, lam.dprime, t)
        * q_pochhammer(a * t ** (n - l1), t, l1)
        * q_pochhammer(a * b * t ** (2 * n - l1 - l2), t, l1 + l2)
        * (1 - a * b * t ** (2 * n - 2 * l1 - 1))
    )
    denominator = (
        q_pochhammer(b * t ** (n - l1), t, l1)
        * q_pochhammer(a * b * t ** (n - l1 - 1), t, l1)
        * (1 - a * b * t ** (2 * n - 1))
    )

    return a**-lam.weight * t ** (-2 * lam.rho_pairing) * _ratio(
        numerator, denominator, f"D_0{lam.parts}"
    )


def padic_fundamental_generic(r, a, b, t, n):
    """D_0(omega_r; a, b; t)."""
    return generalized_fundamental_product(r, n).at_q_zero(a=a, b=b, t=t)


def padic_dim_closed(lam, t, d):
    """Dimension of the spherical representation of the p-adic Grassmannian
    Gr(n, d) attached to ``lam``, with t the reciprocal residue field size."""
    t = Fraction(t)
    n = lam.n
    check_rank(n, d)
    l1, l2 = _conjugate_columns(lam)

    numerator = (
        q_multinomial(n, lam.dprime, t)
        * q_pochhammer(t ** (d - l1 - l2 + 2), t, l1 + l2)
        * (1 - t ** (d - 2 * l1 + 1))
    )
    denominator = q_pochhammer(t ** (n - l1 + 1), t, l1) * (1 - t ** (d + 1))
    exponent = -(d - 2 * n + 1) * lam.weight - 2 * lam.rho_pairing

    return t**exponent * _ratio(numerator, denominator, f"padic{lam.parts}")


def padic_fundamental(r, t, d):
    """(d over r)_{1/t} - (d over r-1)_{1/t}."""
    if r < 1:
        raise ValueError(f"Need r >= 1, got {r}")

    inverse = 1 / Fraction(t)

    return q_binomial(d, r, inverse) - q_binomial(d, r - 1, inverse)


def padic_projective(k, t, d):
    """Dimension of V_k for the projective space, k >= 2."""
    if k < 2:
        raise ValueError(f"The projective space formula needs k >= 2, got {k}")

    t = Fraction(t)

    return t ** (-(d - 1) * k) * (1 - t ** (d - 1)) * (1 - t**d) / (1 - t)


def grassmannian_cardinality(n, d, k, t):
    """|Gr(k^n, k^d; O)| = t^{-n(d-n)(k-1)} (d over n)_{1/t}."""
    t = Fraction(t)

    return t ** (-n * (d - n) * (k - 1)) * q_binomial(d, n, 1 / t)


def padic_sum_identity(n, d, k, t):
    """Sum of the p-adic dimensions over the box k^n against the
    cardinality of the finite Grassmannian."""
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}")

    check_rank(n, d)
    lhs = sum(
        (padic_dim_closed(lam, t, d) for lam in enumerate_contained(k, n)),
        Fraction(0),
    )
    rhs = grassmannian_cardinality(n, d, k, t)

    if lhs != rhs:
        logger.warning("Sum identity fails at n=%s, d=%s, k=%s, t=%s", n, d, k, t)

    return lhs == rhs


def geometric_sum_identity(d, k, t):
    if k < 1:
        raise ValueError(f"Need k >= 1, got {k}")

    t = Fraction(t)
    s = 1 - d
    lhs = (
        1
        + t**s * (1 - t ** (d - 1)) / (1 - t)
        + (1 - t ** (d - 1))
        * (1 - t**d)
        / (1 - t)
        * sum((t ** (s * m) for m in range(2, k + 1)), Fraction(0))
    )

    return lhs == t ** (s * k) * (1 - t**d) / (1 - t)


#  ----------------------
#  Classical dimensions
#  ----------------------


def check_dominant(mu):
    mu = tuple(int(x) for x in mu)

    if any(mu[i] < mu[i + 1] for i in range(len(mu) - 1)):
        raise ValueError(f"{mu} is not dominant")

    return mu


def weyl_dim(mu):
    """prod_{i<j} (mu_i - mu_j + j - i) / (j - i)."""
    mu = check_dominant(mu)
    value = Fraction(1)

    for i, j in it.combinations(range(len(mu)), 2):
        value *= Fraction(mu[i] - mu[j] + j - i, j - i)

    return value


def natural_embedding(lam, d):
    """(lambda_1, ..., lambda_n, 0^{d-2n}, -lambda_n, ..., -lambda_1)."""
    check_rank(lam.n, d)

    return lam.parts + (0,) * (d - 2 * lam.n) + tuple(-p for p in reversed(lam.parts))


def complex_dim(lam, d):
    """Dimension of the spherical representation of the complex
    Grassmannian Gr(n, d)."""
    n = lam.n
    check_rank(n, d)
    rho = [n - i for i in range(1, n + 1)]
    shift = d - 2 * n + 1
    value = Fraction(1)

    for part, r in zip(lam.parts, rho):
        value *= Fraction(shift + 2 * (part + r), shift + 2 * r)

        for j in range(1, d - 2 * n + 1):
            value *= Fraction(j + part + r, j + r) ** 2

    for j, k in it.combinations(range(n), 2):
        plus = lam[j] + lam[k] + rho[j] + rho[k]
        value *= Fraction(shift + plus, shift + rho[j] + rho[k]) ** 2
        value *= Fraction(lam[j] - lam[k] + rho[j] - rho[k], rho[j] - rho[k]) ** 2

    return value


def real_dim(lam, d):
    """Dimension for the real Grassmannian: the factorwise limit x -> 1 of
    D_{x^2}(lambda; x^{d-2n+1}, x; x)."""
    check_rank(lam.n, d)

    return generalized_product(lam).limit_at_one(a=d - 2 * lam.n + 1, b=1, q=2, t=1)


#  ----------------------
#  Quantum dimensions
#  ----------------------


def quantum_product(lam, d):
    """The closed product for Dim_q(V_lambda) in the single symbol q."""
    n = lam.n
    check_rank(n, d)
    rho = [n - i for i in range(1, n + 1)]
    shift = d - 2 * n + 1
    q2 = mono(q=2)
    factors = [
        QProduct.monomial(
            mono(q=2 * (2 * n - d - 1) * lam.weight - 4 * lam.rho_pairing)
        )
    ]

    for part, r in zip(lam.parts, rho):
        factors += [
            QProduct.pochhammer(mono(q=2 * (1 + part + r)), q2, d - 2 * n) ** 2,
            QProduct.pochhammer(mono(q=2 * (1 + r)), q2, d - 2 * n).inverse() ** 2,
            QProduct.factor(mono(q=2 * (shift + 2 * (part + r)))),
            QProduct.factor(mono(q=2 * (shift + 2 * r))).inverse(),
        ]

    for j, k in it.combinations(range(n), 2):
        factors += [
            QProduct.factor(mono(q=2 * (shift + lam[j] + lam[k] + rho[j] + rho[k])))
            ** 2,
            QProduct.factor(mono(q=2 * (lam[j] - lam[k] + rho[j] - rho[k]))) ** 2,
            QProduct.factor(mono(q=2 * (shift + rho[j] + rho[k]))).inverse() ** 2,
            QProduct.factor(mono(q=2 * (rho[j] - rho[k]))).inverse() ** 2,
        ]

    return product(factors)


def quantum_dim(lam, d, q):
    return quantum_product(lam, d).evaluate(q=q)


def quantum_dim_via_generalized(lam, d, q, via="product"):
    """D_{q^2}(lambda; q^{2(d-2n+1)}, q^2; q^2) from the product form or the
    little q-Jacobi ratio."""
    q = Fraction(q)
    args = (lam, q ** (2 * (d - 2 * lam.n + 1)), q**2, q**2, q**2)

    if via == "product":
        return generalized_dim_product(*args)

    return generalized_dim_via_little(*args)


def quantum_dim_fundamental(r, d, q):
    """q^{2r(d-r)} (d over r)^2_{q^-2} - q^{2(r-1)(d-r+1)} (d over r-1)^2_{q^-2}."""
    q = Fraction(q)
    base = q**-2

    return (
        q ** (2 * r * (d - r)) * q_binomial(d, r, base) ** 2
        - q ** (2 * (r - 1) * (d - r + 1)) * q_binomial(d, r - 1, base) ** 2
    )


def complex_dim_via_quantum_limit(lam, d):
    return quantum_product(lam, d).limit_at_one(q=1)


#  ----------------------
#  q-Weyl
#  ----------------------


def q_weyl_product(mu):
    mu = check_dominant(mu)
    d = len(mu)
    exponent = -sum((d + 1 - 2 * i) * m for i, m in enumerate(mu, start=1))
    factors = [QProduct.monomial(mono(q=exponent))]

    for i, j in it.combinations(range(d), 2):
        factors.append(
            QProduct.factor(mono(q=2 * (mu[i] - mu[j] + j - i)))
            / QProduct.factor(mono(q=2 * (j - i)))
        )

    return product(factors)


def q_weyl_dim(mu, q):
    return q_weyl_product(mu).evaluate(q=q)


def q_weyl_limit(mu):
    return q_weyl_product(mu).limit_at_one(q=1)


def _alternant(exponents, point):
    d = len(point)
    total = Fraction(0)

    for sigma in it.permutations(range(d)):
        term = Fraction(Permutation(list(sigma)).signature())

        for i in range(d):
            term *= point[i] ** exponents[sigma[i]]

        total += term

    return total


def schur_at_principal(mu, q):
    """s_mu at (q^{d-1}, q^{d-3}, ..., q^{1-d}) as a ratio of alternants.

    Negative parts are removed by shifting with the last part and
    multiplying by the corresponding power of the coordinate product.
    """
    mu = check_dominant(mu)
    d = len(mu)
    q = Fraction(q)
    point = [q ** (d + 1 - 2 * i) for i in range(1, d + 1)]
    shift = mu[-1] if d else 0
    nu = [m - shift for m in mu]
    staircase = [d - j for j in range(1, d + 1)]

    denominator = _alternant(staircase, point)

    if denominator == 0:
        raise VanishingDenominator(f"The Vandermonde vanishes at q={q}")

    value = _alternant([x + y for x, y in zip(nu, staircase)], point) / denominator

    return value * math.prod(point, start=Fraction(1)) ** shift


#  ----------------------
#  Tables
#  ----------------------


@dataclasses.dataclass(frozen=True)
class DimRecord:
    space: str
    n: int
    d: int
    lam: tuple
    params: dict
    value: Fraction
    method: str
    crosscheck_method: str
    crosscheck_ok: bool

    @property
    def approx(self):
        """20 significant digits, for reading only."""
        value = sympy.Rational(self.value.numerator, self.value.denominator)

        return str(value.evalf(20))

    def to_json(self):
        return {
            "space": self.space,
            "n": self.n,
            "d": self.d,
            "lambda": list(self.lam),
            "params": {k: exactalg.format_rat(v) for k, v in self.params.items()},
            "value": exactalg.format_rat(self.value),
            "approx": self.approx,
            "method": self.method,
            "crosscheck_method": self.crosscheck_method,
            "crosscheck_ok": self.crosscheck_ok,
        }


def _is_positive_integer(value):
    return value.denominator == 1 and value > 0


def _dim_row(space, lam, d, params):
    """(value, method, crosscheck method, crosscheck ok) for one weight."""
    if space == "generalized":
        a, b, q, t = (params[x] for x in "abqt")
        value = generalized_dim_product(lam, a, b, q, t)

        if q == 0:
            return value, "product_form", "closed_form", (
                value == padic_dim_generic(lam, a, b, t)
            )

        check = generalized_dim_via_little(lam, a, b, q, t)
        return value, "product_form", "little_qjacobi_ratio", value == check

    if space == "padic":
        t = params["t"]
        value = padic_dim_closed(lam, t, d)
        check = generalized_dim_product(lam, t ** (d - 2 * lam.n + 1), t, 0, t)
        return value, "closed_form", "product_form", value == check

    if space == "complex":
        value = complex_dim(lam, d)
        check = weyl_dim(natural_embedding(lam, d))
        return value, "closed_form", "weyl_formula", value == check

    if space == "real":
        value = real_dim(lam, d)
        return value, "factorwise_limit", "integrality", _is_positive_integer(value)

    if space == "quantum":
        q = params["q"]
        value = quantum_dim(lam, d, q)

        if lam == fundamental(lam.length, lam.n) and lam.length:
            check = quantum_dim_fundamental(lam.length, d, q)
            return value, "closed_form", "q_binomial_difference", value == check

        check = quantum_dim_via_generalized(lam, d, q)
        return value, "closed_form", "product_form", value == check

    if space == "weyl":
        value = weyl_dim(lam.parts)
        return value, "closed_form", "factorwise_limit", value == q_weyl_limit(lam.parts)

    q = params["q"]
    value = q_weyl_dim(lam.parts, q)
    return value, "closed_form", "schur_alternant", (
        value == schur_at_principal(lam.parts, q)
    )


def dim_table(space, n, d, params, max_weight):
    """Records for every weight of size at most ``max_weight``, sorted
    graded-lexicographically.

    :param params: mapping with the live parameters of ``space`` (see
                   :data:`SPACE_PARAMETERS`)
    :returns: `list` of :class:`DimRecord`
    """
    if space not in SPACES:
        raise ValueError(f"Unknown space {space!r}, expected one of {SPACES}")

    missing = [x for x in SPACE_PARAMETERS[space] if x not in params]

    if missing:
        raise ValueError(f"The {space} table needs the parameters {missing}")

    live = {x: Fraction(params[x]) for x in SPACE_PARAMETERS[space]}

    if space in ("weyl", "q_weyl"):
        weights = partitions_up_to(d, max_weight)
    else:
        check_rank(n, d)
        weights = partitions_up_to(n, max_weight)

    records = []

    for lam in weights:
        value, method, check_method, ok = _dim_row(space, lam, d, live)

        if not ok:
            logger.warning("%s crosscheck %s fails at %s", space, check_method, lam)

        records.append(
            DimRecord(space, n, d, lam.parts, live, value, method, check_method, ok)
        )

    return records
