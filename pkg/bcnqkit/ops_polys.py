#!/usr/bin/env python
"""The three second order q-difference operators and their monic
eigenpolynomials.

The image of a monomial under an operator is recovered by exact
interpolation: the operator is evaluated at more rational points than there
are candidate monomials and the overdetermined linear system is solved over
the rationals with :mod:`sympy`. An inconsistent system means the image is
not a symmetric polynomial with the expected support.
"""
# Standard Library
import dataclasses
import logging
from fractions import Fraction

# Third Party
import numpy as np
import sympy

# This Module
from bcnqkit import combinatorics, exactalg
from bcnqkit.combinatorics import Partition, dominance_leq, enumerate_below
from bcnqkit.errors import (
    DegenerateSpecialization,
    NonPolynomialImage,
    TriangularityError,
)
from bcnqkit.exactalg import FAMILY_BASIS, SymPoly

logger = logging.getLogger(__name__)

INTERPOLATION_SEED = 20240229
EXTRA_POINTS = 4


#  ----------------------
#  Eigenvalues
#  ----------------------


def eigenvalue(family, lam, params):
    """E_lambda for Koornwinder's operator (``"mk"``) or the shared
    q-Jacobi eigenvalue (``"little"`` and ``"big"``).

    :param lam: the partition, its ``n`` is the number of variables
    :raises ValueError: at q = 0
    """
    exactalg.check_family(family)
    q, t, n = params.q, params.t, lam.n

    if q == 0:
        raise ValueError("The eigenvalue is undefined at q=0")

    if family == "mk":
        scale = params.a * params.b * params.c * params.d / q
    else:
        scale = q * params.a * params.b

    return sum(
        (
            scale * t ** (2 * n - j - 1) * (q**part - 1) + t ** (j - 1) * (q**-part - 1)
            for j, part in enumerate(lam.parts, start=1)
        ),
        Fraction(0),
    )


#  ----------------------
#  Operator coefficients
#  ----------------------


def _koornwinder_phi(z, j, params):
    zj = z[j]
    result = Fraction(1)

    for e in (params.a, params.b, params.c, params.d):
        result *= 1 - e * zj

    result /= (1 - zj * zj) * (1 - params.q * zj * zj)

    for l, zl in enumerate(z):
        if l != j:
            result *= (1 - params.t * zl * zj) * (1 - params.t * zj / zl)
            result /= (1 - zl * zj) * (1 - zj / zl)

    return result


def _interaction(z, j, t, ascending):
    result = Fraction(1)
    zj = z[j]

    for l, zl in enumerate(z):
        if l == j:
            continue

        if ascending:
            result *= (zl - t * zj) / (zl - zj)
        else:
            result *= (zj - t * zl) / (zj - zl)

    return result


def _coefficients(family, z, j, params):
    """The pair (phi^+_j(z), phi^-_j(z)) multiplying T_j - 1 and
    T_j^{-1} - 1."""
    q, t, a, b, n = params.q, params.t, params.a, params.b, len(z)

    if family == "mk":
        return (
            _koornwinder_phi(z, j, params),
            _koornwinder_phi(tuple(1 / x for x in z), j, params),
        )

    zj = z[j]
    up = q * t ** (n - 1) * _interaction(z, j, t, ascending=True)
    down = _interaction(z, j, t, ascending=False)

    if family == "little":
        return up * a * (b - 1 / (q * zj)), down * (1 - 1 / zj)

    c, d = params.c, params.d

    return (
        up * (a - c / (q * zj)) * (b + d / (q * zj)),
        down * (1 - c / zj) * (1 + d / zj),
    )


def _shift(z, j, factor):
    return z[:j] + (z[j] * factor,) + z[j + 1 :]


def _apply_at_point(family, exponents, params, z):
    """(D m)(z) for the monomial symmetric function with dominant
    exponents ``exponents``."""
    basis_kind = FAMILY_BASIS[family]
    centre = exactalg.monomial_value(exponents, basis_kind, z)
    total = Fraction(0)

    for j in range(len(z)):
        up, down = _coefficients(family, z, j, params)
        total += up * (
            exactalg.monomial_value(exponents, basis_kind, _shift(z, j, params.q))
            - centre
        )
        total += down * (
            exactalg.monomial_value(exponents, basis_kind, _shift(z, j, 1 / params.q))
            - centre
        )

    return total


def _sample_points(rng, n, count):
    """Distinct rational points with pairwise distinct coordinates."""
    while True:
        point = tuple(
            Fraction(int(rng.integers(2, 60)), int(rng.integers(1, 50)))
            * (1 if rng.integers(0, 2) else -1)
            for _ in range(n)
        )

        if len(set(point)) == n:
            count -= 1
            yield point

        if count <= 0:
            return


def _solve(family, exponents, params, candidates):
    basis_kind = FAMILY_BASIS[family]
    n = len(exponents)
    needed = len(candidates) + EXTRA_POINTS
    rng = np.random.default_rng(INTERPOLATION_SEED + sum(exponents))
    rows, rhs = [], []

    for z in _sample_points(rng, n, 40 * needed):
        try:
            value = _apply_at_point(family, exponents, params, z)
            row = [
                exactalg.monomial_value(mu.parts, basis_kind, z) for mu in candidates
            ]
        except ZeroDivisionError:
            continue

        rows.append([sympy.Rational(x.numerator, x.denominator) for x in row])
        rhs.append(sympy.Rational(value.numerator, value.denominator))

        if len(rows) == needed:
            break
    else:
        raise NonPolynomialImage(
            f"Could not find {needed} regular interpolation points for m{exponents}"
        )

    try:
        solution, free = sympy.Matrix(rows).gauss_jordan_solve(sympy.Matrix(rhs))
    except ValueError as err:
        raise NonPolynomialImage(
            f"The {family} image of m{exponents} is not in the span of "
            f"{len(candidates)} monomials"
        ) from err

    if free.shape[0]:
        raise NonPolynomialImage(
            f"Interpolation of the {family} image of m{exponents} is underdetermined"
        )

    return [Fraction(int(x.p), int(x.q)) for x in solution]


def apply_operator(family, p, params):
    """Exact image of ``p`` under the family's difference operator.

    :type p: :class:`~bcnqkit.exactalg.SymPoly`
    :raises NonPolynomialImage: when the image leaves the symmetric
                                polynomials
    :raises TriangularityError: when the image of m_nu has support outside
                                the partitions dominated by nu
    """
    exactalg.check_family(family)

    if p.basis_kind != FAMILY_BASIS[family]:
        raise ValueError(
            f"The {family} operator acts on {FAMILY_BASIS[family]}, got {p.basis_kind}"
        )

    result = SymPoly(p.basis_kind, p.n)

    for nu, coeff in p.terms.items():
        result = result + _monomial_image(family, nu, params).scale(coeff)

    return result


def _monomial_image(family, nu, params):
    if nu.is_zero():
        return SymPoly(FAMILY_BASIS[family], nu.n)

    candidates = combinatorics.partitions_up_to(nu.n, nu.weight)
    values = _solve(family, nu.parts, params, candidates)
    image = SymPoly(FAMILY_BASIS[family], nu.n, dict(zip(candidates, values)))

    for mu in image.support():
        if not dominance_leq(mu, nu):
            raise TriangularityError(
                f"The {family} image of m{nu.parts} contains m{mu.parts}"
            )

    logger.debug(
        "Applied the %s operator to m%s: %d terms", family, nu.parts, len(image.terms)
    )

    return image


#  ----------------------
#  Operator matrices
#  ----------------------


@dataclasses.dataclass(frozen=True)
class OperatorMatrix:
    """The triangular matrix of the operator on the monomials below
    ``top``; ``entries[nu][mu]`` is the coefficient of m_mu in D m_nu."""

    family: str
    top: Partition
    order: tuple
    entries: dict

    def entry(self, nu, mu):
        return self.entries[nu].get(mu, Fraction(0))

    def to_json(self):
        return {
            "family": self.family,
            "top": self.top.to_json(),
            "order": [mu.to_json() for mu in self.order],
            "rows": [
                [exactalg.format_rat(self.entry(nu, mu)) for mu in self.order]
                for nu in self.order
            ],
        }


def build_operator_matrix(family, top, params, images=None):
    """Apply the operator to every m_nu with nu dominated by ``top``.

    :param images: optional cache mapping nu to its image, filled in place
    :raises TriangularityError: on an off-triangular entry or a diagonal
                                entry different from the eigenvalue
    """
    order = enumerate_below(top)
    images = {} if images is None else images
    entries = {}

    for nu in order:
        if nu not in images:
            images[nu] = _monomial_image(family, nu, params)

        entries[nu] = dict(images[nu].terms)
        diagonal = entries[nu].get(nu, Fraction(0))
        expected = eigenvalue(family, nu, params)

        if diagonal != expected:
            raise TriangularityError(
                f"Diagonal entry {diagonal} of m{nu.parts} differs from the "
                f"eigenvalue {expected}"
            )

    return OperatorMatrix(family, top, order, entries)


class PolynomialBasis:
    """Operator images and eigenpolynomials for one family and parameter
    point, built lazily and cached for the lifetime of a job.

    :param family: ``"mk"``, ``"little"`` or ``"big"``
    :param params: a certified :class:`~bcnqkit.exactalg.ParamPoint`
    :param n: number of variables
    """

    def __init__(self, family, params, n):
        self.family = exactalg.check_family(family)
        self.params = params
        self.n = n
        self.basis_kind = FAMILY_BASIS[family]
        self._images = {}
        self._polynomials = {}

    def image(self, nu):
        if nu not in self._images:
            self._images[nu] = _monomial_image(self.family, nu, self.params)

        return self._images[nu]

    def apply(self, p):
        """:func:`apply_operator` through the cached monomial images."""
        result = SymPoly(self.basis_kind, self.n)

        for nu, coeff in p.terms.items():
            result = result + self.image(nu).scale(coeff)

        return result

    def matrix(self, top):
        return build_operator_matrix(self.family, top, self.params, self._images)

    def polynomial(self, lam):
        if lam in self._polynomials:
            logger.debug("Cache hit for P%s", lam.parts)
            return self._polynomials[lam]

        logger.debug("Constructing the %s polynomial P%s", self.family, lam.parts)
        matrix = self.matrix(lam)
        target = eigenvalue(self.family, lam, self.params)
        eigenvalues = {mu: matrix.entry(mu, mu) for mu in matrix.order}
        coeffs = {lam: Fraction(1)}

        for mu in reversed(matrix.order):
            if mu == lam:
                continue

            gap = target - eigenvalues[mu]

            if gap == 0:
                raise DegenerateSpecialization(
                    f"Eigenvalues of {lam.parts} and {mu.parts} coincide"
                )

            total = sum(
                (c * matrix.entry(nu, mu) for nu, c in coeffs.items() if nu != mu),
                Fraction(0),
            )
            if total:
                coeffs[mu] = total / gap

        result = SymPoly(self.basis_kind, self.n, coeffs)
        self._polynomials[lam] = result

        return result

    def expand(self, p):
        """Coefficients of ``p`` in the basis of eigenpolynomials."""
        remainder = p
        expansion = {}

        while not remainder.is_zero():
            top = remainder.leading()
            coeff = remainder.coefficient(top)
            expansion[top] = coeff
            remainder = remainder - self.polynomial(top).scale(coeff)

        return expansion

    def h_functional(self, p):
        return self.expand(p).get(Partition((), self.n), Fraction(0))

    def inner_product(self, p1, p2):
        return self.h_functional(p1 * p2)


def compute_polynomial(family, lam, params, basis=None):
    """The monic eigenpolynomial P_lambda of the family's operator.

    :raises DegenerateSpecialization: when E_lambda equals E_mu for some
                                      mu below lambda
    """
    if basis is None:
        basis = PolynomialBasis(family, params, lam.n)

    return basis.polynomial(lam)


#  ----------------------
#  Parameter symmetries
#  ----------------------


def negate_params(params):
    """(a, b, c, d) -> (-a, -b, -c, -d)."""
    return params.replace(a=-params.a, b=-params.b, c=-params.c, d=-params.d)


def permute_mk_params(params, perm):
    """Permute (a, b, c, d); ``perm[i]`` is the index of the new i-th
    parameter."""
    values = (params.a, params.b, params.c, params.d)

    if sorted(perm) != [0, 1, 2, 3]:
        raise ValueError(f"{perm} is not a permutation of 0..3")

    return params.replace(**dict(zip("abcd", (values[i] for i in perm))))


def sign_twisted(p):
    """Multiply the coefficient of m_mu by (-1)^|mu|, i.e. p(-z)."""
    return SymPoly(
        p.basis_kind,
        p.n,
        {mu: c * (-1) ** mu.weight for mu, c in p.terms.items()},
    )


def is_eigenfunction(family, p, lam, params):
    image = apply_operator(family, p, params)

    return image == p.scale(eigenvalue(family, lam, params))
