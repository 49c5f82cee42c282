# Standard Library
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit import ops_polys
from bcnqkit.combinatorics import Partition
from bcnqkit.errors import DegenerateSpecialization
from bcnqkit.exactalg import LAURENT, POLYNOMIAL, SymPoly
from bcnqkit.ops_polys import (
    PolynomialBasis,
    apply_operator,
    build_operator_matrix,
    compute_polynomial,
    eigenvalue,
)

ONE_VARIABLE = Partition((1,), 1)
CONSTANT = Partition((0,), 1)


def test_eigenvalue_of_zero(mk_params, little_params):
    assert eigenvalue("mk", Partition((), 2), mk_params) == 0
    assert eigenvalue("little", Partition((), 3), little_params) == 0


def test_eigenvalue_mk_one_variable(mk_params):
    a, b, c, d, q = mk_params.a, mk_params.b, mk_params.c, mk_params.d, mk_params.q

    assert eigenvalue("mk", ONE_VARIABLE, mk_params) == a * b * c * d / q * (
        q - 1
    ) + (1 / q - 1)


def test_eigenvalue_little_two_variables(little_params):
    a, b, q, t = little_params.a, little_params.b, little_params.q, little_params.t

    assert eigenvalue("little", Partition((1, 0), 2), little_params) == q * a * b * t**2 * (
        q - 1
    ) + (1 / q - 1)


def test_eigenvalue_undefined_at_q_zero(little_params):
    with pytest.raises(ValueError):
        eigenvalue("little", ONE_VARIABLE, little_params.replace(q=Fraction(0)))


@pytest.mark.parametrize("family", ["mk", "little", "big"])
def test_constants_are_killed(family, mk_params, little_params, big_params):
    params = {"mk": mk_params, "little": little_params, "big": big_params}[family]
    basis_kind = LAURENT if family == "mk" else POLYNOMIAL

    assert apply_operator(family, SymPoly.constant(basis_kind, 2), params).is_zero()


def test_little_operator_on_z(little_params):
    image = apply_operator(
        "little", SymPoly.monomial(POLYNOMIAL, ONE_VARIABLE), little_params
    )

    assert image.coefficient(ONE_VARIABLE) == Fraction(23, 24)
    assert image.coefficient(CONSTANT) == Fraction(-3, 4)


def test_operator_refuses_wrong_basis(little_params):
    with pytest.raises(ValueError):
        apply_operator("little", SymPoly.constant(LAURENT, 1), little_params)


def test_operator_matrix_of_zero(little_params):
    matrix = build_operator_matrix("little", Partition((0, 0), 2), little_params)

    assert matrix.order == (Partition((0, 0), 2),)
    assert matrix.to_json()["rows"] == [["0"]]


def test_operator_matrix_is_triangular(mk_params):
    matrix = build_operator_matrix("mk", ONE_VARIABLE, mk_params)

    assert matrix.order == (CONSTANT, ONE_VARIABLE)
    assert matrix.entry(CONSTANT, CONSTANT) == 0
    assert matrix.entry(CONSTANT, ONE_VARIABLE) == 0
    assert matrix.entry(ONE_VARIABLE, ONE_VARIABLE) == eigenvalue(
        "mk", ONE_VARIABLE, mk_params
    )


def test_operator_matrix_two_variables(little_params):
    top = Partition((1, 1), 2)
    matrix = build_operator_matrix("little", top, little_params)

    assert [mu.parts for mu in matrix.order] == [(0, 0), (1, 0), (1, 1)]
    assert matrix.entry(Partition((1, 0), 2), top) == 0


def test_little_polynomial_one_variable(little_params):
    p = compute_polynomial("little", ONE_VARIABLE, little_params)

    assert p == SymPoly(POLYNOMIAL, 1, {ONE_VARIABLE: 1, CONSTANT: Fraction(-18, 23)})


def test_askey_wilson_polynomial_one_variable(mk_params):
    p = compute_polynomial("mk", ONE_VARIABLE, mk_params)

    assert p == SymPoly(LAURENT, 1, {ONE_VARIABLE: 1, CONSTANT: Fraction(-25, 27)})


@pytest.mark.parametrize("family", ["mk", "little", "big"])
def test_polynomial_of_zero_is_one(family, mk_params, little_params, big_params):
    params = {"mk": mk_params, "little": little_params, "big": big_params}[family]
    p = compute_polynomial(family, Partition((), 2), params)

    assert p == SymPoly.constant(p.basis_kind, 2)


@pytest.mark.parametrize(
    "family, parts",
    [("little", (1, 1)), ("little", (2, 0)), ("big", (1, 0)), ("mk", (1, 0))],
)
def test_eigenfunctions(family, parts, mk_params, little_params, big_params):
    params = {"mk": mk_params, "little": little_params, "big": big_params}[family]
    lam = Partition(parts, 2)
    p = compute_polynomial(family, lam, params)

    assert p.coefficient(lam) == 1
    assert ops_polys.is_eigenfunction(family, p, lam, params)


def test_eigenvalue_collision(little_params):
    # E_(1) vanishes when qab(q - 1) = 1 - 1/q, i.e. q^2 ab = 1
    params = little_params.replace(a=Fraction(4), b=Fraction(1))

    with pytest.raises(DegenerateSpecialization):
        compute_polynomial("little", ONE_VARIABLE, params)


def test_h_functional(little_params):
    basis = PolynomialBasis("little", little_params, 1)
    z = SymPoly.monomial(POLYNOMIAL, ONE_VARIABLE)

    assert basis.h_functional(SymPoly.constant(POLYNOMIAL, 1)) == 1
    assert basis.h_functional(basis.polynomial(ONE_VARIABLE)) == 0
    assert basis.h_functional(z) == Fraction(18, 23)


def test_expand(little_params):
    basis = PolynomialBasis("little", little_params, 1)
    z = SymPoly.monomial(POLYNOMIAL, ONE_VARIABLE)

    assert basis.expand(z) == {ONE_VARIABLE: 1, CONSTANT: Fraction(18, 23)}


def test_sign_symmetry(mk_params):
    p = compute_polynomial("mk", ONE_VARIABLE, mk_params)
    negated = compute_polynomial("mk", ONE_VARIABLE, ops_polys.negate_params(mk_params))

    assert negated == ops_polys.sign_twisted(p).scale(-1)


@pytest.mark.parametrize("perm", [(1, 0, 2, 3), (1, 2, 3, 0), (3, 2, 1, 0)])
def test_parameter_symmetry(mk_params, perm):
    lam = Partition((1, 0), 2)
    p = compute_polynomial("mk", lam, mk_params)
    permuted = ops_polys.permute_mk_params(mk_params, perm)

    assert compute_polynomial("mk", lam, permuted) == p


def test_permutation_must_be_complete(mk_params):
    with pytest.raises(ValueError):
        ops_polys.permute_mk_params(mk_params, (0, 0, 1, 2))
