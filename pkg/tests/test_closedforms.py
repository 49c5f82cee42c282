# Standard Library
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit import closedforms
from bcnqkit.closedforms import (
    ClosedFormRequest,
    basic_hypergeometric,
    closed_evaluation,
    closed_form,
    closed_norm,
    delta_factor,
    one_variable_evaluation,
    one_variable_series,
    verify_terminating_series,
)
from bcnqkit.combinatorics import Partition, q_pochhammer
from bcnqkit.errors import VanishingDenominator
from bcnqkit.exactalg import LAURENT, POLYNOMIAL, SymPoly, substitute_geometric_point
from bcnqkit.ops_polys import PolynomialBasis, compute_polynomial

ONE_VARIABLE = Partition((1,), 1)
CONSTANT = Partition((0,), 1)


def params_for(family, mk_params, little_params, big_params):
    return {"mk": mk_params, "little": little_params, "big": big_params}[family]


def test_request_validation(little_params):
    with pytest.raises(ValueError):
        ClosedFormRequest("little", "evaluation", ONE_VARIABLE, little_params, "a_t_rho")

    with pytest.raises(ValueError):
        ClosedFormRequest("little", "moment", ONE_VARIABLE, little_params)


def test_delta_factor(little_params):
    q, a, b, t = little_params.q, little_params.a, little_params.b, little_params.t

    assert delta_factor(Partition((3,), 1), little_params) == 1
    assert delta_factor(Partition((), 3), little_params) == 1
    assert delta_factor(Partition((1, 0), 2), little_params) == (
        (1 - q * a * b * t**2) * (1 - t**2) / ((1 - q * a * b * t) * (1 - t))
    )


def test_delta_kind_dispatches(little_params):
    lam = Partition((2, 1), 2)
    req = ClosedFormRequest("little", "delta", lam, little_params)

    assert closed_form(req) == delta_factor(lam, little_params)


@pytest.mark.parametrize("family", ["mk", "little", "big"])
def test_zero_partition(family, mk_params, little_params, big_params):
    params = params_for(family, mk_params, little_params, big_params)
    lam = Partition((), 2)

    for kind in closedforms.POINT_KINDS[family]:
        req = ClosedFormRequest(family, "evaluation", lam, params, kind)
        assert closed_evaluation(req) == 1

    assert closed_norm(ClosedFormRequest(family, "norm", lam, params)) == 1


def test_little_evaluations_one_variable(little_params):
    expected = {"zero": Fraction(-18, 23), "t_rho": Fraction(5, 23)}
    expected["inv_qb_t_rho"] = Fraction(120, 23)

    for kind, value in expected.items():
        req = ClosedFormRequest("little", "evaluation", ONE_VARIABLE, little_params, kind)
        assert closed_evaluation(req) == value


def test_big_evaluation_one_variable(big_params):
    q, a, b, c, d = (big_params.q, big_params.a, big_params.b, big_params.c, big_params.d)
    m = 2
    expected = (
        q_pochhammer(q * a, q, m)
        * q_pochhammer(-q * a * d / c, q, m)
        / q_pochhammer(q ** (m + 1) * a * b, q, m)
        * (c / (q * a)) ** m
    )
    req = ClosedFormRequest(
        "big", "evaluation", Partition((m,), 1), big_params, "c_over_qa_t_negrho"
    )

    assert closed_evaluation(req) == expected


def test_little_norm_one_variable(little_params):
    q, a, b = little_params.q, little_params.a, little_params.b
    expected = (
        q
        * a
        * q_pochhammer(q * a, q, 1)
        * q_pochhammer(q * a * b, q, 1)
        / q_pochhammer(q * a * b, q, 2)
        * q_pochhammer(q, q, 1)
        * q_pochhammer(q * b, q, 1)
        / q_pochhammer(q * q * a * b, q, 2)
    )
    norm = closed_norm(ClosedFormRequest("little", "norm", ONE_VARIABLE, little_params))

    assert norm == expected == Fraction(2160, 24863)


def test_mk_norm_one_variable(mk_params):
    q, a, b, c, d = (mk_params.q, mk_params.a, mk_params.b, mk_params.c, mk_params.d)
    abcd = a * b * c * d
    expected = (
        q_pochhammer(a * b, q, 1)
        * q_pochhammer(a * c, q, 1)
        * q_pochhammer(a * d, q, 1)
        * q_pochhammer(abcd / q, q, 1)
        / q_pochhammer(abcd / q, q, 2)
        * q_pochhammer(q, q, 1)
        * q_pochhammer(b * c, q, 1)
        * q_pochhammer(b * d, q, 1)
        * q_pochhammer(c * d, q, 1)
        / q_pochhammer(abcd, q, 2)
    )

    assert closed_norm(ClosedFormRequest("mk", "norm", ONE_VARIABLE, mk_params)) == expected


def test_vanishing_denominator(little_params):
    # (qab t^0; q)_2 contains 1 - q^2 ab
    params = little_params.replace(a=Fraction(4), b=Fraction(1))

    with pytest.raises(VanishingDenominator):
        closed_evaluation(
            ClosedFormRequest("little", "evaluation", ONE_VARIABLE, params, "zero")
        )


@pytest.mark.parametrize("family", ["mk", "little", "big"])
@pytest.mark.parametrize("parts", [(1,), (2,), (1, 0), (1, 1), (2, 1)])
def test_evaluations_match_polynomials(
    family, parts, mk_params, little_params, big_params
):
    params = params_for(family, mk_params, little_params, big_params)
    lam = Partition(parts, len(parts))
    p = compute_polynomial(family, lam, params)

    for kind in closedforms.POINT_KINDS[family]:
        point = substitute_geometric_point(kind, params, lam.n)
        req = ClosedFormRequest(family, "evaluation", lam, params, kind)

        assert p(*point) == closed_evaluation(req)


def test_orthogonality_one_variable(little_params):
    basis = PolynomialBasis("little", little_params, 1)
    p1 = basis.polynomial(ONE_VARIABLE)
    p2 = basis.polynomial(Partition((2,), 1))

    assert basis.inner_product(p1, p1) == Fraction(2160, 24863)
    assert basis.inner_product(p1, p2) == 0
    assert closedforms.h_functional("little", SymPoly.constant(POLYNOMIAL, 1), little_params) == 1


@pytest.mark.parametrize("family", ["mk", "little", "big"])
def test_norms_match_functional(family, mk_params, little_params, big_params):
    params = params_for(family, mk_params, little_params, big_params)
    basis = PolynomialBasis(family, params, 2)

    for parts in [(1, 0), (1, 1)]:
        lam = Partition(parts, 2)
        p = basis.polynomial(lam)
        norm = closed_norm(ClosedFormRequest(family, "norm", lam, params))

        assert closedforms.inner_product(family, p, p, params, basis=basis) == norm


def test_h_functional_checks_support(little_params):
    z2 = SymPoly.monomial(POLYNOMIAL, Partition((2,), 1))

    with pytest.raises(ValueError):
        closedforms.h_functional("little", z2, little_params, degree_bound=ONE_VARIABLE)


def test_basic_hypergeometric_first_terms():
    q = Fraction(1, 2)

    assert basic_hypergeometric((Fraction(3),), (), q, Fraction(5), 0) == 1
    # 1phi0(a;;q,z) = 1 + (1 - a) z / (1 - q) + ...
    assert basic_hypergeometric((Fraction(3),), (), q, Fraction(5), 1) == 1 + (
        -2 * 5
    ) / (1 - q)


@pytest.mark.parametrize(
    "identity, free, q",
    [
        ("q_vandermonde", (2, 3), Fraction(1, 2)),
        ("q_saalschutz", (2, 5, 3), Fraction(1, 3)),
    ],
)
@pytest.mark.parametrize("m", range(6))
def test_terminating_series(identity, free, q, m):
    assert verify_terminating_series(identity, m, [Fraction(x) for x in free], q)


def test_unknown_identity():
    with pytest.raises(ValueError):
        verify_terminating_series("q_gauss", 1, (2,), Fraction(1, 2))


@pytest.mark.parametrize("form", ["3phi2", "2phi1"])
def test_little_series_one_variable(form, little_params):
    expected = SymPoly(POLYNOMIAL, 1, {ONE_VARIABLE: 1, CONSTANT: Fraction(-18, 23)})

    assert one_variable_series("little", form, 1, little_params) == expected


def test_askey_wilson_series_one_variable(mk_params):
    expected = SymPoly(LAURENT, 1, {ONE_VARIABLE: 1, CONSTANT: Fraction(-25, 27)})

    assert one_variable_series("mk", "4phi3", 1, mk_params) == expected


@pytest.mark.parametrize("family", ["mk", "little", "big"])
@pytest.mark.parametrize("m", [2, 3])
def test_series_match_polynomials(family, m, mk_params, little_params, big_params):
    params = params_for(family, mk_params, little_params, big_params)
    p = compute_polynomial(family, Partition((m,), 1), params)

    for form in closedforms.SERIES_FORMS[family]:
        assert one_variable_series(family, form, m, params) == p


def test_series_form_must_exist(big_params):
    with pytest.raises(ValueError):
        one_variable_series("big", "2phi1", 1, big_params)


@pytest.mark.parametrize("family", ["mk", "little", "big"])
@pytest.mark.parametrize("m", range(4))
def test_rank_one_displays(family, m, mk_params, little_params, big_params):
    params = params_for(family, mk_params, little_params, big_params)
    lam = Partition((m,), 1)

    for kind in closedforms.POINT_KINDS[family]:
        req = ClosedFormRequest(family, "evaluation", lam, params, kind)
        assert one_variable_evaluation(family, kind, m, params) == closed_evaluation(req)
