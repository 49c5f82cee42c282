# Standard Library
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit import verify
from bcnqkit.verify import SuiteJob, run_identities, run_suite


def test_suite_order():
    assert verify.suite_order("eigen") == ["eigen"]
    assert verify.suite_order("orthogonality") == ["eigen", "orthogonality"]
    assert verify.suite_order("dimension-paths") == ["dimension-paths"]


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("associativity", SuiteJob())


def test_q_series_suite():
    report = run_suite("q-series", SuiteJob(seeds=(3,), max_m=4))

    assert report["ok"] and report["complete"]
    assert {r["check"] for r in report["records"]} == {
        "q-series:q_vandermonde",
        "q-series:q_saalschutz",
        "q-factorial",
    }


@pytest.mark.parametrize("family", ["mk", "little", "big"])
def test_evaluation_suite_runs_eigen_first(no_env_limit, family):
    job = SuiteJob(n=1, max_weight=2, families=(family,), seeds=(1,))
    report = run_suite("evaluation", job)

    assert report["ran"] == ["eigen", "evaluation"]
    assert report["records"][0]["check"] == "eigen"
    assert report["ok"] and report["complete"]


def test_orthogonality_suite(no_env_limit):
    job = SuiteJob(n=2, max_weight=1, families=("little",), seeds=(5,))
    report = run_suite("orthogonality", job)

    assert report["ok"] and report["complete"]
    assert any(r["check"] == "norm" for r in report["records"])


def test_explicit_parameters(no_env_limit):
    params = {"a": Fraction(1, 2), "b": Fraction(1, 3), "q": Fraction(1, 2), "t": Fraction(1, 3)}
    job = SuiteJob(n=1, max_weight=2, families=("little",), seeds=(), params=params)
    report = run_suite("eigen", job)

    assert report["ok"]
    assert {r["seed"] for r in report["records"]} == {None}


def test_resource_guard_marks_report_incomplete(monkeypatch):
    monkeypatch.setenv("BCNQKIT_MAX_CELLS", "1")
    job = SuiteJob(n=1, max_weight=2, families=("little",), seeds=(1,))
    report = run_suite("eigen", job)

    assert report["ok"]
    assert not report["complete"]
    assert [r["ok"] for r in report["records"]] == [True, True, None]


def test_dimension_paths_suite():
    job = SuiteJob(n=1, d=3, max_weight=2, seeds=(1,))
    report = run_suite("dimension-paths", job)

    assert report["ok"] and report["complete"]


def test_identities():
    report = run_identities([1, 2], [2, 3, 4, 5], [1, 2], [Fraction(1, 2), Fraction(1, 3)])

    assert report["ok"]
    assert any(r["check"] == "geometric-sum" for r in report["records"])


@pytest.mark.parametrize("family", ["mk", "little", "big"])
def test_evaluation_suite_three_variables(no_env_limit, family):
    job = SuiteJob(n=3, max_weight=2, families=(family,), seeds=(1,))
    report = run_suite("evaluation", job)

    assert report["ok"] and report["complete"]
    assert {r["check"] for r in report["records"]} >= {"eigen"}
    assert all(r["lambda"] is None or len(r["lambda"]) == 3 for r in report["records"])


def test_q_series_records_carry_both_sides():
    report = run_suite("q-series", SuiteJob(seeds=(3,), max_m=3))
    factorial = [r for r in report["records"] if r["check"] == "q-factorial"]
    by_key = {(r["m"], r["q"]): r for r in factorial}

    # [3]_q! at q = 1/2 is (3/2)(7/4)
    assert by_key[(3, "1/2")]["lhs"] == by_key[(3, "1/2")]["rhs"] == "21/8"

    for record in report["records"]:
        assert record["lhs"] == record["rhs"]
        assert "m" in record and "q" in record


def test_dimension_records_report_compared_values():
    report = run_suite("dimension-paths", SuiteJob(n=1, d=3, max_weight=2, seeds=(1,)))
    records = report["records"]

    integral = [r for r in records if r["check"] == "padic:integral"]
    assert {r["lhs"] for r in integral} >= {"1", "6", "21"}
    assert all(r["lhs"] == r["rhs"] for r in integral)

    generic = [r for r in records if r["check"] == "padic:fundamental-generic"]
    assert len(generic) == len(verify.PADIC_TS)
    assert all(r["ok"] for r in generic)


def test_sign_symmetry_records_constant_terms(no_env_limit):
    job = SuiteJob(n=1, max_weight=2, families=("mk",), seeds=(1,))
    records = run_suite("evaluation", job)["records"]
    sign = [r for r in records if r["check"] == "mk-sign-symmetry"]

    assert sign
    assert all(r["ok"] and r["lhs"] is not None for r in sign)
