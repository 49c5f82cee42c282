# Standard Library
import json
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit import cli
from bcnqkit.cli import JobSpec, main


def run(capsys, *argv):
    status = main(list(argv))
    lines = capsys.readouterr().out.splitlines()

    return status, lines


def test_poly_little(capsys, no_env_limit):
    status, lines = run(
        capsys, "poly", "--family", "little", "--n", "1", "--lambda", "1", "--seed", "7"
    )
    report = json.loads(lines[0])

    assert status == cli.EXIT_OK
    assert len(lines) == 1
    assert len(report["polynomial"]["terms"]) == 2
    assert len(report["checks"]) == 3
    assert all(c["ok"] for c in report["checks"])
    assert report["seed"] == 7


def test_poly_zero_is_constant(capsys, no_env_limit):
    status, lines = run(
        capsys, "poly", "--family", "mk", "--n", "2", "--lambda", "0", "--seed", "1"
    )
    report = json.loads(lines[0])

    assert status == cli.EXIT_OK
    assert report["polynomial"]["terms"] == [{"mu": [0, 0], "coeff": "1"}]


def test_poly_degenerate_parameters(capsys):
    status, lines = run(
        capsys,
        "poly",
        "--family",
        "mk",
        "--n",
        "1",
        "--lambda",
        "1",
        "--params",
        "q=1,a=1/2,b=1/3,c=1/5,d=1/7,t=1/2",
    )

    assert status == cli.EXIT_ERROR
    assert json.loads(lines[0])["error"] == "degenerate specialization"


def test_params_and_seed_are_exclusive(capsys):
    status, lines = run(
        capsys,
        "poly",
        "--family",
        "little",
        "--lambda",
        "1",
        "--params",
        "a=1/2,b=1/3,q=1/2,t=1/3",
        "--seed",
        "2",
    )

    assert status == cli.EXIT_ERROR
    assert json.loads(lines[0])["error"] == "invalid input"


def test_resource_guard(capsys, monkeypatch):
    monkeypatch.setenv("BCNQKIT_MAX_CELLS", "2")
    status, lines = run(capsys, "poly", "--family", "little", "--lambda", "3")

    assert status == cli.EXIT_ERROR
    assert json.loads(lines[0])["error"] == "resource bound exceeded"


def test_verify_q_series(capsys):
    status, lines = run(capsys, "verify", "--suite", "q-series", "--max", "6", "--seed", "3")
    records = [json.loads(line) for line in lines]

    assert status == cli.EXIT_OK
    assert all(r["ok"] for r in records[:-1])
    assert records[-1]["suite"] == "q-series"
    assert records[-1]["ok"]


def test_verify_incomplete(capsys, monkeypatch):
    monkeypatch.setenv("BCNQKIT_MAX_CELLS", "1")
    status, lines = run(
        capsys, "verify", "--suite", "eigen", "--family", "little", "--seed", "1"
    )

    assert status == cli.EXIT_INCOMPLETE
    assert json.loads(lines[-1])["complete"] is False


def test_dims_padic(capsys):
    status, lines = run(
        capsys, "dims", "--space", "padic", "--n", "1", "--d", "2", "--t", "1/2",
        "--max-weight", "1",
    )
    records = [json.loads(line) for line in lines[:-1]]

    assert status == cli.EXIT_OK
    assert [r["value"] for r in records] == ["1", "2"]
    assert all(r["crosscheck_ok"] for r in records)


def test_dims_quantum(capsys):
    status, lines = run(
        capsys, "dims", "--space", "quantum", "--n", "1", "--d", "2", "--q", "1/2",
        "--max-weight", "1",
    )
    records = [json.loads(line) for line in lines[:-1]]

    assert status == cli.EXIT_OK
    assert [r["value"] for r in records] == ["1", "21/4"]


def test_dims_csv(capsys):
    status, lines = run(
        capsys, "dims", "--space", "complex", "--n", "2", "--d", "4", "--max-weight", "2",
        "--format", "csv",
    )

    assert status == cli.EXIT_OK
    assert lines[0].split(",")[:2] == ["space", "n"]
    assert len(lines) == 5


def test_dims_table_to_file(capsys, tmp_path):
    out = tmp_path / "weyl.txt"
    status, lines = run(
        capsys, "dims", "--space", "weyl", "--d", "3", "--max-weight", "1",
        "--format", "table", "--out", str(out),
    )

    assert status == cli.EXIT_OK
    assert lines == []
    assert out.read_text().splitlines()[0].startswith("space")


def test_identities(capsys):
    status, lines = run(
        capsys, "identities", "--n", "1", "--d", "2", "--k", "1", "--t", "1/2"
    )

    assert status == cli.EXIT_OK
    assert json.loads(lines[-1])["ok"]


def test_identities_need_positive_k(capsys):
    status, lines = run(capsys, "identities", "--k", "0")

    assert status == cli.EXIT_ERROR


def test_job_spec_round_trip():
    spec = JobSpec(
        command="dims",
        space="padic",
        n=2,
        d=5,
        params={"t": Fraction(1, 3)},
        t=(Fraction(1, 2),),
        output_format="csv",
    )

    assert JobSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec


def test_job_spec_rejects_params_with_seeds():
    with pytest.raises(ValueError):
        JobSpec(command="poly", params={"q": Fraction(1, 2)}, seeds=(1,))
