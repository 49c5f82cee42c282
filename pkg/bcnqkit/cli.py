#!/usr/bin/env python
"""Command line front end.

Subcommands:

- ``poly``: construct one polynomial and compare it with the closed
  evaluation formulas,
- ``verify``: run a verification suite and its prerequisites,
- ``dims``: print a dimension table,
- ``identities``: check the p-adic sum identity and the q-factorial identity
  over a grid.

Reports are line delimited JSON by default. The exit status is 0 when every
check holds, 1 when one fails, 2 on an error and 3 when the resource guard
skipped cases.
"""

if __name__ == "__main__" and __package__ is None:
    from sys import path
    from os.path import dirname as dir

    path.append(dir(path[0]))

# Standard Library
import argparse
import csv
import dataclasses
import io
import json
import logging
import sys
from fractions import Fraction

# This Module
from bcnqkit import _parsers, closedforms, dimensions, exactalg, ops_polys, utils, verify
from bcnqkit.combinatorics import Partition
from bcnqkit.errors import BcnqkitError, ResourceLimitExceeded
from bcnqkit.exactalg import FAMILIES, format_rat

logger = logging.getLogger(__name__)

COMMANDS = ("poly", "verify", "dims", "identities")
FORMATS = ("json", "csv", "table")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2
EXIT_INCOMPLETE = 3

DEFAULT_IDENTITY_TS = (Fraction(1, 2), Fraction(1, 3))


@dataclasses.dataclass(frozen=True)
class JobSpec:
    """Everything a command needs, in serializable form.

    ``params`` and ``seeds`` are mutually exclusive: explicit parameters are
    certified as they are, seeds go through the sampler.
    """

    command: str
    family: str = None
    space: str = None
    suite: str = None
    n: int = 1
    d: int = None
    k: int = None
    max_weight: int = 2
    max_m: int = 5
    lam: tuple = None
    params: dict = None
    seeds: tuple = ()
    t: tuple = ()
    q: tuple = ()
    output_format: str = "json"
    output_path: str = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"Unknown command {self.command!r}")

        if self.output_format not in FORMATS:
            raise ValueError(f"Unknown output format {self.output_format!r}")

        if self.params and self.seeds:
            raise ValueError("Explicit parameters and seeds are mutually exclusive")

        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        object.__setattr__(self, "t", tuple(Fraction(x) for x in self.t))
        object.__setattr__(self, "q", tuple(Fraction(x) for x in self.q))

        if self.lam is not None:
            object.__setattr__(self, "lam", tuple(int(p) for p in self.lam))

        if self.params is not None:
            object.__setattr__(
                self, "params", {k: Fraction(v) for k, v in self.params.items()}
            )

    def to_json(self):
        data = dataclasses.asdict(self)
        data["lam"] = None if self.lam is None else list(self.lam)
        data["seeds"] = list(self.seeds)
        data["t"] = [format_rat(x) for x in self.t]
        data["q"] = [format_rat(x) for x in self.q]

        if self.params is not None:
            data["params"] = {k: format_rat(v) for k, v in self.params.items()}

        return data

    @classmethod
    def from_json(cls, data):
        data = dict(data)

        for key in ("t", "q"):
            data[key] = tuple(_parsers.parse_rat(x) for x in data.get(key, ()))

        if data.get("params") is not None:
            data["params"] = {
                k: _parsers.parse_rat(v) for k, v in data["params"].items()
            }

        return cls(**data)

    @property
    def partition(self):
        if self.lam is None:
            raise ValueError(f"The {self.command} command needs --lambda")

        return Partition(self.lam, self.n)


@dataclasses.dataclass
class Report:
    """Rows for csv and table output, plus a summary line.

    With ``embedded`` the summary already contains the rows and JSON output
    prints it alone.
    """

    records: list
    summary: dict
    status: int
    embedded: bool = False


def _status(ok, complete=True):
    if not ok:
        return EXIT_FAILED

    return EXIT_OK if complete else EXIT_INCOMPLETE


#  ----------------------
#  Commands
#  ----------------------


def _check_cells(lam):
    limit = utils.max_cells()

    if lam.weight * lam.n > limit:
        raise ResourceLimitExceeded(
            f"|lambda|*n = {lam.weight * lam.n} exceeds "
            f"{utils.MAX_CELLS_VARIABLE}={limit}"
        )


def _params_for(spec, family, bound):
    """(seed, params) from the explicit parameters or the first seed."""
    if spec.params:
        params = exactalg.ParamPoint(family=family, **spec.params)
        return None, exactalg.certify(params, bound)

    seed = spec.seeds[0] if spec.seeds else verify.DEFAULT_SEEDS[0]

    return seed, exactalg.sample_generic_params(seed, family, bound)


def run_poly(spec):
    """Construct P_lambda and evaluate it at every closed-form point."""
    family = exactalg.check_family(spec.family)
    lam = spec.partition
    _check_cells(lam)

    seed, params = _params_for(spec, family, lam)
    p = ops_polys.compute_polynomial(family, lam, params)
    checks = []

    for kind in closedforms.POINT_KINDS[family]:
        point = exactalg.substitute_geometric_point(kind, params, lam.n)
        value = exactalg.sympoly_eval(p, point)
        closed = closedforms.closed_evaluation(
            closedforms.ClosedFormRequest(family, "evaluation", lam, params, kind)
        )
        checks.append(
            {
                "point": kind,
                "value": format_rat(value),
                "closed_form": format_rat(closed),
                "ok": value == closed,
            }
        )

    ok = all(c["ok"] for c in checks)
    summary = {
        "family": family,
        "n": lam.n,
        "lambda": lam.to_json(),
        "params": params.to_json(),
        "seed": seed,
        "rejections": params.rejections,
        "polynomial": p.to_json(),
        "checks": checks,
        "ok": ok,
    }

    return Report(checks, summary, _status(ok), embedded=True)


def run_verify(spec):
    job = verify.SuiteJob(
        n=spec.n,
        d=spec.d,
        max_weight=spec.max_weight,
        families=(spec.family,) if spec.family else FAMILIES,
        seeds=spec.seeds or (() if spec.params else verify.DEFAULT_SEEDS),
        params=spec.params,
        max_m=spec.max_m,
    )
    result = verify.run_suite(spec.suite, job)
    summary = {k: v for k, v in result.items() if k != "records"}

    return Report(
        result["records"], summary, _status(result["ok"], result["complete"])
    )


def _dims_params(spec):
    params = dict(spec.params or {})

    for name in ("t", "q"):
        values = getattr(spec, name)

        if values:
            params.setdefault(name, values[0])

    return params


def run_dims(spec):
    if spec.d is None:
        raise ValueError("The dims command needs --d")

    records = dimensions.dim_table(
        spec.space, spec.n, spec.d, _dims_params(spec), spec.max_weight
    )
    rows = [r.to_json() for r in records]
    ok = all(r.crosscheck_ok for r in records)
    summary = {"space": spec.space, "n": spec.n, "d": spec.d, "ok": ok}

    return Report(rows, summary, _status(ok))


def run_identities(spec):
    k = 2 if spec.k is None else spec.k
    d = 2 * spec.n if spec.d is None else spec.d

    if k < 1:
        raise ValueError(f"The sum identity needs k >= 1, got {k}")

    result = verify.run_identities(
        ns=range(1, spec.n + 1),
        ds=range(2, d + 1),
        ks=range(1, k + 1),
        ts=spec.t or DEFAULT_IDENTITY_TS,
    )
    summary = {"ok": result["ok"], "complete": result["complete"]}

    return Report(result["records"], summary, _status(result["ok"]))


RUNNERS = {
    "poly": run_poly,
    "verify": run_verify,
    "dims": run_dims,
    "identities": run_identities,
}


#  ----------------------
#  Output
#  ----------------------


def _cell(value):
    if isinstance(value, (list, dict)) or value is None:
        return json.dumps(value)

    return str(value)


def _columns(records):
    columns = []

    for record in records:
        for key in record:
            if key not in columns:
                columns.append(key)

    return columns


def render(report, output_format):
    """The report as one string, in deterministic order."""
    if output_format == "json":
        lines = [] if report.embedded else [json.dumps(r) for r in report.records]
        lines.append(json.dumps(report.summary))
        return "\n".join(lines) + "\n"

    columns = _columns(report.records)

    if output_format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(columns)

        for record in report.records:
            writer.writerow([_cell(record.get(c)) for c in columns])

        return buffer.getvalue()

    rows = [columns] + [[_cell(r.get(c)) for c in columns] for r in report.records]
    widths = [max(len(row[i]) for row in rows) for i in range(len(columns))]

    return "".join(
        "  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip()
        + "\n"
        for row in rows
    )


def write(text, output_path=None):
    if output_path is None:
        sys.stdout.write(text)
        return

    with open(output_path, "w") as f:
        f.write(text)


#  ----------------------
#  Argument parsing
#  ----------------------


def _common_arguments(parser):
    parser.add_argument("--n", type=int, default=1)
    parser.add_argument("--d", type=int)
    parser.add_argument("--max-weight", type=int, default=2)
    parser.add_argument("--params", type=_parsers.parse_params)
    parser.add_argument("--seed", type=int, action="append", default=[])
    parser.add_argument("--format", choices=FORMATS, default="json")
    parser.add_argument("--out")
    parser.add_argument("--debug", action="store_true")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bcnqkit",
        description="Koornwinder and q-Jacobi polynomials in exact arithmetic "
        "and dimensions of spherical representations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    poly = subparsers.add_parser("poly", help="construct one polynomial")
    poly.add_argument("--family", choices=FAMILIES, required=True)
    poly.add_argument("--lambda", dest="lam", type=_parsers.parse_parts, required=True)

    suite = subparsers.add_parser("verify", help="run a verification suite")
    suite.add_argument("--suite", choices=list(verify.SUITES), required=True)
    suite.add_argument("--family", choices=FAMILIES)
    suite.add_argument("--max", dest="max_m", type=int, default=5)

    dims = subparsers.add_parser("dims", help="print a dimension table")
    dims.add_argument("--space", choices=dimensions.SPACES, required=True)

    identities = subparsers.add_parser("identities", help="check the sum identities")
    identities.add_argument("--k", type=int)

    for sub in (dims, identities):
        sub.add_argument("--t", type=_parsers.parse_rationals, default=())

    dims.add_argument("--q", type=_parsers.parse_rationals, default=())

    for sub in (poly, suite, dims, identities):
        _common_arguments(sub)

    return parser


def job_from_arguments(args):
    if args.params and args.seed:
        raise ValueError("--params and --seed are mutually exclusive")

    return JobSpec(
        command=args.command,
        family=getattr(args, "family", None),
        space=getattr(args, "space", None),
        suite=getattr(args, "suite", None),
        n=args.n,
        d=args.d,
        k=getattr(args, "k", None),
        max_weight=args.max_weight,
        max_m=getattr(args, "max_m", 5),
        lam=getattr(args, "lam", None),
        params=args.params,
        seeds=args.seed,
        t=getattr(args, "t", ()),
        q=getattr(args, "q", ()),
        output_format=args.format,
        output_path=args.out,
    )


def run(spec):
    logger.debug("Running %s", json.dumps(spec.to_json()))
    report = RUNNERS[spec.command](spec)
    write(render(report, spec.output_format), spec.output_path)

    return report.status


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING)

    try:
        return run(job_from_arguments(args))
    except (BcnqkitError, ValueError) as err:
        if isinstance(err, BcnqkitError):
            error = err.to_json()
        else:
            error = {"error": "invalid input", "message": str(err)}

        logger.debug("Aborting", exc_info=True)
        sys.stdout.write(json.dumps(error) + "\n")

        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
