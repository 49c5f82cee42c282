#!/usr/bin/env python
"""Verification suites.

Each suite is a function ``suite(job, context)`` returning a list of verdict
records. Suites are registered with :func:`bcnqkit.utils.make_dependent`, so
running one runs everything it depends on first.
"""
# Standard Library
import dataclasses
import logging
import math
from fractions import Fraction

# Third Party
import numpy as np

# This Module
from bcnqkit import closedforms, dimensions, exactalg, ops_polys, utils
from bcnqkit.combinatorics import (
    Partition,
    fundamental,
    partitions_up_to,
    q_factorial_sides,
)
from bcnqkit.errors import CertificationFailure, VanishingDenominator
from bcnqkit.exactalg import FAMILIES, format_rat

logger = logging.getLogger(__name__)

DEFAULT_SEEDS = (1, 2, 3)
PADIC_TS = (Fraction(1, 2), Fraction(1, 3), Fraction(2, 7))
RESIDUE_TS = (Fraction(1, 2), Fraction(1, 3))
Q_VALUES = (Fraction(1, 2), Fraction(2, 3), Fraction(3, 5))
Q_WEYL_MAX_D = 4
Q_FACTORIAL_MAX = 10
MK_PERMUTATIONS = ((1, 0, 2, 3), (1, 2, 3, 0))


@dataclasses.dataclass(frozen=True)
class SuiteJob:
    """What a suite runs over.

    :param families: families to check, all three by default
    :param params: explicit parameter values replacing the seeded sampler
    :param max_m: largest m for the terminating series checks
    """

    n: int = 1
    d: int = None
    max_weight: int = 2
    families: tuple = FAMILIES
    seeds: tuple = DEFAULT_SEEDS
    params: dict = None
    max_m: int = 5

    @property
    def dimension(self):
        return 2 * self.n + 1 if self.d is None else self.d


def verdict(check, lhs, rhs, family=None, lam=None, seed=None, ok=None):
    if ok is None:
        ok = lhs == rhs

    return {
        "check": check,
        "family": family,
        "lambda": None if lam is None else lam.to_json(),
        "seed": seed,
        "ok": bool(ok),
        "lhs": _format(lhs),
        "rhs": _format(rhs),
    }


def skipped(check, family, lam, seed):
    record = verdict(check, None, None, family, lam, seed, ok=False)
    record["ok"] = None
    record["skipped"] = "resource bound exceeded"

    return record


def _format(value):
    if isinstance(value, (Fraction, int)):
        return format_rat(value)

    return value


class SuiteContext:
    """Parameter points and polynomial bases shared by the suites of one
    job."""

    def __init__(self, job):
        self.job = job
        self._points = {}
        self._bases = {}
        self.max_cells = utils.max_cells()

    def points(self, family, weight):
        """(seed, params) pairs certified up to (weight, 0, ...)."""
        key = (family, weight)

        if key not in self._points:
            bound = Partition((weight,), self.job.n)

            if self.job.params:
                params = exactalg.ParamPoint(family=family, **self.job.params)
                self._points[key] = [(None, exactalg.certify(params, bound))]
            else:
                self._points[key] = [
                    (seed, exactalg.sample_generic_params(seed, family, bound))
                    for seed in self.job.seeds
                ]

        return self._points[key]

    def basis(self, family, params):
        key = (family, params)

        if key not in self._bases:
            self._bases[key] = ops_polys.PolynomialBasis(family, params, self.job.n)

        return self._bases[key]

    def too_large(self, weight):
        too_large = weight * self.job.n > self.max_cells

        if too_large:
            logger.warning(
                "Skipping weight %s with n=%s (limit %s cells)",
                weight,
                self.job.n,
                self.max_cells,
            )

        return too_large


#  ----------------------
#  Suites
#  ----------------------


@utils.make_dependent()
def eigen(job, context):
    """D P_lambda = E_lambda P_lambda with leading coefficient one."""
    records = []

    for family in job.families:
        for seed, params in context.points(family, job.max_weight):
            basis = context.basis(family, params)

            for lam in partitions_up_to(job.n, job.max_weight):
                if context.too_large(lam.weight):
                    records.append(skipped("eigen", family, lam, seed))
                    continue

                p = basis.polynomial(lam)
                value = ops_polys.eigenvalue(family, lam, params)
                image = basis.apply(p)
                ok = image == p.scale(value) and p.coefficient(lam) == 1
                records.append(
                    verdict(
                        "eigen", image.coefficient(lam), value, family, lam, seed, ok
                    )
                )

    return records


def _evaluation_records(family, lam, params, seed, p):
    records = []

    for kind in closedforms.POINT_KINDS[family]:
        point = exactalg.substitute_geometric_point(kind, params, lam.n)
        lhs = exactalg.sympoly_eval(p, point)
        rhs = closedforms.closed_evaluation(
            closedforms.ClosedFormRequest(family, "evaluation", lam, params, kind)
        )
        records.append(verdict(f"evaluation:{kind}", lhs, rhs, family, lam, seed))

        if lam.n == 1:
            rank_one = closedforms.one_variable_evaluation(
                family, kind, lam[0], params
            )
            records.append(
                verdict(f"rank-one:{kind}", rank_one, rhs, family, lam, seed)
            )

    return records


def _symmetry_records(lam, params, seed, p, context):
    records = []

    for perm in MK_PERMUTATIONS:
        permuted = ops_polys.permute_mk_params(params, perm)
        other = context.basis("mk", permuted).polynomial(lam)
        records.append(
            verdict(
                "mk-parameter-symmetry",
                other.coefficient(Partition((), lam.n)),
                p.coefficient(Partition((), lam.n)),
                "mk",
                lam,
                seed,
                ok=other == p,
            )
        )

    negated = context.basis("mk", ops_polys.negate_params(params)).polynomial(lam)
    expected = ops_polys.sign_twisted(p).scale((-1) ** lam.weight)
    records.append(
        verdict(
            "mk-sign-symmetry",
            negated.coefficient(Partition((), lam.n)),
            expected.coefficient(Partition((), lam.n)),
            "mk",
            lam,
            seed,
            ok=negated == expected,
        )
    )

    return records


def _series_records(family, lam, params, seed, p):
    records = []

    for form in closedforms.SERIES_FORMS[family]:
        series = closedforms.one_variable_series(family, form, lam[0], params)
        records.append(
            verdict(
                f"series:{form}",
                series.coefficient(Partition((0,), 1)),
                p.coefficient(Partition((0,), 1)),
                family,
                lam,
                seed,
                ok=series == p,
            )
        )

    return records


@utils.make_dependent(eigen)
def evaluation(job, context):
    """Constructed polynomials against the closed evaluation formulas."""
    records = []

    for family in job.families:
        for seed, params in context.points(family, job.max_weight):
            basis = context.basis(family, params)

            for lam in partitions_up_to(job.n, job.max_weight):
                if context.too_large(lam.weight):
                    records.append(skipped("evaluation", family, lam, seed))
                    continue

                p = basis.polynomial(lam)
                records += _evaluation_records(family, lam, params, seed, p)

                if family == "mk" and lam.weight <= 2:
                    records += _symmetry_records(lam, params, seed, p, context)

                if job.n == 1:
                    records += _series_records(family, lam, params, seed, p)

    return records


@utils.make_dependent(eigen)
def orthogonality(job, context):
    """<P_lambda, P_mu> = delta_{lambda, mu} N(lambda)."""
    records = []
    weights = partitions_up_to(job.n, job.max_weight)

    for family in job.families:
        for seed, params in context.points(family, 2 * job.max_weight):
            basis = context.basis(family, params)

            for i, lam in enumerate(weights):
                for mu in weights[i:]:
                    if context.too_large(lam.weight + mu.weight):
                        records.append(skipped("orthogonality", family, mu, seed))
                        continue

                    lhs = basis.inner_product(basis.polynomial(lam), basis.polynomial(mu))

                    if lam == mu:
                        rhs = closedforms.closed_norm(
                            closedforms.ClosedFormRequest(family, "norm", lam, params)
                        )
                        check = "norm"
                    else:
                        rhs = Fraction(0)
                        check = f"orthogonality:{lam.parts}"

                    records.append(verdict(check, lhs, rhs, family, mu, seed))

    return records


def _generalized_records(job):
    records = []
    n = job.n

    for seed in job.seeds:
        little = exactalg.sample_generic_params(
            seed, "little", Partition((job.max_weight,), n)
        )
        q, t = little.q, little.t
        a, b = q * little.a, q * little.b

        for lam in partitions_up_to(n, job.max_weight):
            product = dimensions.generalized_dim_product(lam, a, b, q, t)
            ratio = dimensions.generalized_dim_via_little(lam, a, b, q, t)
            records.append(
                verdict("generalized:ratio", ratio, product, None, lam, seed)
            )

            if lam.length and lam == fundamental(lam.length, n):
                single = dimensions.generalized_dim_fundamental(
                    lam.length, a, b, q, t, n
                )
                records.append(
                    verdict("generalized:fundamental", single, product, None, lam, seed)
                )

    return records


def _padic_records(job):
    records = []
    n, d = job.n, job.dimension

    for t in PADIC_TS:
        a, b = t ** (d - 2 * n + 1), t

        for lam in partitions_up_to(n, job.max_weight):
            closed = dimensions.padic_dim_closed(lam, t, d)
            records += [
                verdict(
                    "padic:product",
                    dimensions.generalized_dim_product(lam, a, b, 0, t),
                    closed,
                    None,
                    lam,
                ),
                verdict("padic:q0", dimensions.q0_factors(lam, a, b, t), closed, None, lam),
                verdict(
                    "padic:generic",
                    dimensions.padic_dim_generic(lam, a, b, t),
                    closed,
                    None,
                    lam,
                ),
            ]

            if lam.length and lam == fundamental(lam.length, n):
                records += [
                    verdict(
                        "padic:fundamental",
                        dimensions.padic_fundamental(lam.length, t, d),
                        closed,
                        None,
                        lam,
                    ),
                    verdict(
                        "padic:fundamental-generic",
                        dimensions.padic_fundamental_generic(lam.length, a, b, t, n),
                        closed,
                        None,
                        lam,
                    ),
                ]

            if n == 1 and lam[0] >= 2:
                records.append(
                    verdict(
                        "padic:projective",
                        dimensions.padic_projective(lam[0], t, d),
                        closed,
                        None,
                        lam,
                    )
                )

            if t in RESIDUE_TS:
                # A positive integer equals its floor, which is at least 1.
                records.append(
                    verdict(
                        "padic:integral",
                        closed,
                        max(math.floor(closed), 1),
                        None,
                        lam,
                    )
                )

    return records


def _quantum_records(job):
    records = []
    n, d = job.n, job.dimension

    for lam in partitions_up_to(n, job.max_weight):
        classical = dimensions.complex_dim(lam, d)
        real = dimensions.real_dim(lam, d)
        records += [
            verdict(
                "complex:weyl",
                dimensions.weyl_dim(dimensions.natural_embedding(lam, d)),
                classical,
                None,
                lam,
            ),
            verdict(
                "complex:quantum-limit",
                dimensions.complex_dim_via_quantum_limit(lam, d),
                classical,
                None,
                lam,
            ),
            verdict(
                "real:integral", real, real, None, lam, ok=real.denominator == 1 and real > 0
            ),
        ]

        for q in Q_VALUES:
            value = dimensions.quantum_dim(lam, d, q)
            records.append(
                verdict(
                    "quantum:generalized",
                    dimensions.quantum_dim_via_generalized(lam, d, q),
                    value,
                    None,
                    lam,
                )
            )

            if lam.length and lam == fundamental(lam.length, n):
                records.append(
                    verdict(
                        "quantum:fundamental",
                        dimensions.quantum_dim_fundamental(lam.length, d, q),
                        value,
                        None,
                        lam,
                    )
                )

    return records


def _q_weyl_records(job):
    records = []
    d = min(job.dimension, Q_WEYL_MAX_D)

    for mu in partitions_up_to(d, job.max_weight):
        weyl = dimensions.weyl_dim(mu.parts)
        records.append(
            verdict("q-weyl:limit", dimensions.q_weyl_limit(mu.parts), weyl, None, mu)
        )

        for q in Q_VALUES:
            records.append(
                verdict(
                    "q-weyl:schur",
                    dimensions.schur_at_principal(mu.parts, q),
                    dimensions.q_weyl_dim(mu.parts, q),
                    None,
                    mu,
                )
            )

    return records


@utils.make_dependent()
def dimension_paths(job, context):
    """Independent computations of every dimension agree."""
    return (
        _generalized_records(job)
        + _padic_records(job)
        + _quantum_records(job)
        + _q_weyl_records(job)
    )


def _draw_series_params(seed):
    rng = np.random.default_rng(seed)

    def draw():
        value = Fraction(int(rng.integers(1, 8)), int(rng.integers(1, 8)))
        return value if rng.integers(0, 2) else -value

    while True:
        q = Fraction(int(rng.integers(1, 9)), 9)
        yield q, (draw(), draw(), draw())


@utils.make_dependent()
def q_series(job, context):
    """q-Vandermonde, q-Saalschuetz and the q-factorial identity."""
    records = []

    for seed in job.seeds:
        for m in range(job.max_m + 1):
            for identity in ("q_vandermonde", "q_saalschutz"):
                records.append(_series_verdict(identity, m, seed))

    for m in range(Q_FACTORIAL_MAX + 1):
        for q in Q_VALUES:
            record = verdict("q-factorial", *q_factorial_sides(m, q))
            record.update(m=m, q=format_rat(q))
            records.append(record)

    return records


def _series_verdict(identity, m, seed):
    for attempt, (q, (a, b, c)) in enumerate(_draw_series_params(seed)):
        if attempt >= exactalg.MAX_ATTEMPTS:
            raise CertificationFailure(
                f"No generic parameters for {identity} at m={m}, seed={seed}"
            )

        free = (a, c) if identity == "q_vandermonde" else (a, b, c)

        try:
            lhs, rhs = closedforms.terminating_series_sides(identity, m, free, q)
        except (VanishingDenominator, ZeroDivisionError) as err:
            logger.debug("Resampling %s at m=%s: %s", identity, m, err)
            continue

        record = verdict(f"q-series:{identity}", lhs, rhs, seed=seed)
        record.update(m=m, q=format_rat(q))

        return record


SUITES = {
    "eigen": eigen,
    "evaluation": evaluation,
    "orthogonality": orthogonality,
    "dimension-paths": dimension_paths,
    "q-series": q_series,
}


def suite_order(name):
    """Names of the suites run for ``name``, prerequisites first."""
    order = [f.__name__ for f in utils.reduce_dependencies(SUITES[name])]

    return [key for f in order for key, suite in SUITES.items() if suite.__name__ == f]


def run_suite(name, job):
    """Run a suite and its prerequisites.

    :returns: `dict` with the verdict ``records``, the suites that ran and
              the ``ok`` and ``complete`` flags
    """
    if name not in SUITES:
        raise ValueError(f"Unknown suite {name!r}, expected one of {list(SUITES)}")

    context = SuiteContext(job)
    records = SUITES[name].to_function()(job, context)
    checked = [r for r in records if r["ok"] is not None]

    return {
        "suite": name,
        "ran": suite_order(name),
        "complete": len(checked) == len(records),
        "ok": all(r["ok"] for r in checked),
        "records": records,
    }


#  ----------------------
#  Identities
#  ----------------------


def run_identities(ns, ds, ks, ts):
    """The p-adic sum identity over a grid, its n = 1 geometric form and
    the q-factorial identity."""
    records = []

    for n in ns:
        for d in ds:
            if 2 * n > d:
                continue

            for k in ks:
                for t in ts:
                    ok = dimensions.padic_sum_identity(n, d, k, t)
                    records.append(
                        {
                            "check": "padic-sum",
                            "n": n,
                            "d": d,
                            "k": k,
                            "t": format_rat(t),
                            "ok": ok,
                        }
                    )

                    if n == 1:
                        records.append(
                            {
                                "check": "geometric-sum",
                                "n": n,
                                "d": d,
                                "k": k,
                                "t": format_rat(t),
                                "ok": dimensions.geometric_sum_identity(d, k, t),
                            }
                        )

    for m in range(Q_FACTORIAL_MAX + 1):
        for t in ts:
            lhs, rhs = q_factorial_sides(m, t)
            records.append(
                {
                    "check": "q-factorial",
                    "m": m,
                    "q": format_rat(t),
                    "ok": lhs == rhs,
                    "lhs": format_rat(lhs),
                    "rhs": format_rat(rhs),
                }
            )

    return {"ok": all(r["ok"] for r in records), "complete": True, "records": records}
