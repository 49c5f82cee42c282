#!/usr/bin/env python
"""Partitions with at most ``n`` parts, the dominance order and the q-series
primitives every closed form is assembled from.

Partitions are ordered graded-lexicographically (first by weight, then
lexicographically); this is the linear extension of the dominance order used
wherever a deterministic order is needed.
"""
# Standard Library
import functools
import itertools as it
import logging
from dataclasses import dataclass
from fractions import Fraction

# This Module
from bcnqkit.errors import VanishingDenominator

logger = logging.getLogger(__name__)


@functools.total_ordering
@dataclass(frozen=True, eq=True)
class Partition:
    """A dominant weight of :math:`\\Lambda_n`.

    ``parts`` is always stored zero-padded to length ``n``.

    :param parts: nonincreasing nonnegative integers, trailing zeros optional
    :param n: the maximal number of nonzero parts (``context_n``)
    """

    parts: tuple
    n: int

    def __post_init__(self):
        n = int(self.n)
        parts = tuple(int(p) for p in self.parts)

        if n < 0:
            raise ValueError(f"Number of parts must be nonnegative, got {n}")

        if any(p < 0 for p in parts):
            raise ValueError(f"Partition parts must be nonnegative: {parts}")

        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"Partition parts must be nonincreasing: {parts}")

        nonzero = tuple(p for p in parts if p)

        if len(nonzero) > n:
            raise ValueError(f"{parts} has more than {n} nonzero parts")

        object.__setattr__(self, "n", n)
        object.__setattr__(self, "parts", nonzero + (0,) * (n - len(nonzero)))

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __len__(self):
        return self.n

    def __lt__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f"Partition({self.parts}, n={self.n})"

    @property
    def sort_key(self):
        return (self.weight, self.parts)

    @property
    def weight(self):
        """|lambda|"""
        return sum(self.parts)

    @property
    def length(self):
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p)

    @property
    def rho_pairing(self):
        """(rho, lambda) with rho = (n-1, ..., 1, 0)."""
        return sum((self.n - i) * p for i, p in enumerate(self.parts, start=1))

    @property
    def norm_squared(self):
        """(lambda, lambda)"""
        return sum(p * p for p in self.parts)

    @property
    def dprime(self):
        """The differences of the conjugate partition, starting from
        ``lambda'_0 = n``. They always sum to ``n``."""
        columns = (self.n,) + conjugate(self).parts + (0,)

        return tuple(columns[j] - columns[j + 1] for j in range(len(columns) - 1))

    def is_zero(self):
        return not any(self.parts)

    def to_json(self):
        return list(self.parts)


def partition(parts, n=None):
    """Shortcut for :class:`Partition` with ``n`` defaulting to
    ``len(parts)``."""
    parts = tuple(parts)

    return Partition(parts, len(parts) if n is None else n)


def conjugate(lam, n=None):
    """Transpose of the Young diagram.

    The result lives in :math:`\\Lambda_{n}` where ``n`` defaults to the
    largest part of ``lam``, so ``conjugate(conjugate(lam), lam.n) == lam``.
    """
    largest = lam.parts[0] if lam.n else 0
    n = largest if n is None else n

    return Partition(
        tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, largest + 1)), n
    )


def _check_same_n(mu, lam):
    if mu.n != lam.n:
        raise ValueError(
            f"Cannot compare partitions with different n: {mu!r} and {lam!r}"
        )


def dominance_leq(mu, lam):
    """Partial sums of ``mu`` bounded by those of ``lam``. Weights may
    differ."""
    _check_same_n(mu, lam)

    return all(
        m <= l for m, l in zip(it.accumulate(mu.parts), it.accumulate(lam.parts))
    )


# Process wide, bounded.
@functools.lru_cache(maxsize=1024)
def enumerate_below(lam):
    """All partitions of :math:`\\Lambda_n` dominated by ``lam``, sorted
    graded-lexicographically."""
    bounds = tuple(it.accumulate(lam.parts))
    found = []

    def extend(prefix, total, cap):
        i = len(prefix)

        if i == lam.n:
            found.append(Partition(tuple(prefix), lam.n))
            return

        for part in range(min(cap, bounds[i] - total), -1, -1):
            extend(prefix + [part], total + part, part)

    extend([], 0, bounds[0] if lam.n else 0)

    return tuple(sorted(found))


def enumerate_contained(k, n):
    """Partitions whose Young diagram fits in the box k^n."""
    if k < 0 or n < 1:
        raise ValueError(f"Need k >= 0 and n >= 1, got k={k}, n={n}")

    return tuple(
        sorted(
            Partition(parts, n)
            for parts in it.combinations_with_replacement(range(k, -1, -1), n)
        )
    )


def partitions_up_to(n, max_weight):
    """All partitions with at most ``n`` parts and weight at most
    ``max_weight``, sorted graded-lexicographically."""
    if max_weight < 0:
        return ()

    return enumerate_below(Partition((max_weight,), n)) if n else (Partition((), 0),)


def fundamental(r, n):
    """The fundamental weight omega_r = (1^r, 0^(n-r))."""
    if not 0 <= r <= n:
        raise ValueError(f"Need 0 <= r <= n, got r={r}, n={n}")

    return Partition((1,) * r, n)


def q_pochhammer(x, q, j):
    """The q-shifted factorial (x; q)_j."""
    if j < 0:
        raise ValueError(f"Pochhammer length must be nonnegative, got {j}")

    x, q = Fraction(x), Fraction(q)
    result = Fraction(1)

    for s in range(j):
        result *= 1 - x * q**s

    return result


def q_integer(j, q):
    """[j]_q = (1 - q^j)/(1 - q), read as ``j`` at q = 1."""
    q = Fraction(q)

    if q == 1:
        return Fraction(j)

    return (1 - q**j) / (1 - q)


def q_factorial(m, q):
    result = Fraction(1)

    for j in range(1, m + 1):
        result *= q_integer(j, q)

    return result


def _nonzero_factorial(m, q):
    value = q_factorial(m, q)

    if value == 0:
        raise VanishingDenominator(f"[{m}]_q! vanishes at q={q}")

    return value


def q_binomial(m, l, q):
    """The q-binomial coefficient (m over l)_q."""
    if not 0 <= l <= m:
        raise ValueError(f"Need 0 <= l <= m, got m={m}, l={l}")

    return _nonzero_factorial(m, q) / (
        _nonzero_factorial(l, q) * _nonzero_factorial(m - l, q)
    )


def q_multinomial(n, parts, q):
    """[n over parts]_q = [n]_q! / prod [l_s]_q!"""
    parts = tuple(parts)

    if any(p < 0 for p in parts) or sum(parts) != n:
        raise ValueError(f"Parts {parts} must be nonnegative and sum to {n}")

    result = _nonzero_factorial(n, q)

    for p in parts:
        result /= _nonzero_factorial(p, q)

    return result


def q_factorial_sides(m, q):
    """Both sides of [m]_q! = q^(m(m-1)/2) (q^-1; q^-1)_m / (1 - q^-1)^m."""
    q = Fraction(q)
    lhs = q_factorial(m, q)
    rhs = q ** (m * (m - 1) // 2) * q_pochhammer(1 / q, 1 / q, m) / (1 - 1 / q) ** m

    return lhs, rhs


def verify_q_factorial_identity(m, q):
    lhs, rhs = q_factorial_sides(m, q)

    if lhs != rhs:
        logger.warning("q-factorial identity fails at m=%s, q=%s", m, q)

    return lhs == rhs
