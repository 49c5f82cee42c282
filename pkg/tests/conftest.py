# Standard Library
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit.exactalg import ParamPoint


@pytest.fixture
def little_params():
    """a = 1/2, b = 1/3, q = 1/2, t = 1/3; P_(1) = z - 18/23 in one
    variable."""
    return ParamPoint(
        a=Fraction(1, 2),
        b=Fraction(1, 3),
        q=Fraction(1, 2),
        t=Fraction(1, 3),
        family="little",
    )


@pytest.fixture
def mk_params():
    """abcd = -1/35; P_(1) = m_(1) - 25/27 in one variable."""
    return ParamPoint(
        a=Fraction(1, 2),
        b=Fraction(1, 3),
        c=Fraction(2, 5),
        d=Fraction(-3, 7),
        q=Fraction(1, 3),
        t=Fraction(1, 2),
        family="mk",
    )


@pytest.fixture
def big_params():
    return ParamPoint(
        a=Fraction(1, 2),
        b=Fraction(1, 3),
        c=Fraction(2, 5),
        d=Fraction(3, 7),
        q=Fraction(1, 2),
        t=Fraction(1, 3),
        family="big",
    )


@pytest.fixture
def no_env_limit(monkeypatch):
    monkeypatch.delenv("BCNQKIT_MAX_CELLS", raising=False)
