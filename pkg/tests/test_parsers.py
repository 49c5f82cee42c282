# Standard Library
from fractions import Fraction

# Third Party
import pytest

# This Module
from bcnqkit import _parsers


@pytest.mark.parametrize(
    "text, expected",
    [("-3/6", Fraction(-1, 2)), ("0.25", Fraction(1, 4)), ("7", 7), ("+2/3", Fraction(2, 3))],
)
def test_parse_rat(text, expected):
    assert _parsers.parse_rat(text) == expected


def test_parse_rationals():
    assert _parsers.parse_rationals("1/2, 1/3") == (Fraction(1, 2), Fraction(1, 3))


def test_parse_params():
    assert _parsers.parse_params("a=1/2,q=0.5,t=-2") == {
        "a": Fraction(1, 2),
        "q": Fraction(1, 2),
        "t": Fraction(-2),
    }


@pytest.mark.parametrize("text", ["a=1/2,a=1/3", "z=1", "a=", "a=1/2;b=1"])
def test_bad_params(text):
    with pytest.raises(ValueError):
        _parsers.parse_params(text)


def test_parse_parts():
    assert _parsers.parse_parts("2,1,0") == (2, 1, 0)
    assert _parsers.parse_parts("3") == (3,)

    with pytest.raises(ValueError):
        _parsers.parse_parts("2,x")
