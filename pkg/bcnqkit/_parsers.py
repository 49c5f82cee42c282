#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Standard Library
import collections
from fractions import Fraction

# Third Party
import pyparsing as pp

KeyValuePair = collections.namedtuple("KeyValuePair", ["key", "value"])

# Values look like this: --params a=1/2,b=-3,q=0.25 --lambda 2,1,0

#  ----------------------
#  Commonly used parts
#  ----------------------

digits = pp.Word(pp.nums)
sign = pp.Optional(pp.one_of("+ -"))

decimal = pp.Combine(sign + pp.Optional(digits) + "." + digits)
fraction = pp.Combine(sign + digits + pp.Optional("/" + digits))

rational = (decimal | fraction).set_parse_action(lambda tokens: Fraction(tokens[0]))

#  ----------------------
#  Parameter assignments
#  ----------------------

parameter_name = pp.one_of("a b c d q t")
is_ = pp.Suppress(pp.Literal("="))

assignment = pp.Group(parameter_name + is_ + rational).set_parse_action(
    lambda tokens: KeyValuePair(*tokens[0])
)
assignments = pp.DelimitedList(assignment)

#  ----------------------
#  Partitions
#  ----------------------

part = pp.pyparsing_common.integer
parts = pp.DelimitedList(part)

rationals = pp.DelimitedList(rational)


def _parse(grammar, text, what):
    try:
        return grammar.parse_string(text.strip(), parse_all=True)
    except pp.ParseException as err:
        raise ValueError(f"Could not parse {what} from {text!r}: {err}") from None


def parse_rat(text):
    """Parse ``p/q``, an integer or a decimal literal into an exact
    :class:`~fractions.Fraction`.

    >>> parse_rat("-3/6")
    Fraction(-1, 2)
    >>> parse_rat("0.25")
    Fraction(1, 4)
    """
    return _parse(rational, text, "a rational number")[0]


def parse_rationals(text):
    return tuple(_parse(rationals, text, "a list of rational numbers"))


def parse_params(text):
    """Parse comma separated ``name=p/q`` pairs into a `dict`.

    >>> parse_params("a=1/2,q=1/3")
    {'a': Fraction(1, 2), 'q': Fraction(1, 3)}
    """
    pairs = _parse(assignments, text, "parameter assignments")
    result = {}

    for pair in pairs:
        if pair.key in result:
            raise ValueError(f"Parameter {pair.key} assigned twice in {text!r}")
        result[pair.key] = pair.value

    return result


def parse_parts(text):
    """Parse comma separated partition parts, most significant first."""
    return tuple(int(p) for p in _parse(parts, text, "partition parts"))


if __name__ == "__main__":
    print(parse_params("a=1/2,b=-3,q=0.25"))
    print(parse_parts("2,1,0"))
