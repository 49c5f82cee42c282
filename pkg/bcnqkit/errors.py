#!/usr/bin/env python
"""Exceptions raised by bcnqkit.

Every error carries a short machine tag in :attr:`BcnqkitError.code` so the
command line front end can emit it as a JSON object.
"""
# Standard Library
import logging

logger = logging.getLogger(__name__)


class BcnqkitError(Exception):
    """Base class of all bcnqkit errors."""

    code = "error"

    def to_json(self):
        return {"error": self.code, "message": str(self)}


class DegenerateSpecialization(BcnqkitError, ValueError):
    """The parameter point is not generic enough for the requested job."""

    code = "degenerate specialization"


class VanishingDenominator(BcnqkitError, ZeroDivisionError):
    """A factor in the denominator of a product formula is zero."""

    code = "vanishing denominator"


class CertificationFailure(BcnqkitError, RuntimeError):
    code = "certification failure"


class NonPolynomialImage(BcnqkitError, ArithmeticError):
    """The image of a difference operator is not a symmetric polynomial."""

    code = "non-polynomial image"


class TriangularityError(BcnqkitError, AssertionError):
    code = "triangularity violation"


class LimitError(BcnqkitError, ArithmeticError):
    """A q=0 constant term or a factorwise q->1 limit does not exist."""

    code = "limit error"


class ResourceLimitExceeded(BcnqkitError):
    code = "resource bound exceeded"
