#!/usr/bin/env python
"""Koornwinder and q-Jacobi polynomials in exact rational arithmetic, and
the dimension formulas for spherical representations built on them."""
