"""Exact tools for covolume and Lorentzian polynomials, adjoints of cones, and Segre zeta functions."""

from .ratpoly import Polynomial, PolynomialError, parse

__all__ = ["Polynomial", "PolynomialError", "parse"]
