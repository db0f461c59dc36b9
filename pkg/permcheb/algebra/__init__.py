"""Exact algebra: rational functions, truncated series and the Chebyshev t-calculus."""

from permcheb.algebra.cheb import R, T, TExpr, U, to_ratfun, two_t_power
from permcheb.algebra.exactalg import Poly, RatFun, Series, binomial, catalan, poly_gcd, series_of
from permcheb.algebra.multiseries import BiSeries, TriSeries

__all__ = [
    "BiSeries",
    "Poly",
    "R",
    "RatFun",
    "Series",
    "T",
    "TExpr",
    "TriSeries",
    "U",
    "binomial",
    "catalan",
    "poly_gcd",
    "series_of",
    "to_ratfun",
    "two_t_power",
]
