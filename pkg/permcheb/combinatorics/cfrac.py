"""Continued fractions and the trivariate functional equation for 132-avoiders.

The z-refined count of 132-avoiders by occurrences of 12...k is the
continued fraction 1/(1 - x z^d_1/(1 - x z^d_2/(1 - ...))) with
d_j = C(j-1, k-1). The statistics (12)pi and (123)pi jointly satisfy
F(x, y, z) = 1 + x F(xy, yz, z) F(x, y, z).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction

from permcheb.algebra.exactalg import RatFun, binomial
from permcheb.algebra.multiseries import BiSeries, TriSeries, TriTerms
from permcheb.errors import ParameterError, ResourceLimitError, TruncationError

logger = logging.getLogger(__name__)

RWZ_MAX_ORDER = 10


@dataclass(slots=True, frozen=True)
class CFSpec:
    """Truncated continued fraction for the pattern 12...k."""

    k: int
    depth: int
    x_order: int
    z_order: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ParameterError(f"Pattern length must be positive, got {self.k}")
        if self.x_order < 0 or self.z_order < 0:
            raise TruncationError("Truncation orders must be nonnegative")
        if self.depth < self.x_order:
            raise TruncationError(
                f"Depth {self.depth} is below the x-order {self.x_order}; "
                "each level carries a factor x, so depth >= x-order is required"
            )

    @classmethod
    def of(cls, k: int, x_order: int, z_order: int) -> CFSpec:
        return cls(k, x_order, x_order, z_order)

    def exponent(self, j: int) -> int:
        """d_j = C(j-1, k-1)."""
        return binomial(j - 1, self.k - 1)


def cf_biseries(spec: CFSpec) -> BiSeries:
    """Evaluate the finite continued fraction bottom-up in truncated series arithmetic."""
    one = BiSeries.one(spec.x_order, spec.z_order)
    tail = one
    for level in range(spec.depth, 0, -1):
        numerator = BiSeries.monomial(1, spec.exponent(level), 1, spec.x_order, spec.z_order)
        tail = (one - numerator * tail).inverse()
    logger.debug("Evaluated continued fraction k=%s depth=%s", spec.k, spec.depth)
    return tail


def rwz_triseries(N: int) -> TriSeries:
    """Solve F = 1 + x F(xy, yz, z) F one x-degree at a time through x**N.

    The y- and z-orders are C(N, 2) and C(N, 3), the largest possible
    numbers of 12 and 123 occurrences in a permutation of length N.
    """
    if N < 0:
        raise ParameterError(f"Order must be nonnegative, got {N}")
    if N > RWZ_MAX_ORDER:
        raise ResourceLimitError(f"Trivariate expansion is capped at x-order {RWZ_MAX_ORDER}, got {N}")
    y_order = binomial(N, 2)
    z_order = binomial(N, 3)
    degrees: list[TriTerms] = [{(0, 0): Fraction(1)}]
    shifted: list[TriTerms] = [TriSeries.substitute_terms(degrees[0], 0, y_order, z_order)]
    for n in range(1, N + 1):
        total: dict[tuple[int, int], Fraction] = {}
        for i in range(n):
            product = TriSeries.convolve(shifted[i], degrees[n - 1 - i], y_order, z_order)
            for key, value in product.items():
                total[key] = total.get(key, Fraction(0)) + value
        terms = {key: value for key, value in total.items() if value}
        degrees.append(terms)
        shifted.append(TriSeries.substitute_terms(terms, n, y_order, z_order))
    return TriSeries(N, y_order, z_order, tuple(degrees))


def approximant(k: int) -> RatFun:
    """The depth-k truncation 1/(1 - x/(1 - x/(...))), with depth 0 giving 0."""
    if k < 0:
        raise ParameterError(f"Approximant depth must be nonnegative, got {k}")
    value = RatFun.constant(0)
    x = RatFun.x()
    for _ in range(k):
        value = (1 - x * value).inverse()
    return value


def coefficient_rows(series: BiSeries) -> list[tuple[int, int, int]]:
    """(n, r, count) triples of a z-refined table, integral by construction."""
    rows = []
    for n, r, value in series.rows():
        if value.denominator != 1:
            raise ValueError(f"Non-integral coefficient at x^{n} z^{r}: {value}")
        rows.append((n, r, value.numerator))
    return rows
