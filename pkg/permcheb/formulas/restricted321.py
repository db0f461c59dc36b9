"""321-avoiders with a two-layered restriction: the alternating Catalan identity."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass

from permcheb.algebra.exactalg import Series, binomial, catalan
from permcheb.config import Settings
from permcheb.errors import ParameterError
from permcheb.models import ConstraintSet, Permutation, TwoLayered
from permcheb.services.oracle import count_upto

logger = logging.getLogger(__name__)

BASE_321 = Permutation((3, 2, 1))


@dataclass(slots=True, frozen=True)
class IdentityCheck:
    """Outcome of the coefficientwise check; truthy when every coefficient vanishes."""

    k: int
    m: int
    order: int
    residual: Series
    first_failure: int | None

    @property
    def holds(self) -> bool:
        return self.first_failure is None

    def __bool__(self) -> bool:
        return self.holds


def _constraint(k: int, m: int) -> ConstraintSet:
    return ConstraintSet.avoiding([BASE_321, TwoLayered(k, m)])


def identity_residual(k: int, counts: Sequence[int]) -> Series:
    """sum_i (-x)^i C(k-i, i) (F - sum_{j<k-i} c_j x^j) truncated at the order of ``counts``."""
    series = Series.from_counts(counts)
    order = series.order
    residual = Series.zero(order)
    for i in range(k + 1):
        weight = binomial(k - i, i)
        if not weight:
            continue
        catalan_head = [catalan(j) if j < k - i else 0 for j in range(order + 1)]
        inner = series - Series.from_counts(catalan_head)
        residual = residual + inner.shift(i) * ((-1) ** i * weight)
    return residual


def check_A_identity(
    k: int, m: int, N: int, *, settings: Settings | None = None
) -> IdentityCheck:
    """Check the identity for T = {321, [k, m]} from oracle counts through x^N."""
    if k < 2 or not 1 <= m <= k - 1:
        raise ParameterError(f"Need k >= 2 and 1 <= m <= k-1, got k={k}, m={m}")
    table = count_upto(_constraint(k, m), N, settings=settings)
    residual = identity_residual(k, table.counts)
    first = next((n for n, value in enumerate(residual.coeffs) if value), None)
    if first is not None:
        logger.warning("Alternating identity fails for [%s,%s] at x^%s", k, m, first)
    return IdentityCheck(k, m, N, residual, first)


def A_value(counts: Sequence[int], m: int, n: int, r: int) -> int:
    """A(n, r) = sum_{i=0}^{r+m} (-1)^i C(r+m-i, i) f(n-i), with f(j) = 0 for j < 0."""
    total = 0
    for i in range(r + m + 1):
        if n - i < 0:
            break
        total += (-1) ** i * binomial(r + m - i, i) * counts[n - i]
    return total


def A_values(
    k: int, m: int, N: int, *, r_max: int | None = None, settings: Settings | None = None
) -> dict[tuple[int, int], int]:
    """Table of A(n, r) for 0 <= n <= N and 0 <= r <= r_max (default k)."""
    if k < 2 or not 1 <= m <= k - 1:
        raise ParameterError(f"Need k >= 2 and 1 <= m <= k-1, got k={k}, m={m}")
    counts = count_upto(_constraint(k, m), N, settings=settings).counts
    r_max = k if r_max is None else r_max
    return {(n, r): A_value(counts, m, n, r) for n in range(N + 1) for r in range(r_max + 1)}
