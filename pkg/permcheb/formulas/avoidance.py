"""Generating functions for avoiding 132 (or 321) together with further patterns."""

from __future__ import annotations

import logging

from permcheb.algebra.cheb import R, T, U, to_ratfun
from permcheb.algebra.exactalg import RatFun
from permcheb.combinatorics.perm_core import PATTERN_132, contains, is_layered, is_wedge, layered_parts
from permcheb.errors import ParameterError, UnsupportedPattern
from permcheb.models import Explicit, Identity, Layered, PatternSpec, TwoLayered, Wedge

logger = logging.getLogger(__name__)

BASES = ("132", "321")


def three_layered(k: int, m1: int, m2: int) -> RatFun:
    """Avoiders of 132 and [k, m1, m2], k > m1 > m2 > 0."""
    if not k > m1 > m2 > 0:
        raise ParameterError(f"Three-layered pattern needs k > m1 > m2 > 0, got {k}, {m1}, {m2}")
    a, b, c = k - m1, m1 - m2, m2
    numerator = U(a + b) * U(a + c - 1) * U(b + c) + U(b - 1) * U(b)
    denominator = U(a + b) * U(a + c) * U(b + c)
    return to_ratfun(T * 2 * numerator / denominator)


def _layered_132(parts: tuple[int, ...]) -> RatFun:
    if len(parts) <= 2:
        return R(parts[0])
    if len(parts) == 3:
        return three_layered(*parts)
    raise UnsupportedPattern(f"No closed form for the {len(parts)}-layered pattern {list(parts)}")


def F_pair(base: str, tau: PatternSpec) -> RatFun:
    """Generating function of S_n(base, tau).

    Raises:
        UnsupportedPattern: When no closed form covers ``tau`` (for base 132
            fall back to :func:`permcheb.combinatorics.blockrec.F_recursive`).
    """
    if base not in BASES:
        raise UnsupportedPattern(f"Base pattern must be one of {BASES}, got {base!r}")
    if base == "321":
        return _pair_321(tau)

    if isinstance(tau, Identity):
        return R(tau.k)
    if isinstance(tau, TwoLayered):
        return R(tau.k)
    if isinstance(tau, Layered):
        return _layered_132(tau.parts)
    pattern = tau.materialize()
    if isinstance(tau, Wedge) or is_wedge(pattern):
        return R(len(pattern))
    if is_layered(pattern):
        return _layered_132(layered_parts(pattern))
    if contains(pattern, PATTERN_132):
        raise UnsupportedPattern(f"{pattern} contains 132, so S_n(132, {pattern}) = S_n(132)")
    raise UnsupportedPattern(f"No closed form for (132, {tau})")


def _pair_321(tau: PatternSpec) -> RatFun:
    if isinstance(tau, TwoLayered):
        return R(tau.k)
    parts: tuple[int, ...] = ()
    if isinstance(tau, Layered):
        parts = tau.parts
    elif isinstance(tau, Explicit) and is_layered(tau.permutation):
        parts = layered_parts(tau.permutation)
    if len(parts) == 2:
        return R(parts[0])
    # S_n(321, 12...k) is finite by Erdos-Szekeres, so it is not R_k
    raise UnsupportedPattern(f"No closed form for (321, {tau})")


def _triple_ranges(k: int, m: int, l: int) -> None:
    if not (1 <= m <= k - m):
        raise ParameterError(f"Triple restriction needs k - m >= m >= 1, got k={k}, m={m}")
    if l < 1:
        raise ParameterError(f"Identity length must be positive, got l={l}")


def F_triple(k: int, m: int, l: int) -> RatFun:
    """Avoiders of 132, [k, m] and [l] for k - m >= m; l <= k - m reduces to R_l."""
    _triple_ranges(k, m, l)
    if l <= k - m:
        return R(l)
    correction = (RatFun.x() * R(k - m) * R(m)) ** (l + m - k)
    return R(k) - correction * (R(k) - R(k - m))


def F_triple_recursive(k: int, m: int, l: int) -> RatFun:
    """Same count from the split at the maximum, iterated up from l = k - m."""
    _triple_ranges(k, m, l)
    if l <= k - m:
        return R(l)
    x = RatFun.x()
    low = R(k - m - 1)
    value = R(k - m)
    for _ in range(k - m + 1, l + 1):
        value = (1 + x * (value - low) * R(m)) / (1 - x * low)
    return value
