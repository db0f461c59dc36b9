"""Permutations containing 132 exactly once.

H counts those avoiding a further pattern, Phi those containing a further
pattern exactly once. The ``*_recursive`` variants solve the linear
equations given by the three block forms of an exactly-once permutation
and serve as an independent check of the closed forms.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from permcheb.algebra.cheb import R, TExpr, U, to_ratfun, two_t_power
from permcheb.algebra.exactalg import Poly, RatFun
from permcheb.errors import ParameterError, UnsupportedPattern
from permcheb.models import Identity, Layered, PatternSpec, TwoLayered

logger = logging.getLogger(__name__)


def _squares(upto: int) -> TExpr:
    total = TExpr.coerce(0)
    for j in range(1, upto + 1):
        total = total + U(j) ** 2
    return total


def _prefactor(k: int) -> TExpr:
    """1 / (4 t^2 U_k^2)."""
    return 1 / (two_t_power(2) * U(k) ** 2)


def _classify(tau: PatternSpec) -> tuple[int, int | None]:
    """(k, None) for [k], (k, m) for [k, m]."""
    if isinstance(tau, Identity):
        return tau.k, None
    if isinstance(tau, TwoLayered):
        return tau.k, tau.m
    if isinstance(tau, Layered) and len(tau.parts) <= 2:
        if len(tau.parts) == 1:
            return tau.parts[0], None
        return tau.parts[0], tau.parts[1]
    raise UnsupportedPattern(f"No exactly-one-132 formula for {tau}")


def _reflect(k: int, m: int) -> int:
    return k - m if 2 * m > k else m


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------


def H_identity(k: int) -> RatFun:
    if k < 3:
        raise ParameterError(f"H_[k] is stated for k >= 3, got {k}")
    return to_ratfun(_prefactor(k) * _squares(k - 2))


def H_two_layered(k: int, m: int) -> RatFun:
    """Exactly one 132 and no [k, m]; m > k/2 is reflected to k - m first."""
    if not 1 <= m <= k - 1:
        raise ParameterError(f"[k,m] needs 1 <= m <= k-1, got k={k}, m={m}")
    m = _reflect(k, m)
    x = RatFun.x()
    if m == 1:
        if k == 3:
            return x**3 / (1 - 2 * x)
        if k >= 4:
            return to_ratfun(_prefactor(k) * (_squares(k - 2) - 1))
    elif m == 2:
        if k == 4:
            return x**3 * (1 + x) / ((1 - x) * RatFun(Poly((1, -3, 1))))
        if k >= 5:
            correction = two_t_power(1) * U(k - 3) / U(k - 2)
            return to_ratfun(_prefactor(k) * (_squares(k - 2) - correction - 2))
    elif k >= 6:
        inner = _squares(k - m - 2) + _squares(m - 1) - 1 + U(k - 1) * U(m - 1) * U(k - m - 2)
        return to_ratfun(_prefactor(k) * inner)
    raise ParameterError(f"No stated formula for H_[{k},{m}]")


def H(tau: PatternSpec) -> RatFun:
    """Generating function of permutations containing 132 exactly once and avoiding ``tau``."""
    k, m = _classify(tau)
    if m is None:
        return H_identity(k)
    return H_two_layered(k, m)


def Phi_identity(k: int) -> RatFun:
    if k < 1:
        raise ParameterError(f"Phi_[k] needs k >= 1, got {k}")
    total = TExpr.coerce(0)
    for i in range(1, k - 1):
        total = total + (_squares(k - i) - 1) / (U(k - i) * U(k - i + 1))
    # 4 t^3 = (2t)^3 / 2
    return to_ratfun(total * 2 / (two_t_power(3) * U(k) ** 2))


def Phi_two_layered_one(k: int) -> RatFun:
    if k < 4:
        raise ParameterError(f"Phi_[k,1] is stated for k >= 4, got {k}")
    two_t = two_t_power(1)
    first = TExpr.coerce(0)
    for i in range(1, k - 3):
        first = first + (_squares(k - i - 2) - 1) / (U(k - i - 2) * U(k - i - 1))
    first = first * U(k) * 2 / (two_t_power(2) * U(k - 2))
    second = _squares(k - 4) / (two_t * U(k - 2) ** 2)
    third = U(k - 3) / (two_t * U(k - 1))
    fourth = U(k) / U(k - 1)
    return to_ratfun((first + second + third + fourth) / (two_t_power(3) * U(k) ** 2))


def Phi(tau: PatternSpec) -> RatFun:
    """Generating function of permutations containing both 132 and ``tau`` exactly once."""
    k, m = _classify(tau)
    if m is None:
        return Phi_identity(k)
    if m == 1:
        return Phi_two_layered_one(k)
    raise UnsupportedPattern(f"Phi is covered for [k] and [k,1] only, got {tau}")


# ---------------------------------------------------------------------------
# Block-form equations
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _H_identity_recursive(k: int) -> RatFun:
    if k <= 2:
        return RatFun.constant(0)
    x = RatFun.x()
    numerator = x * _H_identity_recursive(k - 1) * R(k) + x**3 * R(k - 1) ** 2 * R(k)
    return numerator / (1 - x * R(k - 1))


def H_recursive(tau: PatternSpec) -> RatFun:
    """H from the block forms: split at n with the 132 on either side, or (a', j, n, a'', j+1, a''')."""
    k, m = _classify(tau)
    x = RatFun.x()
    h = _H_identity_recursive
    if m is None:
        if k < 3:
            raise ParameterError(f"H_[k] is stated for k >= 3, got {k}")
        return h(k)
    if not 1 <= m <= k - 1:
        raise ParameterError(f"[k,m] needs 1 <= m <= k-1, got k={k}, m={m}")
    m = _reflect(k, m)
    if m == 1 and k >= 4:
        low = R(k - 2)
        rhs = x * h(k - 2) * (R(k) - 1) + x**3 * low**2 * R(k) + x**3 * low * (R(k) - low)
        return rhs / (1 - x - x * low)
    if m == 2 and k >= 5:
        low = R(k - 3)
        rhs = (
            x * h(k - 3) * (R(k) - R(2))
            + x**3 * low**2 * R(k)
            + x**3 * low * (R(k) - low) * R(2)
            + x**3 * (R(k - 2) - low) * R(2)
        )
        return rhs / (1 - x * R(2) - x * low)
    if m >= 3 and k >= 6:
        low = R(k - m - 1)
        rhs = (
            x * h(k - m - 1) * (R(k) - R(m))
            + x * (R(k) - low) * h(m)
            + x**3 * low**2 * R(k)
            + x**3 * low * (R(k) - low) * R(m)
            + x**3 * (R(k) - low) * R(m - 1) * R(m)
        )
        return rhs / (1 - x * R(m) - x * low)
    raise ParameterError(f"No block-form equation for H_[{k},{m}]")


@lru_cache(maxsize=None)
def Phi_recursive(k: int) -> RatFun:
    """Phi_[k] from the block forms with Phi_[2] = 0."""
    if k < 2:
        raise ParameterError(f"Phi_[k] recursion starts at k = 2, got {k}")
    if k == 2:
        return RatFun.constant(0)
    x = RatFun.x()
    h = _H_identity_recursive

    def once(j: int) -> RatFun:
        return to_ratfun(1 / U(j) ** 2)

    numerator = (
        x * Phi_recursive(k - 1) * R(k)
        + x * h(k - 1) * once(k)
        + x * once(k - 1) * h(k)
        + x**3 * (2 * once(k - 1) * R(k - 1) * R(k) + R(k - 1) ** 2 * once(k))
    )
    logger.debug("Phi recursion step k=%s", k)
    return numerator / (1 - x * R(k - 1))
