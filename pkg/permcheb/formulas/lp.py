"""Avoiding the whole set L_p together with an increasing or two-layered pattern.

A permutation avoids L_p iff its p-2 largest entries cut the rest into
blocks that are 132-avoiding, each occupying a value interval and placed
in decreasing order. A block followed by top letters with a longest
increasing subsequence of length L may not contain [k - L].
"""

from __future__ import annotations

import logging
from math import factorial

from permcheb.algebra.cheb import R, T, TExpr, U, to_ratfun, two_t_power
from permcheb.algebra.exactalg import RatFun
from permcheb.errors import ParameterError
from permcheb.services.oracle import count_N_of_a

logger = logging.getLogger(__name__)


def F_L4_identity(k: int) -> RatFun:
    """1 + x + x^2 R_k R_{k-1} (R_{k-1} + R_{k-2}) for k >= 2."""
    if k < 2:
        raise ParameterError(f"Need k >= 2, got {k}")
    x = RatFun.x()
    return 1 + x + x**2 * R(k) * R(k - 1) * (R(k - 1) + R(k - 2))


def F_Lp(p: int, k: int, *, literal: bool = False) -> RatFun:
    """Generating function of S_n(L_p, [k]) for p >= 4 and k >= p - 2.

    The block product uses R_{k-1-(a_1+...+a_j)}, the bound left for a
    block followed by the last j+1 top letters. ``literal`` evaluates the
    displayed product R_{k-j-a_j} instead; both agree at p = 4.
    """
    if p < 4:
        raise ParameterError(f"L_p formula needs p >= 4, got {p}")
    if k < p - 2:
        raise ParameterError(f"L_p formula needs k >= p - 2, got p={p}, k={k}")
    x = RatFun.x()
    head = RatFun.constant(0)
    for i in range(p - 2):
        head = head + factorial(i) * x**i
    blocks = RatFun.constant(0)
    for sequence, count in count_N_of_a(p).items():
        product = RatFun.constant(1)
        used = 0
        for j, bit in enumerate(sequence, start=1):
            used += bit
            index = k - j - bit if literal else k - 1 - used
            product = product * R(index)
        blocks = blocks + count * product
    return head + x ** (p - 2) * R(k) * R(k - 1) * blocks


def F_L4_two_layered(k: int, m: int) -> RatFun:
    """S_n(L_4, [k, m]); m = k - 1 coincides with [k]."""
    if not 1 <= m <= k - 1:
        raise ParameterError(f"[k,m] needs 1 <= m <= k-1, got k={k}, m={m}")
    if m == k - 1:
        return F_L4_identity(k)
    x = RatFun.x()
    value = (
        TExpr.coerce(1 + x)
        + U(k - 2) * U(m - 1) / (T * U(k) * U(m))
        + U(k - m - 2)
        / (two_t_power(1) * U(k) * U(m))
        * (U(k - m - 2) / U(k - m - 1) + U(k - m - 3) / U(k - m - 2))
    )
    return to_ratfun(value)
