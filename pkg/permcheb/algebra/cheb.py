"""Chebyshev polynomials of the second kind evaluated at t = 1/(2*sqrt(x)).

Every closed form is written in t and reduced to a rational function in x.
:class:`TExpr` models the field Q(x)[t]/(t**2 - 1/(4x)): an element is
``a + b*t`` with rational functions ``a`` and ``b``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from permcheb.algebra.exactalg import Poly, RatFun, Scalar
from permcheb.errors import IrreducibleExpression

logger = logging.getLogger(__name__)

__all__ = ["TExpr", "T", "U", "R", "to_ratfun", "two_t_power"]

# t**2 = 1/(4x)
T_SQUARED = RatFun(Poly.constant(1), Poly.monomial(1, 4))


@dataclass(slots=True, frozen=True)
class TExpr:
    """Element a + b*t of the quadratic extension with t**2 = 1/(4x)."""

    a: RatFun
    b: RatFun = RatFun(Poly())

    @staticmethod
    def coerce(value: TExpr | RatFun | Scalar) -> TExpr:
        if isinstance(value, TExpr):
            return value
        return TExpr(RatFun.coerce(value))

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_reducible(self) -> bool:
        return self.b.is_zero()

    def __add__(self, other: TExpr | RatFun | Scalar) -> TExpr:
        other = TExpr.coerce(other)
        return TExpr(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> TExpr:
        return TExpr(-self.a, -self.b)

    def __sub__(self, other: TExpr | RatFun | Scalar) -> TExpr:
        return self + (-TExpr.coerce(other))

    def __rsub__(self, other: TExpr | RatFun | Scalar) -> TExpr:
        return TExpr.coerce(other) - self

    def __mul__(self, other: TExpr | RatFun | Scalar) -> TExpr:
        other = TExpr.coerce(other)
        # (a + bt)(c + dt) = (ac + bd t^2) + (ad + bc) t
        a = self.a * other.a
        if not (self.b.is_zero() or other.b.is_zero()):
            a = a + self.b * other.b * T_SQUARED
        b = self.a * other.b + self.b * other.a
        return TExpr(a, b)

    __rmul__ = __mul__

    def norm(self) -> RatFun:
        """(a + bt)(a - bt) = a**2 - b**2 t**2."""
        return self.a * self.a - self.b * self.b * T_SQUARED

    def inverse(self) -> TExpr:
        if self.is_zero():
            raise ZeroDivisionError("Inverse of zero in the t-extension")
        norm = self.norm()
        return TExpr(self.a / norm, -self.b / norm)

    def __truediv__(self, other: TExpr | RatFun | Scalar) -> TExpr:
        return self * TExpr.coerce(other).inverse()

    def __rtruediv__(self, other: TExpr | RatFun | Scalar) -> TExpr:
        return TExpr.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> TExpr:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = TExpr(RatFun.constant(1))
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def render(self) -> str:
        """Diagnostic form ``A(x) + B(x)*t``."""
        return f"{self.a.render()} + ({self.b.render()})*t"

    def __str__(self) -> str:
        return self.render()


T = TExpr(RatFun.constant(0), RatFun.constant(1))


def to_ratfun(expr: TExpr) -> RatFun:
    """Reduce a t-free expression to a rational function in x.

    Raises:
        IrreducibleExpression: If the t-part is nonzero.
    """
    if not expr.is_reducible():
        raise IrreducibleExpression(f"Expression has a nonzero t-part: {expr.render()}")
    return expr.a


def two_t_power(exponent: int) -> TExpr:
    """(2t)**exponent, using (2t)**2 = 1/x so only one t survives for odd exponents."""
    half, odd = divmod(exponent, 2)
    scalar = RatFun.x() ** (-half)
    if odd:
        return TExpr(RatFun.constant(0), scalar * 2)
    return TExpr(scalar)


@lru_cache(maxsize=None)
def U(r: int) -> TExpr:
    """Chebyshev polynomial U_r(t) via U_r = 2t U_{r-1} - U_{r-2}, U_{-1} = 0, U_0 = 1.

    Raises:
        ValueError: If r < -1.
    """
    if r < -1:
        raise ValueError(f"U_r is defined for r >= -1, got {r}")
    if r == -1:
        return TExpr(RatFun.constant(0))
    if r == 0:
        return TExpr(RatFun.constant(1))
    logger.debug("Computing U_%s", r)
    return T * 2 * U(r - 1) - U(r - 2)


@lru_cache(maxsize=None)
def R(k: int) -> RatFun:
    """R_k(x) = 2t U_{k-1}(t) / U_k(t), with R_0 = 0."""
    if k < 0:
        raise ValueError(f"R_k is defined for k >= 0, got {k}")
    if k == 0:
        return RatFun.constant(0)
    return to_ratfun(T * 2 * U(k - 1) / U(k))
