"""Exact arithmetic kernel: polynomials, rational functions and truncated series in x.

Polynomials are :class:`sympy.Poly` values over ``QQ`` in the single
generator ``x``; gcd reduction and division come from ``sympy.polys``.
Coefficients cross the module boundary as :class:`fractions.Fraction`.
Values are immutable and canonical, so structural equality is
mathematical equality.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import QQ, Rational, Symbol
from sympy import Poly as SymPoly

from permcheb.errors import TruncationError

Scalar = Union[int, Fraction]

X = Symbol("x")

__all__ = [
    "X",
    "Poly",
    "RatFun",
    "Series",
    "binomial",
    "catalan",
    "poly_gcd",
    "series_of",
]


def _rational(value: Scalar) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def _fraction(value: Rational) -> Fraction:
    return Fraction(int(value.p), int(value.q))


def _format_scalar(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(slots=True, frozen=True)
class Poly:
    """Univariate polynomial over QQ.

    Built from coefficients lowest degree first (``Poly((1, -2))`` is
    ``1 - 2*x``) or from a :class:`sympy.Poly` in ``x``.
    """

    rep: SymPoly | Iterable[Scalar] = ()

    def __post_init__(self) -> None:
        rep = self.rep
        if isinstance(rep, SymPoly):
            if rep.gens != (X,):
                raise ValueError(f"Expected a polynomial in x, got generators {rep.gens}")
        else:
            coeffs = [_rational(c) for c in rep]
            rep = SymPoly.from_list(coeffs[::-1] or [0], X, domain=QQ)
        if rep.get_domain() != QQ:
            rep = rep.set_domain(QQ)
        object.__setattr__(self, "rep", rep)

    # -- constructors -------------------------------------------------
    @classmethod
    def constant(cls, value: Scalar) -> Poly:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, value: Scalar = 1) -> Poly:
        if degree < 0:
            raise ValueError(f"Monomial degree must be nonnegative, got {degree}")
        return cls((0,) * degree + (value,))

    @classmethod
    def x(cls) -> Poly:
        return cls.monomial(1)

    @staticmethod
    def coerce(value: Poly | Scalar) -> Poly:
        if isinstance(value, Poly):
            return value
        return Poly.constant(value)

    # -- inspection ---------------------------------------------------
    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        """Coefficients lowest degree first, without trailing zeros."""
        if self.rep.is_zero:
            return ()
        return tuple(_fraction(c) for c in reversed(self.rep.all_coeffs()))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        if self.rep.is_zero:
            return -1
        return int(self.rep.degree())

    def is_zero(self) -> bool:
        return bool(self.rep.is_zero)

    def coefficient(self, index: int) -> Fraction:
        if index < 0:
            return Fraction(0)
        return _fraction(self.rep.coeff_monomial(X**index))

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Poly | Scalar) -> Poly:
        return Poly(self.rep + Poly.coerce(other).rep)

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(-self.rep)

    def __sub__(self, other: Poly | Scalar) -> Poly:
        return Poly(self.rep - Poly.coerce(other).rep)

    def __rsub__(self, other: Poly | Scalar) -> Poly:
        return Poly.coerce(other) - self

    def __mul__(self, other: Poly | Scalar) -> Poly:
        return Poly(self.rep * Poly.coerce(other).rep)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        if exponent < 0:
            raise ValueError("Polynomials only support nonnegative powers")
        return Poly(self.rep**exponent)

    def __divmod__(self, other: Poly | Scalar) -> tuple[Poly, Poly]:
        divisor = Poly.coerce(other)
        if divisor.is_zero():
            raise ZeroDivisionError("Polynomial division by zero")
        quotient, remainder = self.rep.div(divisor.rep)
        return Poly(quotient), Poly(remainder)

    def __floordiv__(self, other: Poly | Scalar) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly | Scalar) -> Poly:
        return divmod(self, other)[1]

    # -- rendering ----------------------------------------------------
    def render(self, variable: str = "x") -> str:
        """Render lowest degree first, e.g. ``1 - 2*x + x**2``."""
        coeffs = self.coeffs
        if not coeffs:
            return "0"
        parts: list[str] = []
        for degree, value in enumerate(coeffs):
            if not value:
                continue
            magnitude = abs(value)
            if degree == 0:
                body = _format_scalar(magnitude)
            else:
                power = variable if degree == 1 else f"{variable}**{degree}"
                body = power if magnitude == 1 else f"{_format_scalar(magnitude)}*{power}"
            if not parts:
                parts.append(f"-{body}" if value < 0 else body)
            else:
                parts.append(f" - {body}" if value < 0 else f" + {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def term_count(self) -> int:
        return len(self.rep.terms()) if not self.rep.is_zero else 0


def poly_gcd(first: Poly, second: Poly) -> Poly:
    """Monic greatest common divisor (zero if both inputs are zero)."""
    return Poly(first.rep.gcd(second.rep))


@dataclass(slots=True, frozen=True)
class RatFun:
    """Rational function in x in lowest terms with a canonically scaled denominator.

    The denominator has constant term 1 when that term is nonzero, and
    lowest nonzero coefficient 1 otherwise.
    """

    num: Poly
    den: Poly = Poly((1,))

    def __post_init__(self) -> None:
        num = Poly.coerce(self.num)
        den = Poly.coerce(self.den)
        if den.is_zero():
            raise ZeroDivisionError("Rational function with zero denominator")
        if num.is_zero():
            object.__setattr__(self, "num", Poly())
            object.__setattr__(self, "den", Poly.constant(1))
            return
        num_rep, den_rep = num.rep.cancel(den.rep, include=True)
        # EC is the coefficient of the lowest-degree term
        low = den_rep.EC()
        object.__setattr__(self, "num", Poly(num_rep.quo_ground(low)))
        object.__setattr__(self, "den", Poly(den_rep.quo_ground(low)))

    @classmethod
    def coerce(cls, value: RatFun | Poly | Scalar) -> RatFun:
        if isinstance(value, RatFun):
            return value
        return cls(Poly.coerce(value))

    @classmethod
    def x(cls) -> RatFun:
        return cls(Poly.x())

    @classmethod
    def constant(cls, value: Scalar) -> RatFun:
        return cls(Poly.constant(value))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __add__(self, other: RatFun | Poly | Scalar) -> RatFun:
        other = RatFun.coerce(other)
        if self.den == other.den:
            return RatFun(self.num + other.num, self.den)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> RatFun:
        return RatFun(-self.num, self.den)

    def __sub__(self, other: RatFun | Poly | Scalar) -> RatFun:
        return self + (-RatFun.coerce(other))

    def __rsub__(self, other: RatFun | Poly | Scalar) -> RatFun:
        return RatFun.coerce(other) - self

    def __mul__(self, other: RatFun | Poly | Scalar) -> RatFun:
        other = RatFun.coerce(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> RatFun:
        if self.is_zero():
            raise ZeroDivisionError("Inverse of the zero rational function")
        return RatFun(self.den, self.num)

    def __truediv__(self, other: RatFun | Poly | Scalar) -> RatFun:
        return self * RatFun.coerce(other).inverse()

    def __rtruediv__(self, other: RatFun | Poly | Scalar) -> RatFun:
        return RatFun.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> RatFun:
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFun(self.num**exponent, self.den**exponent)

    def series(self, order: int) -> Series:
        return series_of(self, order)

    def render(self) -> str:
        """Render as e.g. ``(1 - x)/(1 - 2*x)``."""
        numerator = self.num.render()
        if self.den == Poly.constant(1):
            return numerator
        if self.num.term_count() > 1:
            numerator = f"({numerator})"
        denominator = self.den.render()
        if self.den.term_count() > 1:
            denominator = f"({denominator})"
        return f"{numerator}/{denominator}"

    def __str__(self) -> str:
        return self.render()


@dataclass(slots=True, frozen=True)
class Series:
    """Power series in x truncated after x**order."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        if not self.coeffs:
            raise TruncationError("A series carries at least the x**0 coefficient")

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls((0,) * (order + 1))

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> Series:
        return cls(tuple(counts))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, index: int) -> Fraction:
        return self.coeffs[index]

    def __len__(self) -> int:
        return len(self.coeffs)

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise TruncationError(f"Cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    def _aligned(self, other: Series) -> tuple[Series, Series]:
        order = min(self.order, other.order)
        return self.truncate(order), other.truncate(order)

    def __add__(self, other: Series) -> Series:
        left, right = self._aligned(other)
        return Series(a + b for a, b in zip(left.coeffs, right.coeffs))

    def __neg__(self) -> Series:
        return Series(-c for c in self.coeffs)

    def __sub__(self, other: Series) -> Series:
        return self + (-other)

    def __mul__(self, other: Series | Scalar) -> Series:
        if not isinstance(other, Series):
            return Series(c * other for c in self.coeffs)
        left, right = self._aligned(other)
        size = len(left.coeffs)
        product = [Fraction(0)] * size
        for i, a in enumerate(left.coeffs):
            if not a:
                continue
            for j in range(size - i):
                product[i + j] += a * right.coeffs[j]
        return Series(product)

    __rmul__ = __mul__

    def shift(self, amount: int) -> Series:
        """Multiply by x**amount, keeping the order."""
        return Series(((0,) * amount + self.coeffs)[: len(self.coeffs)])

    def as_integers(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is not integral."""
        values = []
        for value in self.coeffs:
            if value.denominator != 1:
                raise ValueError(f"Series coefficient {value} is not an integer")
            values.append(value.numerator)
        return values

    def first_difference(self, other: Series) -> int | None:
        """Index of the first differing coefficient up to the common order."""
        for index, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return index
        return None


def series_of(function: RatFun, order: int) -> Series:
    """Maclaurin expansion of ``function`` through x**order.

    Raises:
        ZeroDivisionError: If the denominator vanishes at x = 0.
    """
    if order < 0:
        raise TruncationError(f"Series order must be nonnegative, got {order}")
    num = function.num.coeffs
    den = function.den.coeffs
    if den[0] == 0:
        raise ZeroDivisionError("Cannot expand a rational function at a pole (denominator(0) = 0)")
    result: list[Fraction] = []
    for n in range(order + 1):
        acc = num[n] if n < len(num) else Fraction(0)
        for i in range(1, min(n, len(den) - 1) + 1):
            acc -= den[i] * result[n - i]
        result.append(acc / den[0])
    return Series(result)


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with C(n, k) = 0 whenever k < 0 or n < k."""
    if k < 0 or n < k:
        return 0
    return math.comb(n, k)


def catalan(j: int) -> int:
    """The j-th Catalan number C(2j, j)/(j+1)."""
    if j < 0:
        raise ValueError(f"Catalan index must be nonnegative, got {j}")
    return math.comb(2 * j, j) // (j + 1)
