"""Truncated bivariate and trivariate power series.

A :class:`BiSeries` is a series in x whose coefficients are polynomials in z;
a :class:`TriSeries` additionally tracks y. Every truncation order is
explicit and arithmetic never extends it: operands with different orders
are rejected.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from permcheb.algebra.exactalg import Scalar, Series
from permcheb.errors import TruncationError

__all__ = ["BiSeries", "TriSeries"]

ZPoly = tuple[Fraction, ...]


def _zadd(a: ZPoly, b: ZPoly) -> ZPoly:
    return tuple(p + q for p, q in zip(a, b))


def _zmul(a: ZPoly, b: ZPoly) -> ZPoly:
    size = len(a)
    out = [Fraction(0)] * size
    for i, p in enumerate(a):
        if not p:
            continue
        for j in range(size - i):
            if b[j]:
                out[i + j] += p * b[j]
    return tuple(out)


def _zinverse(a: ZPoly) -> ZPoly:
    if a[0] == 0:
        raise ZeroDivisionError("z-polynomial with zero constant term is not invertible")
    size = len(a)
    out = [Fraction(0)] * size
    out[0] = 1 / a[0]
    for n in range(1, size):
        acc = sum((a[i] * out[n - i] for i in range(1, n + 1)), Fraction(0))
        out[n] = -acc / a[0]
    return tuple(out)


@dataclass(slots=True, frozen=True)
class BiSeries:
    """Series in x through x**x_order with z-polynomial coefficients through z**z_order."""

    x_order: int
    z_order: int
    grid: tuple[ZPoly, ...]

    def __post_init__(self) -> None:
        if self.x_order < 0 or self.z_order < 0:
            raise TruncationError("Truncation orders must be nonnegative")
        grid = tuple(tuple(Fraction(c) for c in row) for row in self.grid)
        if len(grid) != self.x_order + 1 or any(len(row) != self.z_order + 1 for row in grid):
            raise TruncationError(
                f"Grid shape does not match orders (x: {self.x_order}, z: {self.z_order})"
            )
        object.__setattr__(self, "grid", grid)

    @classmethod
    def zero(cls, x_order: int, z_order: int) -> BiSeries:
        row = (Fraction(0),) * (z_order + 1)
        return cls(x_order, z_order, (row,) * (x_order + 1))

    @classmethod
    def monomial(
        cls, n: int, r: int, value: Scalar, x_order: int, z_order: int
    ) -> BiSeries:
        """value * x**n * z**r, or zero when the monomial lies past a truncation order."""
        rows = [[Fraction(0)] * (z_order + 1) for _ in range(x_order + 1)]
        if n <= x_order and r <= z_order:
            rows[n][r] = Fraction(value)
        return cls(x_order, z_order, tuple(tuple(row) for row in rows))

    @classmethod
    def one(cls, x_order: int, z_order: int) -> BiSeries:
        return cls.monomial(0, 0, 1, x_order, z_order)

    def _check(self, other: BiSeries) -> None:
        if (self.x_order, self.z_order) != (other.x_order, other.z_order):
            raise TruncationError(
                f"Mismatched truncation orders: ({self.x_order}, {self.z_order}) "
                f"vs ({other.x_order}, {other.z_order})"
            )

    def coefficient(self, n: int, r: int) -> Fraction:
        return self.grid[n][r]

    def __add__(self, other: BiSeries) -> BiSeries:
        self._check(other)
        return BiSeries(
            self.x_order, self.z_order, tuple(_zadd(a, b) for a, b in zip(self.grid, other.grid))
        )

    def __neg__(self) -> BiSeries:
        return BiSeries(self.x_order, self.z_order, tuple(tuple(-c for c in row) for row in self.grid))

    def __sub__(self, other: BiSeries) -> BiSeries:
        return self + (-other)

    def __mul__(self, other: BiSeries) -> BiSeries:
        self._check(other)
        rows: list[ZPoly] = []
        empty = (Fraction(0),) * (self.z_order + 1)
        for n in range(self.x_order + 1):
            acc = empty
            for i in range(n + 1):
                if any(self.grid[i]) and any(other.grid[n - i]):
                    acc = _zadd(acc, _zmul(self.grid[i], other.grid[n - i]))
            rows.append(acc)
        return BiSeries(self.x_order, self.z_order, tuple(rows))

    def inverse(self) -> BiSeries:
        """Multiplicative inverse; requires a nonzero x**0 z**0 coefficient."""
        head = _zinverse(self.grid[0])
        rows: list[ZPoly] = [head]
        empty = (Fraction(0),) * (self.z_order + 1)
        for n in range(1, self.x_order + 1):
            acc = empty
            for i in range(1, n + 1):
                acc = _zadd(acc, _zmul(self.grid[i], rows[n - i]))
            rows.append(tuple(-c for c in _zmul(head, acc)))
        return BiSeries(self.x_order, self.z_order, tuple(rows))

    def row(self, r: int) -> Series:
        """The coefficient of z**r as a series in x."""
        if not 0 <= r <= self.z_order:
            raise TruncationError(f"z-power {r} outside truncation order {self.z_order}")
        return Series(tuple(self.grid[n][r] for n in range(self.x_order + 1)))

    def z_sum(self) -> Series:
        """Specialize z = 1 over the tracked z-powers."""
        return Series(tuple(sum(row, Fraction(0)) for row in self.grid))

    def rows(self) -> Iterable[tuple[int, int, Fraction]]:
        for n, row in enumerate(self.grid):
            for r, value in enumerate(row):
                yield n, r, value


TriTerms = dict[tuple[int, int], Fraction]


@dataclass(slots=True, frozen=True)
class TriSeries:
    """Series in x through x**x_order; each x-degree maps (y-power, z-power) to a coefficient."""

    x_order: int
    y_order: int
    z_order: int
    degrees: tuple[TriTerms, ...]

    def __post_init__(self) -> None:
        if len(self.degrees) != self.x_order + 1:
            raise TruncationError("One term map per x-degree is required")
        for terms in self.degrees:
            for b, c in terms:
                if b > self.y_order or c > self.z_order:
                    raise TruncationError(f"Term y**{b} z**{c} exceeds truncation orders")

    @classmethod
    def one(cls, x_order: int, y_order: int, z_order: int) -> TriSeries:
        degrees: list[TriTerms] = [{} for _ in range(x_order + 1)]
        degrees[0] = {(0, 0): Fraction(1)}
        return cls(x_order, y_order, z_order, tuple(degrees))

    def coefficient(self, n: int, b: int, c: int) -> Fraction:
        return self.degrees[n].get((b, c), Fraction(0))

    @staticmethod
    def convolve(left: TriTerms, right: TriTerms, y_order: int, z_order: int) -> TriTerms:
        """Product of two y,z-polynomials, truncated to the given orders."""
        out: defaultdict[tuple[int, int], Fraction] = defaultdict(Fraction)
        for (b1, c1), v1 in left.items():
            for (b2, c2), v2 in right.items():
                b, c = b1 + b2, c1 + c2
                if b <= y_order and c <= z_order:
                    out[(b, c)] += v1 * v2
        return {key: value for key, value in out.items() if value}

    @staticmethod
    def substitute_terms(terms: TriTerms, n: int, y_order: int, z_order: int) -> TriTerms:
        """x-degree ``n`` part of F(xy, yz, z): x^n y^b z^c becomes x^n y^(b+n) z^(c+b)."""
        out: TriTerms = {}
        for (b, c), value in terms.items():
            key = (b + n, c + b)
            if key[0] <= y_order and key[1] <= z_order:
                out[key] = value
        return out

    def substitute_xy_yz(self, n: int) -> TriTerms:
        return TriSeries.substitute_terms(self.degrees[n], n, self.y_order, self.z_order)

    def specialize_y_one(self, z_order: int) -> BiSeries:
        """Set y = 1, keeping z-powers through ``z_order``."""
        if z_order > self.z_order:
            raise TruncationError(f"z-order {z_order} exceeds tracked order {self.z_order}")
        rows = [[Fraction(0)] * (z_order + 1) for _ in range(self.x_order + 1)]
        for n, terms in enumerate(self.degrees):
            for (_, c), value in terms.items():
                if c <= z_order:
                    rows[n][c] += value
        return BiSeries(self.x_order, z_order, tuple(tuple(row) for row in rows))

    def specialize_y_z_one(self) -> Series:
        return Series(tuple(sum(terms.values(), Fraction(0)) for terms in self.degrees))
