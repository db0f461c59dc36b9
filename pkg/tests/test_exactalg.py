"""Tests for the exact polynomial, rational function and series kernel."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import QQ, Symbol
from sympy import Poly as SymPoly

from permcheb.algebra.exactalg import X, Poly, RatFun, Series, binomial, catalan, poly_gcd, series_of
from permcheb.errors import TruncationError

small_polys = st.lists(st.integers(min_value=-5, max_value=5), min_size=1, max_size=5).map(Poly)


class TestPoly:
    def test_trailing_zeros_are_stripped(self) -> None:
        assert Poly((1, 2, 0, 0)) == Poly((1, 2))
        assert Poly((0, 0)).is_zero()
        assert Poly().degree == -1

    def test_render(self) -> None:
        assert Poly((1, -2, 1)).render() == "1 - 2*x + x**2"
        assert Poly((0, 0, -3)).render() == "-3*x**2"
        assert Poly().render() == "0"

    def test_gcd_is_monic(self) -> None:
        # (1 - x)(1 + x) and 2(1 - x)
        common = poly_gcd(Poly((1, 0, -1)), Poly((2, -2)))
        assert common == Poly((-1, 1))

    def test_backed_by_sympy_over_qq(self) -> None:
        half = Poly((1, Fraction(1, 2)))
        assert half.rep == SymPoly(1 + X / 2, X, domain=QQ)
        assert half.coefficient(1) == Fraction(1, 2)
        assert half.coeffs == (Fraction(1), Fraction(1, 2))
        # integer-domain input is lifted to QQ
        assert Poly(SymPoly(X**2 - 1, X)) == Poly((-1, 0, 1))
        with pytest.raises(ValueError):
            Poly(SymPoly(Symbol("y") + 1, Symbol("y")))

    @given(small_polys, small_polys)
    def test_division_recovers_factor(self, a: Poly, b: Poly) -> None:
        if b.is_zero():
            return
        quotient, remainder = divmod(a * b, b)
        assert quotient == a
        assert remainder.is_zero()


class TestRatFun:
    def test_canonical_form(self) -> None:
        scaled = RatFun(Poly((2, -2)), Poly((2, -4)))
        assert scaled == RatFun(Poly((1, -1)), Poly((1, -2)))
        assert scaled.den.coefficient(0) == 1

    def test_common_factors_cancel(self) -> None:
        # (1 - x**2)/(1 - x) = 1 + x
        assert RatFun(Poly((1, 0, -1)), Poly((1, -1))) == RatFun(Poly((1, 1)))

    def test_render(self) -> None:
        x = RatFun.x()
        assert ((1 - x) / (1 - 2 * x)).render() == "(1 - x)/(1 - 2*x)"
        assert (1 / (1 - x)).render() == "1/(1 - x)"
        assert (x**3).render() == "x**3"

    def test_arithmetic_identities(self) -> None:
        x = RatFun.x()
        f = (1 + x) / (1 - 3 * x + x**2)
        assert f - f == RatFun.constant(0)
        assert f * f.inverse() == RatFun.constant(1)
        assert (f**-2) * (f**2) == RatFun.constant(1)

    def test_zero_denominator_rejected(self) -> None:
        with pytest.raises(ZeroDivisionError):
            RatFun(Poly((1,)), Poly())


class TestSeries:
    def test_geometric_expansion(self) -> None:
        x = RatFun.x()
        assert series_of(1 / (1 - 2 * x), 5).as_integers() == [1, 2, 4, 8, 16, 32]

    def test_expansion_with_numerator(self) -> None:
        x = RatFun.x()
        # x**3/(1 - 2x)
        assert series_of(x**3 / (1 - 2 * x), 6).as_integers() == [0, 0, 0, 1, 2, 4, 8]

    def test_pole_at_zero(self) -> None:
        with pytest.raises(ZeroDivisionError):
            series_of(1 / RatFun.x(), 3)

    def test_negative_order(self) -> None:
        with pytest.raises(TruncationError):
            series_of(RatFun.constant(1), -1)

    def test_truncated_product(self) -> None:
        left = Series.from_counts([1, 1, 1, 1])
        right = Series.from_counts([1, -1, 0])
        assert (left * right).as_integers() == [1, 0, 0]

    def test_shift_keeps_order(self) -> None:
        assert Series.from_counts([1, 2, 3]).shift(1).as_integers() == [0, 1, 2]

    def test_first_difference(self) -> None:
        a = Series.from_counts([1, 1, 2, 5])
        b = Series.from_counts([1, 1, 2, 4, 8])
        assert a.first_difference(b) == 3
        assert a.first_difference(a) is None

    def test_non_integral_coefficient(self) -> None:
        with pytest.raises(ValueError):
            Series((Fraction(1, 2),)).as_integers()


class TestNumbers:
    def test_catalan(self) -> None:
        assert [catalan(j) for j in range(9)] == [1, 1, 2, 5, 14, 42, 132, 429, 1430]

    def test_binomial_out_of_range(self) -> None:
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0
        assert binomial(6, 2) == 15
