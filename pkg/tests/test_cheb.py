"""Tests for the Chebyshev t-calculus and the R_k ladder."""

import pytest

from permcheb.algebra.cheb import R, T, TExpr, U, to_ratfun, two_t_power
from permcheb.algebra.exactalg import RatFun, catalan, series_of
from permcheb.combinatorics.cfrac import approximant
from permcheb.errors import IrreducibleExpression

x = RatFun.x()


class TestRLadder:
    def test_small_values(self) -> None:
        assert R(0) == RatFun.constant(0)
        assert R(1) == RatFun.constant(1)
        assert R(2) == 1 / (1 - x)
        assert R(3) == (1 - x) / (1 - 2 * x)

    @pytest.mark.parametrize("k", range(2, 13))
    def test_recursion(self, k: int) -> None:
        assert R(k) == 1 / (1 - x * R(k - 1))

    @pytest.mark.parametrize("k", range(0, 8))
    def test_equals_continued_fraction_approximant(self, k: int) -> None:
        assert R(k) == approximant(k)

    @pytest.mark.parametrize("k", range(1, 7))
    def test_catalan_below_k(self, k: int) -> None:
        coefficients = series_of(R(k), k + 1).as_integers()
        assert coefficients[:k] == [catalan(n) for n in range(k)]
        assert coefficients[k] == catalan(k) - 1

    def test_negative_index(self) -> None:
        with pytest.raises(ValueError):
            R(-1)


class TestTExpr:
    def test_t_squared(self) -> None:
        assert to_ratfun(T * T) == 1 / (4 * x)

    def test_two_t_powers(self) -> None:
        assert to_ratfun(two_t_power(2)) == 1 / x
        assert two_t_power(3) == TExpr(RatFun.constant(0), 2 / x)
        assert two_t_power(0) == TExpr(RatFun.constant(1))

    def test_irreducible(self) -> None:
        with pytest.raises(IrreducibleExpression):
            to_ratfun(T)

    def test_u_recursion(self) -> None:
        assert U(-1).is_zero()
        assert U(1) == T * 2
        assert U(4) == T * 2 * U(3) - U(2)
        with pytest.raises(ValueError):
            U(-2)

    def test_inverse(self) -> None:
        value = 1 + T * 3
        product = value * value.inverse()
        assert to_ratfun(product) == RatFun.constant(1)
