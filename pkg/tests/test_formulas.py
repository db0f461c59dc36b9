"""Tests for the closed-form generating functions and the formula catalog."""

import pytest

from permcheb.algebra.cheb import R
from permcheb.algebra.exactalg import RatFun, Series, series_of
from permcheb.config import Settings
from permcheb.errors import OutOfStatedRange, ParameterError, UnsupportedPattern
from permcheb.formulas import FORMULA_REGISTRY, FormulaFamily
from permcheb.formulas.avoidance import F_pair, F_triple, F_triple_recursive, three_layered
from permcheb.formulas.lp import F_L4_identity, F_L4_two_layered, F_Lp
from permcheb.formulas.occurrences import G_exact, G_exact_all, two_layered_once
from permcheb.formulas.restricted321 import A_values, check_A_identity
from permcheb.formulas.single132 import H, H_recursive, Phi, Phi_recursive
from permcheb.models import Identity, Layered, PatternSpec, TwoLayered, Wedge

x = RatFun.x()

CATALOG_CASES = [
    (family_type(), params)
    for family_type in FORMULA_REGISTRY.values()
    for params in family_type().sample_parameters()
]


def _case_id(case: tuple[FormulaFamily, dict[str, int]]) -> str:
    family, params = case
    return f"{family.formula_id}[{','.join(f'{k}={v}' for k, v in params.items())}]"


class TestRegistry:
    def test_size_and_ids(self) -> None:
        assert len(FORMULA_REGISTRY) == 21
        for formula_id, family_type in FORMULA_REGISTRY.items():
            info = family_type().info()
            assert info.formula_id == formula_id
            assert info.parameters == list(family_type.parameters)

    def test_parameter_names_are_checked(self) -> None:
        family = FORMULA_REGISTRY["avoid-132-identity"]()
        assert family.check_parameters({"k": 4}) == {"k": 4}
        with pytest.raises(ParameterError):
            family.check_parameters({})
        with pytest.raises(ParameterError):
            family.check_parameters({"k": 3, "m": 1})

    @pytest.mark.parametrize("case", CATALOG_CASES, ids=[_case_id(c) for c in CATALOG_CASES])
    def test_closed_form_matches_oracle(self, case: tuple[FormulaFamily, dict[str, int]], settings: Settings) -> None:
        family, params = case
        expected = series_of(family.evaluate(**params), 6)
        assert family.oracle_series(params, 6, settings=settings) == expected


class TestAvoidance:
    def test_three_one_pair(self) -> None:
        value = F_pair("132", TwoLayered(3, 1))
        assert value.render() == "(1 - x)/(1 - 2*x)"

    @pytest.mark.parametrize("k", range(2, 7))
    def test_two_layered_counts_like_identity(self, k: int) -> None:
        for m in range(1, k):
            assert F_pair("132", TwoLayered(k, m)) == R(k)
            assert F_pair("321", TwoLayered(k, m)) == R(k)

    def test_layered_dispatch(self) -> None:
        assert F_pair("132", Layered((3, 2, 1))) == three_layered(3, 2, 1)
        assert F_pair("132", Wedge((1, 1), (1, 1))) == R(4)

    def test_unsupported(self) -> None:
        with pytest.raises(UnsupportedPattern):
            F_pair("213", Identity(3))
        with pytest.raises(UnsupportedPattern):
            F_pair("321", Identity(3))
        with pytest.raises(UnsupportedPattern):
            F_pair("132", Layered((4, 3, 2, 1)))

    @pytest.mark.parametrize("k,m,l", [(4, 1, 4), (4, 1, 6), (5, 1, 5), (5, 2, 4), (6, 2, 5), (6, 3, 5)])
    def test_triple_matches_recursion(self, k: int, m: int, l: int) -> None:
        assert F_triple(k, m, l) == F_triple_recursive(k, m, l)

    def test_triple_reduces_below_split(self) -> None:
        assert F_triple(6, 2, 3) == R(3)
        with pytest.raises(ParameterError):
            F_triple(4, 3, 2)


class TestOccurrences:
    @pytest.mark.parametrize("k", range(2, 6))
    def test_overlapping_statements_agree(self, k: int) -> None:
        for r in range(1, k + 1):
            values = list(G_exact_all("132", Identity(k), r).values())
            assert len(values) >= 2
            assert all(value == values[0] for value in values)

    def test_out_of_range_and_unsupported(self) -> None:
        with pytest.raises(OutOfStatedRange):
            G_exact("132", TwoLayered(4, 2), 2)
        with pytest.raises(UnsupportedPattern):
            G_exact("132", Wedge((1, 1), (1, 1)), 1)
        with pytest.raises(ParameterError):
            G_exact("132", Identity(3), 0)

    def test_top_heavy_two_layered_once(self) -> None:
        # 312 exactly once in a 132-avoider: 1, 2, 4, 8, ... from n = 3
        counts = [0, 0, 0, 1, 2, 4, 8, 16, 32]
        assert series_of(G_exact("132", TwoLayered(3, 2), 1), 8) == Series.from_counts(counts)
        assert two_layered_once(5, 4) == two_layered_once(5, 1)
        assert two_layered_once(5, 3) == two_layered_once(5, 2)
        assert two_layered_once(6, 4) == two_layered_once(6, 2)

    @pytest.mark.parametrize("k,m", [(3, 2), (4, 3), (5, 3), (5, 4)])
    def test_two_layered_once_against_oracle(self, k: int, m: int, settings: Settings) -> None:
        # [5,2] and [5,3] first differ at x**7 in the unreflected product
        family = FORMULA_REGISTRY["occurrences-132-two-layered-once"]()
        params = {"k": k, "m": m}
        assert family.oracle_series(params, 8, settings=settings) == series_of(family.evaluate(**params), 8)

    @pytest.mark.parametrize("k", [3, 4])
    def test_restricted321_stops_below_k(self, k: int) -> None:
        assert "restricted321_two_layered_one" not in G_exact_all("321", TwoLayered(k, 1), k)
        with pytest.raises(OutOfStatedRange):
            G_exact("321", TwoLayered(k, 1), k)

    @pytest.mark.parametrize("k,r", [(3, 1), (3, 2), (4, 3)])
    def test_restricted321_against_oracle(self, k: int, r: int, settings: Settings) -> None:
        family = FORMULA_REGISTRY["occurrences-321-two-layered-one"]()
        params = {"k": k, "r": r}
        assert family.oracle_series(params, 8, settings=settings) == series_of(family.evaluate(**params), 8)
        with pytest.raises(OutOfStatedRange):
            family.evaluate(k=k, r=k)

    def test_catalog_samples_stay_in_range(self) -> None:
        samples = FORMULA_REGISTRY["occurrences-321-two-layered-one"]().sample_parameters()
        assert samples
        assert all(params["r"] < params["k"] for params in samples)


class TestExactlyOne132:
    def test_literals(self) -> None:
        assert H(TwoLayered(3, 1)) == x**3 / (1 - 2 * x)
        assert H(TwoLayered(4, 2)) == x**3 * (1 + x) / ((1 - x) * (1 - 3 * x + x**2))
        assert Phi(Identity(3)) == 2 * x**5 / (1 - 2 * x) ** 3

    def test_phi_three_coefficients(self) -> None:
        assert series_of(Phi(Identity(3)), 8).as_integers() == [0, 0, 0, 0, 0, 2, 12, 48, 160]
        counts = [0] * 5 + [(n - 3) * (n - 4) * 2 ** (n - 5) for n in range(5, 13)]
        assert series_of(Phi(Identity(3)), 12) == Series.from_counts(counts)

    def test_reflection(self) -> None:
        assert H(TwoLayered(5, 4)) == H(TwoLayered(5, 1))
        assert H(TwoLayered(5, 3)) == H(TwoLayered(5, 2))

    @pytest.mark.parametrize(
        "tau",
        [Identity(3), Identity(4), Identity(5), TwoLayered(4, 1), TwoLayered(5, 1), TwoLayered(5, 2), TwoLayered(6, 2)],
        ids=str,
    )
    def test_closed_form_solves_block_equation(self, tau: PatternSpec) -> None:
        assert H(tau) == H_recursive(tau)

    @pytest.mark.parametrize("k", range(2, 6))
    def test_phi_solves_block_equation(self, k: int) -> None:
        assert Phi(Identity(k)) == Phi_recursive(k)

    def test_unsupported_shapes(self) -> None:
        with pytest.raises(UnsupportedPattern):
            H(Wedge((1, 1), (1, 1)))
        with pytest.raises(UnsupportedPattern):
            Phi(TwoLayered(5, 2))
        with pytest.raises(ParameterError):
            H(Identity(2))
        with pytest.raises(ParameterError):
            H_recursive(TwoLayered(3, 1))
        with pytest.raises(ParameterError):
            Phi_recursive(1)


class TestLp:
    @pytest.mark.parametrize("k", range(2, 7))
    def test_general_product_at_four(self, k: int) -> None:
        assert F_Lp(4, k) == F_L4_identity(k)
        assert F_Lp(4, k, literal=True) == F_L4_identity(k)

    @pytest.mark.parametrize("k", range(2, 6))
    def test_two_layered_top_case(self, k: int) -> None:
        assert F_L4_two_layered(k, k - 1) == F_L4_identity(k)

    def test_ranges(self) -> None:
        with pytest.raises(ParameterError):
            F_Lp(3, 4)
        with pytest.raises(ParameterError):
            F_Lp(5, 2)
        with pytest.raises(ParameterError):
            F_L4_identity(1)


class TestRestricted321:
    @pytest.mark.parametrize("k,m", [(2, 1), (3, 1), (3, 2), (4, 2)])
    def test_alternating_identity(self, k: int, m: int, settings: Settings) -> None:
        check = check_A_identity(k, m, 8, settings=settings)
        assert check.holds
        assert check

    def test_ranges(self, settings: Settings) -> None:
        with pytest.raises(ParameterError):
            check_A_identity(3, 3, 6, settings=settings)

    def test_alternating_sums_of_identity_class(self, settings: Settings) -> None:
        # S_n(321, 21) holds only the identity
        values = A_values(2, 1, 3, r_max=1, settings=settings)
        assert [values[(n, 0)] for n in range(4)] == [1, 1, 1, 1]
        assert [values[(n, 1)] for n in range(4)] == [1, 0, 0, 0]
