"""Tests for permutations, occurrence counting and the literal parser."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcheb.combinatorics.perm_core import (
    EMPTY,
    PATTERN_132,
    Lp_set,
    a_sequence,
    complement,
    contains,
    count_occurrences,
    count_occurrences_ending,
    format_constraints,
    inverse,
    is_layered,
    is_Lp_member,
    is_wedge,
    layered_parts,
    lis_length,
    parse_constraint,
    parse_constraints,
    parse_pattern,
    parse_permutation,
    prefix_suffix_decomposition,
    reverse,
    rtl_maxima,
    satisfies,
    standardize,
    symmetry_orbit,
)
from permcheb.errors import PatternError
from permcheb.models import (
    ConstraintSet,
    Identity,
    Layered,
    Permutation,
    Quantifier,
    QuantifierKind,
    TwoLayered,
    Wedge,
)


def perm(text: str) -> Permutation:
    return parse_permutation(text)


permutations_up_to_7 = st.integers(min_value=0, max_value=7).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(lambda values: Permutation(tuple(values)))

small_patterns = st.integers(min_value=1, max_value=3).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(lambda values: Permutation(tuple(values)))


class TestOccurrences:
    def test_counts(self) -> None:
        assert count_occurrences(perm("123"), perm("12")) == 3
        assert count_occurrences(perm("1324"), PATTERN_132) == 1
        assert count_occurrences(perm("1432"), PATTERN_132) == 3
        assert count_occurrences(perm("2143"), PATTERN_132) == 2
        assert count_occurrences(perm("21"), PATTERN_132) == 0

    def test_empty_pattern_occurs_once(self) -> None:
        assert count_occurrences(perm("312"), EMPTY) == 1
        assert count_occurrences(EMPTY, EMPTY) == 1

    def test_contains(self) -> None:
        assert contains(perm("3412"), PATTERN_132) is False
        assert contains(perm("25314"), PATTERN_132) is True

    def test_occurrences_ending_at_last_entry(self) -> None:
        # occurrences of 12 ending at the final 3 of 213
        assert count_occurrences_ending((2, 1, 3), perm("12")) == 2
        assert count_occurrences_ending((2, 1, 3), perm("12"), limit=1) == 1

    @given(permutations_up_to_7, small_patterns)
    def test_counts_respect_symmetries(self, subject: Permutation, pattern: Permutation) -> None:
        base = count_occurrences(subject, pattern)
        for op in (reverse, complement, inverse):
            assert count_occurrences(op(subject), op(pattern)) == base

    def test_satisfies_quantifiers(self) -> None:
        cs = ConstraintSet.of((PATTERN_132, Quantifier.exactly(2)), (Identity(3), Quantifier.avoid()))
        assert satisfies(perm("2143"), cs)
        assert not satisfies(perm("1324"), cs)
        at_least = ConstraintSet.of((PATTERN_132, Quantifier.at_least(1)))
        assert satisfies(perm("1324"), at_least)
        assert not satisfies(perm("4321"), at_least)


class TestSymmetries:
    def test_generators(self) -> None:
        assert reverse(perm("2413")) == perm("3142")
        assert complement(perm("2413")) == perm("3142")
        assert inverse(perm("2413")) == perm("3142")
        assert inverse(perm("231")) == perm("312")

    def test_orbit_example(self) -> None:
        orbit = symmetry_orbit([perm("123"), perm("3214")])
        assert frozenset({perm("321"), perm("2341")}) in orbit

    @given(st.lists(small_patterns, min_size=1, max_size=3))
    def test_orbit_size_divides_eight(self, patterns: list[Permutation]) -> None:
        assert 8 % len(symmetry_orbit(patterns)) == 0


class TestStructure:
    def test_standardize(self) -> None:
        assert standardize((5, 2, 9)) == perm("213")
        with pytest.raises(PatternError):
            standardize((1, 1))

    def test_rtl_maxima(self) -> None:
        assert rtl_maxima(perm("3142")) == [(3, 4), (4, 2)]
        assert rtl_maxima(perm("321")) == [(1, 3), (2, 2), (3, 1)]

    def test_prefix_suffix(self) -> None:
        split = prefix_suffix_decomposition(perm("3412"))
        assert split.r == 1
        assert split.prefix(-1) == EMPTY
        assert split.prefix(0) == perm("1")
        assert split.suffix(0) == perm("3412")
        assert split.suffix(1) == perm("12")
        with pytest.raises(PatternError):
            prefix_suffix_decomposition(PATTERN_132)

    def test_lis_and_a_sequence(self) -> None:
        assert lis_length((3, 1, 4, 2, 5)) == 3
        assert lis_length(()) == 0
        assert a_sequence(perm("123")) == (1, 1)
        assert a_sequence(perm("321")) == (0, 0)

    def test_lp_sets(self) -> None:
        assert Lp_set(3) == frozenset({PATTERN_132})
        assert len(Lp_set(4)) == 6
        assert Lp_set(4) == frozenset(
            perm(text) for text in ("1324", "1423", "1342", "1432", "3142", "4132")
        )
        assert is_Lp_member(perm("1324"), 4)
        assert not is_Lp_member(perm("1234"), 4)
        with pytest.raises(PatternError):
            Lp_set(2)

    def test_layered(self) -> None:
        assert is_layered(perm("3412"))
        assert layered_parts(perm("3412")) == (4, 2)
        assert Layered((4, 2, 1)).materialize() == perm("3421")
        assert not is_layered(perm("2413"))
        with pytest.raises(PatternError):
            layered_parts(perm("2413"))

    def test_wedges(self) -> None:
        assert Wedge((1, 1), (1, 1)).materialize() == perm("3241")
        assert is_wedge(perm("3241"))
        assert is_wedge(perm("645783912"))
        assert is_wedge(perm("1234"))
        assert not is_wedge(PATTERN_132)

    def test_two_layered_bounds(self) -> None:
        assert TwoLayered(3, 1).materialize() == perm("231")
        with pytest.raises(PatternError):
            TwoLayered(3, 3)


class TestLiterals:
    def test_permutations(self) -> None:
        assert parse_permutation("()") == EMPTY
        assert parse_permutation("10,3,1,2,4,5,6,7,8,9").values[0] == 10
        with pytest.raises(PatternError):
            parse_permutation("1a2")
        with pytest.raises(PatternError):
            parse_permutation("113")

    def test_patterns_roundtrip_through_literals(self) -> None:
        for literal in ("id:4", "tl:5,2", "layered:5,3,1", "wedge:2,1;1,0", "2413"):
            assert parse_pattern(parse_pattern(literal).literal()) == parse_pattern(literal)

    def test_unknown_family(self) -> None:
        with pytest.raises(PatternError):
            parse_pattern("foo:3")
        with pytest.raises(PatternError):
            parse_pattern("tl:3")

    def test_constraints(self) -> None:
        (item,) = parse_constraint("exactly:2:id:3")
        assert item.pattern == perm("123")
        assert item.quantifier.kind is QuantifierKind.EXACTLY
        assert item.quantifier.count == 2
        assert len(parse_constraints(["avoid:132", "avoid:Lp:4"])) == 7
        with pytest.raises(PatternError):
            parse_constraint("exactly:1:Lp:4")
        with pytest.raises(PatternError):
            parse_constraints(["132", "avoid:132"])

    def test_format(self) -> None:
        cs = parse_constraints(["avoid:132", "exactly:1:id:3"])
        assert format_constraints(cs) == "avoid:132 exactly:1:123"
        assert format_constraints(ConstraintSet()) == "(none)"
