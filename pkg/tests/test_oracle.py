"""Tests for the brute-force oracle."""

import pytest

from permcheb.combinatorics.perm_core import PATTERN_132, parse_constraints, parse_permutation
from permcheb.config import Settings
from permcheb.errors import ParameterError, ResourceLimitError
from permcheb.models import ConstraintSet, Identity
from permcheb.services.oracle import count_by_occurrences, count_N_of_a, count_upto, list_matching


class TestCountUpto:
    def test_catalan_counts(self, settings: Settings) -> None:
        table = count_upto(parse_constraints(["avoid:132"]), 7, settings=settings)
        assert table.counts == (1, 1, 2, 5, 14, 42, 132, 429)
        assert table.order == 7

    def test_no_constraints_counts_factorials(self, settings: Settings) -> None:
        assert count_upto(ConstraintSet(), 5, settings=settings).counts == (1, 1, 2, 6, 24, 120)

    def test_pair_with_identity(self, settings: Settings) -> None:
        table = count_upto(parse_constraints(["avoid:132", "avoid:id:3"]), 6, settings=settings)
        assert table.series().as_integers() == [1, 1, 2, 4, 8, 16, 32]

    def test_exactly_one_132(self, settings: Settings) -> None:
        table = count_upto(parse_constraints(["exactly:1:132"]), 6, settings=settings)
        # C(2n - 3, n - 3)
        assert table.counts == (0, 0, 0, 1, 5, 21, 84)

    def test_at_least_counts_complement(self, settings: Settings) -> None:
        avoiders = count_upto(parse_constraints(["avoid:132"]), 6, settings=settings).counts
        containers = count_upto(parse_constraints(["atleast:1:132"]), 6, settings=settings).counts
        factorials = (1, 1, 2, 6, 24, 120, 720)
        assert tuple(a + b for a, b in zip(avoiders, containers)) == factorials

    def test_workers_do_not_change_counts(self, settings: Settings) -> None:
        cs = parse_constraints(["avoid:132", "avoid:tl:4,2"])
        serial = count_upto(cs, 8, settings=settings)
        parallel = count_upto(cs, 8, settings=settings.model_copy(update={"oracle_workers": 2}))
        assert serial.counts == parallel.counts

    def test_cap(self, settings: Settings) -> None:
        cs = parse_constraints(["avoid:132"])
        with pytest.raises(ResourceLimitError):
            count_upto(cs, settings.max_n + 1, settings=settings)
        capped = settings.model_copy(update={"max_n": 3})
        assert count_upto(cs, 4, settings=capped, unsafe=True).counts[-1] == 14


class TestOccurrenceTable:
    def test_inversions_of_s3(self, settings: Settings) -> None:
        table = count_by_occurrences(ConstraintSet(), parse_permutation("12"), 3, settings=settings)
        assert table.counts[3] == {0: 1, 1: 2, 2: 2, 3: 1}
        assert table.totals() == [1, 1, 2, 6]

    def test_rows_of_132_avoiders(self, settings: Settings) -> None:
        avoid_132 = ConstraintSet.avoiding([PATTERN_132])
        table = count_by_occurrences(avoid_132, Identity(3).materialize(), 6, settings=settings)
        assert table.row(0).as_integers() == [1, 1, 2, 4, 8, 16, 32]
        assert table.totals() == [1, 1, 2, 5, 14, 42, 132]

    def test_max_r_limits_rows(self, settings: Settings) -> None:
        avoid_132 = ConstraintSet.avoiding([PATTERN_132])
        table = count_by_occurrences(avoid_132, Identity(3).materialize(), 5, max_r=1, settings=settings)
        assert table.row(1).as_integers()[:4] == [0, 0, 0, 1]
        with pytest.raises(ParameterError):
            table.row(2)


class TestListing:
    def test_lexicographic_avoiders(self, settings: Settings) -> None:
        members = list_matching(parse_constraints(["avoid:132"]), 3, settings=settings)
        assert [str(pi) for pi in members] == ["123", "213", "231", "312", "321"]

    def test_listing_cap(self, settings: Settings) -> None:
        with pytest.raises(ResourceLimitError):
            list_matching(ConstraintSet(), settings.max_list_n + 1, settings=settings)


class TestASequenceCounts:
    def test_counts_over_s_p_minus_2(self) -> None:
        assert count_N_of_a(4) == {(1,): 1, (0,): 1}
        assert sum(count_N_of_a(5).values()) == 6

    def test_literal_reading(self) -> None:
        assert sum(count_N_of_a(4, literal=True).values()) == 24

    def test_small_p(self) -> None:
        with pytest.raises(ParameterError):
            count_N_of_a(3)
