"""Tests for the path bijection on 132-avoiders."""

import pytest

from permcheb.algebra.exactalg import catalan
from permcheb.combinatorics.dyck import (
    DyckPath,
    all_paths,
    format_path,
    max_height,
    parse_path,
    phi,
    phi_inverse,
)
from permcheb.combinatorics.perm_core import lis_length, parse_constraints, parse_permutation
from permcheb.config import Settings
from permcheb.errors import PatternError
from permcheb.services.oracle import list_matching


class TestDyckPath:
    def test_validation(self) -> None:
        assert DyckPath("UUDD").semilength == 2
        with pytest.raises(PatternError):
            DyckPath("DU")
        with pytest.raises(PatternError):
            DyckPath("UUD")
        with pytest.raises(PatternError):
            DyckPath("UXD")

    def test_parse_and_format(self) -> None:
        path = parse_path(" uudd ")
        assert format_path(path) == "UUDD"
        assert max_height(path) == 2
        assert max_height(DyckPath()) == 0

    @pytest.mark.parametrize("n", range(0, 7))
    def test_all_paths_count(self, n: int) -> None:
        paths = list(all_paths(n))
        assert len(paths) == catalan(n)
        assert len(set(paths)) == len(paths)


class TestBijection:
    def test_worked_example(self) -> None:
        path = phi(parse_permutation("534261"))
        assert max_height(path) == 3
        assert path.steps[:6] == "UUDUUD"
        assert phi_inverse(path) == parse_permutation("534261")

    def test_rejects_132(self) -> None:
        with pytest.raises(PatternError):
            phi(parse_permutation("1324"))

    @pytest.mark.parametrize("n", range(0, 8))
    def test_roundtrip_and_height_law(self, n: int, settings: Settings) -> None:
        avoiders = list_matching(parse_constraints(["avoid:132"]), n, settings=settings)
        images = set()
        for pi in avoiders:
            path = phi(pi)
            assert path.semilength == n
            assert phi_inverse(path) == pi
            assert max_height(path) == lis_length(pi.values)
            images.add(path)
        assert images == set(all_paths(n))
