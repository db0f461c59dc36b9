"""Tests for transfer systems, generating trees and rule files."""

from pathlib import Path

import numpy as np
import pytest

from permcheb.algebra.exactalg import Poly, RatFun, series_of
from permcheb.combinatorics.transfer import (
    GeneratingTree,
    MinorOrientation,
    TransferSystem,
    ak_tree,
    binary_tree,
    build_Ak,
    characteristic_determinant,
    closed_walk_series,
    dyck_strip_system,
    fibonacci_tree,
    format_rules,
    level_counts,
    load_rules,
    parse_rules,
    series_of_walks,
    tree_to_system,
    walk_gf,
    walks_from_series,
)
from permcheb.combinatorics.perm_core import parse_constraints
from permcheb.config import Settings
from permcheb.errors import ParameterError, PatternError
from permcheb.services.oracle import count_upto

x = RatFun.x()


class TestTransferSystem:
    def test_strip_of_height_one(self) -> None:
        system = dyck_strip_system(1)
        assert system.matrix == ((0, 1), (1, 0))
        assert characteristic_determinant(system) == Poly((1, 0, -1))
        assert walk_gf(system, 0, 0) == 1 / (1 - x**2)
        assert walk_gf(system, 0, 1) == x / (1 - x**2)

    def test_array_view(self) -> None:
        array = build_Ak(4).as_array()
        assert array.dtype == np.dtype(object)
        assert array.shape == (2, 2)

    @pytest.mark.parametrize(
        "system",
        [tree_to_system(binary_tree()), tree_to_system(fibonacci_tree()), build_Ak(5), dyck_strip_system(3)],
        ids=["binary", "fibonacci", "A_5", "strip_3"],
    )
    def test_determinant_ratio_matches_matrix_powers(self, system: TransferSystem) -> None:
        table = series_of_walks(system, system.start, 20)
        assert characteristic_determinant(system).coefficient(0) == 1
        for s in range(system.size):
            expected = series_of(walk_gf(system, system.start, s), 20).as_integers()
            assert expected == [row[s] for row in table]

    def test_orientations_agree_on_symmetric_matrices(self) -> None:
        system = dyck_strip_system(3)
        for s in range(system.size):
            assert walk_gf(system, 0, s) == walk_gf(system, 0, s, orientation=MinorOrientation.DISPLAY)

    def test_orientations_on_a_single_edge(self) -> None:
        system = TransferSystem(("a", "b"), ((0, 1), (0, 0)))
        assert characteristic_determinant(system) == Poly((1,))
        assert walk_gf(system, 0, 1) == x
        assert walk_gf(system, 0, 1, orientation=MinorOrientation.DISPLAY) == RatFun.constant(0)

    def test_single_vertex_loop(self) -> None:
        system = TransferSystem(("a",), ((2,),))
        assert walk_gf(system, 0, 0) == 1 / (1 - 2 * x)

    def test_walks_from_origin(self) -> None:
        assert walks_from_series(tree_to_system(binary_tree()), 0, 5).as_integers() == [1, 2, 4, 8, 16, 32]

    def test_validation(self) -> None:
        with pytest.raises(ParameterError):
            TransferSystem(("a",), ((1, 1),))
        with pytest.raises(ParameterError):
            TransferSystem(("a",), ((-1,),))
        with pytest.raises(ParameterError):
            walk_gf(dyck_strip_system(1), 0, 5)
        with pytest.raises(ParameterError):
            dyck_strip_system(0)


class TestGeneratingTrees:
    def test_fibonacci_levels(self) -> None:
        assert level_counts(fibonacci_tree(), 6).as_integers() == [1, 1, 2, 3, 5, 8, 13]

    def test_binary_levels(self) -> None:
        assert level_counts(binary_tree(), 4).as_integers() == [1, 2, 4, 8, 16]

    def test_ak_rules(self) -> None:
        assert ak_tree(4).rules == {"2": ("2", "3"), "3": ("2", "3", "3")}
        with pytest.raises(ParameterError):
            ak_tree(2)

    def test_unknown_child_label(self) -> None:
        with pytest.raises(PatternError):
            GeneratingTree("1", {"1": ("2",)})

    @staticmethod
    def _ak_counts(k: int, settings: Settings) -> list[int]:
        pattern = ",".join(str(v) for v in [*range(k - 1, 0, -1), k])
        cs = parse_constraints(["avoid:123", f"avoid:{pattern}"])
        return list(count_upto(cs, 7, settings=settings).counts)

    @pytest.mark.parametrize("k", [3, 4, 5])
    def test_ak_walks_count_avoiders(self, k: int, settings: Settings) -> None:
        walks = walks_from_series(build_Ak(k), 0, 6).as_integers()
        assert walks == self._ak_counts(k, settings)[1:]

    @pytest.mark.parametrize("k", [4, 5])
    def test_ak_closed_walks_count_avoiders(self, k: int, settings: Settings) -> None:
        walks = closed_walk_series(build_Ak(k), 0, 7).as_integers()
        assert walks[1:] == self._ak_counts(k, settings)[1:]

    def test_a3_closed_walks_overcount(self) -> None:
        assert closed_walk_series(build_Ak(3), 0, 4).as_integers() == [1, 2, 4, 8, 16]

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_strip_walks_count_avoiders(self, k: int, settings: Settings) -> None:
        counts = count_upto(parse_constraints(["avoid:132", f"avoid:id:{k}"]), 7, settings=settings).counts
        walks = closed_walk_series(dyck_strip_system(k - 1), 0, 14).as_integers()
        assert walks[::2] == list(counts)


class TestRuleFiles:
    def test_parse_with_comments(self) -> None:
        tree = parse_rules("# rabbits\nroot: 1\n1 -> 2\n2 -> 1 2  # breeding\n")
        assert tree == fibonacci_tree()

    def test_format_roundtrip(self) -> None:
        tree = ak_tree(5)
        assert parse_rules(format_rules(tree)) == tree

    def test_errors(self) -> None:
        with pytest.raises(PatternError):
            parse_rules("1 -> 2\n2 -> 1")
        with pytest.raises(PatternError):
            parse_rules("root: 1\n1 2")
        with pytest.raises(PatternError):
            parse_rules("root: 1\n1 -> 1\n1 -> 1 1")

    def test_builtin_files(self, settings: Settings) -> None:
        assert load_rules(settings.rules_dir / "fibonacci.rules") == fibonacci_tree()
        assert load_rules(settings.rules_dir / "binary.rules") == binary_tree()
        assert load_rules(settings.rules_dir / "ak4.rules") == ak_tree(4)

    def test_load_from_disk(self, tmp_path: Path) -> None:
        path = tmp_path / "custom.rules"
        path.write_text("root: a\na -> a b\nb -> a\n", encoding="utf-8")
        assert level_counts(load_rules(path), 5).as_integers() == [1, 2, 3, 5, 8, 13]
