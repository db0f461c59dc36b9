"""Tests for the command line."""

import json
from collections.abc import Iterator
from pathlib import Path

import pytest

from permcheb.config import get_settings
from permcheb.constants import EXIT_OK, EXIT_RESOURCE, EXIT_USAGE
from permcheb.errors import IrreducibleExpression
from permcheb.main import main

RULES_DIR = Path(__file__).parent.parent / "data" / "rules"


@pytest.fixture(autouse=True)
def cli_env(tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> Iterator[Path]:
    """Point the cached settings at tmp_path with small caps."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv("PERMCHEB_REPORT_DIR", str(tmp_path / "reports"))
    monkeypatch.setenv("PERMCHEB_RULES_DIR", str(RULES_DIR))
    monkeypatch.setenv("PERMCHEB_MAX_N", "9")
    monkeypatch.setenv("PERMCHEB_DEFAULT_ORDER", "6")
    get_settings.cache_clear()
    yield tmp_path / "reports"
    get_settings.cache_clear()


def run(argv: list[str], capsys: pytest.CaptureFixture[str]) -> tuple[int, str]:
    code = main(argv)
    return code, capsys.readouterr().out.strip()


class TestFormulaCommands:
    def test_two_layered_closed_form(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["formula", "tl:3,1", "--base", "132"], capsys) == (EXIT_OK, "(1 - x)/(1 - 2*x)")

    def test_phi_series(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["series", "phi", "id:3", "-N", "8"], capsys) == (EXIT_OK, "0,0,0,0,0,2,12,48,160")

    def test_catalog_id_with_params(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["formula", "avoid-132-identity", "--param", "k=3"], capsys)
        assert (code, out) == (EXIT_OK, "(1 - x)/(1 - 2*x)")

    def test_occurrence_series_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["series", "occurrences", "id:3", "-r", "1", "-N", "4", "--format", "json"], capsys)
        payload = json.loads(out)
        assert code == EXIT_OK
        assert payload["formula_id"] == "occurrences:132:id:3"
        assert payload["params"] == {"r": 1}
        assert payload["coefficients"][3] == "1"

    def test_unsupported_pattern_is_usage_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["formula", "id:3", "--base", "321"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_bad_param(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["formula", "avoid-132-identity", "--param", "k"]) == EXIT_USAGE
        assert main(["formula", "h", "tl:3,1", "--base", "321"]) == EXIT_USAGE

    def test_restricted321_at_r_equal_k(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["series", "occurrences", "tl:3,1", "--base", "321", "-r", "3"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err
        assert run(["series", "occurrences", "tl:3,1", "--base", "321", "-r", "2", "-N", "5"], capsys)[0] == EXIT_OK

    @pytest.mark.parametrize(
        "exc",
        [ZeroDivisionError("pole at x = 0"), IrreducibleExpression("nonzero t-part")],
        ids=lambda exc: type(exc).__name__,
    )
    def test_arithmetic_failures_are_usage_errors(
        self, exc: Exception, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
    ) -> None:
        def failing_dispatch(*args: object, **kwargs: object) -> int:
            raise exc

        monkeypatch.setattr("permcheb.main.dispatch", failing_dispatch)
        assert main(["catalog"]) == EXIT_USAGE
        assert capsys.readouterr().err.strip().endswith(f"error: {exc}")


class TestOracleCommand:
    def test_counts(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert run(["oracle", "avoid:132", "-N", "5"], capsys) == (EXIT_OK, "1,1,2,5,14,42")

    def test_list(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["oracle", "avoid:132", "--list", "-N", "3"], capsys)
        assert out.splitlines() == ["123", "213", "231", "312", "321"]

    def test_occurrence_rows(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["oracle", "avoid:132", "--pattern", "id:3", "-r", "1", "-N", "3"], capsys)
        assert out.splitlines() == ["n=3 r=1: 1"]

    def test_cap_exit_code(self, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["oracle", "avoid:132", "-N", "20"]) == EXIT_RESOURCE
        assert "--unsafe-N" in capsys.readouterr().err

    def test_bad_literal(self) -> None:
        assert main(["oracle", "dodge:132"]) == EXIT_USAGE

    def test_save(self, cli_env: Path, capsys: pytest.CaptureFixture[str]) -> None:
        assert main(["oracle", "avoid:132", "-N", "4", "--save"]) == EXIT_OK
        assert (cli_env / "oracle-N4.txt").read_text(encoding="utf-8") == "1,1,2,5,14"
        assert main(["oracle", "avoid:132", "-N", "4", "--save", "--format", "csv"]) == EXIT_OK
        assert (cli_env / "oracle-N4.csv").read_text(encoding="utf-8").splitlines()[0] == "n,count"


class TestOtherCommands:
    def test_bijection_both_ways(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["bijection", "534261"], capsys)
        assert code == EXIT_OK
        assert out.startswith("534261 <-> ")
        assert out.endswith("(height 3)")
        path = out.split(" <-> ")[1].split(" ")[0]
        assert run(["bijection", path], capsys)[1] == out

    def test_transfer_builtin(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["transfer", "fibonacci", "-N", "6"], capsys)
        assert code == EXIT_OK
        assert "level counts: 1,1,2,3,5,8,13" in out

    def test_transfer_missing_file(self) -> None:
        assert main(["transfer", "no-such.rules"]) == EXIT_USAGE

    def test_cfrac_rows(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["cfrac", "-k", "3", "-R", "1", "-N", "3"], capsys)
        assert code == EXIT_OK
        assert "n=3 r=1: 1" in out.splitlines()

    def test_catalog_json(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["catalog", "--format", "json"], capsys)
        assert len(json.loads(out)) == 21

    def test_verify_scope(self, capsys: pytest.CaptureFixture[str]) -> None:
        code, out = run(["verify", "--scope", "dyck", "-N", "4"], capsys)
        assert code == EXIT_OK
        assert out.splitlines()[-1].startswith("scope=dyck N=4: 3 passed, 0 failed, 0 errors")
