"""Tests for settings loading."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from permcheb.config import VERSION, Settings, get_settings


class TestSettings:
    def test_defaults(self, monkeypatch: pytest.MonkeyPatch) -> None:
        for name in ("PERMCHEB_MAX_N", "PERMCHEB_DEFAULT_ORDER", "PERMCHEB_VERIFY_WORKERS"):
            monkeypatch.delenv(name, raising=False)
        settings = Settings(_env_file=None)
        assert settings.max_n == 12
        assert settings.max_list_n == 10
        assert settings.default_order == 8
        assert settings.verify_workers == 1

    def test_environment_prefix(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("PERMCHEB_MAX_N", "7")
        monkeypatch.setenv("permcheb_log_level", "DEBUG")
        settings = Settings(_env_file=None)
        assert settings.max_n == 7
        assert settings.log_level == "DEBUG"

    def test_env_file(self, tmp_path: Path) -> None:
        env_file = tmp_path / ".env"
        env_file.write_text("PERMCHEB_DEFAULT_ORDER=5\nUNRELATED=1\n", encoding="utf-8")
        assert Settings(_env_file=env_file).default_order == 5

    def test_validation(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("PERMCHEB_VERIFY_WORKERS", "0")
        with pytest.raises(ValidationError):
            Settings(_env_file=None)

    def test_ensure_directories(self, tmp_path: Path) -> None:
        settings = Settings(_env_file=None, report_dir=tmp_path / "a" / "b")
        settings.ensure_directories()
        assert settings.report_dir.is_dir()

    def test_cached_instance(self) -> None:
        get_settings.cache_clear()
        assert get_settings() is get_settings()
        get_settings.cache_clear()

    def test_version(self) -> None:
        import permcheb

        assert permcheb.__version__ == VERSION
