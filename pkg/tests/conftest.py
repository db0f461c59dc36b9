"""Shared fixtures."""

from pathlib import Path

import pytest

from permcheb.config import Settings


@pytest.fixture()
def settings(tmp_path: Path) -> Settings:
    """Settings isolated from the environment, writing reports under tmp_path."""
    return Settings(
        _env_file=None,
        report_dir=tmp_path / "reports",
        rules_dir=Path(__file__).parent.parent / "data" / "rules",
        max_n=9,
        max_list_n=8,
        default_order=6,
    )
