"""Helpers for saving and loading emitted reports."""

from __future__ import annotations

import json
import logging
from pathlib import Path

from pydantic import BaseModel

from permcheb.config import Settings, get_settings
from permcheb.schemas import VerificationSummary

logger = logging.getLogger(__name__)


def write_atomic(path: Path, text: str) -> Path:
    """Write ``text`` next to ``path`` and move it into place."""
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp_path = path.with_suffix(path.suffix + ".tmp")
    tmp_path.write_text(text, encoding="utf-8")
    tmp_path.replace(path)
    return path


def report_path(name: str, extension: str, *, settings: Settings | None = None) -> Path:
    settings = settings or get_settings()
    return settings.report_dir / f"{name}.{extension}"


def save_report(
    report: BaseModel | str,
    name: str,
    *,
    extension: str = "json",
    settings: Settings | None = None,
) -> Path:
    """Persist a rendered report (or a pydantic model as JSON) under ``report_dir`` atomically."""
    settings = settings or get_settings()
    settings.ensure_directories()
    text = report if isinstance(report, str) else report.model_dump_json(indent=2)
    path = write_atomic(report_path(name, extension, settings=settings), text)
    logger.info("Saved report to %s", path)
    return path


def load_summary(path: Path) -> VerificationSummary | None:
    """Load a saved verification summary; None when missing or unreadable."""
    if not path.exists():
        logger.debug("Report file does not exist: %s", path)
        return None
    try:
        return VerificationSummary.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except (ValueError, OSError) as exc:
        logger.error("Failed to load verification report %s: %s", path, exc)
        return None
