"""Renderers turning report schemas into json, csv or text output."""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Sequence

from pydantic import BaseModel

from permcheb.models import CheckStatus
from permcheb.schemas import (
    BijectionReport,
    CheckReport,
    CoefficientRow,
    CountTableReport,
    FormulaInfo,
    FormulaResult,
    TransferReport,
    VerificationSummary,
)


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip("\n")


def _json(payload: BaseModel | list[BaseModel]) -> str:
    if isinstance(payload, list):
        return json.dumps([item.model_dump(mode="json") for item in payload], indent=2)
    return json.dumps(payload.model_dump(mode="json"), indent=2)


def render_count_table(report: CountTableReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report)
    if fmt == "csv":
        return _csv(("n", "count"), enumerate(report.counts))
    return ",".join(str(count) for count in report.counts)


def render_rows(rows: list[CoefficientRow], fmt: str) -> str:
    if fmt == "json":
        return _json(list(rows))
    if fmt == "csv":
        return _csv(("n", "r", "count"), ((row.n, row.r, row.count) for row in rows))
    return "\n".join(f"n={row.n} r={row.r}: {row.count}" for row in rows)


def render_formula(result: FormulaResult, fmt: str) -> str:
    if fmt == "json":
        return _json(result)
    if result.coefficients is not None:
        if fmt == "csv":
            return _csv(("n", "coefficient"), enumerate(result.coefficients))
        return ",".join(result.coefficients)
    if fmt == "csv":
        return _csv(("formula_id", "rational"), [(result.formula_id, result.rational)])
    return result.rational


def render_catalog(infos: list[FormulaInfo], fmt: str) -> str:
    if fmt == "json":
        return _json(list(infos))
    if fmt == "csv":
        return _csv(
            ("formula_id", "family", "parameters", "ranges", "tier", "statement"),
            (
                (info.formula_id, info.family, " ".join(info.parameters), info.ranges, info.tier, info.statement)
                for info in infos
            ),
        )
    width = max((len(info.formula_id) for info in infos), default=0)
    return "\n".join(
        f"{info.formula_id:<{width}}  ({', '.join(info.parameters)})  {info.statement}" for info in infos
    )


def _status_mark(report: CheckReport) -> str:
    return {CheckStatus.PASSED: "PASS", CheckStatus.FAILED: "FAIL", CheckStatus.ERROR: "ERROR"}[report.status]


def render_summary(summary: VerificationSummary, fmt: str, *, timings: bool = False) -> str:
    """Render a verification summary; runtimes appear only with ``timings``."""
    if fmt == "json":
        payload = summary.model_dump(mode="json")
        if not timings:
            for check in payload["checks"]:
                check.pop("runtime_ms", None)
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        header = ["check_id", "theorem", "tier", "status", "mismatch_n", "expected", "actual"]
        if timings:
            header.append("runtime_ms")
        rows = []
        for check in summary.checks:
            mismatch = check.first_mismatch
            row: list[object] = [
                check.check_id,
                check.theorem,
                check.tier.value,
                check.status.value,
                mismatch.n if mismatch else "",
                mismatch.expected if mismatch else "",
                mismatch.actual if mismatch else "",
            ]
            if timings:
                row.append(check.runtime_ms)
            rows.append(row)
        return _csv(header, rows)

    lines = []
    width = max((len(check.check_id) for check in summary.checks), default=0)
    for check in summary.checks:
        line = f"{_status_mark(check):<5} {check.check_id:<{width}}  {check.theorem}"
        if check.tier.value != "proved":
            line += f" [{check.tier.value}]"
        if check.detail and check.status is not CheckStatus.PASSED:
            line += f"\n      {check.detail}"
        if timings and check.runtime_ms is not None:
            line += f"  ({check.runtime_ms:.1f} ms)"
        lines.append(line)
    lines.append(
        f"scope={summary.scope} N={summary.order}: {summary.passed} passed, {summary.failed} failed, "
        f"{summary.errors} errors, {summary.experimental_failed} experimental not passing"
    )
    return "\n".join(lines)


def render_bijection(report: BijectionReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report)
    if fmt == "csv":
        return _csv(("permutation", "path", "max_height"), [(report.permutation, report.path, report.max_height)])
    return f"{report.permutation} <-> {report.path} (height {report.max_height})"


def render_transfer(report: TransferReport, fmt: str) -> str:
    if fmt == "json":
        return _json(report)
    if fmt == "csv":
        levels = report.level_counts or []
        return _csv(
            ("n", "closed_walks", "level_count"),
            (
                (n, walks, levels[n] if n < len(levels) else "")
                for n, walks in enumerate(report.closed_walks)
            ),
        )
    lines = [f"labels: {' '.join(report.labels)}"]
    lines.extend("  " + " ".join(str(entry) for entry in row) for row in report.matrix)
    lines.append(f"det(I - xA) = {report.determinant}")
    lines.append(f"closed walks at start: {report.closed_walk_gf}")
    lines.append("  " + ",".join(str(v) for v in report.closed_walks))
    if report.level_counts is not None:
        lines.append("level counts: " + ",".join(str(v) for v in report.level_counts))
    return "\n".join(lines)
