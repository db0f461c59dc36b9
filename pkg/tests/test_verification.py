"""Tests for the verification runner."""

import asyncio

import pytest

from permcheb.algebra.exactalg import Series
from permcheb.config import Settings
from permcheb.errors import ParameterError
from permcheb.models import CheckStatus, Tier
from permcheb.schemas import CheckReport
from permcheb.services.report_io import load_summary, save_report
from permcheb.services.verification import (
    Check,
    CheckBuilder,
    Outcome,
    VerificationRunner,
    compare_series,
    summarize,
)


def _report(check_id: str, status: CheckStatus, tier: Tier = Tier.PROVED) -> CheckReport:
    return CheckReport(check_id=check_id, theorem="t", status=status, tier=tier)


class TestCompareSeries:
    def test_first_mismatch(self) -> None:
        outcome = compare_series(Series.from_counts([1, 1, 2, 5]), Series.from_counts([1, 1, 2, 4]))
        assert outcome.status is CheckStatus.FAILED
        assert outcome.first_mismatch is not None
        assert outcome.first_mismatch.n == 3
        assert (outcome.first_mismatch.expected, outcome.first_mismatch.actual) == ("5", "4")

    def test_equal(self) -> None:
        outcome = compare_series(Series.from_counts([1, 2]), Series.from_counts([1, 2]))
        assert outcome.status is CheckStatus.PASSED


class TestCheckBuilder:
    def test_unknown_scope(self, settings: Settings) -> None:
        with pytest.raises(ParameterError):
            CheckBuilder(5, settings=settings).checks("nonsense")
        with pytest.raises(ParameterError):
            CheckBuilder(0, settings=settings)

    def test_checks_are_sorted_and_scoped(self, settings: Settings) -> None:
        checks = CheckBuilder(5, settings=settings).checks("dyck")
        ids = [check.check_id for check in checks]
        assert ids == sorted(ids)
        assert {check.scope for check in checks} == {"dyck"}
        assert "dyck-worked-example" in ids

    def test_catalog_checks_cover_registry(self, settings: Settings) -> None:
        ids = [check.check_id for check in CheckBuilder(5, settings=settings).checks()]
        assert "avoid-132-identity[k=2]" in ids
        assert len(ids) == len(set(ids))


class TestSummarize:
    def test_experimental_failures_are_separate(self) -> None:
        reports = [
            _report("a", CheckStatus.PASSED),
            _report("b", CheckStatus.FAILED, Tier.EXPERIMENTAL),
            _report("c", CheckStatus.ERROR),
        ]
        summary = summarize("all", 6, reports)
        assert (summary.passed, summary.failed, summary.errors, summary.experimental_failed) == (1, 0, 1, 1)


class TestRunner:
    @pytest.mark.parametrize("scope", ["chebyshev", "dyck", "transfer"])
    def test_small_scopes_pass(self, scope: str, settings: Settings) -> None:
        summary = VerificationRunner(settings=settings).verify(scope, 6)
        assert summary.checks
        assert summary.failed == 0
        assert summary.errors == 0
        assert summary.passed == len(summary.checks)

    def test_blockrec_scope(self, settings: Settings) -> None:
        summary = VerificationRunner(settings=settings.model_copy(update={"verify_workers": 3})).verify("blockrec", 6)
        assert summary.failed == 0
        assert summary.errors == 0

    def test_default_order(self, settings: Settings) -> None:
        summary = VerificationRunner(settings=settings).verify("chebyshev")
        assert summary.order == settings.default_order

    def test_timings(self, settings: Settings) -> None:
        timed = VerificationRunner(settings=settings, timings=True).verify("dyck", 4)
        assert all(check.runtime_ms is not None for check in timed.checks)
        plain = VerificationRunner(settings=settings).verify("dyck", 4)
        assert all(check.runtime_ms is None for check in plain.checks)

    def test_raising_check_is_an_error(self, settings: Settings) -> None:
        def boom() -> Outcome:
            raise ValueError("broken")

        checks = [
            Check("z-ok", "custom", "always passes", Outcome.passed),
            Check("a-boom", "custom", "always raises", boom),
        ]
        reports = asyncio.run(VerificationRunner(settings=settings).run_checks(checks))
        assert [report.check_id for report in reports] == ["a-boom", "z-ok"]
        assert reports[0].status is CheckStatus.ERROR
        assert "ValueError" in (reports[0].detail or "")
        assert reports[1].status is CheckStatus.PASSED

    def test_summary_roundtrip(self, settings: Settings) -> None:
        summary = VerificationRunner(settings=settings).verify("chebyshev", 5)
        path = save_report(summary, "verify-chebyshev", settings=settings)
        assert load_summary(path) == summary
