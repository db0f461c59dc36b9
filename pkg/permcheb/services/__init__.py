"""Oracle, verification runner and report I/O."""

from permcheb.services.oracle import (
    CountTable,
    OccurrenceTable,
    count_by_occurrences,
    count_N_of_a,
    count_upto,
    list_matching,
)
from permcheb.services.report_io import load_summary, save_report

__all__ = [
    "CountTable",
    "OccurrenceTable",
    "count_N_of_a",
    "count_by_occurrences",
    "count_upto",
    "list_matching",
    "load_summary",
    "save_report",
]
