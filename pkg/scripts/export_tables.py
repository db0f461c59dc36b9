#!/usr/bin/env python3
"""Golden count tables.

Exports brute-force counts for the constraint sets the test suite and the
verification runner lean on, as JSON and CSV under the report directory.
"""

import argparse
import sys
from pathlib import Path

# Add parent directory to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent))

from permcheb.cli.rendering import render_count_table
from permcheb.combinatorics.perm_core import format_constraints, parse_constraints
from permcheb.config import get_settings
from permcheb.schemas import CountTableReport
from permcheb.services import count_upto, save_report

GOLDEN_TABLES: dict[str, list[str]] = {
    "av132": ["avoid:132"],
    "av132-id3": ["avoid:132", "avoid:id:3"],
    "av132-id4": ["avoid:132", "avoid:id:4"],
    "av132-tl3-1": ["avoid:132", "avoid:tl:3,1"],
    "av132-tl4-2": ["avoid:132", "avoid:tl:4,2"],
    "av321-tl3-1": ["avoid:321", "avoid:tl:3,1"],
    "av132-lp4": ["avoid:132", "avoid:Lp:4"],
    "once132-av-id3": ["exactly:1:132", "avoid:id:3"],
    "once132-once-id3": ["exactly:1:132", "exactly:1:id:3"],
}


def export(name: str, literals: list[str], N: int) -> None:
    """Count one table and save it in both formats."""
    settings = get_settings()
    table = count_upto(parse_constraints(literals), N, settings=settings)
    report = CountTableReport(constraint=format_constraints(table.constraint), counts=list(table.counts))
    json_path = save_report(report, f"golden-{name}", settings=settings)
    csv_path = save_report(render_count_table(report, "csv"), f"golden-{name}", extension="csv", settings=settings)
    print(f"  {name:<20} {','.join(str(c) for c in report.counts)}")
    print(f"  {'':<20} -> {json_path}, {csv_path}")


def main() -> None:
    parser = argparse.ArgumentParser(
        description="Export golden count tables",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Export every table through n=9
  python scripts/export_tables.py -N 9

  # Export a single table
  python scripts/export_tables.py --only av132-id4
        """,
    )
    parser.add_argument("-N", type=int, default=9, help="Largest length counted")
    parser.add_argument("--only", choices=sorted(GOLDEN_TABLES), help="Export one table")
    args = parser.parse_args()

    names = [args.only] if args.only else list(GOLDEN_TABLES)
    print(f"\n=== Golden tables through n={args.N} ===\n")
    for name in names:
        export(name, GOLDEN_TABLES[name], args.N)


if __name__ == "__main__":
    main()
