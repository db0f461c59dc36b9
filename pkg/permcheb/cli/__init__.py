"""Command-line surface."""

from permcheb.cli.commands import HANDLERS, build_parser, dispatch

__all__ = ["HANDLERS", "build_parser", "dispatch"]
