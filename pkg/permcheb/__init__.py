"""Exact generating functions for pattern-avoiding permutations, checked by brute force."""

from permcheb.config import VERSION

__version__ = VERSION
