"""Dyck paths and the height-preserving bijection with 132-avoiding permutations."""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass

from permcheb.combinatorics.perm_core import PATTERN_132, contains
from permcheb.constants import DOWN_STEP, UP_STEP
from permcheb.errors import PatternError
from permcheb.models import Permutation

logger = logging.getLogger(__name__)

__all__ = [
    "DyckPath",
    "all_paths",
    "format_path",
    "max_height",
    "parse_path",
    "phi",
    "phi_inverse",
]


@dataclass(slots=True, frozen=True)
class DyckPath:
    """Lattice path over up/down steps that never dips below height 0 and ends there."""

    steps: str = ""

    def __post_init__(self) -> None:
        height = 0
        for step in self.steps:
            if step == UP_STEP:
                height += 1
            elif step == DOWN_STEP:
                height -= 1
            else:
                raise PatternError(f"Unknown Dyck step {step!r}")
            if height < 0:
                raise PatternError(f"Path {self.steps} dips below height 0")
        if height != 0:
            raise PatternError(f"Path {self.steps} ends at height {height}")

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def heights(self) -> list[int]:
        """Height after each step."""
        out = []
        height = 0
        for step in self.steps:
            height += 1 if step == UP_STEP else -1
            out.append(height)
        return out

    def __str__(self) -> str:
        return self.steps


def max_height(path: DyckPath) -> int:
    return max(path.heights(), default=0)


def _greater_later(pi: Permutation) -> list[int]:
    values = pi.values
    return [sum(1 for later in values[j + 1 :] if later > value) for j, value in enumerate(values)]


def phi(pi: Permutation) -> DyckPath:
    """For each entry, climb to height h + 1 and step down once, h = number of later larger entries.

    Raises:
        PatternError: If ``pi`` contains 132.
    """
    if contains(pi, PATTERN_132):
        raise PatternError(f"{pi} contains 132")
    steps: list[str] = []
    height = 0
    for h in _greater_later(pi):
        steps.append(UP_STEP * (h + 1 - height))
        steps.append(DOWN_STEP)
        height = h
    return DyckPath("".join(steps))


def phi_inverse(path: DyckPath) -> Permutation:
    """The unique 132-avoider whose image under :func:`phi` is ``path``."""
    levels: list[int] = []
    height = 0
    for step in path.steps:
        if step == UP_STEP:
            height += 1
        else:
            height -= 1
            levels.append(height)

    # insert positions right to left by rank: an entry with h larger successors
    # sits h places below the top of the entries to its right
    ranked: list[int] = []
    for position in range(len(levels) - 1, -1, -1):
        h = levels[position]
        if h > len(ranked):
            raise PatternError(f"Malformed path {path.steps}")
        ranked.insert(len(ranked) - h, position)
    values = [0] * len(levels)
    for rank, position in enumerate(ranked, start=1):
        values[position] = rank
    pi = Permutation(tuple(values))
    if phi(pi) != path:
        raise PatternError(f"Path {path.steps} is not the image of a 132-avoiding permutation")
    return pi


def all_paths(n: int) -> Iterator[DyckPath]:
    """Every Dyck path of semilength n, up-steps first in lexicographic order."""

    def extend(prefix: str, ups: int, downs: int) -> Iterator[str]:
        if ups == n and downs == n:
            yield prefix
            return
        if ups < n:
            yield from extend(prefix + UP_STEP, ups + 1, downs)
        if downs < ups:
            yield from extend(prefix + DOWN_STEP, ups, downs + 1)

    for steps in extend("", 0, 0):
        yield DyckPath(steps)


def parse_path(text: str) -> DyckPath:
    return DyckPath(text.strip().upper())


def format_path(path: DyckPath) -> str:
    return path.steps
