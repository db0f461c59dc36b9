"""Brute-force ground truth: exhaustive enumeration of S_n filtered by a constraint set.

Counting walks the tree of standardized prefixes: a permutation of length
n + 1 is a permutation of length n with one new last value inserted. The
occurrences of a pattern in the parent are still occurrences in the child,
so each step only scans for occurrences that end at the new entry, and a
subtree is dropped as soon as an ``Exactly(r)`` item is exceeded.
"""

from __future__ import annotations

import logging
import time
from collections import Counter
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations as _permutations

from permcheb.algebra.exactalg import Series
from permcheb.combinatorics.perm_core import a_sequence, count_occurrences_ending
from permcheb.config import Settings, get_settings
from permcheb.errors import ParameterError, ResourceLimitError
from permcheb.models import ConstraintSet, Permutation, QuantifierKind

logger = logging.getLogger(__name__)

# Depth of the prefix tree at which work is split across processes
_SPLIT_DEPTH = 4


@dataclass(slots=True, frozen=True)
class CountTable:
    """Counts f(0), ..., f(N) of permutations satisfying a constraint set."""

    constraint: ConstraintSet
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] not in (0, 1):
            raise ValueError("f(0) must be 0 or 1")

    @property
    def order(self) -> int:
        return len(self.counts) - 1

    def series(self) -> Series:
        return Series.from_counts(self.counts)


@dataclass(slots=True, frozen=True)
class OccurrenceTable:
    """counts[n][r]: permutations of length n satisfying ``constraint`` with exactly r occurrences of ``pattern``."""

    constraint: ConstraintSet
    pattern: Permutation
    counts: tuple[dict[int, int], ...]
    max_r: int | None = None

    @property
    def order(self) -> int:
        return len(self.counts) - 1

    def row(self, r: int) -> Series:
        """Series in x of permutations with exactly r occurrences."""
        if self.max_r is not None and r > self.max_r:
            raise ParameterError(f"Occurrence count {r} exceeds the tracked maximum {self.max_r}")
        return Series.from_counts([level.get(r, 0) for level in self.counts])

    def totals(self) -> list[int]:
        return [sum(level.values()) for level in self.counts]


@dataclass
class _Enumerator:
    """Prefix-tree walk carrying running occurrence counts per constraint item."""

    cs: ConstraintSet
    order: int
    tracked: Permutation | None = None
    max_r: int | None = None
    levels: list[Counter[int]] = field(init=False)

    def __post_init__(self) -> None:
        self.levels = [Counter() for _ in range(self.order + 1)]

    def root_counts(self) -> tuple[int, ...]:
        # the empty pattern occurs once in every permutation, the empty one included
        return tuple(0 if item.pattern.values else 1 for item in self.cs.items)

    def root_tracked(self) -> int:
        return 1 if self.tracked is not None and not self.tracked.values else 0

    def holds(self, counts: Sequence[int]) -> bool:
        return all(item.quantifier.holds(c) for item, c in zip(self.cs.items, counts))

    def step(
        self, child: tuple[int, ...], counts: Sequence[int], tracked: int
    ) -> tuple[tuple[int, ...], int] | None:
        """Running counts for ``child``, or None when its subtree can be dropped."""
        updated = []
        for item, current in zip(self.cs.items, counts):
            quantifier = item.quantifier
            if quantifier.kind is QuantifierKind.EXACTLY:
                found = count_occurrences_ending(
                    child, item.pattern, limit=quantifier.count + 1 - current
                )
                if current + found > quantifier.count:
                    return None
                updated.append(current + found)
            elif current >= quantifier.count:
                updated.append(current)
            else:
                found = count_occurrences_ending(
                    child, item.pattern, limit=quantifier.count - current
                )
                updated.append(current + found)
        if self.tracked is not None:
            limit = None if self.max_r is None else self.max_r + 1 - tracked
            tracked += count_occurrences_ending(child, self.tracked, limit=limit)
            if self.max_r is not None and tracked > self.max_r:
                return None
        return tuple(updated), tracked

    def walk(self, values: tuple[int, ...], counts: tuple[int, ...], tracked: int) -> None:
        n = len(values)
        if self.holds(counts):
            self.levels[n][tracked] += 1
        if n == self.order:
            return
        for child in _children(values):
            state = self.step(child, counts, tracked)
            if state is not None:
                self.walk(child, *state)

    def frontier(
        self, values: tuple[int, ...], counts: tuple[int, ...], tracked: int, depth: int
    ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...], int]]:
        """Record nodes shallower than ``depth`` and yield the subtrees rooted at that depth."""
        n = len(values)
        if n == depth:
            yield values, counts, tracked
            return
        if self.holds(counts):
            self.levels[n][tracked] += 1
        for child in _children(values):
            state = self.step(child, counts, tracked)
            if state is not None:
                yield from self.frontier(child, *state, depth)


def _children(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    n = len(values)
    for new in range(1, n + 2):
        yield tuple(v + 1 if v >= new else v for v in values) + (new,)


def _walk_subtree(
    args: tuple[ConstraintSet, int, Permutation | None, int | None, tuple[int, ...], tuple[int, ...], int],
) -> list[Counter[int]]:
    cs, order, tracked_pattern, max_r, values, counts, tracked = args
    enumerator = _Enumerator(cs, order, tracked_pattern, max_r)
    enumerator.walk(values, counts, tracked)
    return enumerator.levels


def _check_cap(N: int, cap: int, unsafe: bool, what: str) -> None:
    if N < 0:
        raise ParameterError(f"Order must be nonnegative, got {N}")
    if N > cap:
        if not unsafe:
            raise ResourceLimitError(
                f"{what} up to n={N} exceeds the cap n={cap} (raise PERMCHEB_MAX_N or pass --unsafe-N)"
            )
        logger.warning("Running %s up to n=%s beyond the cap n=%s", what, N, cap)


def _enumerate(
    cs: ConstraintSet,
    N: int,
    tracked: Permutation | None,
    max_r: int | None,
    workers: int,
) -> list[Counter[int]]:
    enumerator = _Enumerator(cs, N, tracked, max_r)
    root = ((), enumerator.root_counts(), enumerator.root_tracked())
    if workers <= 1 or N <= _SPLIT_DEPTH:
        enumerator.walk(*root)
        return enumerator.levels

    jobs = [
        (cs, N, tracked, max_r, values, counts, t)
        for values, counts, t in enumerator.frontier(*root, _SPLIT_DEPTH)
    ]
    levels = enumerator.levels
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for partial in pool.map(_walk_subtree, jobs):
            for n, level in enumerate(partial):
                levels[n].update(level)
    return levels


def count_upto(
    cs: ConstraintSet,
    N: int,
    *,
    settings: Settings | None = None,
    unsafe: bool = False,
) -> CountTable:
    """Count permutations of each length 0..N that satisfy ``cs``.

    Raises:
        ResourceLimitError: If N exceeds the configured cap and ``unsafe`` is not set.
    """
    settings = settings or get_settings()
    _check_cap(N, settings.max_n, unsafe, "Counting")
    started = time.perf_counter()
    levels = _enumerate(cs, N, None, None, settings.oracle_workers)
    counts = tuple(level[0] for level in levels)
    logger.info(
        "Counted %s through n=%s in %.1f ms",
        cs.literal() or "(no constraints)",
        N,
        (time.perf_counter() - started) * 1000,
    )
    return CountTable(cs, counts)


def count_by_occurrences(
    cs: ConstraintSet,
    pattern: Permutation,
    N: int,
    *,
    max_r: int | None = None,
    settings: Settings | None = None,
    unsafe: bool = False,
) -> OccurrenceTable:
    """One scan tabulating permutations satisfying ``cs`` by their number of ``pattern`` occurrences.

    With ``max_r`` permutations with more than ``max_r`` occurrences are skipped entirely.
    """
    settings = settings or get_settings()
    _check_cap(N, settings.max_n, unsafe, "Counting")
    started = time.perf_counter()
    levels = _enumerate(cs, N, pattern, max_r, settings.oracle_workers)
    logger.info(
        "Tabulated occurrences of %s under %s through n=%s in %.1f ms",
        pattern,
        cs.literal() or "(no constraints)",
        N,
        (time.perf_counter() - started) * 1000,
    )
    return OccurrenceTable(cs, pattern, tuple(dict(sorted(level.items())) for level in levels), max_r)


def list_matching(
    cs: ConstraintSet,
    n: int,
    *,
    settings: Settings | None = None,
    unsafe: bool = False,
) -> list[Permutation]:
    """All members of S_n satisfying ``cs``, in lexicographic order."""
    settings = settings or get_settings()
    _check_cap(n, settings.max_list_n, unsafe, "Listing")
    enumerator = _Enumerator(cs, n)
    results: list[Permutation] = []
    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend(counts: tuple[int, ...]) -> None:
        if len(prefix) == n:
            if enumerator.holds(counts):
                results.append(Permutation(tuple(prefix)))
            return
        for value in range(1, n + 1):
            if used[value]:
                continue
            prefix.append(value)
            state = enumerator.step(tuple(prefix), counts, 0)
            if state is not None:
                used[value] = True
                extend(state[0])
                used[value] = False
            prefix.pop()

    extend(enumerator.root_counts())
    return results


def count_N_of_a(p: int, *, literal: bool = False) -> dict[tuple[int, ...], int]:
    """Number of permutations with each a-sequence.

    By default counts over S_{p-2}, giving sequences of length p - 3; with
    ``literal`` counts over S_p with sequences of length p - 1.
    """
    if p < 4:
        raise ParameterError(f"N(a) is defined for p >= 4, got {p}")
    size = p if literal else p - 2
    tally: Counter[tuple[int, ...]] = Counter()
    for values in _permutations(range(1, size + 1)):
        tally[a_sequence(Permutation(values))] += 1
    return dict(sorted(tally.items()))
