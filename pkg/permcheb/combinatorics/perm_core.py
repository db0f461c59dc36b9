"""Permutations, pattern occurrences, the symmetry group and structural attributes.

Occurrence counting is an exhaustive subsequence scan pruned on partial
order-isomorphism: when the j-th pattern entry is placed, only the two
already-placed entries adjacent to it in value need to be compared.
"""

from __future__ import annotations

import logging
from bisect import bisect_left
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations as _permutations

from permcheb.constants import (
    FAMILY_IDENTITY,
    FAMILY_LAYERED,
    FAMILY_LP,
    FAMILY_TWO_LAYERED,
    FAMILY_WEDGE,
    QUANTIFIER_ATLEAST,
    QUANTIFIER_AVOID,
    QUANTIFIER_EXACTLY,
)
from permcheb.errors import PatternError
from permcheb.models import (
    ConstraintItem,
    ConstraintSet,
    Explicit,
    Identity,
    Layered,
    PatternSpec,
    Permutation,
    Quantifier,
    TwoLayered,
    Wedge,
)

logger = logging.getLogger(__name__)

EMPTY = Permutation(())
PATTERN_132 = Permutation((1, 3, 2))


# ---------------------------------------------------------------------------
# Occurrence counting
# ---------------------------------------------------------------------------


@lru_cache(maxsize=1024)
def _neighbours(pattern: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """For each pattern index j: indices l < j holding the nearest smaller / larger value (-1 if none)."""
    result = []
    for j, value in enumerate(pattern):
        below, above = -1, -1
        for l in range(j):
            other = pattern[l]
            if other < value and (below < 0 or other > pattern[below]):
                below = l
            elif other > value and (above < 0 or other < pattern[above]):
                above = l
        result.append((below, above))
    return tuple(result)


def _scan(
    subject: Sequence[int], pattern: tuple[int, ...], fixed_last: bool, limit: int | None
) -> int:
    k = len(pattern)
    n = len(subject)
    if k == 0:
        return 1
    if k > n:
        return 0
    links = _neighbours(pattern)
    chosen = [0] * k
    count = 0
    free = k - 1 if fixed_last else k
    span = n - 1 if fixed_last else n

    def fits(j: int, value: int) -> bool:
        below, above = links[j]
        if below >= 0 and value < chosen[below]:
            return False
        if above >= 0 and value > chosen[above]:
            return False
        return True

    def extend(j: int, start: int) -> bool:
        nonlocal count
        if j == free:
            if fixed_last:
                if not fits(k - 1, subject[-1]):
                    return False
            count += 1
            return limit is not None and count >= limit
        for i in range(start, span - (free - j - 1)):
            value = subject[i]
            if fits(j, value):
                chosen[j] = value
                if extend(j + 1, i + 1):
                    return True
        return False

    extend(0, 0)
    return count


def count_occurrences(subject: Permutation | Sequence[int], pattern: Permutation) -> int:
    """Number of index subsequences of ``subject`` order-isomorphic to ``pattern``.

    The empty pattern occurs exactly once in every subject.
    """
    values = subject.values if isinstance(subject, Permutation) else tuple(subject)
    return _scan(values, pattern.values, fixed_last=False, limit=None)


def contains(subject: Permutation | Sequence[int], pattern: Permutation) -> bool:
    values = subject.values if isinstance(subject, Permutation) else tuple(subject)
    return _scan(values, pattern.values, fixed_last=False, limit=1) > 0


def count_occurrences_ending(
    word: Sequence[int], pattern: Permutation, limit: int | None = None
) -> int:
    """Occurrences in ``word`` that use its last entry as the pattern's last entry.

    With ``limit`` the scan stops as soon as that many occurrences were found.
    """
    if not pattern.values:
        return 0
    return _scan(word, pattern.values, fixed_last=True, limit=limit)


def satisfies(subject: Permutation, cs: ConstraintSet) -> bool:
    """True iff every (pattern, quantifier) item of ``cs`` holds for ``subject``."""
    for item in cs.items:
        limit = item.quantifier.count + 1
        found = _scan(subject.values, item.pattern.values, fixed_last=False, limit=limit)
        if not item.quantifier.holds(found):
            return False
    return True


# ---------------------------------------------------------------------------
# Symmetries
# ---------------------------------------------------------------------------


def reverse(pi: Permutation) -> Permutation:
    return Permutation(pi.values[::-1])


def complement(pi: Permutation) -> Permutation:
    n = len(pi)
    return Permutation(tuple(n + 1 - v for v in pi.values))


def inverse(pi: Permutation) -> Permutation:
    result = [0] * len(pi)
    for position, value in enumerate(pi.values, start=1):
        result[value - 1] = position
    return Permutation(tuple(result))


SYMMETRY_GENERATORS = (reverse, complement, inverse)


def symmetry_orbit(patterns: Iterable[Permutation]) -> set[frozenset[Permutation]]:
    """Orbit of the pattern collection under the group generated by reverse, complement and inverse."""
    start = frozenset(patterns)
    orbit = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for generator in SYMMETRY_GENERATORS:
            image = frozenset(generator(p) for p in current)
            if image not in orbit:
                orbit.add(image)
                frontier.append(image)
    return orbit


# ---------------------------------------------------------------------------
# Structure
# ---------------------------------------------------------------------------


def standardize(word: Sequence[int]) -> Permutation:
    """Order-isomorphic flattening of a word of distinct integers onto 1..n.

    Raises:
        PatternError: If ``word`` has repeated entries.
    """
    values = tuple(word)
    if len(set(values)) != len(values):
        raise PatternError(f"Cannot standardize a word with repeated entries: {values}")
    ranks = {value: rank for rank, value in enumerate(sorted(values), start=1)}
    return Permutation(tuple(ranks[v] for v in values))


def rtl_maxima(tau: Permutation) -> list[tuple[int, int]]:
    """Right-to-left maxima as (1-based position, value), left to right."""
    maxima: list[tuple[int, int]] = []
    best = 0
    for index in range(len(tau) - 1, -1, -1):
        if tau[index] > best:
            best = tau[index]
            maxima.append((index + 1, best))
    maxima.reverse()
    return maxima


@dataclass(slots=True, frozen=True)
class PrefixSuffix:
    """Standardized prefixes pi^-1..pi^r and suffixes sigma^0..sigma^(r+1) of a 132-avoider."""

    maxima: tuple[tuple[int, int], ...]
    prefixes: tuple[Permutation, ...]
    suffixes: tuple[Permutation, ...]

    @property
    def r(self) -> int:
        return len(self.maxima) - 1

    def prefix(self, j: int) -> Permutation:
        """pi^j for -1 <= j <= r."""
        return self.prefixes[j + 1]

    def suffix(self, j: int) -> Permutation:
        """sigma^j for 0 <= j <= r + 1."""
        return self.suffixes[j]


def prefix_suffix_decomposition(tau: Permutation) -> PrefixSuffix:
    """Split ``tau`` at its right-to-left maxima m_0 = k > m_1 > ... > m_r.

    pi^0 is the standardized block left of m_0 (without it), pi^j for j >= 1
    is the standardized prefix ending at m_j, and sigma^j is the standardized
    suffix starting right after m_{j-1} (sigma^0 = tau).

    Raises:
        PatternError: If ``tau`` is empty or contains 132.
    """
    if not tau.values:
        raise PatternError("The empty permutation has no right-to-left maxima")
    if contains(tau, PATTERN_132):
        raise PatternError(f"{tau} contains 132")
    maxima = rtl_maxima(tau)
    positions = [position - 1 for position, _ in maxima]
    values = tau.values
    prefixes = [EMPTY, standardize(values[: positions[0]])]
    prefixes.extend(standardize(values[: q + 1]) for q in positions[1:])
    suffixes = [tau]
    suffixes.extend(standardize(values[q + 1 :]) for q in positions)
    return PrefixSuffix(tuple(maxima), tuple(prefixes), tuple(suffixes))


def lis_length(values: Sequence[int]) -> int:
    """Length of a longest increasing subsequence (patience sorting)."""
    tails: list[int] = []
    for value in values:
        index = bisect_left(tails, value)
        if index == len(tails):
            tails.append(value)
        else:
            tails[index] = value
    return len(tails)


def a_sequence(pi: Permutation) -> tuple[int, ...]:
    """Bits a_j = 1 iff the last j+1 entries have a longer increasing subsequence than the last j."""
    p = len(pi)
    if p < 1:
        raise PatternError("a-sequence needs a nonempty permutation")
    lengths = [lis_length(pi.values[p - j :]) for j in range(1, p + 1)]
    return tuple(lengths[j] - lengths[j - 1] for j in range(1, p))


def is_Lp_member(pi: Permutation, p: int) -> bool:
    """pi has the form pi_1 1 pi_2 2 pi_3 with pi_2 nonempty."""
    if len(pi) != p or p < 3:
        return False
    one = pi.values.index(1)
    two = pi.values.index(2)
    return two - one >= 2


@lru_cache(maxsize=16)
def Lp_set(p: int) -> frozenset[Permutation]:
    if p < 3:
        raise PatternError(f"L_p is defined for p >= 3, got {p}")
    members = (Permutation(values) for values in _permutations(range(1, p + 1)))
    return frozenset(pi for pi in members if is_Lp_member(pi, p))


def is_layered(pi: Permutation) -> bool:
    """True iff pi is a concatenation of increasing runs of consecutive values, blocks descending."""
    if not pi.values:
        return False
    values = pi.values
    blocks: list[list[int]] = [[values[0]]]
    for value in values[1:]:
        if value == blocks[-1][-1] + 1:
            blocks[-1].append(value)
        else:
            blocks.append([value])
    for upper, lower in zip(blocks, blocks[1:]):
        if upper[0] != lower[-1] + 1:
            return False
    return blocks[-1][0] == 1


def layered_parts(pi: Permutation) -> tuple[int, ...]:
    """Inverse of Layered.materialize: the block maxima m_0 > ... > m_r."""
    if not is_layered(pi):
        raise PatternError(f"{pi} is not layered")
    values = pi.values
    ends = [index for index in range(len(values) - 1) if values[index + 1] != values[index] + 1]
    return tuple(values[index] for index in ends) + (values[-1],)


def _small_runs(values: Sequence[int], s: int) -> list[list[int]]:
    runs: list[list[int]] = []
    previous_small = False
    for value in values:
        if value <= s:
            if previous_small:
                runs[-1].append(value)
            else:
                runs.append([value])
        previous_small = value <= s
    return runs


def is_wedge(pi: Permutation) -> bool:
    """True iff for some s the entries above s appear in increasing order starting
    at position one, and each maximal run of entries 1..s between them is a
    single layer, the layers descending from left to right."""
    if not pi.values:
        return False
    for s in range(pi[0]):
        large = [v for v in pi.values if v > s]
        if any(b < a for a, b in zip(large, large[1:])):
            continue
        runs = _small_runs(pi.values, s)
        if any(run != list(range(run[0], run[0] + len(run))) for run in runs):
            continue
        if all(upper[0] > lower[-1] for upper, lower in zip(runs, runs[1:])):
            return True
    return False


# ---------------------------------------------------------------------------
# Literal syntax
# ---------------------------------------------------------------------------


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise PatternError(f"Expected a comma-separated integer list, got {text!r}") from exc


def parse_permutation(text: str) -> Permutation:
    """Parse "132", "10,3,1,2" or "()"."""
    text = text.strip()
    if text in ("()", ""):
        return EMPTY
    if "," in text:
        return Permutation(_int_list(text))
    if not text.isdigit():
        raise PatternError(f"Invalid permutation literal {text!r}")
    return Permutation(tuple(int(ch) for ch in text))


def parse_pattern(text: str) -> PatternSpec:
    """Parse a single pattern literal (explicit or a family shorthand other than Lp)."""
    text = text.strip()
    family, sep, rest = text.partition(":")
    if not sep:
        return Explicit(parse_permutation(text))
    if family == FAMILY_IDENTITY:
        params = _int_list(rest)
        if len(params) != 1:
            raise PatternError(f"Identity literal needs one length: {text!r}")
        return Identity(params[0])
    if family == FAMILY_TWO_LAYERED:
        params = _int_list(rest)
        if len(params) != 2:
            raise PatternError(f"Two-layered literal needs k,m: {text!r}")
        return TwoLayered(*params)
    if family == FAMILY_LAYERED:
        return Layered(_int_list(rest))
    if family == FAMILY_WEDGE:
        pieces = rest.split(";")
        if len(pieces) != 2:
            raise PatternError(f"Wedge literal needs tau;rho piece lengths: {text!r}")
        return Wedge(_int_list(pieces[0]), _int_list(pieces[1]))
    raise PatternError(f"Unknown pattern family {family!r} in {text!r}")


def parse_patterns(text: str) -> list[Permutation]:
    """Parse a pattern literal into explicit permutations; "Lp:p" expands to the whole set."""
    family, sep, rest = text.strip().partition(":")
    if sep and family == FAMILY_LP:
        params = _int_list(rest)
        if len(params) != 1:
            raise PatternError(f"Lp literal needs one parameter: {text!r}")
        return sorted(Lp_set(params[0]))
    return [parse_pattern(text).materialize()]


def parse_constraint(text: str) -> list[ConstraintItem]:
    """Parse "avoid:<pat>", "exactly:<r>:<pat>", "atleast:<r>:<pat>" or a bare pattern (avoid)."""
    head, sep, rest = text.strip().partition(":")
    if sep and head == QUANTIFIER_AVOID:
        quantifier, literal = Quantifier.avoid(), rest
    elif sep and head in (QUANTIFIER_EXACTLY, QUANTIFIER_ATLEAST):
        count_text, sep2, literal = rest.partition(":")
        if not sep2 or not count_text.isdigit():
            raise PatternError(f"Quantifier literal needs a count: {text!r}")
        count = int(count_text)
        quantifier = Quantifier.exactly(count) if head == QUANTIFIER_EXACTLY else Quantifier.at_least(count)
    else:
        quantifier, literal = Quantifier.avoid(), text
    patterns = parse_patterns(literal)
    if len(patterns) > 1 and quantifier != Quantifier.avoid():
        raise PatternError(f"Pattern sets only support avoidance: {text!r}")
    return [ConstraintItem(p, quantifier) for p in patterns]


def parse_constraints(literals: Iterable[str]) -> ConstraintSet:
    items: list[ConstraintItem] = []
    for literal in literals:
        items.extend(parse_constraint(literal))
    return ConstraintSet(tuple(items))


def format_constraints(cs: ConstraintSet) -> str:
    return cs.literal() or "(none)"
