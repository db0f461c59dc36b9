"""Block decompositions around the maximum and the prefix/suffix recursion.

For a 132-avoider alpha = (alpha', n, alpha'') every entry of alpha' exceeds
every entry of alpha''. Reading a 132-avoiding pattern tau through its
right-to-left maxima gives the recursion

    F_tau = 1 + x * sum_{j=0..r} (F_{pi^j} - F_{pi^(j-1)}) * F_{sigma^j}

with F_empty = 0. The unknown F_tau appears on the right through
sigma^0 = tau (when r = 0) or pi^r = tau (when r >= 1), so the relation is
solved as a linear equation.
"""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache

from permcheb.algebra.exactalg import RatFun
from permcheb.combinatorics.perm_core import (
    PATTERN_132,
    Lp_set,
    contains,
    count_occurrences,
    prefix_suffix_decomposition,
    standardize,
)
from permcheb.errors import PatternError
from permcheb.models import Permutation

logger = logging.getLogger(__name__)


class BlockKind(str, Enum):
    AVOIDER_SPLIT = "avoider_split"
    EXACTLY_ONCE_I = "exactly_once_i"
    EXACTLY_ONCE_II = "exactly_once_ii"
    EXACTLY_ONCE_III = "exactly_once_iii"
    L4_A = "l4_a"
    L4_B = "l4_b"


@dataclass(slots=True, frozen=True)
class Block:
    """A factor of the decomposition occupying exactly the values low..high."""

    values: tuple[int, ...]
    low: int
    high: int

    def __post_init__(self) -> None:
        if sorted(self.values) != list(range(self.low, self.high + 1)):
            raise PatternError(f"Block {self.values} does not cover the values {self.low}..{self.high}")

    def standardized(self) -> Permutation:
        return standardize(self.values)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(slots=True, frozen=True)
class BlockDecomposition:
    """Blocks interleaved with fixed marker entries: blocks[0], markers[0], blocks[1], ..."""

    kind: BlockKind
    blocks: tuple[Block, ...]
    markers: tuple[tuple[int, ...], ...]
    params: Mapping[str, int] = field(default_factory=dict)

    def reassemble(self) -> Permutation:
        values: list[int] = []
        for index, block in enumerate(self.blocks):
            values.extend(block.values)
            if index < len(self.markers):
                values.extend(self.markers[index])
        return Permutation(tuple(values))


def _split_at_max(alpha: Permutation) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    n = len(alpha)
    where = alpha.values.index(n)
    return where, alpha.values[:where], alpha.values[where + 1 :]


def decompose_132_avoider(alpha: Permutation) -> BlockDecomposition:
    """alpha = (alpha', n, alpha'') with alpha' on n-t+1..n-1 and alpha'' on 1..n-t, where alpha_t = n.

    Raises:
        PatternError: If alpha is empty or contains 132.
    """
    if not alpha.values:
        raise PatternError("Cannot decompose the empty permutation")
    if contains(alpha, PATTERN_132):
        raise PatternError(f"{alpha} contains 132")
    n = len(alpha)
    where, left, right = _split_at_max(alpha)
    t = where + 1
    blocks = (Block(left, n - t + 1, n - 1), Block(right, 1, n - t))
    return BlockDecomposition(BlockKind.AVOIDER_SPLIT, blocks, ((n,),), {"t": t})


def _only_occurrence(alpha: Permutation) -> tuple[int, int, int]:
    values = alpha.values
    size = len(values)
    for i in range(size):
        for j in range(i + 1, size):
            if values[j] <= values[i]:
                continue
            for l in range(j + 1, size):
                if values[i] < values[l] < values[j]:
                    return i, j, l
    raise PatternError(f"{alpha} does not contain 132")


def classify_exactly_once(alpha: Permutation) -> BlockDecomposition:
    """Place a permutation with exactly one 132 into one of the three block forms.

    (i)   (alpha', n, alpha'') with alpha' holding the 132 and alpha'' avoiding it;
    (ii)  (alpha', n, alpha'') with alpha' avoiding 132 and alpha'' holding it;
    (iii) (alpha', n-t+1, n, alpha'', n-t+2, alpha''') with all three blocks 132-avoiding.

    Raises:
        PatternError: If alpha does not contain 132 exactly once.
    """
    occurrences = count_occurrences(alpha, PATTERN_132)
    if occurrences != 1:
        raise PatternError(f"{alpha} contains 132 {occurrences} times, expected exactly once")
    n = len(alpha)
    values = alpha.values
    i, j, l = _only_occurrence(alpha)
    if values[j] == n:
        # the occurrence is (n-t+1, n, n-t+2) with n-t+1 right before n
        low = values[i]
        t = n - low + 1
        first = values[:i]
        middle = values[j + 1 : l]
        last = values[l + 1 :]
        u = t + len(middle)
        blocks = (
            Block(first, n - t + 3, n - 1),
            Block(middle, n - u + 1, n - t),
            Block(last, 1, n - u),
        )
        for block in blocks:
            if contains(block.values, PATTERN_132):
                raise PatternError(f"Block {block.values} of {alpha} contains 132")
        return BlockDecomposition(
            BlockKind.EXACTLY_ONCE_III, blocks, ((low, n), (low + 1,)), {"t": t, "u": u}
        )

    where, left, right = _split_at_max(alpha)
    t = where + 1
    blocks = (Block(left, n - t + 1, n - 1), Block(right, 1, n - t))
    kind = BlockKind.EXACTLY_ONCE_I if l < where else BlockKind.EXACTLY_ONCE_II
    return BlockDecomposition(kind, blocks, ((n,),), {"t": t})


def l4_decompose(alpha: Permutation) -> BlockDecomposition:
    """alpha = (a1, n-1, a2, n, a3) or (a1, n, a2, n-1, a3) with a1 on s+1..n-2, a2 on r+1..s, a3 on 1..r.

    Raises:
        PatternError: If n < 2 or alpha contains a pattern of L_4.
    """
    n = len(alpha)
    if n < 2:
        raise PatternError("The L_4 decomposition needs n >= 2")
    if any(contains(alpha, pattern) for pattern in Lp_set(4)):
        raise PatternError(f"{alpha} contains a pattern of L_4")
    values = alpha.values
    top = values.index(n)
    second = values.index(n - 1)
    first_at, last_at = sorted((top, second))
    a1 = values[:first_at]
    a2 = values[first_at + 1 : last_at]
    a3 = values[last_at + 1 :]
    r = len(a3)
    s = r + len(a2)
    blocks = (Block(a1, s + 1, n - 2), Block(a2, r + 1, s), Block(a3, 1, r))
    if second < top:
        return BlockDecomposition(BlockKind.L4_A, blocks, ((n - 1,), (n,)), {"r": r, "s": s})
    return BlockDecomposition(BlockKind.L4_B, blocks, ((n,), (n - 1,)), {"r": r, "s": s})


@dataclass(slots=True, frozen=True)
class RecursionTerm:
    """One summand (F_{pi^j} - F_{pi^(j-1)}) * F_{sigma^j}."""

    j: int
    prefix: Permutation
    previous_prefix: Permutation
    suffix: Permutation


def recursion_terms(tau: Permutation) -> list[RecursionTerm]:
    decomposition = prefix_suffix_decomposition(tau)
    return [
        RecursionTerm(j, decomposition.prefix(j), decomposition.prefix(j - 1), decomposition.suffix(j))
        for j in range(decomposition.r + 1)
    ]


@lru_cache(maxsize=None)
def F_recursive(tau: Permutation) -> RatFun:
    """Generating function of S_n(132, tau) for a 132-avoiding tau.

    Raises:
        PatternError: If tau contains 132.
    """
    if not tau.values:
        return RatFun.constant(0)
    logger.debug("Recursion step for %s", tau)
    zero = RatFun.constant(0)

    def linear(pattern: Permutation) -> tuple[RatFun, RatFun]:
        # (a, b) stands for a + b * F_tau
        if pattern == tau:
            return zero, RatFun.constant(1)
        return F_recursive(pattern), zero

    known = zero
    unknown = zero
    for term in recursion_terms(tau):
        pa, pb = linear(term.prefix)
        qa, qb = linear(term.previous_prefix)
        sa, sb = linear(term.suffix)
        da, db = pa - qa, pb - qb
        # at most one factor involves tau, so the product stays linear
        known = known + da * sa
        unknown = unknown + da * sb + db * sa
    x = RatFun.x()
    return (1 + x * known) / (1 - x * unknown)
