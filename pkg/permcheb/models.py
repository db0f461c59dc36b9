"""Domain types: permutations, pattern families and constraint sets."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum

from permcheb.errors import PatternError


class QuantifierKind(str, Enum):
    """How many occurrences of a pattern a constraint item asks for."""

    EXACTLY = "exactly"
    AT_LEAST = "atleast"


class CheckStatus(str, Enum):
    """Outcome of a verification check."""

    PASSED = "passed"
    FAILED = "failed"
    ERROR = "error"


class Tier(str, Enum):
    """Verification tier: proved statements gate the exit status, experiments only report."""

    PROVED = "proved"
    EXPERIMENTAL = "experimental"


@dataclass(slots=True, frozen=True)
class Permutation:
    """A rearrangement of 1..n stored as a tuple of 1-based values."""

    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise PatternError(f"Not a permutation of 1..{len(values)}: {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, index: int) -> int:
        return self.values[index]

    def __lt__(self, other: Permutation) -> bool:
        return (len(self), self.values) < (len(other), other.values)

    def render(self) -> str:
        """Compact digit string for n <= 9, comma form otherwise; ``()`` when empty."""
        if not self.values:
            return "()"
        if len(self.values) <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)

    def __str__(self) -> str:
        return self.render()


class PatternSpec(ABC):
    """A pattern family member that materializes to an explicit permutation."""

    @abstractmethod
    def materialize(self) -> Permutation:
        """Return the explicit permutation this pattern denotes."""

    @abstractmethod
    def literal(self) -> str:
        """Return the literal syntax that parses back to this spec."""

    def __str__(self) -> str:
        return self.literal()


@dataclass(slots=True, frozen=True)
class Explicit(PatternSpec):
    permutation: Permutation

    def materialize(self) -> Permutation:
        return self.permutation

    def literal(self) -> str:
        return self.permutation.render()


@dataclass(slots=True, frozen=True)
class Identity(PatternSpec):
    """[k] = 12...k."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise PatternError(f"Identity length must be nonnegative, got {self.k}")

    def materialize(self) -> Permutation:
        return Permutation.identity(self.k)

    def literal(self) -> str:
        return f"id:{self.k}"


@dataclass(slots=True, frozen=True)
class Layered(PatternSpec):
    """[m_0, ..., m_r] with m_0 > ... > m_r > 0; block i holds m_{i+1}+1..m_i in increasing order."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        if not parts:
            raise PatternError("A layered pattern needs at least one part")
        if any(b >= a for a, b in zip(parts, parts[1:])) or parts[-1] <= 0:
            raise PatternError(f"Layered parts must strictly decrease to a positive value: {parts}")
        object.__setattr__(self, "parts", parts)

    def materialize(self) -> Permutation:
        bounds = self.parts + (0,)
        values: list[int] = []
        for high, low in zip(bounds, bounds[1:]):
            values.extend(range(low + 1, high + 1))
        return Permutation(tuple(values))

    def literal(self) -> str:
        return "layered:" + ",".join(str(p) for p in self.parts)


@dataclass(slots=True, frozen=True)
class TwoLayered(PatternSpec):
    """[k, m] = (m+1, ..., k, 1, ..., m)."""

    k: int
    m: int

    def __post_init__(self) -> None:
        if not 1 <= self.m <= self.k - 1:
            raise PatternError(f"Two-layered [k,m] needs 1 <= m <= k-1, got k={self.k}, m={self.m}")

    def materialize(self) -> Permutation:
        return Layered((self.k, self.m)).materialize()

    def literal(self) -> str:
        return f"tl:{self.k},{self.m}"


@dataclass(slots=True, frozen=True)
class Wedge(PatternSpec):
    """Interleaving (tau^1, rho^1, ..., tau^r, rho^r).

    The tau pieces (nonempty) hold s+1..k in increasing order. Each rho
    piece is a single layer, a run of consecutive increasing values, and
    the pieces descend: rho^1 holds the largest of 1..s.
    """

    tau_lengths: tuple[int, ...]
    rho_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        tau = tuple(self.tau_lengths)
        rho = tuple(self.rho_lengths)
        if not tau or len(tau) != len(rho):
            raise PatternError("Wedge needs one rho piece per (nonempty) tau piece")
        if any(length <= 0 for length in tau):
            raise PatternError("Every tau piece of a wedge must be nonempty")
        if any(length < 0 for length in rho):
            raise PatternError("rho piece lengths must be nonnegative")
        object.__setattr__(self, "tau_lengths", tau)
        object.__setattr__(self, "rho_lengths", rho)

    def materialize(self) -> Permutation:
        s = sum(self.rho_lengths)
        values: list[int] = []
        next_large = s + 1
        top_small = s
        for tau_len, rho_len in zip(self.tau_lengths, self.rho_lengths):
            values.extend(range(next_large, next_large + tau_len))
            next_large += tau_len
            values.extend(range(top_small - rho_len + 1, top_small + 1))
            top_small -= rho_len
        return Permutation(tuple(values))

    def literal(self) -> str:
        tau = ",".join(str(v) for v in self.tau_lengths)
        rho = ",".join(str(v) for v in self.rho_lengths)
        return f"wedge:{tau};{rho}"


@dataclass(slots=True, frozen=True)
class Quantifier:
    """Exactly(r) (r = 0 means "avoids") or AtLeast(r)."""

    kind: QuantifierKind
    count: int

    def __post_init__(self) -> None:
        if self.count < 0 or (self.kind is QuantifierKind.AT_LEAST and self.count < 1):
            raise PatternError(f"Invalid quantifier count {self.count} for {self.kind.value}")

    @classmethod
    def avoid(cls) -> Quantifier:
        return cls(QuantifierKind.EXACTLY, 0)

    @classmethod
    def exactly(cls, r: int) -> Quantifier:
        return cls(QuantifierKind.EXACTLY, r)

    @classmethod
    def at_least(cls, r: int) -> Quantifier:
        return cls(QuantifierKind.AT_LEAST, r)

    def holds(self, occurrences: int) -> bool:
        if self.kind is QuantifierKind.EXACTLY:
            return occurrences == self.count
        return occurrences >= self.count

    def exceeded(self, occurrences: int) -> bool:
        """True when no extension of a prefix with this many occurrences can satisfy the item."""
        return self.kind is QuantifierKind.EXACTLY and occurrences > self.count

    def literal(self) -> str:
        if self.kind is QuantifierKind.AT_LEAST:
            return f"atleast:{self.count}"
        if self.count == 0:
            return "avoid"
        return f"exactly:{self.count}"


@dataclass(slots=True, frozen=True)
class ConstraintItem:
    pattern: Permutation
    quantifier: Quantifier

    def literal(self) -> str:
        return f"{self.quantifier.literal()}:{self.pattern.render()}"


@dataclass(slots=True, frozen=True)
class ConstraintSet:
    """Conjunction of (pattern, quantifier) items over pairwise distinct patterns."""

    items: tuple[ConstraintItem, ...] = ()

    def __post_init__(self) -> None:
        patterns = [item.pattern for item in self.items]
        if len(set(patterns)) != len(patterns):
            raise PatternError("Constraint patterns must be pairwise distinct")

    @classmethod
    def of(cls, *pairs: tuple[PatternSpec | Permutation, Quantifier]) -> ConstraintSet:
        items = []
        for pattern, quantifier in pairs:
            if isinstance(pattern, PatternSpec):
                pattern = pattern.materialize()
            items.append(ConstraintItem(pattern, quantifier))
        return cls(tuple(items))

    @classmethod
    def avoiding(cls, patterns: Sequence[PatternSpec | Permutation]) -> ConstraintSet:
        return cls.of(*((p, Quantifier.avoid()) for p in patterns))

    def with_item(self, pattern: PatternSpec | Permutation, quantifier: Quantifier) -> ConstraintSet:
        if isinstance(pattern, PatternSpec):
            pattern = pattern.materialize()
        return ConstraintSet(self.items + (ConstraintItem(pattern, quantifier),))

    def map_patterns(self, transform: PatternTransform) -> ConstraintSet:
        return ConstraintSet(
            tuple(ConstraintItem(transform(item.pattern), item.quantifier) for item in self.items)
        )

    def __len__(self) -> int:
        return len(self.items)

    def literal(self) -> str:
        return " ".join(item.literal() for item in self.items)


PatternTransform = Callable[[Permutation], Permutation]
