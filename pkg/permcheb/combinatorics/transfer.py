"""Transfer matrices: walk generating functions, generating trees and the Dyck strip.

The generating function for walks from vertex r to vertex s in a digraph
with adjacency matrix A is the (r, s) entry of (I - xA)^-1, i.e. the
signed cofactor obtained by deleting row s and column r of I - xA, divided
by det(I - xA). Determinants are taken over Z[x] by sympy's
:class:`~sympy.polys.matrices.DomainMatrix`.
"""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np
from sympy import QQ, Matrix
from sympy import Poly as SymPoly
from sympy.polys.matrices import DomainMatrix

from permcheb.algebra.exactalg import X, Poly, RatFun, Series
from permcheb.errors import ParameterError, PatternError

logger = logging.getLogger(__name__)


class MinorOrientation(str, Enum):
    """Which row/column of I - xA is deleted for the (r, s) walk function."""

    # delete row s, column r: walks from r to s
    COFACTOR = "cofactor"
    # delete row r, column s, as the determinant ratio is usually displayed: walks from s to r
    DISPLAY = "display"


@dataclass(slots=True, frozen=True)
class GeneratingTree:
    """Rooted labelled tree given by a root label and succession rules."""

    root: str
    rules: Mapping[str, tuple[str, ...]]

    def __post_init__(self) -> None:
        if self.root not in self.rules:
            raise PatternError(f"Root label {self.root!r} has no succession rule")
        for label, children in self.rules.items():
            for child in children:
                if child not in self.rules:
                    raise PatternError(f"Label {child!r} (child of {label!r}) has no succession rule")

    def labels(self) -> list[str]:
        """Labels in breadth-first order of first appearance from the root."""
        order = [self.root]
        seen = {self.root}
        for label in order:
            for child in self.rules[label]:
                if child not in seen:
                    seen.add(child)
                    order.append(child)
        return order


@dataclass(slots=True, frozen=True)
class TransferSystem:
    """Weighted digraph: ``matrix[i][j]`` edges from ``labels[i]`` to ``labels[j]``."""

    labels: tuple[str, ...]
    matrix: tuple[tuple[int, ...], ...]
    start: int = 0

    def __post_init__(self) -> None:
        size = len(self.labels)
        if len(self.matrix) != size or any(len(row) != size for row in self.matrix):
            raise ParameterError("Transfer matrix must be square with one row per label")
        if any(entry < 0 for row in self.matrix for entry in row):
            raise ParameterError("Edge multiplicities must be nonnegative")
        if size and not 0 <= self.start < size:
            raise ParameterError(f"Start vertex {self.start} out of range")

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise ParameterError(f"Unknown vertex label {label!r}") from exc

    def as_array(self) -> np.ndarray:
        return np.array(self.matrix, dtype=object).reshape(self.size, self.size)


# ---------------------------------------------------------------------------
# Determinants over Q[x]
# ---------------------------------------------------------------------------


def _determinant(matrix: Matrix) -> Poly:
    if matrix.rows == 0:
        return Poly.constant(1)
    domain_matrix = DomainMatrix.from_Matrix(matrix)
    value = domain_matrix.domain.to_sympy(domain_matrix.det())
    return Poly(SymPoly(value, X, domain=QQ))


def _identity_minus_xa(system: TransferSystem) -> Matrix:
    size = system.size
    return Matrix(size, size, lambda i, j: int(i == j) - X * system.matrix[i][j])


def characteristic_determinant(system: TransferSystem) -> Poly:
    """det(I - xA); its constant term is always 1."""
    return _determinant(_identity_minus_xa(system))


def walk_gf(
    system: TransferSystem,
    r: int,
    s: int,
    *,
    orientation: MinorOrientation = MinorOrientation.COFACTOR,
) -> RatFun:
    """Generating function (-1)^(r+s) det(I - xA; minor) / det(I - xA) for walks between r and s."""
    if not (0 <= r < system.size and 0 <= s < system.size):
        raise ParameterError(f"Vertex indices ({r}, {s}) out of range for {system.size} vertices")
    matrix = _identity_minus_xa(system)
    if orientation is MinorOrientation.COFACTOR:
        minor = matrix.minor_submatrix(s, r)
    else:
        minor = matrix.minor_submatrix(r, s)
    numerator = _determinant(minor)
    if (r + s) % 2:
        numerator = -numerator
    return RatFun(numerator, _determinant(matrix))


# ---------------------------------------------------------------------------
# Direct walk counting
# ---------------------------------------------------------------------------


def series_of_walks(system: TransferSystem, origin: int, length_max: int) -> list[tuple[int, ...]]:
    """``table[n][j]`` = number of walks of length n from ``origin`` to vertex j."""
    matrix = system.as_array()
    vector = np.zeros(system.size, dtype=object)
    vector[origin] = 1
    table = []
    for _ in range(length_max + 1):
        table.append(tuple(int(v) for v in vector))
        vector = vector.dot(matrix)
    return table


def walks_from_series(system: TransferSystem, origin: int, length_max: int) -> Series:
    """Walks of each length from ``origin`` with any endpoint."""
    return Series.from_counts([sum(row) for row in series_of_walks(system, origin, length_max)])


def closed_walk_series(system: TransferSystem, vertex: int, length_max: int) -> Series:
    return Series.from_counts([row[vertex] for row in series_of_walks(system, vertex, length_max)])


# ---------------------------------------------------------------------------
# Generating trees and named systems
# ---------------------------------------------------------------------------


def tree_to_system(tree: GeneratingTree) -> TransferSystem:
    labels = tree.labels()
    position = {label: i for i, label in enumerate(labels)}
    matrix = []
    for label in labels:
        row = [0] * len(labels)
        for child in tree.rules[label]:
            row[position[child]] += 1
        matrix.append(tuple(row))
    return TransferSystem(tuple(labels), tuple(matrix), start=0)


def level_counts(tree: GeneratingTree, n_max: int) -> Series:
    """Number of tree nodes at each depth 0..n_max, expanding label multiplicities level by level."""
    level: Counter[str] = Counter({tree.root: 1})
    counts = []
    for _ in range(n_max + 1):
        counts.append(sum(level.values()))
        following: Counter[str] = Counter()
        for label, multiplicity in level.items():
            for child in tree.rules[label]:
                following[child] += multiplicity
        level = following
    return Series.from_counts(counts)


def binary_tree() -> GeneratingTree:
    return GeneratingTree("2", {"2": ("2", "2")})


def fibonacci_tree() -> GeneratingTree:
    return GeneratingTree("1", {"1": ("2",), "2": ("1", "2")})


def ak_tree(k: int) -> GeneratingTree:
    """Rules (l) -> (2)...(l)(l+1) for l < k-1 and (k-1) -> (2)...(k-1)(k-1)."""
    if k < 3:
        raise ParameterError(f"A_k is defined for k >= 3, got {k}")
    rules: dict[str, tuple[str, ...]] = {}
    for label in range(2, k):
        children = [str(j) for j in range(2, label + 1)]
        children.append(str(label + 1) if label < k - 1 else str(label))
        rules[str(label)] = tuple(children)
    return GeneratingTree("2", rules)


def build_Ak(k: int) -> TransferSystem:
    """Transfer system on labels 2..k-1 with start vertex "2"."""
    return tree_to_system(ak_tree(k))


def dyck_strip_system(height_cap: int) -> TransferSystem:
    """Path graph on heights 0..height_cap with unit edges between neighbours."""
    if height_cap < 1:
        raise ParameterError(f"Strip height must be at least 1, got {height_cap}")
    size = height_cap + 1
    matrix = tuple(
        tuple(1 if abs(i - j) == 1 else 0 for j in range(size)) for i in range(size)
    )
    return TransferSystem(tuple(str(h) for h in range(size)), matrix, start=0)


# ---------------------------------------------------------------------------
# Rule files
# ---------------------------------------------------------------------------


def parse_rules(text: str) -> GeneratingTree:
    """Parse ``root: 2`` followed by lines ``2 -> 2 3``; ``#`` starts a comment."""
    root: str | None = None
    rules: dict[str, tuple[str, ...]] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("root:"):
            root = line.partition(":")[2].strip()
            continue
        head, arrow, tail = line.partition("->")
        if not arrow or not head.strip():
            raise PatternError(f"Line {number}: expected 'label -> children', got {raw!r}")
        label = head.strip()
        if label in rules:
            raise PatternError(f"Line {number}: duplicate rule for label {label!r}")
        rules[label] = tuple(tail.split())
    if root is None:
        raise PatternError("Rule file has no 'root:' line")
    return GeneratingTree(root, rules)


def format_rules(tree: GeneratingTree) -> str:
    lines = [f"root: {tree.root}"]
    for label in tree.labels():
        lines.append(f"{label} -> {' '.join(tree.rules[label])}".rstrip())
    return "\n".join(lines) + "\n"


def load_rules(path: Path) -> GeneratingTree:
    logger.debug("Loading succession rules from %s", path)
    return parse_rules(path.read_text(encoding="utf-8"))
