"""Exception types raised by the engine.

Each type subclasses a builtin category so callers can catch broadly
(``except ValueError``) or narrowly.
"""


class PatternError(ValueError):
    """A pattern, permutation or literal is malformed or violates a precondition."""


class ParameterError(ValueError):
    """Integer parameters violate the ordering a formula is stated for."""


class UnsupportedPattern(ValueError):
    """No closed form covers the requested pattern."""


class OutOfStatedRange(ValueError):
    """The occurrence count exceeds the range of every applicable formula."""


class TruncationError(ValueError):
    """Truncation orders of series operands are inconsistent."""


class IrreducibleExpression(ArithmeticError):
    """A t-expression with a nonzero t-part was reduced to a rational function."""


class ResourceLimitError(RuntimeError):
    """An exhaustive computation would exceed the configured size cap."""
