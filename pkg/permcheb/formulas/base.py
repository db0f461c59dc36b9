"""Base abstraction for closed-form formula families."""

from __future__ import annotations

from abc import ABC, abstractmethod
from collections.abc import Mapping
from dataclasses import dataclass
from typing import ClassVar

from permcheb.algebra.exactalg import RatFun, Series
from permcheb.config import Settings
from permcheb.errors import ParameterError
from permcheb.models import ConstraintSet, Permutation, Tier
from permcheb.schemas import FormulaInfo
from permcheb.services.oracle import count_by_occurrences, count_upto


@dataclass(slots=True, frozen=True)
class OracleQuery:
    """What the brute-force oracle must count for one parameter choice.

    With ``tracked`` set, the count is of permutations satisfying
    ``constraint`` with exactly ``r`` occurrences of ``tracked``.
    """

    constraint: ConstraintSet
    tracked: Permutation | None = None
    r: int = 0


class FormulaFamily(ABC):
    """
    A closed-form generating function indexed by integer parameters.

    Each family pairs its formula with the oracle query counting the same
    permutations, so every member can be checked coefficientwise.
    """

    formula_id: ClassVar[str]
    family: ClassVar[str]
    statement: ClassVar[str]
    parameters: ClassVar[tuple[str, ...]]
    ranges: ClassVar[str]
    tier: ClassVar[Tier] = Tier.PROVED

    @abstractmethod
    def evaluate(self, **params: int) -> RatFun:
        """
        Evaluate the closed form.

        Raises:
            ParameterError: If the parameters violate the stated ranges
        """

    @abstractmethod
    def query(self, **params: int) -> OracleQuery:
        """Describe the permutations the closed form counts."""

    @abstractmethod
    def sample_parameters(self) -> list[dict[str, int]]:
        """Small parameter choices used by the verification runner."""

    def check_parameters(self, params: Mapping[str, int]) -> dict[str, int]:
        missing = [name for name in self.parameters if name not in params]
        extra = [name for name in params if name not in self.parameters]
        if missing or extra:
            raise ParameterError(
                f"{self.formula_id} takes parameters {', '.join(self.parameters) or '(none)'}; "
                f"missing {missing}, unexpected {extra}"
            )
        return {name: int(params[name]) for name in self.parameters}

    def oracle_series(
        self,
        params: Mapping[str, int],
        N: int,
        *,
        settings: Settings | None = None,
        unsafe: bool = False,
    ) -> Series:
        query = self.query(**self.check_parameters(params))
        if query.tracked is None:
            return count_upto(query.constraint, N, settings=settings, unsafe=unsafe).series()
        table = count_by_occurrences(
            query.constraint, query.tracked, N, max_r=query.r, settings=settings, unsafe=unsafe
        )
        return table.row(query.r)

    def info(self) -> FormulaInfo:
        return FormulaInfo(
            formula_id=self.formula_id,
            family=self.family,
            parameters=list(self.parameters),
            ranges=self.ranges,
            statement=self.statement,
            tier=self.tier.value,
        )
