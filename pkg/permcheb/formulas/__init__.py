"""Closed-form generating functions and the formula family registry."""

from __future__ import annotations

from collections.abc import Mapping

from permcheb.formulas.base import FormulaFamily, OracleQuery
from permcheb.formulas.catalog import (
    AvoidIdentity,
    AvoidL4Identity,
    AvoidL4TwoLayered,
    AvoidLpIdentity,
    AvoidThreeLayered,
    AvoidTwoLayered,
    AvoidTwoLayered321,
    AvoidWedge,
    ExactlyOnceAvoidIdentity,
    ExactlyOnceAvoidTwoLayered,
    ExactlyOnceBothIdentity,
    ExactlyOnceBothTwoLayeredOne,
    Occurrences321TwoLayeredOne,
    OccurrencesIdentity,
    OccurrencesIdentityExtended,
    OccurrencesIdentityGeneral,
    OccurrencesIdentityUptoK,
    OccurrencesTwoLayeredOne,
    OccurrencesTwoLayeredOnce,
    TripleAvoid,
    TripleOccurrence,
)

_FAMILIES: tuple[type[FormulaFamily], ...] = (
    AvoidIdentity,
    AvoidTwoLayered,
    AvoidTwoLayered321,
    AvoidWedge,
    AvoidThreeLayered,
    OccurrencesIdentity,
    OccurrencesIdentityUptoK,
    OccurrencesIdentityExtended,
    OccurrencesIdentityGeneral,
    OccurrencesTwoLayeredOne,
    OccurrencesTwoLayeredOnce,
    Occurrences321TwoLayeredOne,
    TripleAvoid,
    TripleOccurrence,
    ExactlyOnceAvoidIdentity,
    ExactlyOnceAvoidTwoLayered,
    ExactlyOnceBothIdentity,
    ExactlyOnceBothTwoLayeredOne,
    AvoidL4Identity,
    AvoidLpIdentity,
    AvoidL4TwoLayered,
)

FORMULA_REGISTRY: Mapping[str, type[FormulaFamily]] = {
    family.formula_id: family for family in _FAMILIES
}

__all__ = ["FORMULA_REGISTRY", "FormulaFamily", "OracleQuery"]
