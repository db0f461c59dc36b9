"""Concrete formula families, one class per closed-form statement."""

from __future__ import annotations

from permcheb.algebra.exactalg import RatFun
from permcheb.combinatorics.perm_core import PATTERN_132, Lp_set
from permcheb.formulas.avoidance import F_pair, F_triple, three_layered
from permcheb.formulas.base import FormulaFamily, OracleQuery
from permcheb.formulas.lp import F_L4_identity, F_L4_two_layered, F_Lp
from permcheb.formulas.occurrences import (
    G_exact,
    G_triple,
    identity_extended,
    identity_general,
    identity_upto_k,
    two_layered_one,
    two_layered_once,
)
from permcheb.formulas.single132 import H_identity, H_two_layered, Phi_identity, Phi_two_layered_one
from permcheb.models import (
    ConstraintSet,
    Identity,
    Layered,
    PatternSpec,
    Permutation,
    Quantifier,
    TwoLayered,
    Wedge,
)

BASE_321 = Permutation((3, 2, 1))


def _avoid_132(*patterns: PatternSpec | Permutation) -> ConstraintSet:
    return ConstraintSet.avoiding([PATTERN_132, *patterns])


def _two_layered_samples(k_max: int, k_min: int = 2) -> list[dict[str, int]]:
    return [{"k": k, "m": m} for k in range(k_min, k_max + 1) for m in range(1, k)]


# ---------------------------------------------------------------------------
# Avoiding 132 or 321 and one more pattern
# ---------------------------------------------------------------------------


class AvoidIdentity(FormulaFamily):
    formula_id = "avoid-132-identity"
    family = "avoidance"
    statement = "S_n(132, [k]) is counted by R_k"
    parameters = ("k",)
    ranges = "k >= 1"

    def evaluate(self, *, k: int) -> RatFun:
        return F_pair("132", Identity(k))

    def query(self, *, k: int) -> OracleQuery:
        return OracleQuery(_avoid_132(Identity(k).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k} for k in range(2, 6)]


class AvoidTwoLayered(FormulaFamily):
    formula_id = "avoid-132-two-layered"
    family = "avoidance"
    statement = "S_n(132, [k,m]) is counted by R_k"
    parameters = ("k", "m")
    ranges = "1 <= m <= k-1"

    def evaluate(self, *, k: int, m: int) -> RatFun:
        return F_pair("132", TwoLayered(k, m))

    def query(self, *, k: int, m: int) -> OracleQuery:
        return OracleQuery(_avoid_132(TwoLayered(k, m).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return _two_layered_samples(6)


class AvoidTwoLayered321(FormulaFamily):
    formula_id = "avoid-321-two-layered"
    family = "avoidance"
    statement = "S_n(321, [k,m]) is counted by R_k"
    parameters = ("k", "m")
    ranges = "k >= 2, 1 <= m <= k-1"

    def evaluate(self, *, k: int, m: int) -> RatFun:
        return F_pair("321", TwoLayered(k, m))

    def query(self, *, k: int, m: int) -> OracleQuery:
        return OracleQuery(ConstraintSet.avoiding([BASE_321, TwoLayered(k, m)]))

    def sample_parameters(self) -> list[dict[str, int]]:
        return _two_layered_samples(6)


class AvoidWedge(FormulaFamily):
    formula_id = "avoid-132-wedge"
    family = "avoidance"
    statement = "S_n(132, tau) is counted by R_k for a wedge tau = (tau1, rho1, tau2, rho2) of length k"
    parameters = ("tau1", "rho1", "tau2", "rho2")
    ranges = "tau1, tau2 >= 1; rho1, rho2 >= 0"

    @staticmethod
    def _wedge(tau1: int, rho1: int, tau2: int, rho2: int) -> Wedge:
        return Wedge((tau1, tau2), (rho1, rho2))

    def evaluate(self, *, tau1: int, rho1: int, tau2: int, rho2: int) -> RatFun:
        return F_pair("132", self._wedge(tau1, rho1, tau2, rho2))

    def query(self, *, tau1: int, rho1: int, tau2: int, rho2: int) -> OracleQuery:
        return OracleQuery(_avoid_132(self._wedge(tau1, rho1, tau2, rho2).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [
            {"tau1": 1, "rho1": 1, "tau2": 1, "rho2": 0},
            {"tau1": 1, "rho1": 1, "tau2": 1, "rho2": 1},
            {"tau1": 2, "rho1": 1, "tau2": 1, "rho2": 1},
            {"tau1": 1, "rho1": 2, "tau2": 1, "rho2": 1},
        ]


class AvoidThreeLayered(FormulaFamily):
    formula_id = "avoid-132-three-layered"
    family = "avoidance"
    statement = "S_n(132, [k,m1,m2]) via a = k-m1, b = m1-m2, c = m2"
    parameters = ("k", "m1", "m2")
    ranges = "k > m1 > m2 > 0"

    def evaluate(self, *, k: int, m1: int, m2: int) -> RatFun:
        return three_layered(k, m1, m2)

    def query(self, *, k: int, m1: int, m2: int) -> OracleQuery:
        return OracleQuery(_avoid_132(Layered((k, m1, m2)).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [
            {"k": k, "m1": m1, "m2": m2}
            for k in range(3, 6)
            for m1 in range(2, k)
            for m2 in range(1, m1)
        ]


# ---------------------------------------------------------------------------
# 132-avoiders with exactly r occurrences
# ---------------------------------------------------------------------------


class _OccurrenceFamily(FormulaFamily):
    family = "occurrences"

    @staticmethod
    def _tracked(tracked: Permutation, r: int, base: Permutation = PATTERN_132) -> OracleQuery:
        return OracleQuery(ConstraintSet.avoiding([base]), tracked, r)


class OccurrencesIdentity(_OccurrenceFamily):
    formula_id = "occurrences-132-identity"
    statement = "132-avoiders with exactly r occurrences of [k] (dispatching by the range of r)"
    parameters = ("k", "r")
    ranges = "k >= 1, r >= 1 (k >= 2 beyond r <= k(k+3)/2)"

    def evaluate(self, *, k: int, r: int) -> RatFun:
        return G_exact("132", Identity(k), r)

    def query(self, *, k: int, r: int) -> OracleQuery:
        return self._tracked(Identity(k).materialize(), r)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k, "r": r} for k in range(1, 5) for r in range(1, 5) if k > 1 or r <= 2]


class OccurrencesIdentityUptoK(OccurrencesIdentity):
    formula_id = "occurrences-132-identity-upto-k"
    statement = "132-avoiders with exactly r occurrences of [k], r <= k"
    ranges = "1 <= r <= k"

    def evaluate(self, *, k: int, r: int) -> RatFun:
        return identity_upto_k(k, r)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k, "r": r} for k in range(1, 5) for r in range(1, k + 1)]


class OccurrencesIdentityExtended(OccurrencesIdentity):
    formula_id = "occurrences-132-identity-extended"
    statement = "132-avoiders with exactly r occurrences of [k], r <= k(k+3)/2"
    ranges = "1 <= r <= k(k+3)/2"

    def evaluate(self, *, k: int, r: int) -> RatFun:
        return identity_extended(k, r)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k, "r": r} for k in range(1, 4) for r in range(1, 5) if 2 * r <= k * (k + 3)]


class OccurrencesIdentityGeneral(OccurrencesIdentity):
    formula_id = "occurrences-132-identity-general"
    statement = "132-avoiders with exactly r occurrences of [k], any r, as a sum over weighted sequences"
    ranges = "k >= 2, r >= 1"

    def evaluate(self, *, k: int, r: int) -> RatFun:
        return identity_general(k, r)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k, "r": r} for k in range(2, 5) for r in range(1, 6)]


class OccurrencesTwoLayeredOne(_OccurrenceFamily):
    formula_id = "occurrences-132-two-layered-one"
    statement = "132-avoiders with exactly r occurrences of [k,1], as a divisor sum"
    parameters = ("k", "r")
    ranges = "k >= 2, 1 <= r <= k-1"

    def evaluate(self, *, k: int, r: int) -> RatFun:
        return two_layered_one(k, r)

    def query(self, *, k: int, r: int) -> OracleQuery:
        return self._tracked(TwoLayered(k, 1).materialize(), r)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k, "r": r} for k in range(2, 6) for r in range(1, min(k - 1, 2) + 1)]


class OccurrencesTwoLayeredOnce(_OccurrenceFamily):
    formula_id = "occurrences-132-two-layered-once"
    statement = "132-avoiders with exactly one occurrence of [k,m]"
    parameters = ("k", "m")
    ranges = "k > m > 0 (m > k/2 through the inverse [k,k-m])"

    def evaluate(self, *, k: int, m: int) -> RatFun:
        return two_layered_once(k, m)

    def query(self, *, k: int, m: int) -> OracleQuery:
        return self._tracked(TwoLayered(k, m).materialize(), 1)

    def sample_parameters(self) -> list[dict[str, int]]:
        return _two_layered_samples(5)


class Occurrences321TwoLayeredOne(_OccurrenceFamily):
    formula_id = "occurrences-321-two-layered-one"
    family = "restricted321"
    statement = "321-avoiders with exactly r occurrences of [k,1]"
    parameters = ("k", "r")
    ranges = "k >= 3, 1 <= r <= k-1"

    def evaluate(self, *, k: int, r: int) -> RatFun:
        return G_exact("321", TwoLayered(k, 1), r)

    def query(self, *, k: int, r: int) -> OracleQuery:
        return self._tracked(TwoLayered(k, 1).materialize(), r, BASE_321)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k, "r": r} for k in range(3, 5) for r in range(1, k)]


# ---------------------------------------------------------------------------
# Triple restrictions
# ---------------------------------------------------------------------------


class TripleAvoid(FormulaFamily):
    formula_id = "triple-avoid"
    family = "triple"
    statement = "S_n(132, [k,m], [l])"
    parameters = ("k", "m", "l")
    ranges = "k-m >= m >= 1, l >= 1 (l <= k-m reduces to [l])"

    def evaluate(self, *, k: int, m: int, l: int) -> RatFun:
        return F_triple(k, m, l)

    def query(self, *, k: int, m: int, l: int) -> OracleQuery:
        layered = TwoLayered(k, m).materialize()
        identity = Identity(l).materialize()
        return OracleQuery(_avoid_132(layered, identity))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [
            {"k": 4, "m": 1, "l": 4},
            {"k": 5, "m": 2, "l": 4},
            {"k": 4, "m": 2, "l": 3},
            {"k": 5, "m": 1, "l": 5},
        ]


class TripleOccurrence(FormulaFamily):
    formula_id = "triple-occurrence"
    family = "triple"
    statement = "132- and [k,m]-avoiders containing [l] exactly once"
    parameters = ("k", "m", "l")
    ranges = "k-m >= m >= 1, l >= 1"

    def evaluate(self, *, k: int, m: int, l: int) -> RatFun:
        return G_triple(k, m, l)

    def query(self, *, k: int, m: int, l: int) -> OracleQuery:
        return OracleQuery(_avoid_132(TwoLayered(k, m).materialize()), Identity(l).materialize(), 1)

    def sample_parameters(self) -> list[dict[str, int]]:
        return [
            {"k": 4, "m": 1, "l": 3},
            {"k": 4, "m": 1, "l": 4},
            {"k": 5, "m": 2, "l": 2},
            {"k": 5, "m": 1, "l": 3},
            {"k": 4, "m": 2, "l": 3},
        ]


# ---------------------------------------------------------------------------
# Exactly one 132
# ---------------------------------------------------------------------------


def _exactly_once_132() -> ConstraintSet:
    return ConstraintSet.of((PATTERN_132, Quantifier.exactly(1)))


class ExactlyOnceAvoidIdentity(FormulaFamily):
    formula_id = "single132-avoid-identity"
    family = "single132"
    statement = "Permutations with exactly one 132 avoiding [k]"
    parameters = ("k",)
    ranges = "k >= 3"

    def evaluate(self, *, k: int) -> RatFun:
        return H_identity(k)

    def query(self, *, k: int) -> OracleQuery:
        return OracleQuery(_exactly_once_132().with_item(Identity(k), Quantifier.avoid()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k} for k in range(3, 6)]


class ExactlyOnceAvoidTwoLayered(FormulaFamily):
    formula_id = "single132-avoid-two-layered"
    family = "single132"
    statement = "Permutations with exactly one 132 avoiding [k,m] (reflected by m -> k-m)"
    parameters = ("k", "m")
    ranges = "k >= 3, 1 <= m <= k-1"

    def evaluate(self, *, k: int, m: int) -> RatFun:
        return H_two_layered(k, m)

    def query(self, *, k: int, m: int) -> OracleQuery:
        return OracleQuery(_exactly_once_132().with_item(TwoLayered(k, m), Quantifier.avoid()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return _two_layered_samples(5, k_min=3)


class ExactlyOnceBothIdentity(FormulaFamily):
    formula_id = "single132-once-identity"
    family = "single132"
    statement = "Permutations containing both 132 and [k] exactly once"
    parameters = ("k",)
    ranges = "k >= 1"

    def evaluate(self, *, k: int) -> RatFun:
        return Phi_identity(k)

    def query(self, *, k: int) -> OracleQuery:
        return OracleQuery(_exactly_once_132().with_item(Identity(k), Quantifier.exactly(1)))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k} for k in range(2, 6)]


class ExactlyOnceBothTwoLayeredOne(FormulaFamily):
    formula_id = "single132-once-two-layered-one"
    family = "single132"
    statement = "Permutations containing both 132 and [k,1] exactly once"
    parameters = ("k",)
    ranges = "k >= 4"

    def evaluate(self, *, k: int) -> RatFun:
        return Phi_two_layered_one(k)

    def query(self, *, k: int) -> OracleQuery:
        return OracleQuery(_exactly_once_132().with_item(TwoLayered(k, 1), Quantifier.exactly(1)))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": 4}, {"k": 5}]


# ---------------------------------------------------------------------------
# L_p
# ---------------------------------------------------------------------------


def _avoid_lp(p: int, *patterns: Permutation) -> ConstraintSet:
    return ConstraintSet.avoiding([*sorted(Lp_set(p)), *patterns])


class AvoidL4Identity(FormulaFamily):
    formula_id = "lp-four-identity"
    family = "lp"
    statement = "S_n(L_4, [k]) = 1 + x + x^2 R_k R_{k-1} (R_{k-1} + R_{k-2})"
    parameters = ("k",)
    ranges = "k >= 2"

    def evaluate(self, *, k: int) -> RatFun:
        return F_L4_identity(k)

    def query(self, *, k: int) -> OracleQuery:
        return OracleQuery(_avoid_lp(4, Identity(k).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"k": k} for k in range(2, 6)]


class AvoidLpIdentity(FormulaFamily):
    formula_id = "lp-identity"
    family = "lp"
    statement = "S_n(L_p, [k]) through the a-sequence counts N(a)"
    parameters = ("p", "k")
    ranges = "p >= 4, k >= p-2"

    def evaluate(self, *, p: int, k: int) -> RatFun:
        return F_Lp(p, k)

    def query(self, *, p: int, k: int) -> OracleQuery:
        return OracleQuery(_avoid_lp(p, Identity(k).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return [{"p": 4, "k": k} for k in range(2, 6)] + [{"p": 5, "k": 3}, {"p": 5, "k": 4}]


class AvoidL4TwoLayered(FormulaFamily):
    formula_id = "lp-four-two-layered"
    family = "lp"
    statement = "S_n(L_4, [k,m]); m = k-1 coincides with [k]"
    parameters = ("k", "m")
    ranges = "1 <= m <= k-1"

    def evaluate(self, *, k: int, m: int) -> RatFun:
        return F_L4_two_layered(k, m)

    def query(self, *, k: int, m: int) -> OracleQuery:
        return OracleQuery(_avoid_lp(4, TwoLayered(k, m).materialize()))

    def sample_parameters(self) -> list[dict[str, int]]:
        return _two_layered_samples(5, k_min=3)
