"""Verification runner: every closed form checked coefficientwise against the oracle.

Checks are independent; the runner schedules them on worker threads under
a semaphore (``verify_workers``) and sorts the reports by ``check_id`` so the
output does not depend on execution order.
"""

from __future__ import annotations

import asyncio
import logging
import time
from collections import Counter
from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from itertools import combinations

from permcheb.algebra.cheb import R
from permcheb.algebra.exactalg import Poly, RatFun, Series, catalan, series_of
from permcheb.combinatorics.blockrec import (
    BlockKind,
    F_recursive,
    classify_exactly_once,
    decompose_132_avoider,
    l4_decompose,
)
from permcheb.combinatorics.cfrac import CFSpec, approximant, cf_biseries, rwz_triseries
from permcheb.combinatorics.dyck import max_height, phi, phi_inverse
from permcheb.combinatorics.perm_core import PATTERN_132, Lp_set, is_wedge, lis_length
from permcheb.combinatorics.transfer import (
    TransferSystem,
    binary_tree,
    build_Ak,
    closed_walk_series,
    dyck_strip_system,
    fibonacci_tree,
    level_counts,
    series_of_walks,
    tree_to_system,
    walk_gf,
    walks_from_series,
)
from permcheb.config import Settings, get_settings
from permcheb.constants import VERIFY_SCOPES
from permcheb.errors import ParameterError, ResourceLimitError
from permcheb.formulas import FORMULA_REGISTRY, FormulaFamily
from permcheb.formulas.avoidance import F_triple, F_triple_recursive
from permcheb.formulas.lp import F_L4_identity, F_L4_two_layered, F_Lp
from permcheb.formulas.occurrences import G_exact, G_exact_all
from permcheb.formulas.restricted321 import check_A_identity
from permcheb.formulas.single132 import H, H_recursive, Phi, Phi_recursive
from permcheb.models import (
    CheckStatus,
    ConstraintSet,
    Identity,
    PatternSpec,
    Permutation,
    Quantifier,
    Tier,
    TwoLayered,
    Wedge,
)
from permcheb.schemas import CheckReport, Mismatch, VerificationSummary
from permcheb.services.oracle import count_by_occurrences, count_upto, list_matching

logger = logging.getLogger(__name__)

BASE_321 = Permutation((3, 2, 1))
WALK_LENGTH = 20
A_IDENTITY_ORDER = 10
A_IDENTITY_CASES = ((2, 1), (3, 1), (3, 2), (4, 2))


@dataclass(slots=True, frozen=True)
class Outcome:
    status: CheckStatus
    first_mismatch: Mismatch | None = None
    detail: str | None = None

    @classmethod
    def passed(cls, detail: str | None = None) -> Outcome:
        return cls(CheckStatus.PASSED, detail=detail)

    @classmethod
    def failed(cls, detail: str, mismatch: Mismatch | None = None) -> Outcome:
        return cls(CheckStatus.FAILED, mismatch, detail)


@dataclass(slots=True, frozen=True)
class Check:
    """A named, self-contained comparison."""

    check_id: str
    scope: str
    theorem: str
    run: Callable[[], Outcome]
    params: Mapping[str, int] = field(default_factory=dict)
    tier: Tier = Tier.PROVED


def compare_series(expected: Series, actual: Series, *, label: str = "series") -> Outcome:
    """Coefficientwise comparison up to the common order, reporting the first mismatch."""
    first = expected.first_difference(actual)
    if first is None:
        return Outcome.passed()
    mismatch = Mismatch(n=first, expected=str(expected[first]), actual=str(actual[first]))
    return Outcome.failed(f"{label} differs at x^{first}", mismatch)


def compare_ratfun(expected: RatFun, actual: RatFun, *, label: str) -> Outcome:
    if expected == actual:
        return Outcome.passed()
    return Outcome.failed(f"{label}: {expected.render()} != {actual.render()}")


def _all_passed(outcomes: Iterator[Outcome]) -> Outcome:
    for outcome in outcomes:
        if outcome.status is not CheckStatus.PASSED:
            return outcome
    return Outcome.passed()


def _param_text(params: Mapping[str, int]) -> str:
    return ",".join(f"{name}={value}" for name, value in params.items())


# ---------------------------------------------------------------------------
# Check builders per scope
# ---------------------------------------------------------------------------


class CheckBuilder:
    """Builds the checks of every scope for one order N."""

    def __init__(self, N: int, *, settings: Settings | None = None, unsafe: bool = False) -> None:
        if N < 1:
            raise ParameterError(f"Verification order must be positive, got {N}")
        self._N = N
        self._settings = settings or get_settings()
        self._unsafe = unsafe

    @property
    def list_order(self) -> int:
        return min(self._N, self._settings.max_list_n)

    # -- catalog ---------------------------------------------------------

    def catalog_check(self, family: FormulaFamily, params: Mapping[str, int]) -> Check:
        N = self._N

        def run() -> Outcome:
            expected = series_of(family.evaluate(**family.check_parameters(params)), N)
            actual = family.oracle_series(params, N, settings=self._settings, unsafe=self._unsafe)
            return compare_series(expected, actual, label=f"{family.formula_id} vs oracle")

        return Check(
            check_id=f"{family.formula_id}[{_param_text(params)}]",
            scope=family.family,
            theorem=family.statement,
            run=run,
            params=dict(params),
            tier=family.tier,
        )

    def catalog_checks(self) -> Iterator[Check]:
        for family_type in FORMULA_REGISTRY.values():
            family = family_type()
            for params in family.sample_parameters():
                yield self.catalog_check(family, params)

    # -- chebyshev ---------------------------------------------------------

    def chebyshev_checks(self) -> Iterator[Check]:
        x = RatFun.x()

        def ladder() -> Outcome:
            base = (
                (1, RatFun.constant(1)),
                (2, 1 / (1 - x)),
                (3, RatFun(Poly((1, -1)), Poly((1, -2)))),
            )
            for k, literal in base:
                outcome = compare_ratfun(literal, R(k), label=f"R_{k}")
                if outcome.status is not CheckStatus.PASSED:
                    return outcome
            return _all_passed(
                compare_ratfun(1 / (1 - x * R(k - 1)), R(k), label=f"R_{k} ladder")
                for k in range(2, 13)
            )

        def approximants() -> Outcome:
            return _all_passed(
                compare_ratfun(approximant(k), R(k), label=f"depth-{k} approximant")
                for k in range(1, 13)
            )

        yield Check("chebyshev-ladder", "chebyshev", "R_k = 1/(1 - x R_{k-1}) with R_1 = 1", ladder)
        yield Check(
            "chebyshev-approximants",
            "chebyshev",
            "Catalan continued fraction truncated at depth k equals R_k",
            approximants,
        )

    # -- avoidance ---------------------------------------------------------

    def avoidance_checks(self) -> Iterator[Check]:
        def wedge_block_form() -> Outcome:
            wedges = [
                Wedge((1, 1), (1, 0)),
                Wedge((2, 1), (1, 1)),
                Wedge((1, 1, 1), (2, 1, 1)),
                Wedge((2, 3), (3, 1)),
            ]
            return _all_passed(
                compare_ratfun(R(len(w.materialize())), F_recursive(w.materialize()), label=str(w))
                for w in wedges
            )

        yield Check(
            "avoid-132-wedge-recursion",
            "avoidance",
            "wedge patterns avoid like [k] under the block recursion",
            wedge_block_form,
        )

    # -- occurrences -------------------------------------------------------

    def occurrence_checks(self) -> Iterator[Check]:
        cases: list[tuple[str, PatternSpec, int]] = []
        cases += [("132", Identity(k), r) for k in range(1, 6) for r in range(1, k + 1)]
        cases += [("132", TwoLayered(k, 1), r) for k in range(2, 8) for r in range(1, 3) if r <= k - 1]
        cases += [("132", TwoLayered(k, m), 1) for k in range(2, 7) for m in range(2, k)]

        for base, tau, r in cases:

            def overlap(base: str = base, tau: PatternSpec = tau, r: int = r) -> Outcome:
                values = G_exact_all(base, tau, r)
                for (left, a), (right, b) in combinations(values.items(), 2):
                    outcome = compare_ratfun(a, b, label=f"{left} vs {right}")
                    if outcome.status is not CheckStatus.PASSED:
                        return outcome
                return Outcome.passed(f"{len(values)} statements agree")

            yield Check(
                f"occurrences-overlap[{base};{tau};r={r}]",
                "occurrences",
                "overlapping occurrence statements agree as rational functions",
                overlap,
            )

    # -- exactly one 132 ---------------------------------------------------

    def single132_checks(self) -> Iterator[Check]:
        x = RatFun.x()
        quadratic = 1 - 3 * x + x**2

        def literals() -> Outcome:
            expected = (
                (TwoLayered(3, 1), x**3 / (1 - 2 * x)),
                (TwoLayered(4, 2), x**3 * (1 + x) / ((1 - x) * quadratic)),
            )
            for tau, value in expected:
                outcome = compare_ratfun(value, H(tau), label=f"H {tau}")
                if outcome.status is not CheckStatus.PASSED:
                    return outcome
            phi3 = Phi(Identity(3))
            outcome = compare_ratfun(2 * x**5 / (1 - 2 * x) ** 3, phi3, label="Phi [3]")
            if outcome.status is not CheckStatus.PASSED:
                return outcome
            # x^n coefficient (n-3)(n-4)2^(n-5) from n = 5 on
            counts = [0] * 5 + [(n - 3) * (n - 4) * 2 ** (n - 5) for n in range(5, 13)]
            return compare_series(Series.from_counts(counts), series_of(phi3, 12), label="Phi [3]")

        yield Check(
            "single132-literals",
            "single132",
            "small exactly-one-132 generating functions in closed form",
            literals,
        )

        patterns: list[PatternSpec] = [Identity(k) for k in range(3, 7)]
        patterns += [TwoLayered(k, m) for k in range(4, 8) for m in range(1, k) if min(m, k - m) == 1]
        patterns += [TwoLayered(k, m) for k in range(5, 8) for m in range(2, k - 1) if min(m, k - m) == 2]
        patterns += [TwoLayered(6, 3), TwoLayered(7, 3)]
        for tau in patterns:

            def recursion(tau: PatternSpec = tau) -> Outcome:
                return compare_ratfun(H(tau), H_recursive(tau), label=f"H {tau}")

            yield Check(
                f"single132-recursion[{tau}]",
                "single132",
                "exactly-one-132 closed form solves its block recursion",
                recursion,
            )

        def phi_recursion() -> Outcome:
            return _all_passed(
                compare_ratfun(Phi(Identity(k)), Phi_recursive(k), label=f"Phi [{k}]")
                for k in range(2, 8)
            )

        yield Check(
            "single132-phi-recursion",
            "single132",
            "both-exactly-once closed form solves its block recursion",
            phi_recursion,
        )

        # the m >= 3 statement has no small-k literal to anchor it
        family = FORMULA_REGISTRY["single132-avoid-two-layered"]()
        yield self.catalog_check(family, {"k": 6, "m": 3})

    # -- triple ------------------------------------------------------------

    def triple_checks(self) -> Iterator[Check]:
        cases = [(4, 1, 4), (4, 1, 6), (5, 1, 5), (5, 2, 4), (6, 2, 5), (6, 3, 5)]

        def recursion() -> Outcome:
            return _all_passed(
                compare_ratfun(F_triple(k, m, l), F_triple_recursive(k, m, l), label=f"({k},{m},{l})")
                for k, m, l in cases
            )

        yield Check(
            "triple-recursion",
            "triple",
            "triple-avoidance closed form solves the split-at-maximum recursion",
            recursion,
        )

    # -- L_p ---------------------------------------------------------------

    def lp_checks(self) -> Iterator[Check]:
        def l4_members() -> Outcome:
            expected = {
                Permutation(values)
                for values in ((1, 3, 2, 4), (1, 4, 2, 3), (3, 1, 4, 2), (4, 1, 3, 2), (1, 3, 4, 2), (1, 4, 3, 2))
            }
            found = Lp_set(4)
            if found == expected:
                return Outcome.passed()
            return Outcome.failed(f"L_4 = {sorted(str(p) for p in found)}")

        def four_vs_general() -> Outcome:
            return _all_passed(
                compare_ratfun(F_L4_identity(k), F_Lp(4, k), label=f"k={k}") for k in range(2, 9)
            )

        def literal_reading() -> Outcome:
            return _all_passed(
                compare_ratfun(F_Lp(4, k), F_Lp(4, k, literal=True), label=f"k={k}") for k in range(2, 9)
            )

        def two_layered_top() -> Outcome:
            return _all_passed(
                compare_ratfun(F_L4_identity(k), F_L4_two_layered(k, k - 1), label=f"k={k}")
                for k in range(2, 9)
            )

        yield Check("lp-four-members", "lp", "L_4 consists of six patterns", l4_members)
        yield Check("lp-four-general", "lp", "general L_p formula at p = 4", four_vs_general)
        yield Check("lp-four-literal-reading", "lp", "both a-sequence readings agree at p = 4", literal_reading)
        yield Check("lp-four-two-layered-top", "lp", "[k,k-1] under L_4 coincides with [k]", two_layered_top)
        for k in range(3, 6):
            yield Check(
                f"lp-four-block-forms[k={k}]",
                "lp",
                "L_4 block forms split the count by the order of n-1 and n",
                lambda k=k: self._l4_block_forms(k),
                params={"k": k},
            )

    def _l4_block_forms(self, k: int) -> Outcome:
        x = RatFun.x()
        order = self.list_order
        increasing = series_of(x**2 * R(k) * R(k - 1) * R(k - 2), order)
        decreasing = series_of(x**2 * R(k) * R(k - 1) ** 2, order)
        cs = ConstraintSet.avoiding([*sorted(Lp_set(4)), Identity(k).materialize()])
        tally: dict[BlockKind, list[int]] = {
            BlockKind.L4_A: [0] * (order + 1),
            BlockKind.L4_B: [0] * (order + 1),
        }
        for n in range(2, order + 1):
            kinds = Counter(
                l4_decompose(alpha).kind
                for alpha in list_matching(cs, n, settings=self._settings, unsafe=self._unsafe)
            )
            for kind, count in kinds.items():
                tally[kind][n] = count
        return _all_passed(
            iter(
                (
                    compare_series(increasing, Series.from_counts(tally[BlockKind.L4_A]), label="n-1 before n"),
                    compare_series(decreasing, Series.from_counts(tally[BlockKind.L4_B]), label="n before n-1"),
                )
            )
        )

    # -- transfer ----------------------------------------------------------

    def _systems(self) -> list[tuple[str, TransferSystem]]:
        systems = [
            ("binary", tree_to_system(binary_tree())),
            ("fibonacci", tree_to_system(fibonacci_tree())),
        ]
        systems += [(f"A_{k}", build_Ak(k)) for k in range(3, 7)]
        systems += [(f"strip_{h}", dyck_strip_system(h)) for h in range(1, 5)]
        return systems

    def transfer_checks(self) -> Iterator[Check]:
        for name, system in self._systems():

            def calibration(system: TransferSystem = system) -> Outcome:
                table = series_of_walks(system, system.start, WALK_LENGTH)
                return _all_passed(
                    compare_series(
                        Series.from_counts([row[s] for row in table]),
                        series_of(walk_gf(system, system.start, s), WALK_LENGTH),
                        label=f"walks to {system.labels[s]}",
                    )
                    for s in range(system.size)
                )

            yield Check(
                f"transfer-calibration[{name}]",
                "transfer",
                "determinant ratio expands to the matrix-power walk counts",
                calibration,
            )

        def fibonacci_levels() -> Outcome:
            return compare_series(
                Series.from_counts([1, 1, 2, 3, 5, 8, 13]),
                level_counts(fibonacci_tree(), 6),
                label="Fibonacci levels",
            )

        yield Check("transfer-fibonacci-levels", "transfer", "Fibonacci tree levels", fibonacci_levels)

        for k in range(3, 7):
            yield Check(
                f"transfer-ak[k={k}]",
                "transfer",
                "walks from vertex 2 of A_k count S_n(123, (k-1)...21k)",
                lambda k=k: self._ak_walks(k),
                params={"k": k},
            )
            yield Check(
                f"transfer-strip[k={k}]",
                "transfer",
                "Dyck paths in the strip of height k-1 count S_n(132, [k])",
                lambda k=k: self._strip_walks(k),
                params={"k": k},
            )

    def _ak_walks(self, k: int) -> Outcome:
        N = self._N
        pattern = Permutation(tuple(range(k - 1, 0, -1)) + (k,))
        cs = ConstraintSet.avoiding([Identity(3).materialize(), pattern])
        oracle = Series.from_counts(count_upto(cs, N, settings=self._settings, unsafe=self._unsafe).counts[1:])
        system = build_Ak(k)
        outcomes = [compare_series(oracle, walks_from_series(system, 0, N - 1), label="walks of length n-1")]
        if k >= 4:
            # every vertex reaches vertex 2 by exactly one edge
            closed = closed_walk_series(system, 0, N)
            outcomes.append(compare_series(oracle, Series(closed.coeffs[1:]), label="closed walks of length n"))
        return _all_passed(iter(outcomes))

    def _strip_walks(self, k: int) -> Outcome:
        N = self._N
        cs = ConstraintSet.avoiding([PATTERN_132, Identity(k).materialize()])
        oracle = count_upto(cs, N, settings=self._settings, unsafe=self._unsafe).counts
        walks = closed_walk_series(dyck_strip_system(k - 1), 0, 2 * N)
        even = Series(tuple(walks[2 * n] for n in range(N + 1)))
        return compare_series(Series.from_counts(oracle), even, label="strip walks")

    # -- cfrac -------------------------------------------------------------

    def cfrac_checks(self) -> Iterator[Check]:
        for k in range(2, 5):
            yield Check(
                f"cfrac-rows[k={k}]",
                "cfrac",
                "z-refined continued fraction rows count occurrences of [k]",
                lambda k=k: self._cf_rows(k),
                params={"k": k},
            )
        yield Check(
            "cfrac-trivariate",
            "cfrac",
            "the trivariate equation specializes to the [3] fraction and to Catalan",
            self._rwz,
        )

    def _cf_rows(self, k: int, r_max: int = 3) -> Outcome:
        N = self._N
        series = cf_biseries(CFSpec.of(k, N, r_max))
        table = count_by_occurrences(
            ConstraintSet.avoiding([PATTERN_132]),
            Identity(k).materialize(),
            N,
            max_r=r_max,
            settings=self._settings,
            unsafe=self._unsafe,
        )
        outcomes = [compare_series(series_of(R(k), N), series.row(0), label="z^0 row")]
        for r in range(1, r_max + 1):
            outcomes.append(compare_series(table.row(r), series.row(r), label=f"z^{r} row vs oracle"))
            outcomes.append(
                compare_series(series_of(G_exact("132", Identity(k), r), N), series.row(r), label=f"z^{r} row vs G")
            )
        return _all_passed(iter(outcomes))

    def _rwz(self) -> Outcome:
        N = min(self._N, 9)
        triseries = rwz_triseries(N)
        z_order = triseries.z_order
        y_one = triseries.specialize_y_one(z_order)
        fraction = cf_biseries(CFSpec.of(3, N, z_order))
        if y_one != fraction:
            return Outcome.failed("y = 1 specialization differs from the [3] continued fraction")
        return compare_series(
            Series.from_counts([catalan(n) for n in range(N + 1)]),
            triseries.specialize_y_z_one(),
            label="y = z = 1",
        )

    # -- dyck --------------------------------------------------------------

    def dyck_checks(self) -> Iterator[Check]:
        yield Check("dyck-roundtrip", "dyck", "the path bijection inverts on 132-avoiders", self._dyck_roundtrip)
        yield Check("dyck-height-law", "dyck", "maximal path height equals the longest increasing run", self._height_law)

        def worked_example() -> Outcome:
            path = phi(Permutation((5, 3, 4, 2, 6, 1)))
            if max_height(path) != 3 or not path.steps.startswith("UUDUUD"):
                return Outcome.failed(f"534261 maps to {path.steps}")
            return Outcome.passed(path.steps)

        yield Check("dyck-worked-example", "dyck", "534261 maps to a path of height 3", worked_example)

    def _avoiders(self) -> Iterator[Permutation]:
        cs = ConstraintSet.avoiding([PATTERN_132])
        for n in range(self.list_order + 1):
            yield from list_matching(cs, n, settings=self._settings, unsafe=self._unsafe)

    def _dyck_roundtrip(self) -> Outcome:
        seen: set[str] = set()
        for pi in self._avoiders():
            path = phi(pi)
            if phi_inverse(path) != pi:
                return Outcome.failed(f"{pi} -> {path.steps} does not invert")
            seen.add(path.steps)
        expected = sum(catalan(n) for n in range(self.list_order + 1))
        if len(seen) != expected:
            return Outcome.failed(f"{len(seen)} distinct paths, expected {expected}")
        return Outcome.passed()

    def _height_law(self) -> Outcome:
        for pi in self._avoiders():
            if max_height(phi(pi)) != lis_length(pi.values):
                return Outcome.failed(f"height of {pi} differs from its longest increasing run")
        return Outcome.passed()

    # -- block recursion ---------------------------------------------------

    def blockrec_checks(self) -> Iterator[Check]:
        cs = ConstraintSet.avoiding([PATTERN_132])
        for tau in list_matching(cs, 4, settings=self._settings):

            def against_oracle(tau: Permutation = tau) -> Outcome:
                oracle = count_upto(
                    ConstraintSet.avoiding([PATTERN_132, tau]),
                    self._N,
                    settings=self._settings,
                    unsafe=self._unsafe,
                )
                return compare_series(series_of(F_recursive(tau), self._N), oracle.series(), label=str(tau))

            yield Check(
                f"blockrec-oracle[{tau}]",
                "blockrec",
                "prefix/suffix recursion counts S_n(132, tau)",
                against_oracle,
            )

        yield Check("blockrec-wedges", "blockrec", "every wedge avoids like [k]", self._wedges)
        yield Check(
            "blockrec-decompositions",
            "blockrec",
            "block decompositions reassemble the permutation",
            self._reassemble,
        )

    def _wedges(self) -> Outcome:
        cs = ConstraintSet.avoiding([PATTERN_132])
        wedges = [Permutation((6, 4, 5, 7, 8, 3, 9, 1, 2))]
        for n in range(1, 7):
            wedges += [pi for pi in list_matching(cs, n, settings=self._settings) if is_wedge(pi)]
        return _all_passed(compare_ratfun(R(len(w)), F_recursive(w), label=str(w)) for w in wedges)

    def _reassemble(self) -> Outcome:
        order = min(self.list_order, 7)
        for pi in self._avoiders():
            if pi.values and decompose_132_avoider(pi).reassemble() != pi:
                return Outcome.failed(f"{pi} does not reassemble around its maximum")
        once = ConstraintSet.of((PATTERN_132, Quantifier.exactly(1)))
        for n in range(3, order + 1):
            for pi in list_matching(once, n, settings=self._settings, unsafe=self._unsafe):
                if classify_exactly_once(pi).reassemble() != pi:
                    return Outcome.failed(f"{pi} does not reassemble from its exactly-once blocks")
        return Outcome.passed()

    # -- restricted 321 ----------------------------------------------------

    def restricted321_checks(self) -> Iterator[Check]:
        order = min(max(self._N, A_IDENTITY_ORDER), self._settings.max_n)
        for k, m in A_IDENTITY_CASES:

            def identity(k: int = k, m: int = m) -> Outcome:
                result = check_A_identity(k, m, order, settings=self._settings)
                if result.holds:
                    return Outcome.passed()
                first = result.first_failure or 0
                mismatch = Mismatch(n=first, expected="0", actual=str(result.residual[first]))
                return Outcome.failed(f"alternating sum nonzero at x^{first}", mismatch)

            yield Check(
                f"restricted321-alternating[k={k},m={m}]",
                "restricted321",
                "alternating Catalan identity for 321 and [k,m]",
                identity,
                params={"k": k, "m": m},
            )

        for k in range(3, 5):
            yield Check(
                f"restricted321-conjecture[k={k}]",
                "restricted321",
                "321-avoiders with r copies of [k,1] and of [k,2] are equinumerous",
                lambda k=k: self._conjecture(k),
                params={"k": k},
                tier=Tier.EXPERIMENTAL,
            )

    def _conjecture(self, k: int) -> Outcome:
        cs = ConstraintSet.avoiding([BASE_321])
        tables = [
            count_by_occurrences(
                cs, TwoLayered(k, m).materialize(), self._N, max_r=k, settings=self._settings, unsafe=self._unsafe
            )
            for m in (1, 2)
        ]
        return _all_passed(
            compare_series(tables[0].row(r), tables[1].row(r), label=f"r={r}") for r in range(1, k + 1)
        )

    # -- assembly ----------------------------------------------------------

    def checks(self, scope: str = "all") -> list[Check]:
        if scope not in VERIFY_SCOPES:
            raise ParameterError(f"Unknown scope {scope!r}; expected one of {', '.join(VERIFY_SCOPES)}")
        builders: dict[str, Callable[[], Iterator[Check]]] = {
            "chebyshev": self.chebyshev_checks,
            "avoidance": self.avoidance_checks,
            "occurrences": self.occurrence_checks,
            "single132": self.single132_checks,
            "triple": self.triple_checks,
            "lp": self.lp_checks,
            "transfer": self.transfer_checks,
            "cfrac": self.cfrac_checks,
            "dyck": self.dyck_checks,
            "blockrec": self.blockrec_checks,
            "restricted321": self.restricted321_checks,
        }
        selected = [*self.catalog_checks()]
        for build in builders.values():
            selected.extend(build())
        if scope != "all":
            selected = [check for check in selected if check.scope == scope]
        return sorted(selected, key=lambda check: check.check_id)


# ---------------------------------------------------------------------------
# Runner
# ---------------------------------------------------------------------------


class VerificationRunner:
    """Runs checks concurrently and collects a deterministic summary."""

    def __init__(
        self,
        *,
        settings: Settings | None = None,
        unsafe: bool = False,
        timings: bool = False,
    ) -> None:
        self._settings = settings or get_settings()
        self._unsafe = unsafe
        self._timings = timings
        self._max_parallel = max(1, int(self._settings.verify_workers))

    def _execute(self, check: Check) -> CheckReport:
        logger.info("Running check %s", check.check_id)
        started = time.perf_counter()
        try:
            outcome = check.run()
        except ResourceLimitError:
            raise
        except Exception as exc:
            logger.exception("Check %s raised", check.check_id)
            outcome = Outcome(CheckStatus.ERROR, detail=f"{type(exc).__name__}: {exc}")
        elapsed = (time.perf_counter() - started) * 1000
        if outcome.status is not CheckStatus.PASSED:
            if check.tier is Tier.EXPERIMENTAL:
                logger.warning("Experimental check %s did not pass: %s", check.check_id, outcome.detail)
            else:
                logger.error("Check %s %s: %s", check.check_id, outcome.status.value, outcome.detail)
        logger.info("Finished check %s in %.1f ms", check.check_id, elapsed)
        return CheckReport(
            check_id=check.check_id,
            theorem=check.theorem,
            params=dict(check.params),
            tier=check.tier,
            status=outcome.status,
            first_mismatch=outcome.first_mismatch,
            detail=outcome.detail,
            runtime_ms=round(elapsed, 3) if self._timings else None,
        )

    async def run_checks(self, checks: list[Check]) -> list[CheckReport]:
        semaphore = asyncio.Semaphore(self._max_parallel)

        async def guarded(check: Check) -> CheckReport:
            async with semaphore:
                return await asyncio.to_thread(self._execute, check)

        reports = await asyncio.gather(*(guarded(check) for check in checks))
        return sorted(reports, key=lambda report: report.check_id)

    def verify(self, scope: str = "all", N: int | None = None, *, tier: str = "all") -> VerificationSummary:
        """Build and run every check in ``scope`` at order N (default ``default_order``)."""
        order = self._settings.default_order if N is None else N
        checks = CheckBuilder(order, settings=self._settings, unsafe=self._unsafe).checks(scope)
        if tier != "all":
            checks = [check for check in checks if check.tier.value == tier]
        logger.info("Verifying %s checks in scope %s at N=%s", len(checks), scope, order)
        reports = asyncio.run(self.run_checks(checks))
        return summarize(scope, order, reports)


def summarize(scope: str, order: int, reports: list[CheckReport]) -> VerificationSummary:
    proved = [report for report in reports if report.tier is Tier.PROVED]
    return VerificationSummary(
        scope=scope,
        order=order,
        checks=reports,
        passed=sum(report.status is CheckStatus.PASSED for report in reports),
        failed=sum(report.status is CheckStatus.FAILED for report in proved),
        errors=sum(report.status is CheckStatus.ERROR for report in proved),
        experimental_failed=sum(
            report.status is not CheckStatus.PASSED
            for report in reports
            if report.tier is Tier.EXPERIMENTAL
        ),
    )
