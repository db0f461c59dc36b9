"""Command handlers for the ``permcheb`` command line."""

from __future__ import annotations

import argparse
import logging
from collections.abc import Callable, Mapping
from pathlib import Path

from permcheb.algebra.exactalg import RatFun, series_of
from permcheb.cli.rendering import (
    render_bijection,
    render_catalog,
    render_count_table,
    render_formula,
    render_rows,
    render_summary,
    render_transfer,
)
from permcheb.combinatorics.cfrac import CFSpec, cf_biseries, coefficient_rows
from permcheb.combinatorics.dyck import format_path, max_height, parse_path, phi, phi_inverse
from permcheb.combinatorics.perm_core import (
    format_constraints,
    parse_constraints,
    parse_pattern,
    parse_permutation,
)
from permcheb.combinatorics.transfer import (
    GeneratingTree,
    TransferSystem,
    build_Ak,
    characteristic_determinant,
    closed_walk_series,
    dyck_strip_system,
    level_counts,
    load_rules,
    tree_to_system,
    walk_gf,
)
from permcheb.config import Settings, get_settings
from permcheb.constants import (
    BASE_PATTERNS,
    BUILTIN_RULES,
    DOWN_STEP,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    OUTPUT_FORMATS,
    TIERS,
    UP_STEP,
    VERIFY_SCOPES,
)
from permcheb.errors import ParameterError, PatternError
from permcheb.formulas import FORMULA_REGISTRY
from permcheb.formulas.avoidance import F_pair
from permcheb.formulas.occurrences import G_exact
from permcheb.formulas.single132 import H, Phi
from permcheb.models import PatternSpec
from permcheb.schemas import (
    BijectionReport,
    CoefficientRow,
    CountTableReport,
    FormulaResult,
    TransferReport,
)
from permcheb.services.oracle import count_by_occurrences, count_upto, list_matching
from permcheb.services.report_io import save_report
from permcheb.services.verification import VerificationRunner

logger = logging.getLogger(__name__)

# Shorthand formula kinds taking a pattern literal
FORMULA_KINDS: Mapping[str, str] = {
    "avoid": "avoiders of the base pattern and the pattern",
    "occurrences": "base-avoiders with exactly r occurrences of the pattern",
    "h": "exactly one 132 and no occurrence of the pattern",
    "phi": "exactly one 132 and exactly one occurrence of the pattern",
}


def _emit(text: str, args: argparse.Namespace, name: str, settings: Settings) -> None:
    print(text)
    if getattr(args, "save", False):
        extension = "txt" if args.format == "text" else args.format
        save_report(text, name, extension=extension, settings=settings)


def _parse_params(items: list[str] | None) -> dict[str, int]:
    params: dict[str, int] = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip():
            raise ParameterError(f"Expected NAME=VALUE, got {item!r}")
        try:
            params[name.strip()] = int(value)
        except ValueError as exc:
            raise ParameterError(f"Parameter {name!r} needs an integer, got {value!r}") from exc
    return params


def resolve_formula(args: argparse.Namespace) -> tuple[str, dict[str, int], RatFun]:
    """Turn ``target [pattern]`` into (formula id, parameters, rational function)."""
    target: str = args.target
    if target in FORMULA_REGISTRY:
        family = FORMULA_REGISTRY[target]()
        params = _parse_params(args.param)
        if args.r is not None and "r" in family.parameters:
            params.setdefault("r", args.r)
        params = family.check_parameters(params)
        return target, params, family.evaluate(**params)

    if target in FORMULA_KINDS:
        if args.pattern is None:
            raise ParameterError(f"Formula kind {target!r} needs a pattern literal")
        kind, literal = target, args.pattern
    else:
        kind, literal = "avoid", target
    spec: PatternSpec = parse_pattern(literal)
    base: str = args.base
    params = {}
    if kind == "avoid":
        value = F_pair(base, spec)
    elif kind == "occurrences":
        r = 1 if args.r is None else args.r
        params = {"r": r}
        value = G_exact(base, spec, r)
    else:
        if base != "132":
            raise ParameterError(f"Formula kind {kind!r} is stated for base 132 only")
        value = H(spec) if kind == "h" else Phi(spec)
    return f"{kind}:{base}:{spec.literal()}", params, value


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------


def cmd_oracle(args: argparse.Namespace, settings: Settings) -> int:
    cs = parse_constraints(args.constraints)
    N = settings.default_order if args.N is None else args.N
    if args.list:
        members = list_matching(cs, N, settings=settings, unsafe=args.unsafe_N)
        print("\n".join(str(pi) for pi in members))
        return EXIT_OK
    if args.pattern is None:
        table = count_upto(cs, N, settings=settings, unsafe=args.unsafe_N)
        report = CountTableReport(constraint=format_constraints(cs), counts=list(table.counts))
        _emit(render_count_table(report, args.format), args, f"oracle-N{N}", settings)
        return EXIT_OK

    tracked = parse_pattern(args.pattern).materialize()
    occurrences = count_by_occurrences(
        cs, tracked, N, max_r=args.r, settings=settings, unsafe=args.unsafe_N
    )
    rows = [
        CoefficientRow(n=n, r=r, count=count)
        for n, level in enumerate(occurrences.counts)
        for r, count in level.items()
        if args.r is None or r == args.r
    ]
    _emit(render_rows(rows, args.format), args, f"oracle-occurrences-N{N}", settings)
    return EXIT_OK


def cmd_formula(args: argparse.Namespace, settings: Settings) -> int:
    formula_id, params, value = resolve_formula(args)
    result = FormulaResult(formula_id=formula_id, params=params, rational=value.render())
    _emit(render_formula(result, args.format), args, "formula", settings)
    return EXIT_OK


def cmd_series(args: argparse.Namespace, settings: Settings) -> int:
    formula_id, params, value = resolve_formula(args)
    N = settings.default_order if args.N is None else args.N
    coefficients = [str(c) for c in series_of(value, N).coeffs]
    result = FormulaResult(
        formula_id=formula_id, params=params, rational=value.render(), coefficients=coefficients
    )
    _emit(render_formula(result, args.format), args, f"series-N{N}", settings)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    runner = VerificationRunner(settings=settings, unsafe=args.unsafe_N, timings=args.timings)
    summary = runner.verify(args.scope, args.N, tier=args.tier)
    text = render_summary(summary, args.format, timings=args.timings)
    _emit(text, args, f"verify-{args.scope}-N{summary.order}", settings)
    if summary.failed or summary.errors:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_bijection(args: argparse.Namespace, settings: Settings) -> int:
    text = args.value.strip()
    if text and set(text.upper()) <= {UP_STEP, DOWN_STEP}:
        path = parse_path(text)
        pi = phi_inverse(path)
    else:
        pi = parse_permutation(text)
        path = phi(pi)
    report = BijectionReport(permutation=str(pi), path=format_path(path), max_height=max_height(path))
    _emit(render_bijection(report, args.format), args, "bijection", settings)
    return EXIT_OK


def _load_system(source: str, settings: Settings) -> tuple[TransferSystem, GeneratingTree | None]:
    family, sep, rest = source.partition(":")
    if sep and family in ("ak", "strip"):
        try:
            size = int(rest)
        except ValueError as exc:
            raise ParameterError(f"Expected an integer after {family}:, got {rest!r}") from exc
        return (build_Ak(size) if family == "ak" else dyck_strip_system(size)), None
    if source in BUILTIN_RULES:
        path = settings.rules_dir / BUILTIN_RULES[source]
    else:
        path = Path(source)
    if not path.exists():
        raise PatternError(f"No builtin system or rule file named {source!r}")
    tree = load_rules(path)
    return tree_to_system(tree), tree


def cmd_transfer(args: argparse.Namespace, settings: Settings) -> int:
    system, tree = _load_system(args.source, settings)
    N = settings.default_order if args.N is None else args.N
    start = system.start
    report = TransferReport(
        labels=list(system.labels),
        matrix=[list(row) for row in system.matrix],
        determinant=characteristic_determinant(system).render(),
        closed_walk_gf=walk_gf(system, start, start).render(),
        level_counts=level_counts(tree, N).as_integers() if tree is not None else None,
        closed_walks=closed_walk_series(system, start, N).as_integers(),
    )
    _emit(render_transfer(report, args.format), args, f"transfer-N{N}", settings)
    return EXIT_OK


def cmd_cfrac(args: argparse.Namespace, settings: Settings) -> int:
    N = settings.default_order if args.N is None else args.N
    series = cf_biseries(CFSpec.of(args.k, N, args.R))
    rows = [CoefficientRow(n=n, r=r, count=count) for n, r, count in coefficient_rows(series) if count]
    _emit(render_rows(rows, args.format), args, f"cfrac-k{args.k}-N{N}", settings)
    return EXIT_OK


def cmd_catalog(args: argparse.Namespace, settings: Settings) -> int:
    infos = [family().info() for family in FORMULA_REGISTRY.values()]
    _emit(render_catalog(infos, args.format), args, "catalog", settings)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

Handler = Callable[[argparse.Namespace, Settings], int]

HANDLERS: Mapping[str, Handler] = {
    "oracle": cmd_oracle,
    "formula": cmd_formula,
    "series": cmd_series,
    "verify": cmd_verify,
    "bijection": cmd_bijection,
    "transfer": cmd_transfer,
    "cfrac": cmd_cfrac,
    "catalog": cmd_catalog,
}


def _add_common(parser: argparse.ArgumentParser, *, order: bool = True) -> None:
    parser.add_argument("--format", choices=OUTPUT_FORMATS, default="text", help="Output format")
    parser.add_argument("--save", action="store_true", help="Also write the report under the report directory")
    if order:
        parser.add_argument("-N", type=int, default=None, help="Order (default: PERMCHEB_DEFAULT_ORDER)")


def _add_formula_target(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "target",
        help=f"Formula id from the catalog, a kind ({', '.join(FORMULA_KINDS)}) or a pattern literal",
    )
    parser.add_argument("pattern", nargs="?", default=None, help="Pattern literal for a formula kind")
    parser.add_argument("--base", choices=BASE_PATTERNS, default="132", help="Base pattern")
    parser.add_argument("-r", type=int, default=None, help="Occurrence count")
    parser.add_argument("--param", action="append", metavar="NAME=VALUE", help="Catalog formula parameter")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permcheb",
        description="Pattern-avoidance generating functions checked against exhaustive enumeration",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Count 132-avoiders that also avoid 1234
  python -m permcheb oracle avoid:132 avoid:id:4 -N 9

  # Closed form for S_n(132, [3,1])
  python -m permcheb formula tl:3,1 --base 132

  # Coefficients of the exactly-once generating function for 132 and 123
  python -m permcheb series phi id:3 -N 8

  # Check every closed form against the oracle
  python -m permcheb verify --scope all -N 8
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True, help="Command to run")

    oracle_parser = subparsers.add_parser("oracle", help="Count permutations satisfying constraints")
    oracle_parser.add_argument("constraints", nargs="+", help="Constraint literals, e.g. avoid:132 exactly:1:id:3")
    oracle_parser.add_argument("--pattern", default=None, help="Tabulate by occurrences of this pattern")
    oracle_parser.add_argument("-r", type=int, default=None, help="Only this occurrence count")
    oracle_parser.add_argument("--list", action="store_true", help="List the permutations of length N")
    _add_common(oracle_parser)

    formula_parser = subparsers.add_parser("formula", help="Print a closed form as a rational function")
    _add_formula_target(formula_parser)
    _add_common(formula_parser, order=False)

    series_parser = subparsers.add_parser("series", help="Expand a closed form through x^N")
    _add_formula_target(series_parser)
    _add_common(series_parser)

    verify_parser = subparsers.add_parser("verify", help="Check closed forms against the oracle")
    verify_parser.add_argument("--scope", choices=VERIFY_SCOPES, default="all", help="Checks to run")
    verify_parser.add_argument("--tier", choices=TIERS, default="all", help="Tier filter")
    verify_parser.add_argument("--timings", action="store_true", help="Report runtimes")
    _add_common(verify_parser)

    bijection_parser = subparsers.add_parser("bijection", help="Map a 132-avoider to its Dyck path or back")
    bijection_parser.add_argument("value", help="Permutation (e.g. 534261) or path (e.g. UUDD)")
    _add_common(bijection_parser, order=False)

    transfer_parser = subparsers.add_parser("transfer", help="Walk counts of a transfer system")
    transfer_parser.add_argument(
        "source", help=f"Rule file, builtin ({', '.join(BUILTIN_RULES)}), ak:<k> or strip:<height>"
    )
    _add_common(transfer_parser)

    cfrac_parser = subparsers.add_parser("cfrac", help="z-refined continued fraction table")
    cfrac_parser.add_argument("-k", type=int, required=True, help="Length of the increasing pattern")
    cfrac_parser.add_argument("-R", type=int, default=3, help="Largest tracked occurrence count")
    _add_common(cfrac_parser)

    catalog_parser = subparsers.add_parser("catalog", help="List formula families")
    _add_common(catalog_parser, order=False)

    for sub in subparsers.choices.values():
        sub.add_argument("--unsafe-N", dest="unsafe_N", action="store_true", help="Bypass the oracle size caps")
    return parser


def dispatch(args: argparse.Namespace, *, settings: Settings | None = None) -> int:
    settings = settings or get_settings()
    if args.unsafe_N:
        logger.warning("Oracle size caps disabled for this run")
    return HANDLERS[args.command](args, settings)
