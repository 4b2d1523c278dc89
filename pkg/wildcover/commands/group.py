"""The group subcommand: closure of the generators of a verified cover."""
import argparse
import logging

from wildcover.commands.common import check_responses, emit, load_spec_source
from wildcover.engine.cover import CoverSpec, Check, truncate_cover
from wildcover.engine.families import special_generators
from wildcover.engine.group import (
    GeneratorSet, analyze, cover_generators, element_order, exact_sequence_check, extraspecial_check,
    group_closure, group_report,
)
from wildcover.schemas import AutResponse, GroupResponse

logger = logging.getLogger(__name__)


def _generators(spec: CoverSpec, special: bool, root_shift: int) -> GeneratorSet:
    if special:
        return special_generators(spec.p, spec.n, root_shift)
    return cover_generators(spec, root_shift)


def run_group(args: argparse.Namespace) -> int:
    """Order, exponent, center and derived subgroup; exit 1 when a structural check fails."""
    spec, params = load_spec_source(args.spec, args.ambient_bound)
    special = params is not None and params.variant == "special" and params.n == spec.n
    gens = _generators(spec, special, args.root_shift)
    closure = group_closure(gens.generators, args.closure_bound, gens.space)
    analysis = analyze(closure, gens.family)
    report = group_report(analysis)
    checks = list(report.checks)
    if spec.n == 1:
        checks.append(Check("extraspecial of order p^3 and exponent p", extraspecial_check(analysis)))
    if args.exact_sequence and spec.n > 1:
        lower_gens = _generators(truncate_cover(spec, spec.n - 1), special, args.root_shift)
        lower = analyze(group_closure(lower_gens.generators, args.closure_bound, lower_gens.space),
                        lower_gens.family)
        checks.append(exact_sequence_check(analysis, lower))
    orders = None
    if args.element_order:
        orders = [element_order(sigma) for sigma in closure.generators]
    response = GroupResponse(
        order=report.order,
        exponent=report.exponent,
        center_order=report.center_order,
        center_generators=[AutResponse(**sigma.describe()) for sigma in report.center_generators],
        derived_order=report.derived_order,
        lambda_dims=list(report.lambda_dims),
        generators=len(closure.generators),
        checks=check_responses(checks),
        element_orders=orders,
    )
    emit(response, True)
    passed = all(c.passed for c in checks)
    if not passed:
        logger.warning("Group checks failed for n=%d", spec.n)
    return 0 if passed else 1


def register(subparsers, shared: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("group", parents=[shared], help="automorphism group of a cover")
    parser.add_argument("spec", help="spec file, '-' for stdin")
    parser.add_argument("--root-shift", type=int, default=0,
                        help="add this integer to every Artin-Schreier root of the lifts")
    parser.add_argument("--element-order", action="store_true", help="report the order of each generator")
    parser.add_argument("--exact-sequence", action="store_true",
                        help="compare G/Z(G) with the group of the first n-1 equations")
    parser.set_defaults(handler=run_group)
