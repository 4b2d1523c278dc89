"""Subcommands on covers: adapt, verify, invariants."""
import argparse
import logging

from wildcover.commands.common import (
    add_field_arguments, basis_response, check_responses, emit, field_from_args, load_spec_source,
    matrix_response, ramification_response,
)
from wildcover.engine.cover import adapt_basis, find_stable_translations, max_jump_check, ramification, verify_cover
from wildcover.models.asw import reduce, sigma_level
from wildcover.parsing import parse_poly
from wildcover.schemas import InvariantsResponse, VerifyResponse

logger = logging.getLogger(__name__)


def run_adapt(args: argparse.Namespace) -> int:
    """Adapted basis of the span of the given classes."""
    ctx = field_from_args(args)
    classes = [reduce(parse_poly(text, ctx)) for text in args.polys]
    basis = adapt_basis(classes)
    report = basis_response(basis)
    lines = [f"degrees {tuple(basis.degrees)}"] + [f"f{i} = {f}" for i, f in enumerate(basis.functions, start=1)]
    emit(report, args.json, "\n".join(lines))
    return 0


def run_verify(args: argparse.Namespace) -> int:
    """Run every check on a spec; exit 1 when one fails."""
    spec, _ = load_spec_source(args.spec, args.ambient_bound)
    logger.info("Verifying n=%d v=%d over %r", spec.n, spec.v, spec.ambient)
    result = verify_cover(spec)
    jumps = max_jump_check(spec, result.matrices)
    checks = result.checks + jumps.checks
    report = VerifyResponse(
        p=spec.p,
        n=spec.n,
        v=spec.v,
        ambient=repr(spec.ambient),
        passed=all(c.passed for c in checks),
        basis=basis_response(result.basis),
        ramification=ramification_response(result.ramification),
        matrices=[matrix_response(mat) for mat in result.matrices],
        levels_maximal=jumps.levels_maximal,
        subdiagonals_nonzero=jumps.subdiagonals_nonzero,
        checks=check_responses(checks),
    )
    emit(report, True)
    return 0 if report.passed else 1


def run_invariants(args: argparse.Namespace) -> int:
    """Degrees, jumps, genus and |G| without the representation checks."""
    spec, _ = load_spec_source(args.spec, args.ambient_bound)
    basis = adapt_basis(spec.functions)
    stable = candidates = None
    if args.stable_translations:
        found = find_stable_translations(spec.functions, args.ambient_bound)
        stable, candidates = spec.p ** len(found.basis), found.candidates
    report = InvariantsResponse(
        p=spec.p,
        n=spec.n,
        v=spec.v,
        ambient=repr(spec.ambient),
        levels=[sigma_level(f.reduced) for f in spec.functions],
        basis=basis_response(basis),
        ramification=ramification_response(ramification(basis, spec.v)),
        stable_translations=stable,
        candidates=candidates,
    )
    emit(report, True)
    return 0


def register(subparsers, shared: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("adapt", parents=[shared], help="adapted basis of Artin-Schreier classes")
    parser.add_argument("polys", nargs="+")
    add_field_arguments(parser)
    parser.set_defaults(handler=run_adapt)

    parser = subparsers.add_parser("verify", parents=[shared], help="verify a cover spec")
    parser.add_argument("spec", help="spec file, '-' for stdin")
    parser.set_defaults(handler=run_verify)

    parser = subparsers.add_parser("invariants", parents=[shared], help="ramification invariants of a spec")
    parser.add_argument("spec", help="spec file, '-' for stdin")
    parser.add_argument("--stable-translations", action="store_true",
                        help="also search Z(Ad f1) for the translations that lift")
    parser.set_defaults(handler=run_invariants)
