"""Subcommands on single polynomials: reduce, sigma, palindromic."""
import argparse

from wildcover.commands.common import add_field_arguments, emit, field_from_args
from wildcover.models.additive import minimal_splitting_degree, palindromic
from wildcover.models.asw import dp_order, reduce, sigma_level
from wildcover.parsing import parse_poly
from wildcover.schemas import PalindromicResponse, ReduceResponse, SigmaResponse


def run_reduce(args: argparse.Namespace) -> int:
    """Reduced representative of an Artin-Schreier class."""
    ctx = field_from_args(args)
    f = parse_poly(args.poly, ctx)
    cls = reduce(f)
    report = ReduceResponse(input=str(f), reduced=str(cls.reduced), const_class=cls.const_class, degree=cls.degree)
    emit(report, args.json, f"{cls.reduced}  (constant class {cls.const_class})")
    return 0


def run_sigma(args: argparse.Namespace) -> int:
    """Level in the digit-sum filtration."""
    ctx = field_from_args(args)
    f = parse_poly(args.poly, ctx)
    level = sigma_level(f)
    report = SigmaResponse(input=str(f), level=level, dp_order=int(dp_order(f)))
    emit(report, args.json, f"level {level}")
    return 0


def run_palindromic(args: argparse.Namespace) -> int:
    """Palindromic polynomial of f = X S(X) + cX."""
    ctx = field_from_args(args)
    f = parse_poly(args.poly, ctx)
    ad = palindromic(f)
    degree = minimal_splitting_degree(ad, ctx, args.ambient_bound) if args.splitting_field else None
    report = PalindromicResponse(input=str(f), additive=str(ad.to_poly()), ad=str(ad), s=ad.s // 2,
                                 zero_set_degree=degree)
    text = f"Ad = {ad}"
    if degree is not None:
        text += f"  (splits over F_{ctx.p}^{degree})"
    emit(report, args.json, text)
    return 0


def register(subparsers, shared: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("reduce", parents=[shared], help="reduced representative modulo h^p - h")
    parser.add_argument("poly")
    add_field_arguments(parser)
    parser.set_defaults(handler=run_reduce)

    parser = subparsers.add_parser("sigma", parents=[shared], help="digit-sum level of a polynomial")
    parser.add_argument("poly")
    add_field_arguments(parser)
    parser.set_defaults(handler=run_sigma)

    parser = subparsers.add_parser("palindromic", parents=[shared], help="palindromic polynomial Ad_f")
    parser.add_argument("poly")
    add_field_arguments(parser)
    parser.add_argument("--splitting-field", action="store_true", help="also report the splitting degree")
    parser.set_defaults(handler=run_palindromic)
