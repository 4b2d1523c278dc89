"""Subcommands for the explicit families: family, iso."""
import argparse
import sys

from wildcover.commands.common import emit, field_from_args
from wildcover.engine.families import (
    FamilyParams, UNIVERSAL_KEYS, family_to_spec_text, gamma_family, iso_criterion_n2,
)
from wildcover.errors import OutOfRange
from wildcover.models.additive import from_poly
from wildcover.parsing import parse_element, parse_poly
from wildcover.schemas import IsoResponse

# Both names select the family built from independent gammas
GAMMA_VARIANTS = ("prop43", "gamma")


def _universal_values(args: argparse.Namespace) -> dict:
    ctx = field_from_args(args)
    values = {}
    for key in UNIVERSAL_KEYS.get(args.n, ()):
        text = getattr(args, key)
        if text is not None:
            values[key] = parse_element(text, ctx)
    return values


def run_family(args: argparse.Namespace) -> int:
    """Print the spec of a family member."""
    if args.p is None and args.variant != "universal":
        raise OutOfRange(f"-p is required for the {args.variant} family")
    if args.variant in GAMMA_VARIANTS:
        ctx = field_from_args(args)
        if not args.gamma:
            raise OutOfRange("the gamma family needs at least one --gamma")
        gammas = [parse_element(text, ctx) for text in args.gamma]
        S1 = from_poly(parse_poly(args.s1, ctx))
        constants = [parse_element(text, ctx) for text in args.const] if args.const else None
        spec = gamma_family(args.p, S1.s, args.d, gammas, S1, constants, args.ambient_bound)
        sys.stdout.write(family_to_spec_text(spec))
        return 0
    if args.variant == "universal":
        if args.p not in (None, 5):
            raise OutOfRange("universal families are only known for p = 5")
        args.p = 5
        params = FamilyParams("universal", 5, args.n, _universal_values(args))
    elif args.variant == "base-change":
        params = FamilyParams("base-change", args.p, args.n, {"s0": args.s0})
    else:
        params = FamilyParams("special", args.p, args.n)
    spec = params.build(args.ambient_bound)
    sys.stdout.write(family_to_spec_text(spec, params))
    return 0


def run_iso(args: argparse.Namespace) -> int:
    """Isomorphism test for two members of the universal n = 2 family; exit 1 when not isomorphic."""
    args.p = 5
    ctx = field_from_args(args)
    first = {"b0": parse_element(args.b0, ctx), "b5": parse_element(args.b5, ctx)}
    second = {"b0": parse_element(args.b0_prime, ctx), "b5": parse_element(args.b5_prime, ctx)}
    same = iso_criterion_n2(first, second)
    report = IsoResponse(
        isomorphic=same,
        first={k: str(v) for k, v in first.items()},
        second={k: str(v) for k, v in second.items()},
    )
    emit(report, args.json, "isomorphic" if same else "not isomorphic")
    return 0 if same else 1


def register(subparsers, shared: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("family", parents=[shared], help="emit the spec of a family member")
    parser.add_argument("variant", choices=["special", "universal", *GAMMA_VARIANTS, "base-change"])
    parser.add_argument("-p", type=int, default=None, help="characteristic")
    parser.add_argument("-n", type=int, default=1, help="number of equations")
    parser.add_argument("-m", type=int, default=1, help="degree of the parameter field")
    parser.add_argument("--modulus", default=None, help="defining polynomial of the parameter field")
    parser.add_argument("--s0", type=int, default=1, help="base change by the s0-th power of X^p - X")
    parser.add_argument("-d", type=int, default=1, help="degree of the field holding the gammas")
    parser.add_argument("--gamma", action="append", default=[], help="a gamma, repeated; the first is 1")
    parser.add_argument("--s1", default="X^5", help="additive polynomial S1")
    parser.add_argument("--const", action="append", default=[], help="linear coefficient c_i, repeated")
    for key in sorted({k for keys in UNIVERSAL_KEYS.values() for k in keys}):
        parser.add_argument(f"--{key}", default=None, help=f"universal family parameter {key}")
    parser.set_defaults(handler=run_family)

    parser = subparsers.add_parser("iso", parents=[shared], help="compare two universal n = 2 parameter pairs")
    parser.add_argument("--b0", required=True)
    parser.add_argument("--b5", default="0")
    parser.add_argument("--b0-prime", required=True)
    parser.add_argument("--b5-prime", default="0")
    parser.add_argument("-m", type=int, default=1, help="degree of the parameter field")
    parser.add_argument("--modulus", default=None, help="defining polynomial of the parameter field")
    parser.set_defaults(handler=run_iso)
