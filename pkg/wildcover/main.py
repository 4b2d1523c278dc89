"""Command-line entry point."""
import argparse
import logging
import sys
from typing import Optional, Sequence

from wildcover import config
from wildcover.commands import register_algebra, register_cover, register_families, register_group
from wildcover.errors import WildcoverError

logger = logging.getLogger(__name__)


def _add_global_options(parser: argparse.ArgumentParser, default) -> None:
    parser.add_argument("-v", "--verbose", action="store_true", default=default, help="log progress to stderr")
    parser.add_argument("--json", action="store_true", default=default, help="print reports as JSON")
    parser.add_argument("--ambient-bound", type=int, default=default,
                        help="largest extension degree tried for zero sets")
    parser.add_argument("--closure-bound", type=int, default=default,
                        help="largest group enumerated")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wildcover",
        description="Artin-Schreier covers of the affine line and their automorphism groups",
    )
    _add_global_options(parser, None)
    # Options repeated after the subcommand must not reset the ones given before it
    shared = argparse.ArgumentParser(add_help=False)
    _add_global_options(shared, argparse.SUPPRESS)
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_algebra(subparsers, shared)
    register_cover(subparsers, shared)
    register_families(subparsers, shared)
    register_group(subparsers, shared)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else config.LOG_LEVEL,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
    )
    args.json = bool(args.json)
    if args.ambient_bound is None:
        args.ambient_bound = config.AMBIENT_BOUND
    if args.closure_bound is None:
        args.closure_bound = config.CLOSURE_BOUND
    try:
        return args.handler(args)
    except WildcoverError as exc:
        logger.debug("Command %s failed", args.command, exc_info=True)
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
