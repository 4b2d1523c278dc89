"""Shared plumbing for the subcommands: input, field options and report output."""
import argparse
import json
import sys
from typing import Optional

from pydantic import BaseModel

from wildcover.engine.cover import (
    AdaptedBasis, CoverSpec, RamificationReport, RepMatrix, find_stable_translations,
)
from wildcover.engine.families import FamilyParams
from wildcover.errors import ParseError
from wildcover.models.asw import reduce
from wildcover.models.field import FieldCtx, field
from wildcover.parsing import header_field, parse_element, parse_modulus, parse_poly, parse_spec
from wildcover.schemas import (
    AdaptedBasisResponse, CheckResponse, RamificationResponse, RepMatrixResponse, SpecFile,
)


# Input
def read_text(source: str) -> str:
    """Read a spec from a path, or from stdin for '-'."""
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}")


def add_field_arguments(parser: argparse.ArgumentParser, required_p: bool = True) -> None:
    parser.add_argument("-p", type=int, required=required_p, default=None, help="characteristic")
    parser.add_argument("-m", type=int, default=1, help="extension degree of the coefficient field")
    parser.add_argument("--modulus", default=None, help="defining polynomial in t, e.g. t^2+2")


def field_from_args(args: argparse.Namespace) -> FieldCtx:
    if args.modulus:
        modulus = tuple(parse_modulus(args.modulus, args.p))
        return field(args.p, len(modulus) - 1, modulus)
    return field(args.p, args.m)


def load_spec(sf: SpecFile, bound: Optional[int] = None) -> tuple[CoverSpec, Optional[FamilyParams]]:
    """Turn a parsed spec file into a cover, resolving 'V = auto' and family directives."""
    ctx = header_field(sf)
    params = FamilyParams.from_directive(sf.family, ctx) if sf.family is not None else None
    if not sf.functions:
        if params is None:
            raise ParseError("the spec file has neither equations nor a family directive")
        return params.build(bound), params
    functions = [reduce(parse_poly(text, ctx)) for text in sf.functions]
    if sf.v_auto or not sf.v_basis:
        found = find_stable_translations(functions, bound)
        ambient = found.ambient
        spec = CoverSpec(sf.p, ambient, tuple(f.embed(ambient) for f in functions), found.basis)
    else:
        basis = tuple(parse_element(text, ctx) for text in sf.v_basis)
        spec = CoverSpec(sf.p, ctx, tuple(functions), basis)
    return spec, params


def load_spec_source(source: str, bound: Optional[int] = None) -> tuple[CoverSpec, Optional[FamilyParams]]:
    return load_spec(parse_spec(read_text(source)), bound)


# Output
def emit(model: BaseModel, as_json: bool, text: Optional[str] = None) -> None:
    """Print the report as sorted JSON, or the human line when given and --json is off."""
    if as_json or text is None:
        print(json.dumps(model.model_dump(mode="json"), sort_keys=True, indent=2))
    else:
        print(text)


def basis_response(basis: AdaptedBasis) -> AdaptedBasisResponse:
    return AdaptedBasisResponse(
        functions=[str(f) for f in basis.functions],
        degrees=list(basis.degrees),
        jumps=list(basis.jumps),
        dims=list(basis.dims),
    )


def ramification_response(report: RamificationReport) -> RamificationResponse:
    ratio = report.ratio
    squared = report.ratio_genus_squared
    return RamificationResponse(
        different=report.different,
        genus=report.genus,
        order=report.order,
        ratio=report.ratio_text if ratio is not None else None,
        ratio_reduced=str(ratio) if ratio is not None else None,
        ratio_genus_squared=str(squared) if squared is not None else None,
        trivial_family_bound=str(report.trivial_family_bound),
        is_big_action=report.is_big_action,
        hurwitz_ok=report.hurwitz_ok,
        degrees=list(report.degrees),
        jumps=list(report.jumps),
    )


def matrix_response(mat: RepMatrix) -> RepMatrixResponse:
    return RepMatrixResponse(y=str(mat.y), entries=[list(row) for row in mat.entries])


def check_responses(checks) -> list[CheckResponse]:
    return [CheckResponse.model_validate(check) for check in checks]
