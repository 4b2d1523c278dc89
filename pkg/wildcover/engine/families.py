"""Explicit families of big actions."""
import logging
import math
from dataclasses import dataclass, field as dataclass_field
from typing import Mapping, Optional, Sequence, Union

import galois

from wildcover.engine.cover import CoverSpec
from wildcover.engine.group import Aut, AutSpace, GeneratorSet, PhiFamily, constant_field
from wildcover.errors import (
    DivisibilityViolation, FieldMismatch, NotSeparable, OutOfRange, ParameterConstraintViolated,
    ParseError, SupportViolation,
)
from wildcover.models import linalg
from wildcover.models.additive import (
    TwistedPoly, gamma_decomposition, palindromic, subspace_poly, twisted_mul, zero_set,
)
from wildcover.models.asw import reduce
from wildcover.models.field import (
    FieldCtx, FieldElement, artin_schreier_root, common_field, element_degree, embed, field,
)
from wildcover.models.poly import Poly
from wildcover.parsing import format_spec, parse_element
from wildcover.schemas import FamilyDirective

logger = logging.getLogger(__name__)

Scalar = Union[int, FieldElement]


# Witt lift of the last equation

def witt_numerator(p: int) -> dict[int, int]:
    """(X^p - X)^p - X^(p^2) + X^p over the integers, as {exponent: coefficient}."""
    coeffs: dict[int, int] = {}
    for k in range(p + 1):
        e = p * (p - k) + k
        coeffs[e] = coeffs.get(e, 0) + math.comb(p, k) * (-1) ** k
    coeffs[p * p] -= 1
    coeffs[p] = coeffs.get(p, 0) + 1
    return {e: c for e, c in coeffs.items() if c}


def witt_g_last(p: int) -> Poly:
    """(1/p!) ((X^p - X)^p - X^(p^2) + X^p) reduced mod p."""
    if p < 3 or not galois.is_prime(p):
        raise OutOfRange(f"p = {p} must be an odd prime")
    numerator = witt_numerator(p)
    quotient = {}
    for e, c in numerator.items():
        if c % p or (c // p) % p == 0:
            raise DivisibilityViolation(f"coefficient {c} of X^{e} is not exactly divisible by {p}")
        quotient[e] = c // p
    scale = pow(math.factorial(p - 1), -1, p)
    ctx = field(p)
    return Poly.from_terms(ctx, {e: c * scale % p for e, c in quotient.items()})


def t_polynomial(p: int, y: FieldElement) -> Poly:
    """T(X, y) = sum_{i=1}^{p-1} (-1)^(i+1)/i X^i y^(p-i)."""
    ctx = y.ctx
    terms = {}
    for i in range(1, p):
        c = (-1) ** (i + 1) * pow(i, -1, p)
        terms[i] = y ** (p - i) * c
    return Poly.from_terms(ctx, terms)


# The special family

def _check_special(p: int, n: int) -> None:
    if p < 3 or not 1 <= n <= p - 1:
        raise OutOfRange(f"the special family needs p >= 3 and 1 <= n <= p - 1, got p = {p}, n = {n}")


def special_equations(p: int, n: int) -> list[Poly]:
    """g_i = S^(i+1)/(i+1)! with S = X^p - X, the Witt lift in slot p - 1."""
    _check_special(p, n)
    ctx = field(p)
    S = Poly.monomial(ctx, p) - Poly.x(ctx)
    equations = []
    for i in range(1, n + 1):
        if i == p - 1:
            equations.append(witt_g_last(p))
        else:
            equations.append((S ** (i + 1)).scale(pow(math.factorial(i + 1), -1, p)))
    return equations


def special_family(p: int, n: int, bound: Optional[int] = None) -> CoverSpec:
    equations = special_equations(p, n)
    base = field(p)
    wp2 = twisted_mul(TwistedPoly.wp(base), TwistedPoly.wp(base))
    ambient, basis = zero_set(wp2, base, bound)
    functions = tuple(reduce(g).embed(ambient) for g in equations)
    logger.info("Special family p=%d n=%d over %r", p, n, ambient)
    return CoverSpec(p, ambient, functions, tuple(basis))


def special_rep_matrix(p: int, n: int, s: int) -> linalg.Matrix:
    """L(y) with l_{j,i} = S(y)^(i-j)/(i-j)! where s = S(y)."""
    return tuple(
        tuple(
            s ** (i - j) * pow(math.factorial(i - j), -1, p) % p if i >= j else 0
            for i in range(n)
        )
        for j in range(n)
    )


def special_generators(p: int, n: int, root_shift: int = 0) -> GeneratorSet:
    """The explicit lifts of the V basis and the n class generators."""
    spec = special_family(p, n)
    ctx = spec.ambient
    equations = tuple(g.embed(ctx) for g in special_equations(p, n))
    X = Poly.x(ctx)
    pieces = []
    matrices = []
    for y in spec.v_basis:
        s = (y ** p - y).to_int()
        L = special_rep_matrix(p, n, s)
        M = linalg.transpose(L)
        polys = []
        for i in range(1, n + 1):
            poly = X.scale(s ** i * pow(math.factorial(i), -1, p))
            if i == p - 1:
                poly = poly + t_polynomial(p, y)
            polys.append(poly)
        consts = [g.evaluate(y) for g in equations]
        pieces.append((y, M, polys, consts))
        matrices.append((y, M))
    const_ctx = constant_field(ctx, (c for *_, consts in pieces for c in consts))
    space = AutSpace(p, n, ctx, const_ctx)
    generators = []
    for y, M, polys, consts in pieces:
        roots = [artin_schreier_root(embed(c, const_ctx)) + root_shift for c in consts]
        generators.append(Aut(space, y, M, tuple(polys), tuple(roots)))
    generators.extend(space.class_generators())
    return GeneratorSet(space, equations, tuple(generators), PhiFamily(p, n, tuple(matrices)))


# Base change

def base_change(spec: CoverSpec, S0: TwistedPoly, bound: Optional[int] = None) -> CoverSpec:
    """Pull the cover back along X -> S0(X)."""
    if not S0.is_separable():
        raise NotSeparable(f"{S0} is not separable")
    if S0.fcoeffs == (S0.ctx.one,):
        return spec
    ctx = common_field(spec.ambient, S0.ctx)
    S = S0.embed(ctx)
    P_V = subspace_poly([embed(y, ctx) for y in spec.v_basis], ctx)
    ambient, basis = zero_set(twisted_mul(P_V, S), ctx, bound)
    substitution = S.to_poly()
    functions = tuple(
        reduce(f.reduced.embed(ctx).compose(substitution)).embed(ambient)
        for f in spec.functions
    )
    logger.info("Base change by %s: v %d -> %d over %r", S0, spec.v, len(basis), ambient)
    return CoverSpec(spec.p, ambient, functions, tuple(basis))


# Families with trivial representation

def gamma_family(p: int, s: int, d: int, gammas: Sequence[FieldElement], S1: TwistedPoly,
                 constants: Optional[Sequence[Scalar]] = None, bound: Optional[int] = None) -> CoverSpec:
    """f_i = X (gamma_i S1)(X) + c_i X with gamma_1 = 1 and the gammas independent in F_p^d."""
    n = len(gammas)
    if n < 1:
        raise ParameterConstraintViolated("at least one gamma is needed")
    if s < 1 or d < 1 or s % d:
        raise ParameterConstraintViolated(f"d = {d} must divide s = {s}")
    if n > d:
        raise ParameterConstraintViolated(f"{n} independent gammas do not fit in F_{p}^{d}")
    if S1.s != s:
        raise ParameterConstraintViolated(f"S1 has F-degree {S1.s}, expected {s}")
    if gammas[0] != 1:
        raise ParameterConstraintViolated("gamma_1 must be 1")
    for g in gammas:
        if g.ctx.p != p or d % element_degree(g):
            raise ParameterConstraintViolated(f"gamma = {g} is not in F_{p}^{d}")
    for j, a in enumerate(S1.fcoeffs):
        if a and j % d:
            raise SupportViolation(f"S1 has a term F^{j} with {j} not a multiple of {d}")
    constants = list(constants) if constants is not None else [0] * n
    if len(constants) != n:
        raise ParameterConstraintViolated("one constant per gamma is needed")
    ctxs = [S1.ctx] + [g.ctx for g in gammas] + [c.ctx for c in constants if isinstance(c, FieldElement)]
    ctx = common_field(*ctxs)
    S1 = S1.embed(ctx)
    X = Poly.x(ctx)
    functions = []
    for g, c in zip(gammas, constants):
        c = embed(c, ctx) if isinstance(c, FieldElement) else ctx.from_int(c)
        functions.append(X * S1.scale(embed(g, ctx)).to_poly() + X.scale(c))
    gamma_decomposition([S1.scale(embed(g, ctx)) for g in gammas])
    ambient, basis = zero_set(palindromic(functions[0]), ctx, bound)
    return CoverSpec(p, ambient, tuple(reduce(f).embed(ambient) for f in functions), tuple(basis))


# Universal families at p = 5

UNIVERSAL_KEYS = {
    2: ("b0", "b5"),
    3: ("b0", "c7", "c9"),
    4: ("b0", "c7", "d8", "d11", "d13"),
}


def _universal_params(n: int, params: Mapping[str, Scalar]) -> tuple[FieldCtx, dict[str, FieldElement]]:
    if n not in UNIVERSAL_KEYS:
        raise OutOfRange(f"universal families exist for n in 2, 3, 4, got {n}")
    unknown = set(params) - set(UNIVERSAL_KEYS[n])
    if unknown:
        raise ParameterConstraintViolated(f"unexpected parameters for n = {n}: {', '.join(sorted(unknown))}")
    if "b0" not in params:
        raise ParameterConstraintViolated("b0 is required")
    ctxs = [v.ctx for v in params.values() if isinstance(v, FieldElement)]
    if any(c.p != 5 for c in ctxs):
        raise FieldMismatch("universal families live in characteristic 5")
    ctx = common_field(*ctxs) if ctxs else field(5)
    values = {}
    for key in UNIVERSAL_KEYS[n]:
        v = params.get(key, 0)
        values[key] = embed(v, ctx) if isinstance(v, FieldElement) else ctx.from_int(v)
    if not values["b0"]:
        raise ParameterConstraintViolated("b0 must be nonzero")
    return ctx, values


def universal_constraint(b0: FieldElement, t: FieldElement) -> FieldElement:
    """2t + (3 b0^24 + 3) t^5 + 2 b0^24 t^25."""
    return 2 * t + (3 * b0 ** 24 + 3) * t ** 5 + 2 * b0 ** 24 * t ** 25


def universal_equations(n: int, params: Mapping[str, Scalar]) -> list[Poly]:
    ctx, v = _universal_params(n, params)
    b0 = v["b0"]
    one = ctx.one
    if n == 4:
        if b0 ** 96 != 1:
            raise ParameterConstraintViolated("b0^96 = 1 is required for n = 4")
        if universal_constraint(b0, v["d8"] - v["c7"]):
            raise ParameterConstraintViolated("2t + (3 b0^24 + 3) t^5 + 2 b0^24 t^25 = 0 fails for t = d8 - c7")
    f1 = {6: one, 2: 2 * (b0 ** 24 + 1) / b0 ** 4}
    f2 = {11: b0 ** 5, 7: 4 * b0 ** 25, 3: 3 * (4 * b0 ** 48 + 1) / b0 ** 3}
    if n == 2:
        f2[1] = v["b5"]
        return [Poly.from_terms(ctx, f1), Poly.from_terms(ctx, f2)]
    c7 = v["c7"]
    f2[1] = 2 * (c7 - c7 ** 5) / b0 ** 5
    f3 = {
        16: 4 * b0 ** 10,
        12: 4 * b0 ** 30,
        8: 4 * b0 ** 50,
        6: c7 ** 5,
        4: 4 * (b0 ** 72 + 1) / b0 ** 2,
        2: 2 * c7 * (c7 ** 4 * b0 ** 24 + 1) / b0 ** 4,
    }
    if n == 3:
        f3[1] = v["c9"]
        return [Poly.from_terms(ctx, f) for f in (f1, f2, f3)]
    d8, d11 = v["d8"], v["d11"]
    f3[1] = 2 * (d11 - d11 ** 5) / b0 ** 5
    x3 = (
        (b0 ** 24 + b0 ** 48) * c7 ** 25
        + (2 + 4 * b0 ** 24 + 4 * b0 ** 48) * c7 ** 5
        + 3 * c7
        + (4 * b0 ** 48 + 4 * b0 ** 24) * d8 ** 25
        + (b0 ** 24 + 3 + 3 * b0 ** 48) * d8 ** 5
    ) / b0 ** 3
    f4 = {
        21: 2 * b0 ** 15,
        17: b0 ** 35,
        13: 4 * b0 ** 55,
        11: d8 ** 5 * b0 ** 5,
        9: 3 * b0 ** 75,
        7: 4 * d8 ** 25 * b0 ** 25 + 4 * b0 ** 25 * c7 ** 5 + b0 ** 25 * c7 ** 25,
        6: d11 ** 5,
        3: x3,
        2: 2 * d11 * (d11 ** 4 * b0 ** 24 + 1) / b0 ** 4,
        1: v["d13"],
    }
    return [Poly.from_terms(ctx, f) for f in (f1, f2, f3, f4)]


def universal_p5(n: int, params: Mapping[str, Scalar], bound: Optional[int] = None) -> CoverSpec:
    equations = universal_equations(n, params)
    ctx = equations[0].ctx
    ambient, basis = zero_set(palindromic(equations[0]), ctx, bound)
    return CoverSpec(5, ambient, tuple(reduce(f).embed(ambient) for f in equations), tuple(basis))


def iso_criterion_n2(params: Mapping[str, Scalar], other: Mapping[str, Scalar]) -> bool:
    """(b0'/b0)^24 = 1 and b5' = +-(b0'/b0) b5."""
    ctx_a, a = _universal_params(2, params)
    ctx_b, b = _universal_params(2, other)
    ctx = common_field(ctx_a, ctx_b)
    b0, b5 = embed(a["b0"], ctx), embed(a["b5"], ctx)
    b0p, b5p = embed(b["b0"], ctx), embed(b["b5"], ctx)
    r = b0p / b0
    return r ** 24 == 1 and (b5p == r * b5 or b5p == -(r * b5))


# Family directives

@dataclass(frozen=True)
class FamilyParams:
    """A family name with its parameters, as written in spec files."""

    variant: str
    p: int
    n: int
    values: dict = dataclass_field(default_factory=dict)

    def build(self, bound: Optional[int] = None) -> CoverSpec:
        """The cover, with splitting fields searched up to the given extension degree."""
        if self.variant == "special":
            return special_family(self.p, self.n, bound)
        if self.variant == "universal":
            if self.p != 5:
                raise OutOfRange("universal families are only known for p = 5")
            return universal_p5(self.n, self.values, bound)
        if self.variant == "base-change":
            base = special_family(self.p, self.n, bound)
            s0 = int(self.values.get("s0", 1))
            ctx = field(self.p)
            wp = TwistedPoly.wp(ctx)
            S0 = TwistedPoly.identity(ctx)
            for _ in range(s0):
                S0 = twisted_mul(wp, S0)
            return base_change(base, S0, bound)
        raise OutOfRange(f"unknown family {self.variant}")

    @classmethod
    def from_directive(cls, directive: FamilyDirective, ctx: FieldCtx) -> "FamilyParams":
        """Read parameter values as elements of the spec file field."""
        values: dict = {}
        for key, text in directive.values.items():
            if key == "s0":
                if not text.isdigit():
                    raise ParseError(f"s0 must be a non-negative integer, got '{text}'")
                values[key] = int(text)
            else:
                values[key] = parse_element(text, ctx)
        return cls(directive.variant, ctx.p, directive.n, values)

    def to_directive(self, ctx: Optional[FieldCtx] = None) -> FamilyDirective:
        """Values are written as elements of ctx, the field of the spec file they go into."""
        values = {}
        for key, v in sorted(self.values.items()):
            if isinstance(v, FieldElement) and ctx is not None:
                v = embed(v, ctx)
            values[key] = str(v)
        return FamilyDirective(variant=self.variant, n=self.n, values=values)


def family_to_spec_text(spec: CoverSpec, params: Optional[FamilyParams] = None) -> str:
    return format_spec(spec, params.to_directive(spec.ambient) if params is not None else None)
