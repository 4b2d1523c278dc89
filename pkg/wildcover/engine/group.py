"""Automorphism groups of covers.

An element sigma is stored as (y, M, P, Z) and acts by X -> X + y and
[W] -> M [W] + [P(X)] + [Z], with P(0) = 0. Composition follows
(sigma o tau)(x) = sigma(tau(x)), which gives

    y = y_sigma + y_tau
    M = M_tau M_sigma
    P = M_tau P_sigma(X) + P_tau(X + y_sigma)
    Z = M_tau Z_sigma + Z_tau

with the constant term of P moved into Z. P lives over the ambient field of
the cover and Z over the field holding the Artin-Schreier roots, which may
be a degree p extension of it.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from wildcover import config
from wildcover.engine.cover import Check, CoverSpec, RepMatrix, solve_rep_matrix
from wildcover.errors import (
    BoundExceeded, FieldMismatch, Mismatch, NotMaxJumps, NotProportional, NotStable,
    OrderBoundExceeded, OutOfRange, WrongShape,
)
from wildcover.models import linalg
from wildcover.models.asw import wp_poly
from wildcover.models.field import FieldCtx, FieldElement, artin_schreier_root, embed, field
from wildcover.models.poly import Poly

logger = logging.getLogger(__name__)


# Matrix families and the Lambda filtration

@dataclass(frozen=True)
class PhiFamily:
    """Lower unitriangular Phi(y) = transpose of L(y) for the generators y of V."""

    p: int
    n: int
    generators: tuple[tuple[Optional[FieldElement], linalg.Matrix], ...]

    @classmethod
    def from_matrices(cls, matrices: Sequence[RepMatrix], p: int, n: Optional[int] = None) -> "PhiFamily":
        if n is None:
            if not matrices:
                raise OutOfRange("n is needed for an empty family")
            n = len(matrices[0].entries)
        return cls(p, n, tuple((mat.y, mat.phi) for mat in matrices))

    @classmethod
    def from_phis(cls, phis: Sequence[Sequence[Sequence[int]]], p: int) -> "PhiFamily":
        rows = [tuple(tuple(x % p for x in row) for row in phi) for phi in phis]
        n = len(rows[0]) if rows else 0
        for phi in rows:
            if len(phi) != n or any(len(row) != n for row in phi):
                raise WrongShape("every matrix must be n x n")
            for i in range(n):
                if phi[i][i] != 1 or any(phi[i][j] for j in range(i + 1, n)):
                    raise WrongShape("matrices must be lower unitriangular")
        return cls(p, n, tuple((None, phi) for phi in rows))

    @property
    def matrices(self) -> list[linalg.Matrix]:
        return [phi for _, phi in self.generators]

    def truncate(self, d: int) -> "PhiFamily":
        """Action on the first d coordinates, i.e. on the quotient by the last n - d."""
        if not 0 <= d <= self.n:
            raise OutOfRange(f"d = {d} must lie between 0 and {self.n}")
        return PhiFamily(self.p, d, tuple(
            (y, tuple(row[:d] for row in phi[:d])) for y, phi in self.generators
        ))

    def commuting(self) -> bool:
        return all(
            linalg.mat_mul(a, b, self.p) == linalg.mat_mul(b, a, self.p)
            for a, b in itertools.combinations(self.matrices, 2)
        )


def lambda_filtration(fam: PhiFamily) -> list[list[list[int]]]:
    """Bases of 0 = Lambda_0 < Lambda_1 < ..., each step the common fixed space on the quotient."""
    p, n = fam.p, fam.n
    chain: list[list[list[int]]] = [[]]
    current: list[list[int]] = []
    while len(current) < n:
        # w lies in the next step iff (Phi(y) - I) w is in the current step for every y
        annihilator = linalg.null_space(current, n, p) if current else [
            [1 if i == j else 0 for j in range(n)] for i in range(n)
        ]
        rows = []
        for phi in fam.matrices:
            shifted = [[(phi[i][j] - (1 if i == j else 0)) % p for j in range(n)] for i in range(n)]
            for c in annihilator:
                rows.append([sum(c[i] * shifted[i][j] for i in range(n)) % p for j in range(n)])
        nxt = linalg.null_space(rows, n, p)
        if len(nxt) <= len(current):
            break
        current = nxt
        chain.append(current)
    return chain


def lambda_dims(fam: PhiFamily) -> tuple[int, ...]:
    return tuple(len(step) for step in lambda_filtration(fam))


def max_jumps(fam: PhiFamily) -> bool:
    """Every subdiagonal form l_{i+1,i} is nonzero on some generator."""
    return all(
        any(phi[i + 1][i] for phi in fam.matrices)
        for i in range(fam.n - 1)
    )


@dataclass(frozen=True)
class Normalization:
    scales: tuple[int, ...]
    lambdas: tuple[int, ...]
    form: tuple[int, ...]
    family: PhiFamily


def homothety_normalize(fam: PhiFamily) -> Normalization:
    """Rescale the basis by diag(c_i) so all subdiagonals equal l_{2,1}."""
    p, n = fam.p, fam.n
    if not max_jumps(fam):
        raise NotMaxJumps("some subdiagonal form vanishes on every generator")
    if n > p:
        raise OutOfRange(f"maximal jumps force n <= p, got n = {n} and p = {p}")
    phis = fam.matrices
    if n == 1:
        return Normalization((1,), (), (), fam)
    base = [phi[1][0] for phi in phis]
    pivot = next(k for k, b in enumerate(base) if b)
    lambdas = []
    for i in range(n - 1):
        lam = phis[pivot][i + 1][i] * pow(base[pivot], -1, p) % p
        if lam == 0 or any(phi[i + 1][i] != lam * b % p for phi, b in zip(phis, base)):
            raise NotProportional(f"l_{i + 2},{i + 1} is not a multiple of l_2,1")
        lambdas.append(lam)
    scales = [1]
    for lam in lambdas:
        scales.append(scales[-1] * lam % p)
    inverse = [pow(c, -1, p) for c in scales]
    normalized = tuple(
        (y, tuple(tuple(inverse[i] * phi[i][j] * scales[j] % p for j in range(n)) for i in range(n)))
        for y, phi in fam.generators
    )
    return Normalization(tuple(scales), tuple(lambdas), tuple(base), PhiFamily(p, n, normalized))


# Group elements

@dataclass(frozen=True)
class AutSpace:
    """Where the automorphisms of one cover live."""

    p: int
    n: int
    ctx: FieldCtx
    const_ctx: FieldCtx

    def lift(self, c: FieldElement) -> FieldElement:
        return embed(c, self.const_ctx)

    def identity(self) -> "Aut":
        zero = Poly.zero(self.ctx)
        return Aut(self, self.ctx.zero, linalg.identity(self.n),
                   (zero,) * self.n, (self.const_ctx.zero,) * self.n)

    def class_generators(self) -> list["Aut"]:
        """W_i -> W_i + 1."""
        zero = Poly.zero(self.ctx)
        return [
            Aut(self, self.ctx.zero, linalg.identity(self.n), (zero,) * self.n,
                tuple(self.const_ctx.one if j == i else self.const_ctx.zero for j in range(self.n)))
            for i in range(self.n)
        ]


class Aut:
    """X -> X + y, [W] -> M [W] + [P(X)] + [Z]."""

    __slots__ = ("space", "y", "M", "P", "Z", "_key")

    def __init__(self, space: AutSpace, y: FieldElement, M: linalg.Matrix,
                 P: tuple[Poly, ...], Z: tuple[FieldElement, ...]):
        self.space = space
        self.y = y
        self.M = M
        self.P = P
        self.Z = Z
        self._key = (
            y.coeffs, M,
            tuple(tuple(c.coeffs for c in poly.coeffs) for poly in P),
            tuple(z.coeffs for z in Z),
        )

    @classmethod
    def build(cls, space: AutSpace, y: FieldElement, M: Sequence[Sequence[int]],
              P: Sequence[Poly], Z: Sequence[FieldElement]) -> "Aut":
        """Checked constructor; P loses its constant term to Z."""
        n, p = space.n, space.p
        M = tuple(tuple(x % p for x in row) for row in M)
        if len(M) != n or any(len(row) != n for row in M) or len(P) != n or len(Z) != n:
            raise WrongShape(f"an automorphism of {n} equations needs n x n data")
        for i in range(n):
            if M[i][i] != 1 or any(M[i][j] for j in range(i + 1, n)):
                raise WrongShape("M must be lower unitriangular")
        if y.ctx != space.ctx or any(poly.ctx != space.ctx for poly in P):
            raise FieldMismatch(f"y and P must live over {space.ctx!r}")
        polys, consts = [], []
        for poly, z in zip(P, Z):
            z = embed(z, space.const_ctx)
            c = poly.coeff(0)
            if c:
                poly = poly - c
                z = z + space.lift(c)
            polys.append(poly)
            consts.append(z)
        return cls(space, y, M, tuple(polys), tuple(consts))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Aut):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def is_identity(self) -> bool:
        return (not self.y and self.M == linalg.identity(self.space.n)
                and not any(self.P) and not any(self.Z))

    def describe(self) -> dict:
        return {
            "y": str(self.y),
            "M": [list(row) for row in self.M],
            "P": [str(poly) for poly in self.P],
            "Z": [str(z) for z in self.Z],
        }

    def __repr__(self) -> str:
        return f"Aut(y={self.y}, M={self.M}, P={[str(q) for q in self.P]}, Z={[str(z) for z in self.Z]})"


def _same_space(sigma: Aut, tau: Aut) -> AutSpace:
    if sigma.space is not tau.space and sigma.space != tau.space:
        raise Mismatch("automorphisms of different covers")
    return sigma.space


def _component(sigma: Aut, tau: Aut, i: int) -> tuple[Poly, FieldElement]:
    space = sigma.space
    poly = tau.P[i].shift(sigma.y) if tau.P[i] else tau.P[i]
    z = tau.Z[i]
    for j, c in enumerate(tau.M[i]):
        if c:
            if sigma.P[j]:
                poly = poly + sigma.P[j].scale(c)
            if sigma.Z[j]:
                z = z + sigma.Z[j] * c
    const = poly.coeff(0)
    if const:
        poly = poly - const
        z = z + space.lift(const)
    return poly, z


def compose(sigma: Aut, tau: Aut) -> Aut:
    """sigma o tau."""
    space = _same_space(sigma, tau)
    parts = [_component(sigma, tau, i) for i in range(space.n)]
    return Aut(
        space,
        sigma.y + tau.y,
        linalg.mat_mul(tau.M, sigma.M, space.p),
        tuple(poly for poly, _ in parts),
        tuple(z for _, z in parts),
    )


def inverse(sigma: Aut) -> Aut:
    space = sigma.space
    p, n = space.p, space.n
    M = linalg.mat_inverse_unitriangular(sigma.M, p)
    back = -sigma.y
    shifted = [poly.shift(back) for poly in sigma.P]
    P, Z = [], []
    for i in range(n):
        # Q = -M P_sigma(X - y_sigma); P = Q - Q(0) and Z = -M Z_sigma + Q(0)
        q = Poly.zero(space.ctx)
        z = space.const_ctx.zero
        for j, c in enumerate(M[i]):
            if c:
                q = q - shifted[j].scale(c)
                z = z - sigma.Z[j] * c
        const = q.coeff(0)
        if const:
            q = q - const
            z = z + space.lift(const)
        P.append(q)
        Z.append(z)
    return Aut(space, back, M, tuple(P), tuple(Z))


def power(sigma: Aut, k: int) -> Aut:
    if k < 0:
        return power(inverse(sigma), -k)
    result = sigma.space.identity()
    base = sigma
    while k:
        if k & 1:
            result = compose(result, base)
        k >>= 1
        if k:
            base = compose(base, base)
    return result


def commutator(a: Aut, b: Aut) -> Aut:
    """a b a^-1 b^-1."""
    return compose(compose(compose(a, b), inverse(a)), inverse(b))


def element_order(sigma: Aut, bound_exponent: Optional[int] = None) -> int:
    bound = sigma.space.p ** (bound_exponent or config.ORDER_BOUND_EXPONENT)
    current = sigma
    k = 1
    while not current.is_identity():
        current = compose(current, sigma)
        k += 1
        if k > bound:
            raise OrderBoundExceeded(f"no power up to {bound} is the identity")
    return k


def commutes(a: Aut, b: Aut) -> bool:
    """a b == b a, compared one equation at a time."""
    space = _same_space(a, b)
    if linalg.mat_mul(a.M, b.M, space.p) != linalg.mat_mul(b.M, a.M, space.p):
        return False
    for i in range(space.n):
        if _component(a, b, i) != _component(b, a, i):
            return False
    return True


# Closure and subgroups

@dataclass(frozen=True)
class GroupClosure:
    space: AutSpace
    elements: tuple[Aut, ...]
    members: frozenset
    generators: tuple[Aut, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, sigma: Aut) -> bool:
        return sigma in self.members


def group_closure(gens: Iterable[Aut], bound: Optional[int] = None,
                  space: Optional[AutSpace] = None) -> GroupClosure:
    """Breadth-first closure; generators already inside are skipped."""
    gens = list(gens)
    bound = bound or config.CLOSURE_BOUND
    if space is None:
        if not gens:
            raise OutOfRange("an empty generator list needs an explicit space")
        space = gens[0].space
    identity = space.identity()
    elements = [identity]
    seen = {identity}
    used: list[Aut] = []
    for g in gens:
        _same_space(identity, g)
        if g in seen:
            continue
        used.append(g)
        frontier = list(elements)
        while frontier:
            nxt = []
            for x in frontier:
                for h in used:
                    z = compose(x, h)
                    if z not in seen:
                        seen.add(z)
                        elements.append(z)
                        nxt.append(z)
                        if len(elements) > bound:
                            raise BoundExceeded(f"the group has more than {bound} elements")
            frontier = nxt
        logger.debug("Closure grew to %d elements with %d generators", len(elements), len(used))
    logger.info("Group closure has %d elements", len(elements))
    return GroupClosure(space, tuple(elements), frozenset(seen), tuple(used))


def center(closure: GroupClosure) -> tuple[Aut, ...]:
    return tuple(
        sigma for sigma in closure.elements
        if all(commutes(sigma, g) for g in closure.generators)
    )


def derived(closure: GroupClosure) -> GroupClosure:
    """Normal closure of the commutators of the generators."""
    space = closure.space
    gens = closure.generators
    seeds = [c for c in (commutator(a, b) for a, b in itertools.combinations(gens, 2)) if not c.is_identity()]
    sub = group_closure(seeds, space=space)
    conjugators = [(g, inverse(g)) for g in gens]
    while True:
        extra = next((
            c for g, g_inv in conjugators for s in sub.elements
            for c in (compose(compose(g, s), g_inv),) if c not in sub
        ), None)
        if extra is None:
            return sub
        seeds.append(extra)
        sub = group_closure(seeds, space=space)


def _is_power_of(order: int, p: int) -> bool:
    while order % p == 0:
        order //= p
    return order == 1


def exponent(closure: GroupClosure) -> int:
    p = closure.space.p
    if not _is_power_of(closure.order, p):
        return math.lcm(*(element_order(sigma) for sigma in closure.elements))
    # p-group: iterate x -> x^p on the whole set until only the identity is left
    level = {sigma for sigma in closure.elements if not sigma.is_identity()}
    e = 0
    while level:
        level = {x for x in (power(sigma, p) for sigma in level) if not x.is_identity()}
        e += 1
    return p ** e


def quotient_profile(closure: GroupClosure, normal: Iterable[Aut]) -> tuple[int, int]:
    """Order and exponent of G/N."""
    normal = set(normal)
    p = closure.space.p
    if closure.order % len(normal):
        raise Mismatch("the subgroup order does not divide the group order")
    order = closure.order // len(normal)
    if not _is_power_of(order, p):
        raise Mismatch("quotient_profile expects a p-group")
    e = 0
    level = {sigma for sigma in closure.elements if sigma not in normal}
    while level:
        level = {x for x in (power(sigma, p) for sigma in level) if x not in normal}
        e += 1
    return order, p ** e


# Reports and structural checks

@dataclass(frozen=True)
class GroupReport:
    order: int
    exponent: int
    center_order: int
    center_generators: tuple[Aut, ...]
    derived_order: int
    lambda_dims: tuple[int, ...]
    checks: tuple[Check, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class GroupAnalysis:
    closure: GroupClosure
    center: tuple[Aut, ...]
    derived: GroupClosure
    exponent: int
    family: Optional[PhiFamily] = None


def _irredundant(elements: Sequence[Aut], space: AutSpace) -> tuple[Aut, ...]:
    return group_closure(elements, space=space).generators


def analyze(closure: GroupClosure, family: Optional[PhiFamily] = None) -> GroupAnalysis:
    return GroupAnalysis(closure, center(closure), derived(closure), exponent(closure), family)


def center_shape(sigma: Aut) -> bool:
    """y = 0, M = I, P = 0, Z_1 .. Z_(n-1) = 0 and Z_n in F_p."""
    return (
        not sigma.y
        and sigma.M == linalg.identity(sigma.space.n)
        and not any(sigma.P)
        and not any(sigma.Z[:-1])
        and sigma.Z[-1].is_prime_field()
    )


def center_characterization_check(closure: GroupClosure, central: Iterable[Aut]) -> bool:
    central = set(central)
    return all(center_shape(sigma) == (sigma in central) for sigma in closure.elements)


def center_inside_derived(analysis: GroupAnalysis) -> bool:
    p = analysis.closure.space.p
    return len(analysis.center) == p and all(z in analysis.derived for z in analysis.center)


def extraspecial_check(analysis: GroupAnalysis) -> bool:
    """Order p^3, exponent p, center = derived of order p."""
    p = analysis.closure.space.p
    return (
        analysis.closure.order == p ** 3
        and analysis.exponent == p
        and len(analysis.center) == p
        and analysis.derived.members == frozenset(analysis.center)
    )


def translation_kernel(closure: GroupClosure) -> list[Aut]:
    """Elements fixing X."""
    return [sigma for sigma in closure.elements if not sigma.y]


def exact_sequence_check(upper: GroupAnalysis, lower: GroupAnalysis) -> Check:
    """G[n]/Z(G[n]) against G[n-1] by order, exponent and Lambda dimensions."""
    order, exp = quotient_profile(upper.closure, upper.center)
    same = order == lower.closure.order and exp == lower.exponent
    detail = f"quotient {order}, exponent {exp}; next {lower.closure.order}, exponent {lower.exponent}"
    if upper.family is not None and lower.family is not None:
        top = lambda_dims(upper.family.truncate(upper.family.n - 1))
        same = same and top == lambda_dims(lower.family)
        detail += f"; Lambda dims {top} vs {lambda_dims(lower.family)}"
    return Check("center quotient matches the truncated group", same, detail)


def group_report(analysis: GroupAnalysis) -> GroupReport:
    closure = analysis.closure
    space = closure.space
    p = space.p
    dims = lambda_dims(analysis.family) if analysis.family is not None else ()
    checks = [
        Check("order is a power of p", _is_power_of(closure.order, p), str(closure.order)),
        Check("center shape", center_characterization_check(closure, analysis.center)),
    ]
    if analysis.family is not None:
        kernel = translation_kernel(closure)
        if len(kernel) == p ** space.n:
            fixed = sum(1 for sigma in analysis.center if not sigma.y)
            checks.append(Check(
                "center on the W-translations = Lambda_1",
                fixed == p ** dims[1] if len(dims) > 1 else fixed == 1,
                f"{fixed} central W-translations, dim Lambda_1 = {dims[1] if len(dims) > 1 else 0}",
            ))
        if max_jumps(analysis.family):
            checks.append(Check("Z(G) inside D(G) of order p", center_inside_derived(analysis)))
    report = GroupReport(
        order=closure.order,
        exponent=analysis.exponent,
        center_order=len(analysis.center),
        center_generators=_irredundant(analysis.center, space),
        derived_order=analysis.derived.order,
        lambda_dims=dims,
        checks=tuple(checks),
    )
    for check in report.checks:
        if not check.passed:
            logger.warning("Check failed: %s %s", check.tag, check.detail)
    return report


# Generators for a verified cover

@dataclass(frozen=True)
class GeneratorSet:
    space: AutSpace
    equations: tuple[Poly, ...]
    generators: tuple[Aut, ...]
    family: PhiFamily


def wp_preimage(q: Poly) -> Optional[tuple[Poly, FieldElement]]:
    """(h, c) with h^p - h + c = q and h(0) = 0, by peeling p-th powers off the top; None if q has no such form."""
    ctx = q.ctx
    p = ctx.p
    terms: dict[int, FieldElement] = {}
    rest = q
    while rest.degree > 0:
        e = rest.degree
        if e % p:
            return None
        root = rest.leading.frobenius(-1)
        b = e // p
        terms[b] = root
        rest = rest - Poly.monomial(ctx, e, rest.leading) + Poly.monomial(ctx, b, root)
    return Poly.from_terms(ctx, terms), rest.coeff(0)


def constant_field(ctx: FieldCtx, constants: Iterable[FieldElement]) -> FieldCtx:
    if all(c.trace() == 0 for c in constants):
        return ctx
    extended = field(ctx.p, ctx.m * ctx.p)
    logger.info("Artin-Schreier constants need %r", extended)
    return extended


def cover_generators(spec: CoverSpec, root_shift: int = 0,
                     matrices: Optional[Sequence[RepMatrix]] = None) -> GeneratorSet:
    """Lifts of the V basis and the n class generators, for any cover whose translations lift."""
    p, n, ctx = spec.p, spec.n, spec.ambient
    if matrices is None:
        matrices = [solve_rep_matrix(spec, y) for y in spec.v_basis]
    equations = tuple(f.reduced for f in spec.functions)
    pieces = []
    for mat in matrices:
        M = mat.phi
        polys, consts = [], []
        for i in range(n):
            q = equations[i].shift(mat.y)
            for j, c in enumerate(M[i]):
                if c:
                    q = q - equations[j].scale(c)
            solved = wp_preimage(q)
            if solved is None:
                raise NotStable(i + 1, f"translation by {mat.y} leaves no Artin-Schreier preimage for f{i + 1}")
            polys.append(solved[0])
            consts.append(solved[1])
        pieces.append((mat.y, M, polys, consts))
    const_ctx = constant_field(ctx, (c for *_, consts in pieces for c in consts))
    space = AutSpace(p, n, ctx, const_ctx)
    generators = []
    for y, M, polys, consts in pieces:
        roots = [artin_schreier_root(embed(c, const_ctx)) + root_shift for c in consts]
        generators.append(Aut(space, y, M, tuple(polys), tuple(roots)))
    generators.extend(space.class_generators())
    family = PhiFamily.from_matrices(matrices, p, n)
    return GeneratorSet(space, equations, tuple(generators), family)


def is_automorphism(sigma: Aut, equations: Sequence[Poly]) -> bool:
    """g_i(X + y) - sum_j M_ij g_j = P_i^p - P_i + Z_i^p - Z_i for every i."""
    space = sigma.space
    for i, g in enumerate(equations):
        q = g.shift(sigma.y)
        for j, c in enumerate(sigma.M[i]):
            if c:
                q = q - equations[j].scale(c)
        q = q - wp_poly(sigma.P[i])
        if q.degree > 0:
            return False
        z = sigma.Z[i]
        if space.lift(q.coeff(0)) != z ** space.p - z:
            return False
    return True
