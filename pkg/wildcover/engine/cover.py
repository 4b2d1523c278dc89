"""Verification engine for p-group actions on Artin-Schreier covers of the line."""
import itertools
import logging
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import Optional, Sequence

from wildcover.errors import (
    DependentBasis, DependentClasses, FieldMismatch, NotStable, OutOfRange,
    RepresentationLawViolated, WildcoverError,
)
from wildcover.models import linalg
from wildcover.models.additive import TwistedPoly, palindromic, split_xs, subspace_poly, twisted_mul, zero_set
from wildcover.models.asw import ASClass, reduce, same_field, sigma_level
from wildcover.models.field import FieldCtx, FieldElement
from wildcover.models.poly import Poly

logger = logging.getLogger(__name__)


# Domain types

@dataclass(frozen=True)
class CoverSpec:
    """Equations W_i^p - W_i = f_i(X) together with a space V of translations X -> X + y."""

    p: int
    ambient: FieldCtx
    functions: tuple[ASClass, ...]
    v_basis: tuple[FieldElement, ...]

    def __post_init__(self):
        if not self.functions:
            raise OutOfRange("a cover needs at least one equation")
        for f in self.functions:
            if f.ctx != self.ambient:
                raise FieldMismatch(f"f = {f} is not defined over the ambient field {self.ambient!r}")
        for y in self.v_basis:
            if y.ctx != self.ambient:
                raise FieldMismatch(f"y = {y} is not in the ambient field {self.ambient!r}")
        if not linalg.independent([y.coeffs for y in self.v_basis], self.p):
            raise DependentBasis("the basis of V is linearly dependent over F_p")
        if class_rank([f.reduced for f in self.functions], self.p) < len(self.functions):
            raise DependentClasses("the functions are linearly dependent modulo h^p - h")

    @property
    def n(self) -> int:
        return len(self.functions)

    @property
    def v(self) -> int:
        return len(self.v_basis)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(f.degree for f in self.functions)


@dataclass(frozen=True)
class AdaptedBasis:
    functions: tuple[ASClass, ...]
    degrees: tuple[int, ...]
    jumps: tuple[int, ...]
    dims: tuple[int, ...]

    @property
    def p(self) -> int:
        return self.functions[0].ctx.p


@dataclass(frozen=True)
class RepMatrix:
    """Upper unitriangular L(y): Delta_y f_i = sum_j l_{j,i}(y) f_j modulo h^p - h."""

    y: FieldElement
    entries: linalg.Matrix

    def ell(self, j: int, i: int) -> int:
        """Entry l_{j,i}, 1-based."""
        return self.entries[j - 1][i - 1]

    @property
    def phi(self) -> linalg.Matrix:
        return linalg.transpose(self.entries)

    def is_identity(self) -> bool:
        return self.entries == linalg.identity(len(self.entries))


@dataclass(frozen=True)
class RamificationReport:
    p: int
    different: int
    genus: int
    order: int
    is_big_action: bool
    hurwitz_ok: bool
    degrees: tuple[int, ...]
    jumps: tuple[int, ...]

    @property
    def ratio(self) -> Optional[Fraction]:
        """|G| / g, None in genus 0."""
        return Fraction(self.order, self.genus) if self.genus else None

    @property
    def ratio_text(self) -> str:
        return f"{self.order}/{self.genus}"

    @property
    def ratio_genus_squared(self) -> Optional[Fraction]:
        return Fraction(self.order, self.genus ** 2) if self.genus else None

    @property
    def trivial_family_bound(self) -> Fraction:
        """4 p^n / (p^n - 1)^2."""
        q = self.p ** len(self.degrees)
        return Fraction(4 * q, (q - 1) ** 2)


@dataclass(frozen=True)
class Check:
    tag: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationResult:
    spec: CoverSpec
    basis: AdaptedBasis
    matrices: tuple[RepMatrix, ...]
    ramification: RamificationReport
    checks: tuple[Check, ...] = dataclass_field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


@dataclass(frozen=True)
class MaxJumpReport:
    levels_maximal: bool
    subdiagonals_nonzero: bool
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


@dataclass(frozen=True)
class StableTranslations:
    ambient: FieldCtx
    basis: tuple[FieldElement, ...]
    candidates: int


# Coordinates of polynomials over F_p

def _coordinate_rows(polys: Sequence[Poly], target: Optional[Poly] = None) -> tuple[list[list[int]], list[int]]:
    exponents = set()
    for f in polys:
        exponents.update(f.support())
    if target is not None:
        exponents.update(target.support())
    m = polys[0].ctx.m if polys else target.ctx.m
    rows, rhs = [], []
    for e in sorted(exponents):
        for r in range(m):
            rows.append([f.coeff(e).coeffs[r] for f in polys])
            if target is not None:
                rhs.append(target.coeff(e).coeffs[r])
    return rows, rhs


def class_rank(polys: Sequence[Poly], p: int) -> int:
    rows, _ = _coordinate_rows(polys)
    return linalg.rank(rows, len(polys), p) if rows else 0


def express(target: Poly, basis: Sequence[Poly], p: int) -> Optional[list[int]]:
    """F_p-coefficients writing target in terms of basis, None outside the span."""
    if not basis:
        return [] if target.is_zero() else None
    rows, rhs = _coordinate_rows(basis, target)
    if not rows:
        return [0] * len(basis)
    return linalg.solve(rows, rhs, p)


# Adapted bases and ramification

def _leading_vectors(block: Sequence[ASClass]) -> list[list[int]]:
    return [list(row) for row in zip(*(f.reduced.leading.coeffs for f in block))]


def is_adapted(classes: Sequence[ASClass]) -> bool:
    degrees = [f.degree for f in classes]
    if any(d < 1 for d in degrees) or degrees != sorted(degrees):
        return False
    p = classes[0].ctx.p
    for _, group in itertools.groupby(classes, key=lambda f: f.degree):
        block = list(group)
        if linalg.rank(_leading_vectors(block), len(block), p) < len(block):
            return False
    return True


def adapt_basis(classes: Sequence[ASClass]) -> AdaptedBasis:
    """Reorder and recombine classes so that no F_p-combination drops in degree."""
    if not classes:
        raise DependentClasses("no classes given")
    ctx = same_field(*classes)
    p = ctx.p
    if any(f.is_zero() for f in classes):
        raise DependentClasses("the zero class cannot belong to a basis")
    if class_rank([f.reduced for f in classes], p) < len(classes):
        raise DependentClasses("the classes are linearly dependent")
    work = list(classes)
    while True:
        work.sort(key=lambda f: f.degree)
        replaced = False
        start = 0
        while start < len(work) and not replaced:
            end = start
            while end < len(work) and work[end].degree == work[start].degree:
                end += 1
            block = work[start:end]
            if len(block) > 1:
                kernel = linalg.null_space(_leading_vectors(block), len(block), p)
                if kernel:
                    coeffs = kernel[0]
                    last = max(j for j, c in enumerate(coeffs) if c)
                    scale = pow(coeffs[last], -1, p)
                    combo = block[last].scale(0)
                    for c, f in zip(coeffs, block):
                        combo = combo + f.scale(c * scale)
                    if combo.is_zero():
                        raise DependentClasses("the classes are linearly dependent")
                    logger.debug("Replaced a class of degree %d by one of degree %d",
                                 block[last].degree, combo.degree)
                    work[start + last] = combo
                    replaced = True
            start = end
        if not replaced:
            break
    degrees = tuple(f.degree for f in work)
    jumps = tuple(sorted(set(degrees)))
    dims = (0,) + tuple(sum(1 for d in degrees if d <= mu) for mu in jumps)
    return AdaptedBasis(tuple(work), degrees, jumps, dims)


def ramification(basis: AdaptedBasis, v: int) -> RamificationReport:
    """Different exponent, genus and |G| from the adapted degrees."""
    p = basis.p
    n = len(basis.degrees)
    different = (p - 1) * sum(p ** i * (m + 1) for i, m in enumerate(basis.degrees))
    twice_genus = (p - 1) * sum(p ** i * (m - 1) for i, m in enumerate(basis.degrees))
    genus = twice_genus // 2
    order = p ** (n + v)
    return RamificationReport(
        p=p,
        different=different,
        genus=genus,
        order=order,
        is_big_action=order * (p - 1) > 2 * p * genus,
        hurwitz_ok=twice_genus % 2 == 0 and 2 * (genus - 1) == -2 * p ** n + different,
        degrees=basis.degrees,
        jumps=basis.jumps,
    )


# Representation matrices

def translation_matrix(reduced: Sequence[Poly], y: FieldElement) -> linalg.Matrix:
    """Entries l_{j,i}(y) for the given reduced representatives."""
    n = len(reduced)
    p = y.ctx.p
    entries = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    for i, f in enumerate(reduced):
        target = reduce(f.delta(y)).reduced
        solution = express(target, reduced[:i], p)
        if solution is None:
            raise NotStable(i + 1)
        for j, c in enumerate(solution):
            entries[j][i] = c % p
    return tuple(tuple(row) for row in entries)


def solve_rep_matrix(spec: CoverSpec, y: FieldElement) -> RepMatrix:
    if y.ctx != spec.ambient:
        raise FieldMismatch(f"y = {y} is not in the ambient field")
    return RepMatrix(y, translation_matrix([f.reduced for f in spec.functions], y))


def rho_trivial(matrices: Sequence[RepMatrix]) -> bool:
    return all(mat.is_identity() for mat in matrices)


def _shape(f: ASClass) -> Optional[TwistedPoly]:
    try:
        S, _ = split_xs(f.reduced)
    except WildcoverError:
        return None
    return S if S.s >= 1 else None


def trivial_representation_check(spec: CoverSpec) -> Check:
    """Every f_i is X*S_i(X) + c_i X and V lies in every Z(Ad f_i)."""
    for i, f in enumerate(spec.functions, start=1):
        if _shape(f) is None:
            return Check("trivial representation shapes", False, f"f{i} is not X*S(X) + cX")
        ad = palindromic(f.reduced)
        if any(ad.evaluate(y) for y in spec.v_basis):
            return Check("trivial representation shapes", False, f"V is not inside Z(Ad f{i})")
    return Check("trivial representation shapes", True)


def subdiagonal_form_check(spec: CoverSpec, matrices: Sequence[RepMatrix]) -> list[Check]:
    """Each nonzero l_{i,i+1} is lambda * L_i on V with lambda^p L_i^p - lambda L_i = lambda^p P_V."""
    ctx, p = spec.ambient, spec.p
    checks = []
    if not matrices:
        return checks
    P_V = subspace_poly(spec.v_basis, ctx)
    for i in range(spec.n - 1):
        values = [mat.entries[i][i + 1] for mat in matrices]
        tag = f"subdiagonal form {i + 1},{i + 2}"
        if not any(values):
            continue
        kernel = [
            sum((c * y for c, y in zip(vec, spec.v_basis)), ctx.zero)
            for vec in linalg.null_space([values], len(values), p)
        ]
        L = subspace_poly(kernel, ctx)
        b0 = next(b for b, c in enumerate(values) if c)
        lam = ctx.from_int(values[b0]) / L.evaluate(spec.v_basis[b0])
        linear = all(ctx.from_int(c) == lam * L.evaluate(y) for c, y in zip(values, spec.v_basis))
        identity = twisted_mul(TwistedPoly.wp(ctx), L.scale(lam)) == P_V.scale(lam ** p)
        checks.append(Check(tag, linear and identity, f"lambda = {lam}"))
    return checks


def verify_cover(spec: CoverSpec) -> VerificationResult:
    """Lift every translation of V, then run the big-action checks."""
    p, n = spec.p, spec.n
    basis = adapt_basis(spec.functions)
    matrices = tuple(solve_rep_matrix(spec, y) for y in spec.v_basis)
    checks = [Check("adapted basis", is_adapted(spec.functions))]

    pairs = 0
    for a, b in itertools.combinations_with_replacement(range(spec.v), 2):
        combined = solve_rep_matrix(spec, spec.v_basis[a] + spec.v_basis[b])
        product = linalg.mat_mul(matrices[a].entries, matrices[b].entries, p)
        if combined.entries != product:
            raise RepresentationLawViolated(
                f"L(y{a + 1} + y{b + 1}) differs from L(y{a + 1}) L(y{b + 1})"
            )
        pairs += 1
    checks.append(Check("representation law", True, f"{pairs} pairs"))

    degrees = spec.degrees
    zero_pattern = all(
        mat.entries[j][i] == 0
        for mat in matrices
        for i in range(n) for j in range(i)
        if degrees[i] == degrees[j]
    )
    checks.append(Check("equal-degree entries vanish", zero_pattern))

    levels = [sigma_level(f.reduced) for f in spec.functions]
    checks.append(Check(
        "level bound",
        all(level <= i + 2 for i, level in enumerate(levels)),
        f"levels {levels}",
    ))

    report = ramification(basis, spec.v)
    S1 = _shape(spec.functions[0])
    checks.append(Check("first function shape", S1 is not None, "f1 = X*S1(X) + cX"))
    checks.append(Check("p^v >= m_n + 1", p ** spec.v >= max(degrees) + 1))
    if S1 is not None:
        s1 = S1.s
        checks.append(Check("v <= 2 s1", spec.v <= 2 * s1, f"v = {spec.v}, s1 = {s1}"))
        ad = palindromic(spec.functions[0].reduced)
        checks.append(Check("V inside Z(Ad f1)", not any(ad.evaluate(y) for y in spec.v_basis)))
    else:
        checks.append(Check("v <= 2 s1", False, "f1 has no X*S1(X) + cX shape"))
    checks.append(Check("big action", report.is_big_action, f"|G|/g = {report.ratio_text}"))
    checks.append(Check("Hurwitz formula", report.hurwitz_ok))
    checks.extend(subdiagonal_form_check(spec, matrices))
    if rho_trivial(matrices):
        checks.append(trivial_representation_check(spec))

    result = VerificationResult(spec, basis, matrices, report, tuple(checks))
    for check in result.failed:
        logger.warning("Check failed: %s %s", check.tag, check.detail)
    logger.info("Verified cover with n=%d v=%d: %s", n, spec.v, "pass" if result.passed else "fail")
    return result


# Maximal jumps

def levels_maximal(spec: CoverSpec) -> bool:
    return all(sigma_level(f.reduced) == i + 2 for i, f in enumerate(spec.functions))


def max_jump_predicate(spec: CoverSpec, matrices: Sequence[RepMatrix]) -> bool:
    """Every l_{i,i+1} is nonzero somewhere on V."""
    return all(
        any(mat.entries[i][i + 1] for mat in matrices)
        for i in range(spec.n - 1)
    )


def max_jump_ratio(p: int, n: int) -> Fraction:
    """|G|/g forced by maximal jumps."""
    q = p ** n
    return Fraction(2 * p, p - 1) * Fraction(q * (p - 1) ** 2, n * q * (p - 1) + 1 - q)


def max_jump_check(spec: CoverSpec, matrices: Optional[Sequence[RepMatrix]] = None) -> MaxJumpReport:
    """Maximal levels iff nonzero subdiagonals; when both hold, the forced degrees and ratio."""
    if matrices is None:
        matrices = [solve_rep_matrix(spec, y) for y in spec.v_basis]
    a = levels_maximal(spec)
    b = max_jump_predicate(spec, matrices)
    checks = [Check("levels maximal iff subdiagonals nonzero", a == b, f"levels {a}, subdiagonals {b}")]
    if a and b and spec.n >= 2:
        p = spec.p
        S1 = _shape(spec.functions[0])
        if S1 is None:
            checks.append(Check("m_i = 1 + i p^s1", False, "f1 has no X*S1(X) + cX shape"))
        else:
            s1 = S1.s
            expected = tuple(1 + i * p ** s1 for i in range(1, spec.n + 1))
            checks.append(Check("m_i = 1 + i p^s1", spec.degrees == expected, f"degrees {spec.degrees}"))
            checks.append(Check("v = s1 + 1", spec.v == s1 + 1, f"v = {spec.v}, s1 = {s1}"))
            report = ramification(adapt_basis(spec.functions), spec.v)
            checks.append(Check(
                "ratio closed form",
                report.ratio == max_jump_ratio(p, spec.n),
                f"{report.ratio_text} vs {max_jump_ratio(p, spec.n)}",
            ))
    return MaxJumpReport(a, b, tuple(checks))


# Quotients and translation search

def truncate_cover(spec: CoverSpec, d: int) -> CoverSpec:
    """Keep f_1..f_d and the same V."""
    if not 1 <= d <= spec.n:
        raise OutOfRange(f"d = {d} must lie between 1 and {spec.n}")
    return CoverSpec(spec.p, spec.ambient, spec.functions[:d], spec.v_basis)


def find_stable_translations(functions: Sequence[ASClass], bound: Optional[int] = None) -> StableTranslations:
    """Largest V inside Z(Ad f1) whose translations lift to every f_i."""
    base = same_field(*functions)
    p = base.p
    ad = palindromic(functions[0].reduced)
    ambient, candidates_basis = zero_set(ad, base, bound)
    reduced = [f.reduced.embed(ambient) for f in functions]
    survivors = []
    for combo in itertools.product(range(p), repeat=len(candidates_basis)):
        if not any(combo):
            continue
        y = sum((c * b for c, b in zip(combo, candidates_basis)), ambient.zero)
        try:
            translation_matrix(reduced, y)
        except NotStable:
            continue
        survivors.append(list(combo))
    echelon = linalg.row_reduce(survivors, len(candidates_basis), p) if survivors else []
    if len(survivors) + 1 != p ** len(echelon):
        raise RepresentationLawViolated("the stable translations are not closed under addition")
    basis = tuple(
        sum((c * b for c, b in zip(row, candidates_basis)), ambient.zero)
        for row in echelon
    )
    logger.info("Found %d stable translations out of %d candidates",
                p ** len(basis), p ** len(candidates_basis))
    return StableTranslations(ambient, basis, p ** len(candidates_basis))
