"""Additive polynomials as elements of the twisted ring k{F}, where F a = a^p F."""
import logging
import math
from typing import Optional, Sequence, Union

from wildcover import config
from wildcover.errors import (
    BoundExceeded, DependentBasis, DependentGammas, FieldMismatch, InvalidField, NotAdditive,
    NotProportional, NotSeparable, SupportViolation, WrongShape,
)
from wildcover.models import linalg
from wildcover.models.field import FieldCtx, FieldElement, element_degree, embed, field, matrix_of
from wildcover.models.poly import Poly, format_poly

logger = logging.getLogger(__name__)


class TwistedPoly:
    """sum a_i F^i, i.e. the polynomial sum a_i X^(p^i)."""

    __slots__ = ("ctx", "fcoeffs")

    def __init__(self, ctx: FieldCtx, fcoeffs: Sequence[Union[int, FieldElement]] = ()):
        values = [c if isinstance(c, FieldElement) else ctx.from_int(c) for c in fcoeffs]
        for c in values:
            if c.ctx != ctx:
                raise FieldMismatch(f"coefficient of {c.ctx!r} in a twisted polynomial over {ctx!r}")
        while values and not values[-1]:
            values.pop()
        self.ctx = ctx
        self.fcoeffs = tuple(values)

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "TwistedPoly":
        return cls(ctx, [1])

    @classmethod
    def frobenius(cls, ctx: FieldCtx) -> "TwistedPoly":
        return cls(ctx, [0, 1])

    @classmethod
    def wp(cls, ctx: FieldCtx) -> "TwistedPoly":
        """The Artin-Schreier operator F - 1."""
        return cls(ctx, [-1, 1])

    @property
    def s(self) -> int:
        """Degree in F, -1 for zero."""
        return len(self.fcoeffs) - 1

    @property
    def leading(self) -> FieldElement:
        return self.fcoeffs[-1] if self.fcoeffs else self.ctx.zero

    def __bool__(self) -> bool:
        return bool(self.fcoeffs)

    def is_separable(self) -> bool:
        return bool(self.fcoeffs) and bool(self.fcoeffs[0])

    def __add__(self, other: "TwistedPoly") -> "TwistedPoly":
        if other.ctx != self.ctx:
            raise FieldMismatch(f"twisted polynomials over {self.ctx!r} and {other.ctx!r}")
        a, b = self.fcoeffs, other.fcoeffs
        if len(a) < len(b):
            a, b = b, a
        return TwistedPoly(self.ctx, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self) -> "TwistedPoly":
        return TwistedPoly(self.ctx, [-c for c in self.fcoeffs])

    def __sub__(self, other: "TwistedPoly") -> "TwistedPoly":
        return self + (-other)

    def scale(self, c: Union[int, FieldElement]) -> "TwistedPoly":
        """Left multiplication c * A."""
        return TwistedPoly(self.ctx, [c * a for a in self.fcoeffs])

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        return twisted_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int) -> "TwistedPoly":
        result = TwistedPoly.identity(self.ctx)
        for _ in range(k):
            result = twisted_mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, TwistedPoly):
            return NotImplemented
        return self.ctx == other.ctx and self.fcoeffs == other.fcoeffs

    def __hash__(self) -> int:
        return hash(tuple(c.coeffs for c in self.fcoeffs))

    def evaluate(self, y: FieldElement) -> FieldElement:
        acc = y.ctx.zero
        power = y
        for i, a in enumerate(self.fcoeffs):
            if i:
                power = power.frobenius(1)
            if a:
                acc = acc + a * power
        return acc

    __call__ = evaluate

    def to_poly(self) -> Poly:
        p = self.ctx.p
        return Poly.from_terms(self.ctx, {p ** i: a for i, a in enumerate(self.fcoeffs) if a})

    def embed(self, target: FieldCtx) -> "TwistedPoly":
        if target == self.ctx:
            return self
        return TwistedPoly(target, [embed(a, target) for a in self.fcoeffs])

    def monic(self) -> "TwistedPoly":
        if not self.fcoeffs:
            return self
        return self.scale(self.leading.inverse())

    def __str__(self) -> str:
        return format_poly(Poly(self.ctx, self.fcoeffs), "F")

    def __repr__(self) -> str:
        return f"TwistedPoly({self}, {self.ctx!r})"


def twisted_mul(a: TwistedPoly, b: TwistedPoly) -> TwistedPoly:
    """Composition product: (AB)_k = sum over i + j = k of a_i * b_j^(p^i)."""
    if a.ctx != b.ctx:
        raise FieldMismatch(f"twisted polynomials over {a.ctx!r} and {b.ctx!r}")
    if not a.fcoeffs or not b.fcoeffs:
        return TwistedPoly(a.ctx)
    out = [a.ctx.zero] * (len(a.fcoeffs) + len(b.fcoeffs) - 1)
    for i, x in enumerate(a.fcoeffs):
        if x:
            for j, y in enumerate(b.fcoeffs):
                if y:
                    out[i + j] = out[i + j] + x * y.frobenius(i)
    return TwistedPoly(a.ctx, out)


def _p_power_index(e: int, p: int) -> Optional[int]:
    i = 0
    while e > 1 and e % p == 0:
        e //= p
        i += 1
    return i if e == 1 else None


def is_additive(f: Poly) -> bool:
    """True iff every exponent of f is a power of p."""
    return all(_p_power_index(e, f.ctx.p) is not None for e in f.support())


def from_poly(f: Poly) -> TwistedPoly:
    p = f.ctx.p
    fcoeffs: dict[int, FieldElement] = {}
    for e, c in f.terms():
        i = _p_power_index(e, p)
        if i is None:
            raise NotAdditive(f"X^{e} is not a power of X^{p}")
        fcoeffs[i] = c
    values = [fcoeffs.get(i, f.ctx.zero) for i in range(max(fcoeffs, default=-1) + 1)]
    return TwistedPoly(f.ctx, values)


def split_xs(f: Poly) -> tuple[TwistedPoly, FieldElement]:
    """Write f = X*S(X) + c*X with S additive."""
    p = f.ctx.p
    c = f.coeff(1)
    fcoeffs: dict[int, FieldElement] = {}
    for e, a in f.terms():
        if e == 1:
            continue
        i = _p_power_index(e - 1, p) if e > 1 else None
        if i is None:
            raise WrongShape(f"X^{e} is not of the form X^(1+p^j)")
        fcoeffs[i] = a
    values = [fcoeffs.get(i, f.ctx.zero) for i in range(max(fcoeffs, default=-1) + 1)]
    return TwistedPoly(f.ctx, values), c


def palindromic(f: Poly) -> TwistedPoly:
    """Monic palindromic polynomial of f = X*S(X) + c*X, of F-degree 2 deg S."""
    S, _ = split_xs(f)
    s = S.s
    if s < 1:
        raise WrongShape("f must be X*S(X) + cX with S of F-degree at least 1")
    a = S.fcoeffs
    out = [f.ctx.zero] * (2 * s + 1)
    for k, ak in enumerate(a):
        if ak:
            out[s + k] = out[s + k] + ak.frobenius(s)
            out[s - k] = out[s - k] + ak.frobenius(s - k)
    return TwistedPoly(f.ctx, out).monic()


def subspace_poly(basis: Sequence[FieldElement], ctx: Optional[FieldCtx] = None) -> TwistedPoly:
    """Monic additive polynomial whose roots are exactly the F_p-span of basis."""
    if ctx is None:
        if not basis:
            raise InvalidField("an empty basis needs an explicit field")
        ctx = basis[0].ctx
    result = TwistedPoly.identity(ctx)
    p = ctx.p
    for z in basis:
        c = result.evaluate(z)
        if not c:
            raise DependentBasis(f"{z} lies in the span of the previous basis elements")
        result = twisted_mul(TwistedPoly(ctx, [-(c ** (p - 1)), 1]), result)
    return result


def additive_kernel(P: TwistedPoly, ctx: FieldCtx) -> list[FieldElement]:
    """F_p-basis of the roots of P lying in ctx."""
    Q = P.embed(ctx)
    rows = matrix_of(ctx, Q.evaluate)
    return [ctx.element(v) for v in linalg.null_space(rows, ctx.m, ctx.p)]


def minimal_splitting_degree(P: TwistedPoly, base: Optional[FieldCtx] = None,
                             bound: Optional[int] = None) -> int:
    """Smallest multiple of the base degree over which P has all its roots."""
    base = base or P.ctx
    bound = bound or config.AMBIENT_BOUND
    if not P.is_separable():
        raise NotSeparable(f"{P} is not separable")
    r = P.s
    step = math.lcm(base.m, P.ctx.m)
    m = step
    while m <= bound:
        if m >= r and len(additive_kernel(P, field(P.ctx.p, m))) == r:
            logger.info("%s splits over F_%s^%s", P, P.ctx.p, m)
            return m
        m += step
    raise BoundExceeded(f"{P} does not split over any F_{P.ctx.p}^m with m <= {bound}")


def zero_set(P: TwistedPoly, base: Optional[FieldCtx] = None,
             bound: Optional[int] = None) -> tuple[FieldCtx, list[FieldElement]]:
    """The splitting field of P and an F_p-basis of its roots there."""
    m = minimal_splitting_degree(P, base, bound)
    ctx = field(P.ctx.p, m)
    return ctx, additive_kernel(P, ctx)


def gamma_decomposition(S_list: Sequence[TwistedPoly]) -> tuple[int, list[FieldElement]]:
    """Write S_i = gamma_i S_1 with gamma_i in F_p^d, d dividing deg S_1."""
    S1 = S_list[0]
    s = S1.s
    gammas = [S1.ctx.one]
    for S in S_list[1:]:
        if S.ctx != S1.ctx:
            raise FieldMismatch("all S_i must share a field")
        if S.s != s:
            raise NotProportional(f"{S} and {S1} have different F-degrees")
        gamma = S.leading / S1.leading
        if S1.scale(gamma) != S:
            raise NotProportional(f"{S} is not a scalar multiple of {S1}")
        gammas.append(gamma)
    if len(gammas) == 1:
        return s, gammas
    d = 1
    for g in gammas:
        d = math.lcm(d, element_degree(g))
    if s % d:
        raise SupportViolation(f"the gammas generate F_p^{d}, which does not divide {s}")
    for j, a in enumerate(S1.fcoeffs):
        if a and j % d:
            raise SupportViolation(f"S_1 has a term F^{j} with {j} not a multiple of {d}")
    if not linalg.independent([g.coeffs for g in gammas], S1.ctx.p):
        raise DependentGammas("the gammas are linearly dependent over F_p")
    return d, gammas
