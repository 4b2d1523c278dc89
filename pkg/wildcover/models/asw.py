"""Artin-Schreier classes of polynomials and the digit-sum filtration."""
import itertools
from dataclasses import dataclass
from typing import Optional, Union

from wildcover.errors import BadIndex, FieldMismatch, ZeroPolynomial
from wildcover.models.field import FieldCtx, FieldElement, field
from wildcover.models.poly import Poly, base_digits

MINUS_INFINITY = float("-inf")


@dataclass(frozen=True)
class ASClass:
    """A class of k[X] modulo {h^p - h}, kept as its p-power free representative."""

    reduced: Poly
    const_class: int = 0

    @property
    def ctx(self) -> FieldCtx:
        return self.reduced.ctx

    @property
    def degree(self) -> int:
        return self.reduced.degree

    def is_zero(self) -> bool:
        return self.reduced.is_zero()

    def __add__(self, other: "ASClass") -> "ASClass":
        p = self.ctx.p
        return ASClass(self.reduced + other.reduced, (self.const_class + other.const_class) % p)

    def __sub__(self, other: "ASClass") -> "ASClass":
        return self + other.scale(-1)

    def scale(self, c: int) -> "ASClass":
        p = self.ctx.p
        return ASClass(self.reduced.scale(c % p), (self.const_class * c) % p)

    def embed(self, target: FieldCtx) -> "ASClass":
        return ASClass(self.reduced.embed(target), self.const_class)

    def __str__(self) -> str:
        return str(self.reduced)


def reduce(f: Poly) -> ASClass:
    """Reduced representative: c X^(a p^r) becomes c^(1/p^r) X^a, constants go to the trace."""
    ctx = f.ctx
    p = ctx.p
    terms: dict[int, FieldElement] = {}
    const = 0
    for a, c in f.terms():
        if a == 0:
            const = c.trace()
            continue
        r = 0
        while a % p == 0:
            a //= p
            r += 1
        if r:
            c = c.frobenius(-r)
        terms[a] = terms[a] + c if a in terms else c
    return ASClass(Poly.from_terms(ctx, terms), const)


def wp_poly(g: Poly) -> Poly:
    """g^p - g."""
    return g ** g.ctx.p - g


def digit_sum(a: int, p: int) -> int:
    if a < 0:
        raise BadIndex("digit sums are defined for non-negative integers")
    return sum(base_digits(a, p))


def dp_order(f: Poly) -> Union[int, float]:
    """Largest digit sum over the support of f; minus infinity for 0."""
    if f.is_zero():
        return MINUS_INFINITY
    return max(digit_sum(a, f.ctx.p) for a in f.support())


def sigma_level(f: Poly) -> int:
    """Smallest n with f in Sigma_n."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial lies in every level")
    return int(dp_order(f))


def monomial_orbit_project(f: Poly, a0: int) -> Poly:
    """Part of f supported on the exponents a0 * p^r."""
    p = f.ctx.p
    if a0 <= 0 or a0 % p == 0:
        raise BadIndex(f"{a0} must be positive and prime to {p}")
    keep = {}
    for a, c in f.terms():
        b = a
        while b % p == 0:
            b //= p
        if b == a0:
            keep[a] = c
    return Poly.from_terms(f.ctx, keep)


def level_drop_witness(p: int) -> Optional[tuple[Poly, FieldElement]]:
    """First f of level 2 and degree at most 2p with a translate difference of level below 1.

    Coefficient vectors over F_p and translations y in F_p^* are scanned in
    lexicographic order; None when nothing in that range drops.
    """
    ctx = field(p)
    monomials = [a for a in range(1, 2 * p + 1) if digit_sum(a, p) == 2]
    for coeffs in itertools.product(range(p), repeat=len(monomials)):
        f = Poly.from_terms(ctx, {a: c for a, c in zip(monomials, coeffs) if c})
        if f.is_zero() or dp_order(f) != 2:
            continue
        for y in range(1, p):
            shift = ctx.from_int(y)
            if dp_order(f.delta(shift)) < 1:
                return f, shift
    return None


def same_field(*classes: ASClass) -> FieldCtx:
    ctx = classes[0].ctx
    for cls in classes[1:]:
        if cls.ctx != ctx:
            raise FieldMismatch("classes live over different fields")
    return ctx
