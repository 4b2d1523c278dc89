"""Dense univariate polynomials over a FieldCtx."""
import itertools
import math
from typing import Iterable, Iterator, Mapping, Union

from wildcover.errors import FieldMismatch
from wildcover.models.field import FieldCtx, FieldElement, embed

Scalar = Union[int, FieldElement]


def base_digits(a: int, p: int) -> list[int]:
    """Base-p digits of a, least significant first."""
    digits = []
    while a:
        a, d = divmod(a, p)
        digits.append(d)
    return digits


def binomial_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        n, a = divmod(n, p)
        k, b = divmod(k, p)
        if b > a:
            return 0
        result = result * math.comb(a, b) % p
    return result


def dominated_exponents(a: int, p: int) -> Iterator[tuple[int, int]]:
    """Pairs (b, C(a, b) mod p) over the b whose base-p digits stay below those of a."""
    digits = base_digits(a, p)
    for choice in itertools.product(*(range(d + 1) for d in digits)):
        b, coef, place = 0, 1, 1
        for d, c in zip(digits, choice):
            b += c * place
            coef = coef * math.comb(d, c) % p
            place *= p
        yield b, coef


class Poly:
    """A polynomial with coefficients in one field, trailing zeros trimmed."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[Scalar] = ()):
        values = [c if isinstance(c, FieldElement) else ctx.from_int(c) for c in coeffs]
        for c in values:
            if c.ctx is not ctx and c.ctx != ctx:
                raise FieldMismatch(f"coefficient of {c.ctx!r} in a polynomial over {ctx!r}")
        while values and not values[-1]:
            values.pop()
        self.ctx = ctx
        self.coeffs = tuple(values)

    # Constructors

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx)

    @classmethod
    def constant(cls, ctx: FieldCtx, c: Scalar) -> "Poly":
        return cls(ctx, [c])

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [0, 1])

    @classmethod
    def monomial(cls, ctx: FieldCtx, exponent: int, coeff: Scalar = 1) -> "Poly":
        return cls(ctx, [0] * exponent + [coeff])

    @classmethod
    def from_terms(cls, ctx: FieldCtx, terms: Mapping[int, Scalar]) -> "Poly":
        if not terms:
            return cls(ctx)
        values: list[Scalar] = [0] * (max(terms) + 1)
        for e, c in terms.items():
            values[e] = c
        return cls(ctx, values)

    # Inspection

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> FieldElement:
        return self.coeffs[-1] if self.coeffs else self.ctx.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def coeff(self, exponent: int) -> FieldElement:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return self.ctx.zero

    def terms(self) -> Iterator[tuple[int, FieldElement]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent order."""
        for e, c in enumerate(self.coeffs):
            if c:
                yield e, c

    def support(self) -> list[int]:
        return [e for e, _ in self.terms()]

    # Arithmetic

    def _check(self, other: "Poly") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise FieldMismatch(f"polynomials over {self.ctx!r} and {other.ctx!r}")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly.constant(self.ctx, other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.ctx, [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def scale(self, c: Scalar) -> "Poly":
        if isinstance(c, int):
            c = c % self.ctx.p
            if c == 1:
                return self
        return Poly(self.ctx, [x * c for x in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Poly.zero(self.ctx)
        zero = self.ctx.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    if y:
                        out[i + j] = out[i + j] + x * y
        return Poly(self.ctx, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.constant(self.ctx, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly.constant(self.ctx, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(c.coeffs for c in self.coeffs))

    # Evaluation and substitution

    def evaluate(self, a: Scalar) -> FieldElement:
        """Horner evaluation at a point of the coefficient field."""
        if isinstance(a, int):
            a = self.ctx.from_int(a)
        elif a.ctx != self.ctx:
            raise FieldMismatch(f"cannot evaluate a polynomial over {self.ctx!r} at {a.ctx!r}")
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * a + c
        return acc

    __call__ = evaluate

    def compose(self, g: "Poly") -> "Poly":
        """f(g(X))."""
        self._check(g)
        acc = Poly.zero(self.ctx)
        for c in reversed(self.coeffs):
            acc = acc * g + c
        return acc

    def shift(self, y: FieldElement) -> "Poly":
        """f(X + y), expanded digit by digit so only nonzero binomials are visited."""
        if not y:
            return self
        if y.ctx != self.ctx:
            raise FieldMismatch(f"translation by an element of {y.ctx!r}")
        p = self.ctx.p
        zero = self.ctx.zero
        powers: dict[int, FieldElement] = {0: self.ctx.one}
        out = [zero] * len(self.coeffs)
        for a, c in self.terms():
            for b, binom in dominated_exponents(a, p):
                k = a - b
                if k not in powers:
                    powers[k] = y ** k
                out[b] = out[b] + c * powers[k] * binom
        return Poly(self.ctx, out)

    def delta(self, y: FieldElement) -> "Poly":
        """Translation difference f(X + y) - f(X)."""
        if not y:
            return Poly.zero(self.ctx)
        return self.shift(y) - self

    def frobenius_coeffs(self, k: int) -> "Poly":
        return Poly(self.ctx, [c.frobenius(k) for c in self.coeffs])

    def embed(self, target: FieldCtx) -> "Poly":
        if target == self.ctx:
            return self
        return Poly(target, [embed(c, target) for c in self.coeffs])

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.leading.inverse())

    # Rendering

    def __str__(self) -> str:
        return format_poly(self, "X")

    def __repr__(self) -> str:
        return f"Poly({self}, {self.ctx!r})"


def format_coefficient(c: FieldElement) -> tuple[str, bool]:
    """Text of a coefficient and whether it needs parentheses as a factor."""
    text = str(c)
    return text, " + " in text


def format_poly(f: Poly, var: str = "X") -> str:
    terms = []
    for e in range(f.degree, -1, -1):
        c = f.coeffs[e]
        if not c:
            continue
        text, compound = format_coefficient(c)
        if e == 0:
            terms.append(text)
            continue
        power = var if e == 1 else f"{var}^{e}"
        if c == 1:
            terms.append(power)
        else:
            terms.append(f"({text})*{power}" if compound else f"{text}*{power}")
    return " + ".join(terms) if terms else "0"


def int_poly_to_field(ctx: FieldCtx, coeffs: Mapping[int, int]) -> Poly:
    """Reduce an integer polynomial, given as {exponent: coefficient}, into ctx."""
    return Poly.from_terms(ctx, {e: c % ctx.p for e, c in coeffs.items()})
