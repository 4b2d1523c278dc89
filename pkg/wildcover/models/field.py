"""Finite fields F_p[t]/(modulus) and their elements.

Each context wraps the ``galois`` array class of GF(p^m) built from its
modulus. Elements are coefficient tuples in the power basis of ``t``; the
base-p number with those digits is the galois integer representation.
Small fields keep the powers of the galois primitive element as exp/log
lists for scalar products.
"""
import itertools
import logging
import math
from functools import cached_property, lru_cache
from typing import Callable, Iterator, Optional, Sequence, Union

import galois
import numpy as np

from wildcover.config import TABLE_LIMIT
from wildcover.errors import DivisionByZero, FieldMismatch, InvalidField, NoEmbedding, NoRoot
from wildcover.models import linalg

logger = logging.getLogger(__name__)

Coeffs = tuple[int, ...]


class FieldCtx:
    """The field F_p[t]/(modulus), modulus given by ascending coefficients."""

    def __init__(self, p: int, modulus: Sequence[int]):
        if p < 2 or not galois.is_prime(p):
            raise InvalidField(f"{p} is not a prime")
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) < 2 or modulus[-1] != 1:
            raise InvalidField("modulus must be monic of degree at least 1")
        if len(modulus) > 2:
            poly = galois.Poly(list(reversed(modulus)), field=linalg.prime_field(p))
            if not poly.is_irreducible():
                raise InvalidField(f"modulus {format_coeffs(modulus, 'x')} is reducible over F_{p}")
            self.GF = galois.GF(p ** (len(modulus) - 1), irreducible_poly=poly)
        else:
            self.GF = linalg.prime_field(p)
        self.p = p
        self.modulus = modulus
        self.m = len(modulus) - 1
        self.order = p ** self.m
        self._key = (p, modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.m == 1:
            return f"F_{self.p}"
        return f"F_{self.p}^{self.m}[{format_coeffs(self.modulus, 't')}]"

    # Construction

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldMismatch(f"element of {value.ctx!r} used in {self!r}")
            return value
        if isinstance(value, int):
            return self.from_int(value)
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.m:
            raise InvalidField(f"too many coordinates for {self!r}")
        coeffs += [0] * (self.m - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_int(self, value: int) -> "FieldElement":
        return FieldElement(self, (value % self.p,) + (0,) * (self.m - 1))

    def from_index(self, index: int) -> "FieldElement":
        return FieldElement(self, self.to_coeffs(index))

    @property
    def zero(self) -> "FieldElement":
        return self.from_int(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_int(1)

    @property
    def gen(self) -> "FieldElement":
        if self.m == 1:
            return self.from_int(-self.modulus[0])
        return FieldElement(self, (0, 1) + (0,) * (self.m - 2))

    def basis(self) -> list["FieldElement"]:
        return [FieldElement(self, tuple(1 if i == j else 0 for i in range(self.m))) for j in range(self.m)]

    def elements(self) -> Iterator["FieldElement"]:
        """All elements, ordered by their base-p index."""
        for digits in itertools.product(range(self.p), repeat=self.m):
            yield FieldElement(self, tuple(reversed(digits)))

    # Conversion to and from galois arrays

    def index(self, a: Coeffs) -> int:
        value = 0
        for c in reversed(a):
            value = value * self.p + c
        return value

    def to_coeffs(self, value: int) -> Coeffs:
        coeffs = []
        for _ in range(self.m):
            value, digit = divmod(value, self.p)
            coeffs.append(digit)
        return tuple(coeffs)

    def array(self, a: Coeffs):
        return self.GF(self.index(a))

    def from_array(self, x) -> Coeffs:
        return self.to_coeffs(int(x))

    # Arithmetic on coefficient tuples

    @cached_property
    def _tables(self) -> Optional[tuple[list[Coeffs], dict[Coeffs, int]]]:
        if self.m == 1 or self.order > TABLE_LIMIT:
            return None
        powers = self.GF.primitive_element ** np.arange(self.order - 1)
        exp = [self.from_array(x) for x in powers]
        log = {value: i for i, value in enumerate(exp)}
        logger.debug("Built log tables for %r", self)
        return exp, log

    def mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        if self.m == 1:
            return ((a[0] * b[0]) % self.p,)
        if not any(a) or not any(b):
            return (0,) * self.m
        tables = self._tables
        if tables is not None:
            exp, log = tables
            return exp[(log[a] + log[b]) % (self.order - 1)]
        return self.from_array(self.array(a) * self.array(b))

    def power(self, a: Coeffs, k: int) -> Coeffs:
        if not any(a):
            if k < 0:
                raise DivisionByZero("zero has no inverse")
            return a if k else (1,) + (0,) * (self.m - 1)
        q1 = self.order - 1
        k %= q1
        if self.m == 1:
            return (pow(a[0], k, self.p),)
        tables = self._tables
        if tables is not None:
            exp, log = tables
            return exp[(log[a] * k) % q1]
        return self.from_array(self.array(a) ** k)

    def frobenius(self, a: Coeffs, k: int) -> Coeffs:
        k %= self.m
        if k == 0 or not any(a):
            return a
        return self.power(a, self.p ** k)

    def trace(self, a: Coeffs) -> int:
        if self.m == 1:
            return a[0]
        return int(self.array(a).field_trace())

    @cached_property
    def _wp_matrix(self) -> list[list[int]]:
        return matrix_of(self, lambda z: z ** self.p - z)

    def contains_degree(self, d: int) -> bool:
        return d >= 1 and self.m % d == 0


def _apply(p: int, images: Sequence[Coeffs], a: Coeffs) -> Coeffs:
    """Apply the F_p-linear map with the given basis images to a."""
    out = [0] * len(images[0])
    for c, image in zip(a, images):
        if c:
            for i, x in enumerate(image):
                out[i] += c * x
    return tuple(x % p for x in out)


class FieldElement:
    """An element of a FieldCtx."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Coeffs):
        self.ctx = ctx
        self.coeffs = coeffs

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatch(f"cannot combine {self.ctx!r} with {other.ctx!r}")
            return other
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        p = self.ctx.p
        return FieldElement(self.ctx, tuple((x - y) % p for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self) -> "FieldElement":
        p = self.ctx.p
        return FieldElement(self.ctx, tuple(-x % p for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            p = self.ctx.p
            return FieldElement(self.ctx, tuple((x * other) % p for x in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return FieldElement(self.ctx, self.ctx.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if not self:
            raise DivisionByZero("division by zero")
        return FieldElement(self.ctx, self.ctx.power(self.coeffs, -1))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.power(self.coeffs, k))

    def frobenius(self, k: int = 1) -> "FieldElement":
        """a -> a^(p^k); negative k gives the unique p^|k|-th root."""
        return FieldElement(self.ctx, self.ctx.frobenius(self.coeffs, k))

    def trace(self) -> int:
        """Trace down to F_p."""
        return self.ctx.trace(self.coeffs)

    def minimal_poly(self) -> galois.Poly:
        return self.ctx.array(self.coeffs).minimal_poly()

    def is_prime_field(self) -> bool:
        return not any(self.coeffs[1:])

    def to_int(self) -> int:
        if not self.is_prime_field():
            raise FieldMismatch(f"{self} is not in F_{self.ctx.p}")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.ctx == other.ctx
        if isinstance(other, int):
            return self.is_prime_field() and self.coeffs[0] == other % self.ctx.p
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_prime_field():
            return hash(self.coeffs[0])
        return hash((self.ctx.modulus, self.coeffs))

    def __str__(self) -> str:
        return format_coeffs(self.coeffs, "t")

    def __repr__(self) -> str:
        return f"FieldElement({self}, {self.ctx!r})"

    def sort_key(self) -> Coeffs:
        return self.coeffs


def format_coeffs(coeffs: Sequence[int], var: str) -> str:
    """Render ascending coefficients as a polynomial in var, highest degree first."""
    terms = []
    for j in range(len(coeffs) - 1, -1, -1):
        c = coeffs[j]
        if not c:
            continue
        if j == 0:
            terms.append(str(c))
            continue
        power = var if j == 1 else f"{var}^{j}"
        terms.append(power if c == 1 else f"{c}*{power}")
    return " + ".join(terms) if terms else "0"


def matrix_of(ctx: FieldCtx, fn: Callable[[FieldElement], FieldElement]) -> list[list[int]]:
    """Matrix over F_p of an F_p-linear map ctx -> ctx in the power basis."""
    columns = [fn(b).coeffs for b in ctx.basis()]
    return [list(row) for row in zip(*columns)]


# Field factory

@lru_cache(maxsize=None)
def find_irreducible(p: int, m: int) -> Coeffs:
    """Lexicographically smallest monic irreducible of degree m, ascending coefficients."""
    if m == 1:
        return (0, 1)
    poly = galois.irreducible_poly(p, m, method="min")
    return tuple(int(c) for c in poly.coeffs[::-1])


@lru_cache(maxsize=None)
def field(p: int, m: int = 1, modulus: Optional[Coeffs] = None) -> FieldCtx:
    """Get the field of p^m elements, default modulus when none is given."""
    if m < 1:
        raise InvalidField("extension degree must be positive")
    if modulus is None:
        modulus = find_irreducible(p, m)
    ctx = FieldCtx(p, modulus)
    if ctx.m != m:
        raise InvalidField(f"modulus has degree {ctx.m}, expected {m}")
    logger.debug("Created field %r", ctx)
    return ctx


def trace_to_prime(a: FieldElement) -> int:
    return a.trace()


def artin_schreier_root(c: FieldElement) -> FieldElement:
    """A solution z of z^p - z = c; the others are z + F_p."""
    ctx = c.ctx
    solution = linalg.solve(ctx._wp_matrix, c.coeffs, ctx.p)
    if solution is None:
        raise NoRoot(f"z^{ctx.p} - z = {c} has no root in {ctx!r}")
    return ctx.element(solution)


# Embeddings between fields

def element_degree(a: FieldElement) -> int:
    """Degree over F_p of the smallest subfield containing a."""
    if a.ctx.m == 1:
        return 1
    return a.minimal_poly().degree


@lru_cache(maxsize=None)
def _generator_image(source: FieldCtx, target: FieldCtx) -> FieldElement:
    # the source modulus splits into linear factors over target; the smallest root is the image of t
    modulus = galois.Poly(list(reversed(source.modulus)), field=target.GF)
    factors, _ = modulus.factors()
    roots = [FieldElement(target, target.from_array(-f.coeffs[-1])) for f in factors if f.degree == 1]
    chosen = min(roots, key=FieldElement.sort_key)
    logger.debug("Embedding %r -> %r sends t to %s", source, target, chosen)
    return chosen


@lru_cache(maxsize=None)
def _embedding_images(source: FieldCtx, target: FieldCtx) -> tuple[Coeffs, ...]:
    if source.p != target.p or not target.contains_degree(source.m):
        raise NoEmbedding(f"{source!r} does not embed in {target!r}")
    r = _generator_image(source, target)
    images = [target.one]
    for _ in range(source.m - 1):
        images.append(images[-1] * r)
    return tuple(x.coeffs for x in images)


def embed(a: FieldElement, target: FieldCtx) -> FieldElement:
    """Image of a under the fixed embedding of its field into target."""
    source = a.ctx
    if source == target:
        return a
    if source.p != target.p or not target.contains_degree(source.m):
        raise NoEmbedding(f"{source!r} does not embed in {target!r}")
    if a.is_prime_field():
        return target.from_int(a.coeffs[0])
    return FieldElement(target, _apply(target.p, _embedding_images(source, target), a.coeffs))


def common_field(*ctxs: FieldCtx) -> FieldCtx:
    """Smallest default field containing every given field."""
    p = ctxs[0].p
    m = 1
    for ctx in ctxs:
        if ctx.p != p:
            raise FieldMismatch("fields of different characteristic")
        m = math.lcm(m, ctx.m)
    for ctx in ctxs:
        if ctx.m == m:
            return ctx
    return field(p, m)
