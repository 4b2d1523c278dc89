"""Additive polynomial tests."""
import itertools

import pytest
from hypothesis import given, settings, strategies as st

from wildcover.errors import (
    BoundExceeded, DependentBasis, DependentGammas, InvalidField, NotAdditive, NotProportional, NotSeparable,
    WrongShape,
)
from wildcover.models.additive import (
    TwistedPoly, additive_kernel, from_poly, gamma_decomposition, is_additive, minimal_splitting_degree,
    palindromic, subspace_poly, twisted_mul, zero_set,
)
from wildcover.models.asw import reduce
from wildcover.models.field import field
from wildcover.models.poly import Poly

F25 = field(5, 2)


def _poly(ctx, terms):
    return Poly.from_terms(ctx, terms)


def test_frobenius_commutation(f25):
    """Test F a = a^p F and a witness of non-commutativity."""
    t = f25.gen
    F = TwistedPoly.frobenius(f25)
    a = TwistedPoly(f25, [t])
    assert F * a == TwistedPoly(f25, [0, t ** 5])
    assert a * F == TwistedPoly(f25, [0, t])
    assert F * a != a * F
    assert a * TwistedPoly.identity(f25) == a


def test_wp_squared(f5):
    """Test (F - 1)^2 = F^2 + 3F + 1 over F_5."""
    wp = TwistedPoly.wp(f5)
    wp2 = twisted_mul(wp, wp)
    assert wp2 == TwistedPoly(f5, [1, 3, 1])
    assert wp2.to_poly() == _poly(f5, {25: 1, 5: 3, 1: 1})
    assert str(wp2) == "F^2 + 3*F + 1"


def test_is_additive(f5, f25):
    """Test the p-power support test."""
    assert is_additive(_poly(f5, {5: 1, 1: 4}))
    assert not is_additive(_poly(f5, {6: 1}))
    A = from_poly(_poly(f25, {25: 3, 5: f25.gen, 1: 1}))
    assert A.fcoeffs == (f25.one, f25.gen, f25.from_int(3))
    with pytest.raises(NotAdditive):
        from_poly(_poly(f5, {6: 1}))


def test_palindromic(f5):
    """Test Ad for X^(p+1), X^6 + 4X^2 and invariance under cX."""
    assert palindromic(_poly(f5, {6: 1})) == TwistedPoly(f5, [1, 0, 1])
    f3 = field(3)
    assert palindromic(_poly(f3, {4: 1})) == TwistedPoly(f3, [1, 0, 1])
    f = _poly(f5, {6: 1, 2: 4})
    assert str(palindromic(f)) == "F^2 + 3*F + 1"
    assert palindromic(f + Poly.monomial(f5, 1, 2)) == palindromic(f)


def test_palindromic_rejects_other_shapes(f5):
    """Test WrongShape for f outside X*S(X) + cX."""
    with pytest.raises(WrongShape):
        palindromic(_poly(f5, {3: 1}))
    with pytest.raises(WrongShape):
        palindromic(_poly(f5, {2: 1, 1: 1}))


def test_subspace_poly(f5):
    """Test P_V for small V."""
    assert subspace_poly([f5.one]) == TwistedPoly.wp(f5)
    assert subspace_poly([], f5) == TwistedPoly.identity(f5)
    assert subspace_poly([], F25) == TwistedPoly.identity(F25)
    with pytest.raises(InvalidField):
        subspace_poly([])
    with pytest.raises(DependentBasis):
        subspace_poly([f5.one, f5.from_int(2)])


def test_splitting_degrees(f5):
    """Test the smallest fields holding every root."""
    wp = TwistedPoly.wp(f5)
    assert minimal_splitting_degree(wp, f5) == 1
    assert minimal_splitting_degree(twisted_mul(wp, wp), f5) == 5
    assert minimal_splitting_degree(TwistedPoly(f5, [1, 0, 1]), f5) == 4
    with pytest.raises(NotSeparable):
        minimal_splitting_degree(TwistedPoly.frobenius(f5), f5)
    with pytest.raises(BoundExceeded):
        minimal_splitting_degree(twisted_mul(wp, wp), f5, bound=4)


def test_kernels_of_wp_squared(f5, f25):
    """Test Z(wp^2) over F_25 and over its splitting field."""
    wp = TwistedPoly.wp(f5)
    wp2 = twisted_mul(wp, wp)
    kernel = additive_kernel(wp, f25)
    assert len(kernel) == 1 and kernel[0].is_prime_field()
    assert len(additive_kernel(wp2, f25)) == 1
    ctx, basis = zero_set(wp2, f5)
    assert ctx.m == 5
    assert len(basis) == 2
    assert subspace_poly(basis, ctx) == wp2.embed(ctx)


def test_gamma_decomposition(f25):
    """Test S_i = gamma_i S_1."""
    t = f25.gen
    S1 = TwistedPoly(f25, [0, 0, 1])
    d, gammas = gamma_decomposition([S1, S1.scale(t)])
    assert d == 2
    assert gammas == [f25.one, t]
    assert gamma_decomposition([S1]) == (2, [f25.one])
    with pytest.raises(NotProportional):
        gamma_decomposition([S1, TwistedPoly(f25, [0, 1, 1])])
    with pytest.raises(DependentGammas):
        gamma_decomposition([S1, S1.scale(2)])


def _span(basis, p, ctx=None):
    ctx = ctx or basis[0].ctx
    return {
        sum((c * b for c, b in zip(combo, basis)), ctx.zero)
        for combo in itertools.product(range(p), repeat=len(basis))
    }


@pytest.mark.parametrize("p, terms", [
    (5, {6: 1}),
    (5, {6: 1, 2: 4}),
    (3, {4: 1}),
    (3, {4: 1, 2: 1}),
    (3, {10: 1, 2: 2, 1: 1}),
])
def test_palindromic_zero_set_is_the_stable_set(p, terms):
    """Test Z(Ad_f) against every y with delta_y(f) trivial modulo h^p - h."""
    base = field(p)
    f = _poly(base, terms)
    ctx, basis = zero_set(palindromic(f), base)
    g = f.embed(ctx)
    stable = {y for y in ctx.elements() if reduce(g.delta(y)).is_zero()}
    assert stable == _span(basis, p)


STABLE_FIELDS = {3: field(3, 4), 5: F25}


@st.composite
def xs_polys(draw):
    """f = X*S(X) + c*X with deg_F S in {1, 2} and coefficients in a fixed field."""
    p = draw(st.sampled_from(sorted(STABLE_FIELDS)))
    ctx = STABLE_FIELDS[p]
    s = draw(st.integers(min_value=1, max_value=2))
    lower = draw(st.lists(st.integers(min_value=0, max_value=ctx.order - 1), min_size=s, max_size=s))
    top = draw(st.integers(min_value=1, max_value=ctx.order - 1))
    c = draw(st.integers(min_value=0, max_value=ctx.order - 1))
    terms = {1 + p ** j: ctx.from_index(k) for j, k in enumerate(lower + [top])}
    terms[1] = ctx.from_index(c)
    return Poly.from_terms(ctx, terms)


@settings(max_examples=60, deadline=None)
@given(xs_polys())
def test_stable_translations_are_the_palindromic_kernel(f):
    """Test that y in k stabilizes the class of f exactly when Ad_f(y) = 0."""
    ctx = f.ctx
    kernel = additive_kernel(palindromic(f), ctx)
    stable = {y for y in ctx.elements() if reduce(f.delta(y)).is_zero()}
    assert stable == _span(kernel, ctx.p, ctx)


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=24), min_size=1, max_size=3),
    st.lists(st.integers(min_value=0, max_value=24), min_size=1, max_size=3),
)
def test_twisted_product_is_composition(a, b):
    """Test to_poly(AB) = to_poly(A) o to_poly(B)."""
    A = TwistedPoly(F25, [F25.from_index(i) for i in a])
    B = TwistedPoly(F25, [F25.from_index(i) for i in b])
    assert twisted_mul(A, B).to_poly() == A.to_poly().compose(B.to_poly())


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.integers(min_value=0, max_value=24), min_size=1, max_size=3),
    st.integers(min_value=0, max_value=24),
    st.integers(min_value=0, max_value=24),
)
def test_additive_polynomials_are_additive(a, i, j):
    """Test A(x + y) = A(x) + A(y) and agreement with the expanded polynomial."""
    A = TwistedPoly(F25, [F25.from_index(k) for k in a])
    x, y = F25.from_index(i), F25.from_index(j)
    assert A.evaluate(x + y) == A.evaluate(x) + A.evaluate(y)
    assert A.evaluate(x) == A.to_poly().evaluate(x)
