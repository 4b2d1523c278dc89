"""Polynomial tests."""
from hypothesis import given, settings, strategies as st

from wildcover.models.field import field
from wildcover.models.poly import Poly, binomial_mod

F5 = field(5)
F25 = field(5, 2)


def _poly(ctx, terms):
    return Poly.from_terms(ctx, terms)


def test_arithmetic(f5):
    """Test products and powers over F_5."""
    X = Poly.x(f5)
    assert (X + 1) ** 2 == Poly(f5, [1, 2, 1])
    assert (X + 1) * Poly.zero(f5) == Poly.zero(f5)
    assert (X ** 5 - X) ** 2 == _poly(f5, {10: 1, 6: 3, 2: 1})
    assert ((X ** 5 - X) * 3).leading == 3


def test_compose(f5):
    """Test substitution f(g(X))."""
    X = Poly.x(f5)
    f = _poly(f5, {6: 1, 2: 4})
    assert f.compose(X) == f
    assert (X ** 2).compose(X + 1) == X ** 2 + X * 2 + 1
    assert (X ** 6).compose(X ** 5 - X).degree == 30


def test_delta(f5, f25):
    """Test translation differences."""
    X = Poly.x(f5)
    assert (X ** 6).delta(f5.one) == X ** 5 + X + 1
    assert (X ** 6).delta(f5.zero) == Poly.zero(f5)
    t = f25.gen
    Y = Poly.x(f25)
    assert (Y ** 2).delta(t) == Y * (2 * t) + 3


def test_evaluate(f5):
    """Test Horner evaluation."""
    X = Poly.x(f5)
    for a in f5.elements():
        assert (X ** 5 - X).evaluate(a) == 0
    assert Poly.zero(f5).evaluate(2) == 0
    assert _poly(f5, {6: 1, 2: 4}).evaluate(1) == 0


def test_rendering(f5, f25):
    """Test the text form of polynomials."""
    assert str(_poly(f5, {6: 1, 2: 4})) == "X^6 + 4*X^2"
    assert str(_poly(f25, {11: f25.gen + 1, 1: 2})) == "(t + 1)*X^11 + 2*X"
    assert str(Poly.zero(f5)) == "0"


def test_binomial_mod():
    """Test Lucas' theorem."""
    assert binomial_mod(10, 5, 5) == 2
    assert binomial_mod(25, 1, 5) == 0
    assert binomial_mod(3, 5, 5) == 0


coeff_lists = st.lists(st.integers(min_value=0, max_value=4), min_size=1, max_size=14)
f25_elements = st.integers(min_value=0, max_value=24).map(F25.from_index)


@settings(max_examples=100, deadline=None)
@given(coeff_lists, f25_elements)
def test_delta_lowers_degree(coeffs, y):
    """Test deg delta_y(f) < deg f for y != 0."""
    f = Poly(F25, coeffs)
    d = f.delta(y)
    if y and f.degree >= 1:
        assert d.degree < f.degree
    if not y:
        assert d.is_zero()


@settings(max_examples=100, deadline=None)
@given(coeff_lists, f25_elements, f25_elements)
def test_delta_cocycle(coeffs, y, z):
    """Test delta_(y+z)(f) = delta_y(f)(X + z) + delta_z(f)."""
    f = Poly(F25, coeffs)
    assert f.delta(y + z) == f.delta(y).shift(z) + f.delta(z)


@settings(max_examples=100, deadline=None)
@given(coeff_lists, f25_elements)
def test_shift_matches_compose(coeffs, y):
    """Test f(X + y) computed digit by digit against plain substitution."""
    f = Poly(F25, coeffs)
    assert f.shift(y) == f.compose(Poly.x(F25) + y)


@settings(max_examples=50, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists, st.integers(min_value=0, max_value=4))
def test_compose_is_associative(a, b, c, x):
    """Test (f o g) o h = f o (g o h) and evaluation consistency."""
    f, g, h = Poly(F5, a), Poly(F5, b[:4]), Poly(F5, c[:4])
    assert f.compose(g).compose(h) == f.compose(g.compose(h))
    assert f.compose(g).evaluate(x) == f.evaluate(g.evaluate(x))
