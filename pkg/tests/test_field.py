"""Finite field tests."""
import pytest
from hypothesis import given, settings, strategies as st

from wildcover.errors import DivisionByZero, FieldMismatch, InvalidField, NoEmbedding, NoRoot
from wildcover.models.field import (
    FieldCtx, artin_schreier_root, element_degree, embed, field, find_irreducible, trace_to_prime,
)

F625 = field(5, 4)


def test_prime_field_arithmetic(f5):
    """Test addition and inversion mod 5."""
    assert f5.from_int(2) + 4 == 1
    assert f5.from_int(3).inverse() == 2
    assert f5.from_int(3) / 3 == 1
    assert -f5.from_int(1) == 4


def test_extension_arithmetic(f25):
    """Test reduction by the modulus t^2 + 2."""
    t = f25.gen
    assert t * t == 3
    assert t ** 8 == 1
    assert t * t.inverse() == 1
    assert str(3 * t + 1) == "3*t + 1"
    assert repr(f25) == "F_5^2[t^2 + 2]"


def test_default_modulus():
    """Test the lexicographically smallest irreducible."""
    assert find_irreducible(5, 2) == (2, 0, 1)
    assert find_irreducible(5, 1) == (0, 1)
    assert field(5, 2) is field(5, 2)


def test_frobenius(f25):
    """Test t^5 = 4t and the inverse Frobenius."""
    t = f25.gen
    assert t.frobenius(1) == 4 * t
    assert t.frobenius(1).frobenius(-1) == t
    assert t.frobenius(2) == t
    assert f25.zero.frobenius(-3) == 0
    assert f25.from_int(3).frobenius(1) == 3


def test_trace(f5, f25):
    """Test traces down to F_5."""
    assert trace_to_prime(f25.one) == 2
    assert trace_to_prime(f25.gen) == 0
    assert trace_to_prime(f5.from_int(3)) == 3


def test_artin_schreier_root(f5, f25):
    """Test roots of z^p - z = c."""
    assert artin_schreier_root(f5.zero) == 0
    with pytest.raises(NoRoot):
        artin_schreier_root(f5.one)
    t = f25.gen
    c = t ** 5 - t
    assert c == 3 * t
    z = artin_schreier_root(c)
    assert z ** 5 - z == c
    assert (z - t).is_prime_field()


def test_artin_schreier_root_exists_iff_trace_vanishes():
    """Test solvability against the trace over small fields."""
    for ctx in (field(5, 2), field(3, 3), field(7)):
        for c in ctx.elements():
            if c.trace():
                with pytest.raises(NoRoot):
                    artin_schreier_root(c)
            else:
                z = artin_schreier_root(c)
                assert z ** ctx.p - z == c


def test_embedding(f5, f25):
    """Test the fixed embedding F_25 -> F_625."""
    assert embed(f5.from_int(3), f25) == 3
    r = embed(f25.gen, F625)
    assert r * r + 2 == 0
    with pytest.raises(NoEmbedding):
        embed(f25.gen, field(5, 3))


def test_invalid_fields():
    """Test rejected moduli and characteristics."""
    with pytest.raises(InvalidField):
        field(4)
    with pytest.raises(InvalidField):
        FieldCtx(5, (1, 0, 1))
    with pytest.raises(InvalidField):
        field(5, 0)


def test_mixing_fields_fails(f5, f25):
    """Test that elements of different fields do not combine."""
    with pytest.raises(FieldMismatch):
        f5.one + f25.gen
    with pytest.raises(DivisionByZero):
        f5.zero.inverse()


elements_625 = st.integers(min_value=0, max_value=624).map(F625.from_index)


@settings(max_examples=200, deadline=None)
@given(elements_625, elements_625, st.integers(min_value=-4, max_value=4))
def test_frobenius_is_a_field_automorphism(a, b, k):
    """Test that a -> a^(p^k) respects sums and products."""
    assert (a * b).frobenius(k) == a.frobenius(k) * b.frobenius(k)
    assert (a + b).frobenius(k) == a.frobenius(k) + b.frobenius(k)


@settings(max_examples=200, deadline=None)
@given(elements_625)
def test_trace_kills_artin_schreier_images(z):
    """Test Tr(z^p - z) = 0."""
    assert (z ** 5 - z).trace() == 0


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=24), st.integers(min_value=0, max_value=24))
def test_embedding_is_a_ring_map(i, j):
    """Test that the embedding F_25 -> F_625 preserves sums and products."""
    f25 = field(5, 2)
    a, b = f25.from_index(i), f25.from_index(j)
    assert embed(a + b, F625) == embed(a, F625) + embed(b, F625)
    assert embed(a * b, F625) == embed(a, F625) * embed(b, F625)


def test_products_agree_with_galois(f25):
    """Test the cached exp/log lists against galois array products."""
    elements = list(f25.elements())
    for a in elements:
        for b in elements:
            expected = f25.from_array(f25.array(a.coeffs) * f25.array(b.coeffs))
            assert (a * b).coeffs == expected


def test_field_without_tables():
    """Test F_5^8, which multiplies through galois arrays directly."""
    ctx = field(5, 8)
    assert ctx._tables is None
    t = ctx.gen
    assert t.frobenius(8) == t
    assert t ** (ctx.order - 1) == 1
    assert t * t.inverse() == 1
    assert sum((t.frobenius(k) for k in range(8)), ctx.zero) == t.trace()
    assert element_degree(t) == 8
    assert element_degree(embed(field(5, 2).gen, ctx)) == 2
    assert element_degree(ctx.from_int(3)) == 1
