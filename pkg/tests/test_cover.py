"""Cover verification tests."""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wildcover.engine.cover import (
    AdaptedBasis, CoverSpec, adapt_basis, find_stable_translations, is_adapted, max_jump_check,
    max_jump_ratio, ramification, rho_trivial, solve_rep_matrix, truncate_cover, verify_cover,
)
from wildcover.engine.families import special_family, special_rep_matrix
from wildcover.errors import DependentClasses, NotStable, OutOfRange
from wildcover.models.additive import palindromic, zero_set
from wildcover.models.asw import reduce
from wildcover.models.field import field
from wildcover.models.poly import Poly

F5 = field(5)


def _cls(ctx, terms):
    return reduce(Poly.from_terms(ctx, terms))


def test_adapt_basis_eliminates_equal_leading_terms(f5):
    """Test that {X^6 + 4X^2, X^6 + 4X^2 + X^3} becomes degrees (3, 6)."""
    basis = adapt_basis([_cls(f5, {6: 1, 2: 4}), _cls(f5, {6: 1, 3: 1, 2: 4})])
    assert basis.degrees == (3, 6)
    assert [str(f) for f in basis.functions] == ["X^3", "X^6 + 4*X^2"]
    assert basis.jumps == (3, 6)
    assert basis.dims == (0, 1, 2)
    assert is_adapted(basis.functions)


def test_adapt_basis_rejects_dependent_classes(f5):
    """Test DependentClasses for {f, 2f}."""
    f = _cls(f5, {6: 1, 2: 4})
    with pytest.raises(DependentClasses):
        adapt_basis([f, f.scale(2)])


def test_ramification_for_degrees_6_11(f5):
    """Test different, genus and |G| for adapted degrees (6, 11) and v = 2."""
    basis = adapt_basis([_cls(f5, {6: 1, 2: 4}), _cls(f5, {11: 1})])
    report = ramification(basis, 2)
    assert report.different == 268
    assert report.genus == 110
    assert report.order == 625
    assert report.hurwitz_ok
    assert report.is_big_action
    assert report.ratio_text == "625/110"
    assert report.ratio == Fraction(1000, 176)
    assert report.ratio == max_jump_ratio(5, 2)


def test_ramification_single_equation(f5):
    """Test g = 10 for m = 1 + p at p = 5."""
    report = ramification(adapt_basis([_cls(f5, {6: 1})]), 2)
    assert report.genus == 10
    assert report.ratio == Fraction(125, 10)


def test_special_family_verifies():
    """Test the end-to-end checks at p = 5, n = 2."""
    spec = special_family(5, 2)
    result = verify_cover(spec)
    assert result.passed, result.failed
    assert result.ramification.ratio_text == "625/110"
    assert not rho_trivial(result.matrices)
    jumps = max_jump_check(spec, result.matrices)
    assert jumps.levels_maximal and jumps.subdiagonals_nonzero
    assert jumps.passed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_special_family_matrices(n):
    """Test l_ji(y) = S(y)^(i-j)/(i-j)! on all of V and the degrees 1 + 5i."""
    spec = special_family(5, n)
    assert spec.degrees == tuple(1 + 5 * i for i in range(1, n + 1))
    a, b = spec.v_basis
    for i in range(5):
        for j in range(5):
            y = a * i + b * j
            s = (y ** 5 - y).to_int()
            assert solve_rep_matrix(spec, y).entries == special_rep_matrix(5, n, s)
    assert verify_cover(spec).passed
    assert max_jump_check(spec).passed


def test_translation_outside_the_zero_set_does_not_lift(f25):
    """Test NotStable(1) for V = <1, t> when t is not a root of Ad f1."""
    f1 = _cls(f25, {6: 4, 2: 1})
    spec = CoverSpec(5, f25, (f1,), (f25.one, f25.gen))
    with pytest.raises(NotStable) as exc:
        verify_cover(spec)
    assert exc.value.index == 1


def test_single_equation_verifies(f5):
    """Test f = X^6 with V = Z(Ad f): trivial representation and ratio 125/10."""
    f = Poly.monomial(f5, 6)
    ambient, basis = zero_set(palindromic(f), f5)
    spec = CoverSpec(5, ambient, (reduce(f).embed(ambient),), tuple(basis))
    result = verify_cover(spec)
    assert result.passed, result.failed
    assert rho_trivial(result.matrices)
    assert result.ramification.ratio == Fraction(125, 10)
    assert max_jump_check(spec).passed


def test_identity_translation():
    """Test L(0) = I."""
    spec = special_family(5, 3)
    assert solve_rep_matrix(spec, spec.ambient.zero).is_identity()


def test_truncate_cover():
    """Test that dropping f3 gives the n = 2 family back."""
    spec = special_family(5, 3)
    assert truncate_cover(spec, 3) == spec
    assert truncate_cover(spec, 2) == special_family(5, 2)
    assert verify_cover(truncate_cover(spec, 1)).passed
    with pytest.raises(OutOfRange):
        truncate_cover(spec, 0)


def test_find_stable_translations():
    """Test that the special family keeps all of Z(wp^2)."""
    spec = special_family(5, 2)
    found = find_stable_translations(spec.functions)
    assert len(found.basis) == 2
    assert found.candidates == 25


def test_incompatible_second_function_shrinks_v(f5):
    """Test that X^11 alongside 4X^6 + X^2 loses translations."""
    found = find_stable_translations([_cls(f5, {6: 4, 2: 1}), _cls(f5, {11: 1})])
    assert len(found.basis) < 2


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(min_value=1, max_value=80).filter(lambda m: m % 5), min_size=1, max_size=4),
    st.integers(min_value=0, max_value=4),
)
def test_hurwitz_identity(degrees, v):
    """Test 2(g - 1) = -2 p^n + d for any adapted degree sequence."""
    degrees = sorted(degrees)
    functions = tuple(_cls(F5, {m: 1}) for m in degrees)
    basis = AdaptedBasis(functions, tuple(degrees), tuple(sorted(set(degrees))), ())
    report = ramification(basis, v)
    assert report.hurwitz_ok
    assert report.is_big_action == (report.order * 4 > 10 * report.genus)
