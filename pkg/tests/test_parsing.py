"""Polynomial literal and spec file tests."""
import pytest

from wildcover.commands.common import load_spec
from wildcover.engine.families import special_family
from wildcover.errors import ParseError
from wildcover.models.poly import Poly
from wildcover.parsing import format_spec, format_specfile, parse_element, parse_modulus, parse_poly, parse_spec

SPEC = """\
# the special family, one equation
p=5
f1 = X^6 + 4X^2   # juxtaposition multiplies
V = auto
"""


def test_parse_poly(f5, f25):
    """Test operators, juxtaposition and coefficients in t."""
    assert parse_poly("4X^2 + 3*X - 1", f5) == Poly.from_terms(f5, {2: 4, 1: 3, 0: 4})
    assert parse_poly("(X + 1)^2", f5) == Poly(f5, [1, 2, 1])
    assert parse_poly("-X**3", f5) == Poly.from_terms(f5, {3: 4})
    t = f25.gen
    assert parse_poly("t*X^11 + (t + 1)X", f25) == Poly.from_terms(f25, {11: t, 1: t + 1})
    assert parse_element("t^2 + 1", f25) == 4
    assert parse_modulus("t^2+2", 5) == [2, 0, 1]


def test_parse_errors(f5):
    """Test positions in parse errors."""
    with pytest.raises(ParseError) as exc:
        parse_poly("X^", f5)
    assert str(exc.value) == "1:3: unexpected end of input"
    with pytest.raises(ParseError) as exc:
        parse_poly("X $ 2", f5)
    assert exc.value.column == 3
    assert "'$'" in str(exc.value)
    with pytest.raises(ParseError):
        parse_poly("X^t", f5)
    with pytest.raises(ParseError):
        parse_poly("Y + 1", f5)
    with pytest.raises(ParseError):
        parse_poly("(X + 1", f5)
    with pytest.raises(ParseError):
        parse_poly("", f5)


def test_t_needs_an_extension(f5):
    """Test that t is rejected over a prime field."""
    with pytest.raises(ParseError) as exc:
        parse_poly("t*X", f5)
    assert exc.value.column == 1


def test_parse_spec():
    """Test comments, normalized equations and V = auto."""
    sf = parse_spec(SPEC)
    assert sf.p == 5 and sf.m == 1
    assert sf.functions == ["X^6 + 4*X^2"]
    assert sf.v_auto
    spec, params = load_spec(sf)
    assert params is None
    assert spec.v == 2
    assert spec.ambient.m == 5


def test_parse_spec_with_basis_and_family():
    """Test an explicit basis and a family directive over F_25."""
    sf = parse_spec("p=5 m=2 modulus=t^2+2\nfamily = universal n=2 b0=t b5=2\n")
    assert sf.modulus == [2, 0, 1]
    assert sf.family.variant == "universal"
    assert sf.family.values == {"b0": "t", "b5": "2"}
    spec, params = load_spec(sf)
    assert params.values["b0"] == params.values["b0"].ctx.gen
    assert spec.degrees == (6, 11)
    assert format_specfile(sf).startswith("p=5 m=2 modulus=t^2+2\n")

    sf = parse_spec("p=5\nf1 = X^6\nV = basis: 1\n")
    spec, _ = load_spec(sf)
    assert spec.v == 1
    assert spec.ambient.m == 1


def test_spec_round_trip():
    """Test that the printed spec of a family member reads back to the same cover."""
    spec = special_family(5, 2)
    again, _ = load_spec(parse_spec(format_spec(spec)))
    assert again == spec


def test_spec_errors():
    """Test header and directive errors with their positions."""
    with pytest.raises(ParseError):
        parse_spec("")
    with pytest.raises(ParseError):
        parse_spec("f1 = X^6\n")
    with pytest.raises(ParseError):
        parse_spec("p=5 q=3\n")
    with pytest.raises(ParseError) as exc:
        parse_spec("p=5\nfoo = 1\n")
    assert str(exc.value) == "2:1: unknown directive 'foo'"
    with pytest.raises(ParseError) as exc:
        parse_spec("p=5\nf2 = X\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError) as exc:
        parse_spec("p=5\nf1 = X^\n")
    assert str(exc.value) == "2:8: unexpected end of input"
    with pytest.raises(ParseError):
        parse_spec("p=5\nV = everything\n")
    with pytest.raises(ParseError):
        load_spec(parse_spec("p=5\n"))
