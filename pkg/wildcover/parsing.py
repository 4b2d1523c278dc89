"""Text forms: polynomial literals and cover spec files.

A spec file looks like::

    # comments run to the end of the line
    p=5 m=2 modulus=t^2+2
    f1 = X^6 + 4*X^2
    f2 = (t + 1)*X^11 + X^3
    V = auto                      (or: V = basis: t, 2*t + 1)
    family = special n=2          (optional)

Coefficients are polynomials in the generator t of the header field;
juxtaposition multiplies, so ``4X^2`` and ``4*X^2`` are the same.
"""
import re
from dataclasses import dataclass
from typing import Optional

from wildcover.engine.cover import CoverSpec
from wildcover.errors import ParseError
from wildcover.models.asw import ASClass
from wildcover.models.field import FieldCtx, FieldElement, field, format_coeffs
from wildcover.models.poly import Poly
from wildcover.schemas import FamilyDirective, SpecFile

TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>\*\*|[-+*^()]))")


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    column: int


def tokenize(text: str, line: int = 1, column: int = 1) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = TOKEN_RE.match(text, pos)
        if match is None:
            offset = len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character '{text[pos + offset]}'", line, column + pos + offset)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append(Token(kind, match.group(kind), column + start))
        pos = match.end()
    return tokens


class _Parser:
    """Recursive descent over + - * ^ ( ) with integers, t and one variable."""

    def __init__(self, text: str, ctx: FieldCtx, var: Optional[str], line: int, column: int):
        self.ctx = ctx
        self.var = var
        self.line = line
        self.end_column = column + len(text)
        self.tokens = tokenize(text, line, column)
        self.pos = 0

    def error(self, detail: str, token: Optional[Token] = None) -> ParseError:
        column = token.column if token is not None else self.end_column
        return ParseError(detail, self.line, column)

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> Token:
        token = self.peek()
        if token is None:
            raise self.error("unexpected end of input")
        self.pos += 1
        return token

    def parse(self):
        if not self.tokens:
            raise self.error("empty expression")
        value = self.expr()
        token = self.peek()
        if token is not None:
            raise self.error(f"unexpected '{token.text}'", token)
        return value

    def expr(self):
        value = self.term()
        while True:
            token = self.peek()
            if token is None or token.text not in "+-" or token.kind != "op":
                return value
            self.take()
            rhs = self.term()
            value = value + rhs if token.text == "+" else value - rhs

    def term(self):
        value = self.factor()
        while True:
            token = self.peek()
            if token is not None and token.kind == "op" and token.text == "*":
                self.take()
                value = value * self.factor()
            elif token is not None and (token.kind in ("int", "name") or token.text == "("):
                value = value * self.factor()
            else:
                return value

    def factor(self):
        token = self.peek()
        if token is not None and token.kind == "op" and token.text in "+-":
            self.take()
            value = self.factor()
            return -value if token.text == "-" else value
        value = self.atom()
        token = self.peek()
        if token is not None and token.kind == "op" and token.text in ("^", "**"):
            self.take()
            exponent = self.take()
            if exponent.kind != "int":
                raise self.error("exponents must be non-negative integers", exponent)
            value = value ** int(exponent.text)
        return value

    def atom(self):
        token = self.take()
        if token.kind == "int":
            return Poly.constant(self.ctx, int(token.text))
        if token.kind == "name":
            if token.text == self.var:
                return Poly.x(self.ctx)
            if token.text == "t" and self.var != "t":
                if self.ctx.m == 1:
                    raise self.error(f"t is not defined over {self.ctx!r}", token)
                return Poly.constant(self.ctx, self.ctx.gen)
            raise self.error(f"unknown symbol '{token.text}'", token)
        if token.text == "(":
            value = self.expr()
            closing = self.take()
            if closing.text != ")":
                raise self.error("expected ')'", closing)
            return value
        raise self.error(f"unexpected '{token.text}'", token)


def parse_poly(text: str, ctx: FieldCtx, var: str = "X", line: int = 1, column: int = 1) -> Poly:
    """Parse a polynomial in var with coefficients in ctx."""
    return _Parser(text, ctx, var, line, column).parse()


def parse_element(text: str, ctx: FieldCtx, line: int = 1, column: int = 1) -> FieldElement:
    value = _Parser(text, ctx, None, line, column).parse()
    return value.coeff(0)


def parse_modulus(text: str, p: int, line: int = 1, column: int = 1) -> list[int]:
    poly = parse_poly(text, field(p), "t", line, column)
    return [c.to_int() for c in poly.coeffs]


# Spec files

_FUNCTION_RE = re.compile(r"f(\d+)\s*=\s*(.*)$")


def _split_assignment(body: str, line: int, column: int) -> dict[str, tuple[str, int]]:
    """key=value words with their columns."""
    result = {}
    for match in re.finditer(r"\S+", body):
        word = match.group()
        if "=" not in word:
            raise ParseError(f"expected key=value, got '{word}'", line, column + match.start())
        key, value = word.split("=", 1)
        result[key] = (value, column + match.start() + len(key) + 1)
    return result


def _parse_header(body: str, line: int) -> tuple[int, int, Optional[list[int]]]:
    items = _split_assignment(body, line, 1)
    if "p" not in items:
        raise ParseError("the header must give p", line, 1)
    unknown = set(items) - {"p", "m", "modulus"}
    if unknown:
        raise ParseError(f"unknown header key '{sorted(unknown)[0]}'", line, 1)
    try:
        p = int(items["p"][0])
        m = int(items["m"][0]) if "m" in items else 1
    except ValueError:
        raise ParseError("p and m must be integers", line, 1)
    modulus = None
    if "modulus" in items:
        text, column = items["modulus"]
        modulus = parse_modulus(text, p, line, column)
        if "m" not in items:
            m = len(modulus) - 1
    return p, m, modulus


def header_field(sf: SpecFile) -> FieldCtx:
    return field(sf.p, sf.m, tuple(sf.modulus) if sf.modulus else None)


def parse_spec(text: str) -> SpecFile:
    """Parse spec text; polynomials are checked against the header field and stored normalized."""
    header = None
    ctx = None
    functions: list[str] = []
    v_auto = False
    v_basis: list[str] = []
    family = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        if header is None:
            header = _parse_header(stripped, line_no)
            ctx = field(header[0], header[1], tuple(header[2]) if header[2] else None)
            continue
        match = _FUNCTION_RE.match(stripped)
        if match:
            index = int(match.group(1))
            if index != len(functions) + 1:
                raise ParseError(f"expected f{len(functions) + 1}, got f{index}", line_no, indent + 1)
            column = indent + match.start(2) + 1
            functions.append(str(parse_poly(match.group(2), ctx, "X", line_no, column)))
            continue
        key, sep, rest = stripped.partition("=")
        key = key.strip()
        if not sep:
            raise ParseError(f"cannot read '{stripped}'", line_no, indent + 1)
        column = indent + len(stripped) - len(rest.lstrip()) + 1
        rest = rest.strip()
        if key == "V":
            if rest == "auto":
                v_auto = True
                continue
            if not rest.startswith("basis:"):
                raise ParseError("V must be 'auto' or 'basis: y1, y2, ...'", line_no, column)
            offset = column + len("basis:")
            body = rest[len("basis:"):]
            v_basis = []
            for item in body.split(","):
                if item.strip():
                    v_basis.append(str(parse_element(item, ctx, line_no, offset)))
                offset += len(item) + 1
            continue
        if key == "family":
            words = rest.split()
            if not words:
                raise ParseError("family needs a name", line_no, column)
            items = _split_assignment(" ".join(words[1:]), line_no, column)
            if "n" not in items:
                raise ParseError("family needs n=...", line_no, column)
            try:
                n = int(items.pop("n")[0])
            except ValueError:
                raise ParseError("n must be an integer", line_no, column)
            family = FamilyDirective(variant=words[0], n=n, values={k: v for k, (v, _) in items.items()})
            continue
        raise ParseError(f"unknown directive '{key}'", line_no, indent + 1)
    if header is None:
        raise ParseError("missing field header 'p=...'", 1, 1)
    p, m, modulus = header
    return SpecFile(
        p=p, m=m, modulus=modulus, functions=functions,
        v_auto=v_auto, v_basis=v_basis, family=family,
    )


def format_specfile(sf: SpecFile) -> str:
    lines = [f"p={sf.p} m={sf.m}" + (
        f" modulus={format_coeffs(sf.modulus, 't').replace(' ', '')}" if sf.modulus and sf.m > 1 else ""
    )]
    for i, f in enumerate(sf.functions, start=1):
        lines.append(f"f{i} = {f}")
    if sf.v_auto:
        lines.append("V = auto")
    elif sf.v_basis:
        lines.append("V = basis: " + ", ".join(sf.v_basis))
    if sf.family is not None:
        words = [sf.family.variant, f"n={sf.family.n}"]
        words.extend(f"{k}={v.replace(' ', '')}" for k, v in sorted(sf.family.values.items()))
        lines.append("family = " + " ".join(words))
    return "\n".join(lines) + "\n"


def _class_text(cls: ASClass) -> str:
    """The reduced representative plus a constant carrying the constant class."""
    if not cls.const_class:
        return str(cls.reduced)
    ctx = cls.ctx
    b = next(b for b in ctx.basis() if b.trace())
    c = b * (cls.const_class * pow(b.trace(), -1, ctx.p))
    return str(cls.reduced + Poly.constant(ctx, c))


def spec_to_specfile(spec: CoverSpec, family: Optional[FamilyDirective] = None) -> SpecFile:
    ctx = spec.ambient
    return SpecFile(
        p=spec.p,
        m=ctx.m,
        modulus=list(ctx.modulus) if ctx.m > 1 else None,
        functions=[_class_text(f) for f in spec.functions],
        v_basis=[str(y) for y in spec.v_basis],
        family=family,
    )


def format_spec(spec: CoverSpec, family: Optional[FamilyDirective] = None) -> str:
    return format_specfile(spec_to_specfile(spec, family))
