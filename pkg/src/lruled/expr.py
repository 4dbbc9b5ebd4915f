"""Scalar expressions in one variable `u` with exact first and second derivatives.

Grammar (authoritative)::

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := '-' factor | power
    power  := atom ('^' factor)?
    atom   := number | 'u' | func '(' expr ')' | '(' expr ')'

so `^` binds tighter than unary minus and is right-associative, while
`* / + -` are left-associative.  Supported functions: sin, cos, tan, sinh,
cosh, tanh, exp, log, sqrt, abs.

Derivatives come from second-order dual numbers (:class:`Dual2`) threaded
through the same tree walk as plain evaluation, so they are exact to the
arithmetic model; no truncation error, no expression swell.  Parsed trees
are immutable and safe to evaluate concurrently.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence, Union

from .errors import DefinitionError, GeometryError


class LexError(DefinitionError):
    code = "lex-error"

    def __init__(self, position: int, message: str):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ParseError(DefinitionError):
    code = "parse-error"

    def __init__(self, position: int, expected: str):
        super().__init__(f"expected {expected} at position {position}")
        self.position = position
        self.expected = expected


class UnknownFunctionError(DefinitionError):
    code = "unknown-function"

    def __init__(self, name: str, position: int = -1):
        super().__init__(f"unknown function '{name}'")
        self.name = name
        self.position = position


class DomainError(GeometryError):
    """Evaluation left a function's domain (log <= 0, sqrt < 0, division by zero)."""

    code = "domain-error"

    def __init__(self, message: str, position: int = -1):
        if position >= 0:
            message = f"{message} (node at position {position})"
        super().__init__(message)
        self.position = position


class TokenKind(Enum):
    NUMBER = "number"
    IDENT = "ident"
    PLUS = "+"
    MINUS = "-"
    STAR = "*"
    SLASH = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    COMMA = ","


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int


_NUMBER_RE = re.compile(r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?", re.ASCII)
_IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*", re.ASCII)
_SINGLE = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "/": TokenKind.SLASH,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
    ",": TokenKind.COMMA,
}


def tokenize(source: str) -> list[Token]:
    """Lex `source` into tokens, skipping whitespace.

    Numbers accept decimal and scientific forms.  Any unrecognized character
    raises :class:`LexError` with its offset.
    """
    tokens: list[Token] = []
    i = 0
    n = len(source)
    digits = "0123456789"
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        # ASCII-only literals: unicode digits/letters fall through to LexError
        if ch in digits or (ch == "." and i + 1 < n and source[i + 1] in digits):
            m = _NUMBER_RE.match(source, i)
            if m is not None:
                tokens.append(Token(TokenKind.NUMBER, m.group(), i))
                i = m.end()
                continue
        if "a" <= ch <= "z" or "A" <= ch <= "Z" or ch == "_":
            m = _IDENT_RE.match(source, i)
            assert m is not None
            tokens.append(Token(TokenKind.IDENT, m.group(), i))
            i = m.end()
            continue
        kind = _SINGLE.get(ch)
        if kind is None:
            raise LexError(i, f"unrecognized character {ch!r}")
        tokens.append(Token(kind, ch, i))
        i += 1
    return tokens


# ---------------------------------------------------------------------------
# Abstract syntax
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Constant:
    value: float
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Variable:
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Unary:
    """Negation; the only unary operator."""

    operand: "Expr"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Binary:
    op: str  # one of + - * / ^
    left: "Expr"
    right: "Expr"
    pos: int = field(default=-1, compare=False)


@dataclass(frozen=True)
class Call:
    func: str
    arg: "Expr"
    pos: int = field(default=-1, compare=False)


Expr = Union[Constant, Variable, Unary, Binary, Call]

FUNCTIONS = ("sin", "cos", "tan", "sinh", "cosh", "tanh", "exp", "log", "sqrt", "abs")


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = list(tokens)
        self.i = 0

    def _peek(self) -> Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _end_position(self) -> int:
        if not self.tokens:
            return 0
        last = self.tokens[-1]
        return last.position + len(last.lexeme)

    def _expect(self, kind: TokenKind, what: str) -> Token:
        tok = self._peek()
        if tok is None:
            raise ParseError(self._end_position(), what)
        if tok.kind is not kind:
            raise ParseError(tok.position, what)
        self.i += 1
        return tok

    def parse(self) -> Expr:
        if not self.tokens:
            raise ParseError(0, "an expression")
        node = self._expr()
        tok = self._peek()
        if tok is not None:
            raise ParseError(tok.position, "end of input")
        return node

    def _expr(self) -> Expr:
        node = self._term()
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in (TokenKind.PLUS, TokenKind.MINUS):
                return node
            self.i += 1
            node = Binary(tok.lexeme, node, self._term(), pos=tok.position)

    def _term(self) -> Expr:
        node = self._factor()
        while True:
            tok = self._peek()
            if tok is None or tok.kind not in (TokenKind.STAR, TokenKind.SLASH):
                return node
            self.i += 1
            node = Binary(tok.lexeme, node, self._factor(), pos=tok.position)

    def _factor(self) -> Expr:
        tok = self._peek()
        if tok is not None and tok.kind is TokenKind.MINUS:
            self.i += 1
            return Unary(self._factor(), pos=tok.position)
        return self._power()

    def _power(self) -> Expr:
        base = self._atom()
        tok = self._peek()
        if tok is not None and tok.kind is TokenKind.CARET:
            self.i += 1
            # right operand is a factor: '^' is right-associative and admits
            # a signed exponent without parentheses.
            return Binary("^", base, self._factor(), pos=tok.position)
        return base

    def _atom(self) -> Expr:
        tok = self._peek()
        if tok is None:
            raise ParseError(self._end_position(), "a number, 'u', a function call, or '('")
        self.i += 1
        if tok.kind is TokenKind.NUMBER:
            return Constant(float(tok.lexeme), pos=tok.position)
        if tok.kind is TokenKind.IDENT:
            nxt = self._peek()
            if nxt is not None and nxt.kind is TokenKind.LPAREN:
                if tok.lexeme not in FUNCTIONS:
                    raise UnknownFunctionError(tok.lexeme, tok.position)
                self.i += 1
                arg = self._expr()
                self._expect(TokenKind.RPAREN, "')'")
                return Call(tok.lexeme, arg, pos=tok.position)
            if tok.lexeme == "u":
                return Variable(pos=tok.position)
            raise ParseError(tok.position, "the variable 'u' or a function call")
        if tok.kind is TokenKind.LPAREN:
            node = self._expr()
            self._expect(TokenKind.RPAREN, "')'")
            return node
        raise ParseError(tok.position, "a number, 'u', a function call, or '('")


def parse(tokens: Sequence[Token]) -> Expr:
    """Parse a token stream into an expression tree."""
    return _Parser(tokens).parse()


def parse_source(source: str) -> Expr:
    """Tokenize and parse in one step."""
    return parse(tokenize(source))


# ---------------------------------------------------------------------------
# Second-order dual numbers
# ---------------------------------------------------------------------------


class Dual2:
    """Number carrying (value, d/du, d^2/du^2) through arithmetic.

    Products and quotients obey the second-order Leibniz rules exactly in
    exact arithmetic; function application uses the chain rule
    f(g)'' = f''(g) g'^2 + f'(g) g''.
    """

    __slots__ = ("value", "d1", "d2")

    def __init__(self, value: float, d1: float = 0.0, d2: float = 0.0):
        self.value = value
        self.d1 = d1
        self.d2 = d2

    @staticmethod
    def variable(u: float) -> "Dual2":
        return Dual2(u, 1.0, 0.0)

    def __repr__(self) -> str:
        return f"Dual2({self.value!r}, {self.d1!r}, {self.d2!r})"

    def __add__(self, other):
        if isinstance(other, Dual2):
            return Dual2(self.value + other.value, self.d1 + other.d1, self.d2 + other.d2)
        return Dual2(self.value + other, self.d1, self.d2)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Dual2):
            return Dual2(self.value - other.value, self.d1 - other.d1, self.d2 - other.d2)
        return Dual2(self.value - other, self.d1, self.d2)

    def __rsub__(self, other):
        return Dual2(other - self.value, -self.d1, -self.d2)

    def __neg__(self):
        return Dual2(-self.value, -self.d1, -self.d2)

    def __mul__(self, other):
        if isinstance(other, Dual2):
            return Dual2(
                self.value * other.value,
                self.value * other.d1 + self.d1 * other.value,
                self.value * other.d2 + 2.0 * self.d1 * other.d1 + self.d2 * other.value,
            )
        return Dual2(self.value * other, self.d1 * other, self.d2 * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not isinstance(other, Dual2):
            inv = 1.0 / other
            return Dual2(self.value * inv, self.d1 * inv, self.d2 * inv)
        q = self.value / other.value
        q1 = (self.d1 - q * other.d1) / other.value
        q2 = (self.d2 - 2.0 * q1 * other.d1 - q * other.d2) / other.value
        return Dual2(q, q1, q2)

    def __rtruediv__(self, other):
        return Dual2(other, 0.0, 0.0) / self


Number = Union[float, Dual2]


def _value(x: Number) -> float:
    return x.value if isinstance(x, Dual2) else x


def _chain(x: Dual2, f0: float, f1: float, f2: float) -> Dual2:
    return Dual2(f0, f1 * x.d1, f2 * x.d1 * x.d1 + f1 * x.d2)


def _apply(name: str, x: Number, pos: int) -> Number:
    v = _value(x)
    if name == "log" and v <= 0.0:
        raise DomainError(f"log of non-positive value {v!r}", pos)
    if name == "sqrt":
        if v < 0.0:
            raise DomainError(f"sqrt of negative value {v!r}", pos)
        if v == 0.0 and isinstance(x, Dual2):
            raise DomainError("sqrt derivative undefined at zero", pos)
    if not isinstance(x, Dual2):
        if name == "abs":
            return abs(v)
        return getattr(math, name)(v)
    if name == "sin":
        return _chain(x, math.sin(v), math.cos(v), -math.sin(v))
    if name == "cos":
        return _chain(x, math.cos(v), -math.sin(v), -math.cos(v))
    if name == "tan":
        t = math.tan(v)
        s = 1.0 + t * t
        return _chain(x, t, s, 2.0 * t * s)
    if name == "sinh":
        return _chain(x, math.sinh(v), math.cosh(v), math.sinh(v))
    if name == "cosh":
        return _chain(x, math.cosh(v), math.sinh(v), math.cosh(v))
    if name == "tanh":
        t = math.tanh(v)
        s = 1.0 - t * t
        return _chain(x, t, s, -2.0 * t * s)
    if name == "exp":
        e = math.exp(v)
        return _chain(x, e, e, e)
    if name == "log":
        return _chain(x, math.log(v), 1.0 / v, -1.0 / (v * v))
    if name == "sqrt":
        r = math.sqrt(v)
        return _chain(x, r, 0.5 / r, -0.25 / (r * v))
    if name == "abs":
        s = 1.0 if v > 0.0 else (-1.0 if v < 0.0 else 0.0)
        return _chain(x, abs(v), s, 0.0)
    raise UnknownFunctionError(name, pos)


def _int_pow(base: Number, n: int, pos: int) -> Number:
    if n < 0:
        if _value(base) == 0.0:
            raise DomainError("zero base with negative exponent", pos)
        return 1.0 / _int_pow(base, -n, pos)
    result: Number = Dual2(1.0, 0.0, 0.0) if isinstance(base, Dual2) else 1.0
    acc = base
    while n:
        if n & 1:
            result = result * acc
        n >>= 1
        if n:
            acc = acc * acc
    return result


def _power(base: Number, expo: Number, pos: int) -> Number:
    if isinstance(expo, Dual2) and (expo.d1 != 0.0 or expo.d2 != 0.0):
        # exponent depends on u: a^b = exp(b log a), positive base required
        if _value(base) <= 0.0:
            raise DomainError("power with non-constant exponent requires positive base", pos)
        return _apply("exp", expo * _apply("log", base, pos), pos)
    c = _value(expo)
    if c == int(c):
        return _int_pow(base, int(c), pos)
    bv = _value(base)
    if bv <= 0.0:
        raise DomainError("fractional exponent requires positive base", pos)
    if not isinstance(base, Dual2):
        return bv**c
    return _chain(base, bv**c, c * bv ** (c - 1.0), c * (c - 1.0) * bv ** (c - 2.0))


def _eval(node: Expr, x: Number) -> Number:
    if isinstance(node, Constant):
        return node.value
    if isinstance(node, Variable):
        return x
    if isinstance(node, Unary):
        return -_eval(node.operand, x)
    if isinstance(node, Binary):
        left = _eval(node.left, x)
        right = _eval(node.right, x)
        op = node.op
        if op == "+":
            return left + right
        if op == "-":
            return left - right
        if op == "*":
            return left * right
        if op == "/":
            if _value(right) == 0.0:
                raise DomainError("division by zero", node.pos)
            return left / right
        return _power(left, right, node.pos)
    if isinstance(node, Call):
        return _apply(node.func, _eval(node.arg, x), node.pos)
    raise TypeError(f"not an expression node: {node!r}")


def evaluate(expr: Expr, u: float) -> float:
    """IEEE double evaluation of the tree at u."""
    result = _eval(expr, float(u))
    assert not isinstance(result, Dual2)
    return result


def eval_dual2(expr: Expr, u: float) -> Dual2:
    """Value plus exact first and second derivative at u."""
    result = _eval(expr, Dual2.variable(float(u)))
    if not isinstance(result, Dual2):
        # constant expression: derivatives vanish
        return Dual2(result, 0.0, 0.0)
    return result


# ---------------------------------------------------------------------------
# Formatting and curve specs
# ---------------------------------------------------------------------------

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_ATOM_PREC = 5
_UNARY_PREC = 3


def _prec(node: Expr) -> int:
    if isinstance(node, Binary):
        return _PREC[node.op]
    if isinstance(node, Unary):
        return _UNARY_PREC
    return _ATOM_PREC


def format_expr(node: Expr) -> str:
    """Render a tree as source that re-parses to the same tree."""
    if isinstance(node, Constant):
        return repr(node.value)
    if isinstance(node, Variable):
        return "u"
    if isinstance(node, Unary):
        inner = format_expr(node.operand)
        if _prec(node.operand) < _UNARY_PREC:
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(node, Binary):
        p = _PREC[node.op]
        left = format_expr(node.left)
        right = format_expr(node.right)
        if node.op == "^":
            if _prec(node.left) <= p:
                left = f"({left})"
            if _prec(node.right) < p:
                right = f"({right})"
        else:
            if _prec(node.left) < p:
                left = f"({left})"
            if _prec(node.right) <= p:
                right = f"({right})"
        return f"{left}{node.op}{right}"
    if isinstance(node, Call):
        return f"{node.func}({format_expr(node.arg)})"
    raise TypeError(f"not an expression node: {node!r}")


def split_components(text: str) -> list[str]:
    """Split a comma-joined component list at top-level commas."""
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


@dataclass(frozen=True)
class CurveSpec:
    """Three parsed component expressions x1(u), x2(u), x3(u)."""

    components: tuple[Expr, Expr, Expr]
    sources: tuple[str, str, str]

    @property
    def source(self) -> str:
        return ", ".join(self.sources)

    @classmethod
    def from_strings(cls, parts: Sequence[str]) -> "CurveSpec":
        if len(parts) != 3:
            raise DefinitionError(f"a curve needs exactly 3 components, got {len(parts)}")
        stripped = tuple(p.strip() for p in parts)
        exprs = tuple(parse_source(p) for p in stripped)
        return cls(components=exprs, sources=stripped)  # type: ignore[arg-type]

    @classmethod
    def from_text(cls, text: str) -> "CurveSpec":
        return cls.from_strings(split_components(text))
