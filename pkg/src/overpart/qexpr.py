"""A small expression language for Pochhammer-product generating functions.

Grammar (whitespace insignificant)::

    expr  := term {("*" | "/") term}
    term  := atom ["^" int]
    atom  := poch | "(" expr ")" | mono
    poch  := "(" mono {"," mono} ";" mono ")" ("_inf" | "_" int)
    mono  := ["-"] ("1" | ["x" ["^" int]] ["q" ["^" int]])

A monomial exponent defaults to 1, ``_inf`` (or the symbol for infinity)
marks an infinite product, and the only numeric literal is 1.  Inside a
Pochhammer symbol every monomial must carry a q exponent >= 1, so products
like ``(1;q)_inf`` are rejected as ill-formed rather than expanded.

Example -- the overpartition generating function::

    >>> evaluate("(-q;q)_inf / (q;q)_inf", 4).coeffs
    (1, 2, 4, 8, 14)

Parsing is total: any input string yields either an AST or a
:class:`ParseError` carrying a 1-based line:column position.  Evaluation is
exact, delegating to the series engine; q-only evaluation is the default
and bivariate expressions go through :func:`evaluate_x`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .series import IllFormedMonomial, Monomial, NonUnitConstantTerm, QSeries, XQSeries, pochhammer

Span = tuple[int, int]


class ParseError(ValueError):
    """Syntax error with a 1-based line:column position."""

    def __init__(self, line: int, column: int, expected: str):
        super().__init__(f"{line}:{column}: expected {expected}")
        self.line = line
        self.column = column
        self.expected = expected


class EvalError(ValueError):
    """Evaluation error carrying the offending source span."""

    def __init__(self, span: Span, message: str):
        super().__init__(f"{span[0]}:{span[1]}: {message}")
        self.span = span


# ---------------------------------------------------------------------------
# tokens

_PUNCT = {"(": "LP", ")": "RP", ",": "COMMA", ";": "SEMI", "*": "STAR",
          "/": "SLASH", "^": "CARET", "-": "MINUS", "_": "USCORE"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, column = 1, 1
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch == "\n":
            line += 1
            column = 1
            pos += 1
            continue
        if ch.isspace():
            column += 1
            pos += 1
            continue
        if ch in _PUNCT:
            tokens.append(_Token(_PUNCT[ch], ch, line, column))
            column += 1
            pos += 1
            continue
        if ch.isdigit():
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            tokens.append(_Token("INT", text[start:pos], line, column))
            column += pos - start
            continue
        if ch in ("x", "q"):
            tokens.append(_Token("NAME", ch, line, column))
            column += 1
            pos += 1
            continue
        if text.startswith("inf", pos):
            tokens.append(_Token("INF", "inf", line, column))
            column += 3
            pos += 3
            continue
        if ch == "∞":
            tokens.append(_Token("INF", ch, line, column))
            column += 1
            pos += 1
            continue
        raise ParseError(line, column, f"a token, not {ch!r}")
    tokens.append(_Token("END", "", line, column))
    return tokens


# ---------------------------------------------------------------------------
# AST

@dataclass(frozen=True)
class Mono:
    monomial: Monomial
    span: Span = field(compare=False, default=(1, 1))


@dataclass(frozen=True)
class Poch:
    args: tuple[Mono, ...]
    base: Mono
    length: Optional[int]
    span: Span = field(compare=False, default=(1, 1))


@dataclass(frozen=True)
class Power:
    base: "Node"
    exponent: int
    span: Span = field(compare=False, default=(1, 1))


@dataclass(frozen=True)
class Paren:
    child: "Node"
    span: Span = field(compare=False, default=(1, 1))


@dataclass(frozen=True)
class Product:
    lhs: "Node"
    rhs: "Node"
    span: Span = field(compare=False, default=(1, 1))


@dataclass(frozen=True)
class Quotient:
    lhs: "Node"
    rhs: "Node"
    span: Span = field(compare=False, default=(1, 1))


Node = Union[Mono, Poch, Power, Paren, Product, Quotient]


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self, ahead: int = 0) -> _Token:
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def take(self) -> _Token:
        token = self.tokens[self.pos]
        if token.kind != "END":
            self.pos += 1
        return token

    def fail(self, expected: str) -> ParseError:
        token = self.peek()
        return ParseError(token.line, token.column, expected)

    def expect(self, kind: str, expected: str) -> _Token:
        if self.peek().kind != kind:
            raise self.fail(expected)
        return self.take()

    def parse_expr(self) -> Node:
        node = self.parse_term()
        while self.peek().kind in ("STAR", "SLASH"):
            op = self.take()
            rhs = self.parse_term()
            cls = Product if op.kind == "STAR" else Quotient
            node = cls(node, rhs, span=(op.line, op.column))
        return node

    def parse_term(self) -> Node:
        node = self.parse_atom()
        if self.peek().kind == "CARET":
            caret = self.take()
            exponent = self.parse_signed_int("an integer exponent")
            node = Power(node, exponent, span=(caret.line, caret.column))
        return node

    def parse_signed_int(self, expected: str) -> int:
        sign = 1
        if self.peek().kind == "MINUS":
            self.take()
            sign = -1
        token = self.expect("INT", expected)
        return sign * int(token.text)

    def parse_atom(self) -> Node:
        token = self.peek()
        if token.kind == "LP":
            return self.parse_poch() if self.poch_ahead() else self.parse_paren()
        if token.kind in ("MINUS", "NAME") or (token.kind == "INT" and token.text == "1"):
            return self.parse_mono(inside_poch=False)
        raise self.fail("an expression")

    def poch_ahead(self) -> bool:
        # a Pochhammer symbol has a ';' before the matching ')'; its interior
        # never nests parentheses
        depth = 0
        for ahead in range(len(self.tokens) - self.pos):
            kind = self.peek(ahead).kind
            if kind == "LP":
                depth += 1
            elif kind == "RP":
                depth -= 1
                if depth == 0:
                    return False
            elif kind == "SEMI" and depth == 1:
                return True
            elif kind == "END":
                return False
        return False

    def parse_paren(self) -> Node:
        opener = self.expect("LP", "'('")
        child = self.parse_expr()
        self.expect("RP", "')'")
        return Paren(child, span=(opener.line, opener.column))

    def parse_poch(self) -> Node:
        opener = self.expect("LP", "'('")
        args = [self.parse_mono(inside_poch=True)]
        while self.peek().kind == "COMMA":
            self.take()
            args.append(self.parse_mono(inside_poch=True))
        self.expect("SEMI", "';'")
        base = self.parse_mono(inside_poch=True)
        self.expect("RP", "')'")
        self.expect("USCORE", "'_'")
        token = self.peek()
        if token.kind == "INF":
            self.take()
            length: Optional[int] = None
        elif token.kind == "INT":
            length = int(self.take().text)
        else:
            raise self.fail("'inf' or a product length")
        return Poch(tuple(args), base, length, span=(opener.line, opener.column))

    def parse_mono(self, inside_poch: bool) -> Mono:
        start = self.peek()
        span = (start.line, start.column)
        sign = 1
        consumed = False
        if self.peek().kind == "MINUS":
            self.take()
            sign = -1
            consumed = True
        x_exp = 0
        q_exp = 0
        if self.peek().kind == "INT":
            if self.peek().text != "1":
                raise self.fail("the literal 1 (the only numeric literal)")
            self.take()
            consumed = True
        else:
            if self.peek().kind == "NAME" and self.peek().text == "x":
                self.take()
                consumed = True
                x_exp = 1
                if self.peek().kind == "CARET":
                    self.take()
                    x_exp = self.parse_signed_int("an integer exponent")
            if self.peek().kind == "NAME" and self.peek().text == "q":
                self.take()
                consumed = True
                q_exp = 1
                if self.peek().kind == "CARET":
                    self.take()
                    q_exp = self.parse_signed_int("an integer exponent")
        if not consumed:
            raise self.fail("a monomial")
        if x_exp < 0:
            raise IllFormedMonomial(f"{span[0]}:{span[1]}: negative x exponent {x_exp}")
        if inside_poch and q_exp < 1:
            raise IllFormedMonomial(
                f"{span[0]}:{span[1]}: Pochhammer monomials need q exponent >= 1, got {q_exp}")
        return Mono(Monomial(sign, x_exp, q_exp), span=span)


def parse(text: str) -> Node:
    """Parse ``text`` into an AST, consuming the whole input."""
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    if parser.peek().kind != "END":
        raise parser.fail("end of input")
    return node


# ---------------------------------------------------------------------------
# unparse and evaluate

def _mono_text(mono: Monomial) -> str:
    body = ""
    if mono.x_exp:
        body += "x" if mono.x_exp == 1 else f"x^{mono.x_exp}"
    if mono.q_exp:
        body += "q" if mono.q_exp == 1 else f"q^{mono.q_exp}"
    if not body:
        body = "1"
    return ("-" if mono.sign < 0 else "") + body


def unparse(node: Node) -> str:
    """Render an AST back to source text; reparsing gives an equal AST."""
    if isinstance(node, Mono):
        return _mono_text(node.monomial)
    if isinstance(node, Poch):
        inner = ",".join(_mono_text(a.monomial) for a in node.args)
        suffix = "_inf" if node.length is None else f"_{node.length}"
        return f"({inner};{_mono_text(node.base.monomial)}){suffix}"
    if isinstance(node, Power):
        return f"{unparse(node.base)}^{node.exponent}"
    if isinstance(node, Paren):
        return f"({unparse(node.child)})"
    if isinstance(node, Product):
        return f"{unparse(node.lhs)} * {unparse(node.rhs)}"
    if isinstance(node, Quotient):
        return f"{unparse(node.lhs)} / {unparse(node.rhs)}"
    raise TypeError(f"not an AST node: {node!r}")


def _unit_inverse(series: XQSeries, span: Span) -> XQSeries:
    try:
        return series.invert()
    except NonUnitConstantTerm as exc:
        raise NonUnitConstantTerm(f"{span[0]}:{span[1]}: {exc}", span=span) from None


def _eval_node(node: Node, order: int) -> XQSeries:
    if isinstance(node, Mono):
        mono = node.monomial
        if mono.q_exp < 0:
            raise EvalError(node.span, f"negative q exponent {mono.q_exp} has no series expansion")
        return XQSeries.monomial(order, mono.sign, mono.x_exp, mono.q_exp)
    if isinstance(node, Poch):
        return pochhammer([a.monomial for a in node.args], node.base.monomial, node.length, order)
    if isinstance(node, Paren):
        return _eval_node(node.child, order)
    if isinstance(node, Power):
        base = _eval_node(node.base, order)
        if node.exponent < 0:
            return _unit_inverse(base, node.span) ** (-node.exponent)
        return base ** node.exponent
    if isinstance(node, Product):
        return _eval_node(node.lhs, order) * _eval_node(node.rhs, order)
    if isinstance(node, Quotient):
        return _eval_node(node.lhs, order) * _unit_inverse(_eval_node(node.rhs, order), node.span)
    raise TypeError(f"not an AST node: {node!r}")


def evaluate_x(expr: Union[str, Node], order: int) -> XQSeries:
    """Expand an expression (text or AST) as a bivariate series."""
    node = parse(expr) if isinstance(expr, str) else expr
    return _eval_node(node, order)


def evaluate(expr: Union[str, Node], order: int) -> QSeries:
    """Expand a q-only expression; expressions involving x are rejected."""
    node = parse(expr) if isinstance(expr, str) else expr
    series = _eval_node(node, order)
    try:
        return series.to_qseries()
    except ValueError:
        span = getattr(node, "span", (1, 1))
        raise EvalError(span, "expression involves x; use the bivariate evaluator") from None
