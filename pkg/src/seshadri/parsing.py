"""Polynomial text format: a small recursive-descent parser and a printer.

Grammar (whitespace-insensitive)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := coeff ('*'? factor)* | factor ('*' factor)*
    factor := var ('^' uint)? | '(' expr ')' ('^' uint)?
    coeff  := int | int '/' uint

Variables are declared names; with no declaration the names default to
``x1..xn`` and, for arity at most 4, ``x y z w`` work as aliases.  The
printer emits the canonical descending-order form and ``parse(format(p))``
recovers ``p`` exactly.

Input files carry a one-line header ``vars: x,y,z`` declaring the variable
names and their order, followed by one expression.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .errors import ParameterError, ParseError
from .poly import QQ, Field, Polynomial

_DEFAULT_ALIASES = ("x", "y", "z", "w")


def default_variables(arity: int) -> List[str]:
    return [f"x{i + 1}" for i in range(arity)]


class _Token:
    __slots__ = ("kind", "text", "line", "col")

    def __init__(self, kind: str, text: str, line: int, col: int):
        self.kind = kind
        self.text = text
        self.line = line
        self.col = col


def _tokenize(src: str) -> List[_Token]:
    tokens: List[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            tokens.append(_Token("int", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(_Token("name", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(_Token(ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    tokens.append(_Token("eof", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], variables: Sequence[str], arity: int, field: Field):
        self.tokens = tokens
        self.pos = 0
        self.arity = arity
        self.field = field
        self.lookup = {}
        for idx, name in enumerate(variables):
            self.lookup[name] = idx
        if arity <= len(_DEFAULT_ALIASES) and list(variables) == default_variables(arity):
            for idx in range(arity):
                self.lookup.setdefault(_DEFAULT_ALIASES[idx], idx)

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self, kind: Optional[str] = None) -> _Token:
        tok = self.tokens[self.pos]
        if kind is not None and tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text or 'end of input'!r}", tok.line, tok.col)
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "eof":
            raise ParseError(f"unexpected {tok.text!r}", tok.line, tok.col)
        return value

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.take().kind == "-" else 1
        total = self.term() * sign
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            nxt = self.term()
            total = total + nxt if op == "+" else total - nxt
        return total

    def term(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            coeff = self.coeff()
            product = Polynomial.constant(coeff, self.arity, self.field)
            while True:
                nxt = self.peek()
                if nxt.kind == "*":
                    self.take()
                    product = product * self.factor()
                elif nxt.kind in ("name", "("):
                    product = product * self.factor()
                else:
                    return product
        product = self.factor()
        while self.peek().kind == "*":
            self.take()
            product = product * self.factor()
        return product

    def coeff(self) -> Fraction:
        num_tok = self.take("int")
        value = Fraction(int(num_tok.text))
        if self.peek().kind == "/":
            self.take()
            den_tok = self.take("int")
            den = int(den_tok.text)
            if den == 0:
                raise ParseError("zero denominator", den_tok.line, den_tok.col)
            value = Fraction(value, den)
        return value

    def factor(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "name":
            self.take()
            idx = self.lookup.get(tok.text)
            if idx is None:
                raise ParseError(f"unknown variable {tok.text!r}", tok.line, tok.col)
            base = Polynomial.variable(idx, self.arity, self.field)
        elif tok.kind == "(":
            self.take()
            base = self.expr()
            self.take(")")
        else:
            raise ParseError(
                f"expected a variable, '(' or a coefficient, found {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        if self.peek().kind == "^":
            caret = self.take()
            exp_tok = self.peek()
            if exp_tok.kind != "int":
                raise ParseError("expected an integer exponent after '^'", caret.line, caret.col + 1)
            self.take()
            base = base ** int(exp_tok.text)
        return base


def parse_polynomial(
    src: str,
    variables: Optional[Sequence[str]] = None,
    arity: Optional[int] = None,
    field: Field = QQ,
) -> Polynomial:
    """Parse an expression into an exact polynomial.

    Either pass the declared variable names or an arity (which selects the
    default names).
    """
    if variables is None:
        if arity is None:
            raise ParameterError("parse_polynomial needs variables or an arity")
        variables = default_variables(arity)
    names = list(variables)
    if len(set(names)) != len(names):
        raise ParameterError("duplicate variable names")
    return _Parser(_tokenize(src), names, len(names), field).parse()


def format_coefficient(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_polynomial(p: Polynomial, variables: Optional[Sequence[str]] = None) -> str:
    """Canonical text form; round-trips through ``parse_polynomial``."""
    if variables is None:
        variables = default_variables(p.arity)
    if len(variables) != p.arity:
        raise ParameterError("variable list does not match arity")
    if p.is_zero:
        return "0"
    chunks: List[str] = []
    for pos, (exps, coeff) in enumerate(p.terms):
        neg = coeff < 0
        mag = -coeff if neg else coeff
        factors = [
            variables[i] if e == 1 else f"{variables[i]}^{e}"
            for i, e in enumerate(exps)
            if e
        ]
        if not factors:
            body = format_coefficient(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([format_coefficient(mag)] + factors)
        if pos == 0:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(chunks)


def parse_point(src: str, arity: int) -> Tuple[Fraction, ...]:
    """Comma-separated exact rationals, one per variable."""
    parts = [s.strip() for s in src.split(",")]
    if len(parts) != arity:
        raise ParameterError(f"point has {len(parts)} coordinates, expected {arity}")
    coords = []
    for part in parts:
        try:
            coords.append(Fraction(part))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"bad rational coordinate {part!r}: {exc}") from exc
    return tuple(coords)


def read_polynomial_source(text: str) -> Tuple[List[str], Polynomial]:
    """Parse a polynomial file: a ``vars:`` header line then one expression."""
    lines = text.splitlines()
    header_idx = None
    for i, line in enumerate(lines):
        if line.strip():
            header_idx = i
            break
    if header_idx is None or not lines[header_idx].strip().lower().startswith("vars:"):
        raise ParseError("expected a 'vars: <names>' header line", 1, 1)
    header = lines[header_idx].strip()
    names = [s.strip() for s in header[len("vars:"):].split(",") if s.strip()]
    if not names:
        raise ParseError("empty variable list in header", header_idx + 1, 1)
    body = "\n".join(lines[header_idx + 1 :])
    if not body.strip():
        raise ParseError("missing polynomial expression after header", header_idx + 2, 1)
    return names, parse_polynomial(body, variables=names)
