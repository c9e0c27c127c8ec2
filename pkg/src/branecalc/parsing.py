"""Model description files and element serialization.

File grammar, one statement per line (``#`` starts a comment)::

    model <name>
    generator <name> <degree>
    d <name> = <expr>

Expressions use rationals, generator names, ``*``, ``^``, ``+``, ``-`` and
parentheses.  Undeclared differentials are zero.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, List, Tuple

from .algebra import (
    AlgebraError,
    Element,
    FreeGCA,
    Generator,
    format_coefficient,
    format_element,
    format_monomial,
    parse_element,
)
from .sullivan import SullivanModel

NAME = r"[A-Za-z_][A-Za-z0-9_']*"
_TOKEN = re.compile(rf"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>{NAME})|(?P<op>[-+*^()]))")


class ParseError(AlgebraError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokenize(text: str, line: int, offset: int) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            col = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[col]!r}", line, offset + col + 1)
        kind = mt.lastgroup
        tokens.append((kind, mt.group(kind), offset + mt.start(kind) + 1))
        pos = mt.end()
    return tokens


class _ExprParser:
    """Recursive descent: expr := term (('+'|'-') term)*, term := unary ('*' unary)*,
    unary := ('-'|'+') unary | power, power := atom ('^' int)?."""

    def __init__(self, tokens, algebra: FreeGCA, line: int, end_col: int):
        self.tokens = tokens
        self.i = 0
        self.A = algebra
        self.line = line
        self.end_col = end_col

    def error(self, msg, tok=None):
        col = tok[2] if tok else self.end_col
        raise ParseError(msg, self.line, col)

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        self.i += 1
        return tok

    def parse(self) -> Element:
        if not self.tokens:
            self.error("empty expression")
        e = self.expr()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()[1]!r}", self.peek())
        return e

    def expr(self) -> Element:
        e = self.term()
        while (tok := self.peek()) is not None and tok[1] in "+-" and tok[0] == "op":
            self.take()
            rhs = self.term()
            e = e + rhs if tok[1] == "+" else e - rhs
        return e

    def term(self) -> Element:
        e = self.unary()
        while (tok := self.peek()) is not None and tok[1] == "*":
            self.take()
            e = e * self.unary()
        return e

    def unary(self) -> Element:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self.take()
            e = self.unary()
            return -e if tok[1] == "-" else e
        return self.power()

    def power(self) -> Element:
        e = self.atom()
        tok = self.peek()
        if tok is not None and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num" or "/" in exp[1]:
                self.error("exponent must be a non-negative integer", exp)
            e = e ** int(exp[1])
        return e

    def atom(self) -> Element:
        tok = self.take()
        kind, text, _ = tok
        if kind == "num":
            return self.A.scalar(Fraction(text))
        if kind == "name":
            if text not in self.A:
                self.error(f"unknown generator {text!r}", tok)
            return self.A.gen(text)
        if text == "(":
            e = self.expr()
            close = self.take()
            if close[1] != ")":
                self.error("expected ')'", close)
            return e
        self.error(f"unexpected {text!r}", tok)


def parse_expression(text: str, algebra: FreeGCA, line: int = 1, offset: int = 0) -> Element:
    tokens = _tokenize(text, line, offset)
    return _ExprParser(tokens, algebra, line, offset + len(text) + 1).parse()


def parse_model(text: str) -> SullivanModel:
    """Parse a model description; generator order is declaration order."""
    name = ""
    gens: List[Generator] = []
    seen: Dict[str, int] = {}
    diffs: List[Tuple[str, str, int, int, int]] = []  # name, expr, line, expr col, name col
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col0 = len(body) - len(body.lstrip()) + 1
        words = body.split()
        head = words[0]
        if head == "model":
            if len(words) < 2:
                raise ParseError("model needs a name", lineno, col0)
            name = body.strip()[len("model"):].strip()
        elif head == "generator":
            if len(words) != 3:
                raise ParseError("expected 'generator <name> <degree>'", lineno, col0)
            gname, deg = words[1], words[2]
            gcol = body.index(gname, col0 + len(head) - 1) + 1
            if not re.fullmatch(NAME, gname):
                raise ParseError(f"invalid generator name {gname!r}", lineno, gcol)
            if gname in seen:
                raise ParseError(f"generator {gname!r} already declared on line {seen[gname]}", lineno, gcol)
            dcol = body.rindex(deg) + 1
            if not re.fullmatch(r"\d+", deg) or int(deg) < 1:
                raise ParseError(f"degree must be a positive integer, got {deg!r}", lineno, dcol)
            seen[gname] = lineno
            gens.append(Generator(gname, int(deg)))
        elif head == "d":
            mt = re.match(rf"\s*d\s+({NAME})\s*=(.*)$", body)
            if not mt:
                raise ParseError("expected 'd <name> = <expr>'", lineno, col0)
            diffs.append((mt.group(1), mt.group(2), lineno, mt.start(2), mt.start(1) + 1))
        else:
            raise ParseError(f"unknown statement {head!r}", lineno, col0)
    if not gens:
        raise ParseError("no generators declared", 1, 1)
    A = FreeGCA(gens)
    d: Dict[str, Element] = {}
    for gname, expr, lineno, ecol, ncol in diffs:
        if gname not in A:
            raise ParseError(f"differential of unknown generator {gname!r}", lineno, ncol)
        if gname in d:
            raise ParseError(f"differential of {gname!r} given twice", lineno, ncol)
        value = parse_expression(expr, A, lineno, ecol)
        want = A.generator(gname).degree + 1
        degs = value.degrees()
        if degs and degs != {want}:
            raise ParseError(f"d {gname} must be homogeneous of degree {want}, got degrees {sorted(degs)}",
                             lineno, ecol + 1)
        d[gname] = value
    return SullivanModel(A, d, name=name)


def format_model(m: SullivanModel) -> str:
    """Inverse of :func:`parse_model` (up to comments and spacing)."""
    lines = [f"model {m.name}"] if m.name else []
    lines += [f"generator {g.name} {g.degree}" for g in m.generators]
    for g in m.generators:
        dg = m.dgen(g.name)
        if dg:
            lines.append(f"d {g.name} = {_as_expression(dg)}")
    return "\n".join(lines) + "\n"


def _as_expression(a: Element) -> str:
    parts = []
    for mono, c in a.sorted_terms():
        factors = [f"{a.algebra.names[i]}^{e}" for i, e in enumerate(mono) if e]
        if c != 1 or not factors:
            factors.insert(0, format_coefficient(c))
        parts.append(" * ".join(factors))
    return " + ".join(parts)


# --- element serialization -----------------------------------------------------

def element_to_json(a: Element) -> dict:
    return {
        "text": format_element(a),
        "terms": [[format_coefficient(c), format_monomial(a.algebra, mono)] for mono, c in a.sorted_terms()],
    }


def element_from_json(data: dict, algebra: FreeGCA) -> Element:
    return parse_element(data["text"], algebra)


def element_from_terms(terms, algebra: FreeGCA) -> Element:
    out = algebra.zero()
    for coef, mono in terms:
        out = out + parse_element(f"{coef} {mono}".strip(), algebra)
    return out

