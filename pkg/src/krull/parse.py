"""Text parsers for ring specifications and polynomials.

Ring grammar:        ("Q" | "F" <prime>) "[" ident ("," ident)* "]" [order]
                     with order in {grevlex, lex}; ASCII only.
Polynomial grammar:  integer/rational literals, ring variables, + - * ^ and
                     parentheses; ^ binds tighter than *; unary minus allowed.
                     Rational literals are written 3/2 (no spaces); division
                     is otherwise not supported.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import ParseError
from .field import GF, QQ, is_prime
from .poly import GREVLEX, LEX, Polynomial, RingSpec

_ORDERS = {"grevlex": GREVLEX, "lex": LEX}


def parse_ring(text: str) -> RingSpec:
    """Parse a ring specification like ``"Q[x,y,z] grevlex"`` or ``"F32003[x1,y]"``."""
    i, n = 0, len(text)

    def skip_ws(j):
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    if i >= n or text[i] not in "QF":
        raise ParseError("expected field 'Q' or 'F<prime>'", i)
    if text[i] == "Q":
        fld = QQ
        i += 1
    else:
        i += 1
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if start == i:
            raise ParseError("expected prime after 'F'", start)
        p = int(text[start:i])
        if not is_prime(p):
            raise ParseError(f"{p} is not prime", start)
        fld = GF(p)
    i = skip_ws(i)
    if i >= n or text[i] != "[":
        raise ParseError("expected '['", i)
    i += 1
    names: List[str] = []
    while True:
        i = skip_ws(i)
        start = i
        if i < n and (text[i].isalpha() or text[i] == "_"):
            i += 1
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
        if start == i:
            raise ParseError("expected variable name", i)
        name = text[start:i]
        if name in names:
            raise ParseError(f"duplicate variable {name!r}", start)
        names.append(name)
        i = skip_ws(i)
        if i < n and text[i] == ",":
            i += 1
            continue
        if i < n and text[i] == "]":
            i += 1
            break
        raise ParseError("expected ',' or ']'", i)
    i = skip_ws(i)
    order = GREVLEX
    if i < n:
        start = i
        while i < n and text[i].isalpha():
            i += 1
        word = text[start:i]
        if word not in _ORDERS:
            raise ParseError(f"unknown order {word!r}", start)
        order = _ORDERS[word]
        i = skip_ws(i)
    if i < n:
        raise ParseError("trailing input", i)
    return RingSpec(fld, tuple(names), order)


# --- polynomial tokenizer -----------------------------------------------------

_TOK_NUM = "num"
_TOK_IDENT = "ident"
_TOK_OP = "op"
_TOK_END = "end"


def _tokenize(text: str) -> List[Tuple[str, object, int]]:
    toks: List[Tuple[str, object, int]] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[dstart:i])
                if den == 0:
                    raise ParseError("zero denominator", dstart)
                toks.append((_TOK_NUM, Fraction(num, den), start))
            else:
                toks.append((_TOK_NUM, Fraction(num), start))
            continue
        if ch.isalpha() or ch == "_":
            start = i
            i += 1
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            toks.append((_TOK_IDENT, text[start:i], start))
            continue
        if ch in "+-*^()":
            toks.append((_TOK_OP, ch, i))
            i += 1
            continue
        if ch == "/":
            raise ParseError("division is not supported", i)
        raise ParseError(f"unexpected character {ch!r}", i)
    toks.append((_TOK_END, None, n))
    return toks


class _PolyParser:
    def __init__(self, text: str, ring: RingSpec):
        self.toks = _tokenize(text)
        self.pos = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_op(self, op: str):
        kind, val, at = self.next()
        if kind != _TOK_OP or val != op:
            raise ParseError(f"expected {op!r}", at)

    def parse(self) -> Polynomial:
        p = self.expr()
        kind, _, at = self.peek()
        if kind != _TOK_END:
            raise ParseError("trailing input", at)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == _TOK_OP and val in "+-":
                self.next()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.unary()
        while True:
            kind, val, _ = self.peek()
            if kind == _TOK_OP and val == "*":
                self.next()
                p = p * self.unary()
            elif kind in (_TOK_NUM, _TOK_IDENT):
                _, _, at = self.peek()
                raise ParseError("expected operator", at)
            else:
                return p

    def unary(self) -> Polynomial:
        kind, val, _ = self.peek()
        if kind == _TOK_OP and val == "-":
            self.next()
            return -self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        kind, val, _ = self.peek()
        if kind == _TOK_OP and val == "^":
            self.next()
            ekind, eval_, at = self.next()
            if ekind != _TOK_NUM or eval_.denominator != 1 or eval_ < 0:
                raise ParseError("malformed exponent", at)
            return base ** int(eval_)
        return base

    def atom(self) -> Polynomial:
        kind, val, at = self.next()
        if kind == _TOK_NUM:
            try:
                return self.ring.constant(val)
            except ZeroDivisionError as exc:
                raise ParseError(str(exc), at) from None
        if kind == _TOK_IDENT:
            if val not in self.ring.names:
                raise ParseError(f"unknown variable {val!r}", at)
            return self.ring.var(val)
        if kind == _TOK_OP and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError("expected number, variable or '('", at)


def parse_poly(text: str, ring: RingSpec) -> Polynomial:
    """Parse one polynomial over the given ring."""
    return _PolyParser(text, ring).parse()


def parse_poly_list(text: str, ring: RingSpec) -> Tuple[Polynomial, ...]:
    """Parse a comma-separated list of polynomials (generator lists)."""
    parts: List[str] = []
    depth, start = 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return tuple(parse_poly(part, ring) for part in parts if part.strip())
