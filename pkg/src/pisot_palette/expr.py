"""Window-endpoint expressions such as ``beta^2+1`` or ``1/2*beta - 3``.

Grammar::

    expr     := [sign] term { ("+" | "-") term }
    term     := rational [ "*" pow ] | pow
    pow      := "beta" [ "^" integer ]
    rational := integer [ "/" positive-integer ]

Powers above 2 are reduced with beta^3 = a beta^2 + b beta + 1, so they
need a base.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ExponentOutOfRange, ParseError
from .field import BaseSpec, QBeta

_TOKEN = re.compile(r"\s*(?:(\d+)|(beta)|(\S))")


def _tokens(text: str):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group(1):
            out.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2):
            out.append(("beta", None, m.start(2)))
        elif m.group(3):
            out.append((m.group(3), None, m.start(3)))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text, base):
        self.toks = _tokens(text)
        self.i = 0
        self.base = base

    def peek(self):
        return self.toks[self.i]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "number" if kind == "int" else repr(kind)
            raise ParseError(f"expected {want}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> QBeta:
        sign = 1
        if self.peek()[0] in ("+", "-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        total = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            t = self.term()
            total = total + t if op == "+" else total - t
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[0]!r}", tok[2])
        return total

    def term(self) -> QBeta:
        if self.peek()[0] == "beta":
            return self.power()
        coef = self.rational()
        if self.peek()[0] == "*":
            self.take("*")
            return self.power() * coef
        return QBeta.of(coef)

    def rational(self) -> Fraction:
        num = self.take("int")[1]
        if self.peek()[0] == "/":
            self.take("/")
            tok = self.take("int")
            if tok[1] == 0:
                raise ParseError("zero denominator", tok[2])
            return Fraction(num, tok[1])
        return Fraction(num)

    def power(self) -> QBeta:
        self.take("beta")
        k = 1
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.peek()
            if tok[0] == "-":
                raise ExponentOutOfRange("negative exponent", tok[2])
            tok = self.take("int")
            k = tok[1]
            if k > 2 and self.base is None:
                raise ExponentOutOfRange(f"beta^{k} needs a base to reduce", tok[2])
        if k <= 2:
            return QBeta.of(*[1 if e == k else 0 for e in range(3)])
        return self.base.beta_pow(k)


def parse_window(text: str, base: BaseSpec | None = None) -> QBeta:
    """Exact value of a window-endpoint expression."""
    return _Parser(text, base).expr()


def format_qbeta(q) -> str:
    """Inverse of :func:`parse_window` for values in Q(beta)."""
    parts = []
    for k in (2, 1, 0):
        c = Fraction(q[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            powr = "beta" if k == 1 else "beta^2"
            body = powr if c == 1 else f"{c}*{powr}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
