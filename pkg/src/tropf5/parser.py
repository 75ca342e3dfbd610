"""Parser for operator expressions such as ``2*d2 + x2`` or ``-1/3*x1^2*d1*h``.

Grammar (whitespace is ignored)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := rat ['*' factor ('*' factor)*] | factor ('*' factor)*
    factor := var ['^' uint]
    rat    := int ['/' uint]
    var    := 'h' | 'x'k | 'd'k        (1 <= k <= n)

Factors are multiplied left to right in the Weyl algebra, so ``d1*x1``
parses to ``x1*d1 + h^2``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .weylcore import Operator


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, src: str = ""):
        self.pos = pos
        self.src = src
        super().__init__(f"{msg} at position {pos}")


def _tokenize(src: str) -> List[Tuple[str, str, int]]:
    toks = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            toks.append(("int", src[i:j], i))
            i = j
        elif ch in "xd":
            j = i + 1
            while j < len(src) and src[j].isdigit():
                j += 1
            if j == i + 1:
                raise ParseError(f"variable {ch!r} needs an index", i, src)
            toks.append(("var", src[i:j], i))
            i = j
        elif ch == "h":
            toks.append(("var", "h", i))
            i += 1
        elif ch in "+-*/^":
            toks.append((ch, ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i, src)
    return toks


class _Parser:
    def __init__(self, src: str, n: int):
        self.src = src
        self.n = n
        self.toks = _tokenize(src)
        self.i = 0

    def peek(self) -> Optional[Tuple[str, str, int]]:
        return self.toks[self.i] if self.i < len(self.toks) else None

    def pos(self) -> int:
        t = self.peek()
        return t[2] if t else len(self.src)

    def take(self, kind: str):
        t = self.peek()
        if t is None or t[0] != kind:
            what = "end of input" if t is None else repr(t[1])
            raise ParseError(f"expected {kind!r}, found {what}", self.pos(), self.src)
        self.i += 1
        return t

    def expr(self) -> Operator:
        if self.peek() is None:
            raise ParseError("empty expression", 0, self.src)
        sign = 1
        if self.peek()[0] == "-":
            self.i += 1
            sign = -1
        total = self.term().scale(sign)
        while self.peek() is not None:
            t = self.peek()
            if t[0] not in "+-":
                raise ParseError(f"unexpected {t[1]!r}", t[2], self.src)
            self.i += 1
            nxt = self.term()
            total = total + nxt if t[0] == "+" else total - nxt
        return total

    def term(self) -> Operator:
        t = self.peek()
        if t is None:
            raise ParseError("expected a term", self.pos(), self.src)
        if t[0] == "int":
            self.i += 1
            coeff = Fraction(int(t[1]))
            if self.peek() is not None and self.peek()[0] == "/":
                self.i += 1
                den = self.take("int")
                if int(den[1]) == 0:
                    raise ParseError("zero denominator", den[2], self.src)
                coeff /= int(den[1])
            out = Operator.constant(self.n, coeff)
            if self.peek() is None or self.peek()[0] != "*":
                return out
            self.i += 1
        else:
            out = Operator.constant(self.n, 1)
        out = out * self.factor()
        while self.peek() is not None and self.peek()[0] == "*":
            self.i += 1
            out = out * self.factor()
        return out

    def factor(self) -> Operator:
        tok = self.peek()
        if tok is None or tok[0] != "var":
            raise ParseError("expected a variable", self.pos(), self.src)
        self.i += 1
        base = self.variable(tok)
        if self.peek() is not None and self.peek()[0] == "^":
            self.i += 1
            t = self.peek()
            if t is None or t[0] != "int":
                raise ParseError("malformed exponent", self.pos(), self.src)
            self.i += 1
            return base ** int(t[1])
        return base

    def variable(self, tok) -> Operator:
        name, pos = tok[1], tok[2]
        if name == "h":
            return Operator.h(self.n)
        k = int(name[1:])
        if not 1 <= k <= self.n:
            raise ParseError(f"index out of range in {name!r} (n={self.n})", pos, self.src)
        if name[0] == "x":
            return Operator.x(k, self.n)
        return Operator.d(k, self.n)


def parse_operator(src: str, n: int) -> Operator:
    """Parse ``src`` into an operator of D_n^(h)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _Parser(src, n).expr()


__all__ = ["ParseError", "parse_operator"]
