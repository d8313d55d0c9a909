"""Parser for monomial ideal expressions such as ``(x*y, x^2*z)``.

Grammar (whitespace insensitive)::

    ideal  := ['ideal'] '(' [term (',' term)*] ')'
    term   := factor ('*' factor)*
    factor := identifier ['^' integer] | '1'

Identifiers are an ASCII letter followed by ASCII letters or digits.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import MAX_EXPONENT, AmbientRing, MonomialIdeal
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(?P<ident>[A-Za-z][A-Za-z0-9]*)|(?P<int>[0-9]+)|(?P<op>[(),*^+\-])|(?P<bad>\S))")


@dataclass(frozen=True)
class IdealExpression:
    source: str
    ring: AmbientRing
    generators: tuple[tuple[int, ...], ...]

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ring, self.generators)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        start = m.start(kind)
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", start)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, declared: Optional[Sequence[str]]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.declared = list(declared) if declared is not None else None
        self.order = list(self.declared) if self.declared is not None else []

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, text, pos = self.take()
        if text != value or kind not in ("op",):
            self._fail(kind, text, pos, f"expected {value!r}")

    def _fail(self, kind, text, pos, message):
        if kind == "op" and text in "+-":
            raise ParseError("non-monomial generator", pos)
        if kind == "end":
            raise ParseError(f"{message}, found end of input", pos)
        raise ParseError(f"{message}, found {text!r}", pos)

    def parse(self):
        kind, text, pos = self.peek()
        if kind == "ident" and text == "ideal":
            self.take()
        self.expect("(")
        terms = []
        if self.peek()[1] == ")" and self.peek()[0] == "op":
            self.take()
        else:
            terms.append(self.term())
            while True:
                kind, text, pos = self.take()
                if kind == "op" and text == ",":
                    terms.append(self.term())
                elif kind == "op" and text == ")":
                    break
                else:
                    self._fail(kind, text, pos, "expected ',' or ')'")
        kind, text, pos = self.take()
        if kind != "end":
            self._fail(kind, text, pos, "unexpected trailing input")
        return terms

    def term(self):
        exps = {}
        self.factor(exps)
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            self.factor(exps)
        kind, text, pos = self.peek()
        if kind == "op" and text in "+-":
            raise ParseError("non-monomial generator", pos)
        return exps

    def factor(self, exps):
        kind, text, pos = self.take()
        if kind == "int":
            if text != "1":
                raise ParseError("coefficients are not supported in monomial generators", pos)
            return
        if kind != "ident":
            self._fail(kind, text, pos, "expected a variable")
        if self.declared is not None and text not in self.declared:
            raise ParseError(f"undeclared variable {text!r}", pos)
        if text not in self.order:
            self.order.append(text)
        e = 1
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            k2, t2, p2 = self.take()
            if k2 != "int":
                self._fail(k2, t2, p2, "expected an exponent")
            e = int(t2)
        total = exps.get(text, 0) + e
        if total > MAX_EXPONENT:
            raise ParseError(f"exponent exceeds {MAX_EXPONENT}", pos)
        exps[text] = total


def parse_ideal(text: str, variables: Optional[Sequence[str]] = None) -> IdealExpression:
    """Parse ``text``; ``variables`` fixes the ring, otherwise it is inferred
    from the expression in first-appearance order."""
    if variables is not None:
        ring = AmbientRing(tuple(variables))
    parser = _Parser(text, variables)
    terms = parser.parse()
    if variables is None:
        if not parser.order:
            raise ParseError("cannot infer any variables; declare them explicitly", 0)
        ring = AmbientRing(tuple(parser.order))
    gens = tuple(tuple(t.get(v, 0) for v in ring.variables) for t in terms)
    return IdealExpression(text, ring, gens)
