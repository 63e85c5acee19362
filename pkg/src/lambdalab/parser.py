"""Text grammar for lambda terms.

    term   := lambda | app
    lambda := ("\\" | "λ") ident+ "." term
    app    := atom+                      (left-associative)
    atom   := ident | "(" term ")" | combinator-literal | natural-literal

Identifiers match [a-z][a-zA-Z0-9_']*.  Combinator literals (I, K, K*, S,
C, B, Y, Theta, omega, Omega) and natural literals expand at parse time;
"omega" is therefore a reserved word, not a variable.
"""

from __future__ import annotations

import re

from .combinators import COMBINATORS, church
from .errors import ParseError
from .terms import Abs, App, Term, Var, deep_recursion

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<lam>\\|λ)
  | (?P<dot>\.)
  | (?P<lpar>\()
  | (?P<rpar>\))
  | (?P<nat>[0-9]+)
  | (?P<comb>K\*|Theta|Omega|omega|[IKSCBY])
  | (?P<ident>[a-z][a-zA-Z0-9_']*)
    """,
    re.VERBOSE,
)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, length):
        self.tokens = tokens
        self.i = 0
        self.length = length

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.length)
        self.i += 1
        return tok

    def expect(self, kind, what):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {what}, found {tok[1]!r}", tok[2])
        return tok

    def term(self) -> Term:
        tok = self.peek()
        if tok is not None and tok[0] == "lam":
            self.next()
            params = [self.expect("ident", "a variable name")[1]]
            while self.peek() is not None and self.peek()[0] == "ident":
                params.append(self.next()[1])
            self.expect("dot", "'.'")
            body = self.term()
            for p in reversed(params):
                body = Abs(p, body)
            return body
        return self.application()

    def application(self) -> Term:
        out = self.atom()
        if out is None:
            tok = self.peek()
            if tok is None:
                raise ParseError("unexpected end of input", self.length)
            raise ParseError(f"unexpected token {tok[1]!r}", tok[2])
        while True:
            arg = self.atom()
            if arg is None:
                return out
            out = App(out, arg)

    def atom(self):
        tok = self.peek()
        if tok is None:
            return None
        kind, text, pos = tok
        if kind == "ident":
            self.next()
            return Var(text)
        if kind == "comb":
            self.next()
            return COMBINATORS[text]
        if kind == "nat":
            self.next()
            return church(int(text))
        if kind == "lam":
            # A lambda directly in argument position: parse greedily so
            # "x \y.y" means x applied to the identity.
            return self.term()
        if kind == "lpar":
            self.next()
            inner = self.term()
            self.expect("rpar", "')'")
            return inner
        return None


def parse_term(text: str) -> Term:
    tokens = _tokenize(text)
    parser = _Parser(tokens, len(text))
    with deep_recursion():
        out = parser.term()
    trailing = parser.peek()
    if trailing is not None:
        raise ParseError(f"trailing input {trailing[1]!r}", trailing[2])
    return out
