"""Text forms of words, coefficients and linear combinations.

Word grammar::

    word   := "1" | mono ("." mono)*
    mono   := factor ("*" factor)*
    factor := "x" INT ("^" INT)?

A ``Lin`` is a signed sum of terms ``[coeff "*"] word`` where ``coeff`` is
either a product of ``INT``, ``qc[^INT]``, ``qs[^INT]`` factors or a
parenthesised polynomial.  This is exactly what ``str(Lin)`` produces.
"""

from __future__ import annotations

import re

from .errors import ParseError
from .kernel import EMPTY, ONE, ZERO, Coeff, Lin, Monomial, Word

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|x(?P<var>\d+)|(?P<q>qc|qs)|(?P<op>[\^*.+\-()]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", start, text)
        start = m.start(m.lastgroup)
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), start))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("var")), start - 1))
        elif m.group("q") is not None:
            tokens.append(("q", m.group("q"), start))
        else:
            tokens.append((m.group("op"), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def peek(self, k=1):
        return self.tokens[min(self.i + k, len(self.tokens) - 1)]

    def advance(self):
        t = self.tokens[self.i]
        self.i += 1
        return t

    def fail(self, message, tok=None):
        tok = tok or self.tok
        raise ParseError(message, tok[2], self.text)

    def expect(self, kind):
        if self.tok[0] != kind:
            what = "end of input" if self.tok[0] == "end" else repr(self.text[self.tok[2]:self.tok[2] + 1])
            self.fail(f"expected {kind!r}, found {what}")
        return self.advance()

    def positive_int(self):
        t = self.expect("int")
        if t[1] < 1:
            self.fail("expected a positive integer", t)
        return t[1]

    # word level -----------------------------------------------------------
    def factor(self):
        t = self.tok
        if t[0] != "var":
            self.fail("expected a variable x<INT>")
        self.advance()
        if t[1] < 1:
            self.fail("variable index must be positive", t)
        e = 1
        if self.tok[0] == "^":
            self.advance()
            e = self.positive_int()
        return t[1], e

    def mono(self):
        exps = [self.factor()]
        while self.tok[0] == "*" and self.peek()[0] == "var":
            self.advance()
            exps.append(self.factor())
        if self.tok[0] == "*":
            self.advance()
            self.fail("expected a variable x<INT>")
        return Monomial(exps)

    def word(self):
        t = self.tok
        if t[0] == "int":
            if t[1] != 1:
                self.fail("the only integer word is the unit '1'")
            self.advance()
            if self.tok[0] == ".":
                self.fail("the unit word '1' cannot be concatenated")
            return EMPTY
        letters = [self.mono()]
        while self.tok[0] == ".":
            self.advance()
            letters.append(self.mono())
        return Word(letters)

    # coefficient level ----------------------------------------------------
    def cfactor(self):
        t = self.tok
        if t[0] == "int":
            self.advance()
            return Coeff(t[1])
        if t[0] == "q":
            self.advance()
            e = 1
            if self.tok[0] == "^":
                self.advance()
                e = self.expect("int")[1]
            return Coeff.monomial(e, 0) if t[1] == "qc" else Coeff.monomial(0, e)
        if t[0] == "(":
            self.advance()
            c = self.poly()
            self.expect(")")
            return c
        self.fail("expected an integer, qc, qs or '('")

    def poly(self):
        total = ZERO
        sign = 1
        if self.tok[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        while True:
            term = self.cfactor()
            while self.tok[0] == "*":
                self.advance()
                term = term * self.cfactor()
            total = total + term * sign
            if self.tok[0] in ("+", "-"):
                sign = -1 if self.advance()[0] == "-" else 1
                continue
            return total

    # Lin level ------------------------------------------------------------
    def lin_term(self):
        coeff = ONE
        while True:
            t = self.tok
            if t[0] == "var":
                return coeff, self.word()
            if t[0] == "int" and self.peek()[0] != "*":
                return coeff, self.word()
            if t[0] in ("int", "q", "("):
                coeff = coeff * self.cfactor()
                if self.tok[0] != "*":
                    self.fail("expected '*' followed by a word")
                self.advance()
                continue
            self.fail("expected a term")

    def lin(self):
        terms: list = []
        sign = 1
        if self.tok[0] in ("+", "-"):
            sign = -1 if self.advance()[0] == "-" else 1
        if self.tok[0] == "int" and self.tok[1] == 0 and self.peek()[0] == "end":
            self.advance()
            return Lin.zero()
        while True:
            c, w = self.lin_term()
            terms.append((w, c * sign))
            if self.tok[0] in ("+", "-"):
                sign = -1 if self.advance()[0] == "-" else 1
                continue
            break
        return Lin(terms)


def parse_word(text: str) -> Word:
    p = _Parser(text)
    if p.tok[0] == "end":
        p.fail("empty input")
    w = p.word()
    if p.tok[0] != "end":
        p.fail("unexpected trailing input")
    return w


def parse_coeff(text: str) -> Coeff:
    p = _Parser(text)
    if p.tok[0] == "end":
        p.fail("empty input")
    c = p.poly()
    if p.tok[0] != "end":
        p.fail("unexpected trailing input")
    return c


def parse_lin(text: str) -> Lin:
    p = _Parser(text)
    if p.tok[0] == "end":
        p.fail("empty input")
    v = p.lin()
    if p.tok[0] != "end":
        p.fail("unexpected trailing input")
    return v
