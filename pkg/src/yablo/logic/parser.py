"""Recursive-descent parser for the formula language.

Grammar, loosest binding first::

    formula := quant | iff
    quant   := ("forall" | "exists") var "." formula
    iff     := imp { "<->" imp }
    imp     := or [ "->" imp ]
    or      := and { "|" and }
    and     := unary { "&" unary }
    unary   := "~" unary | quant | "(" formula ")" | atom
    atom    := "R" "(" term "," term ")" | term "=" term
    term    := var | "s" "(" term ")"

A quantifier's body extends as far right as possible, so ``R(x,y) & forall z.
A | B`` reads as ``R(x,y) & forall z. (A | B)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (
    KEYWORDS,
    And,
    Eq,
    Exists,
    Forall,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Rel,
    Succ,
    Term,
    Var,
)

_TOKEN = re.compile(
    r"(?P<ws>\s+)|(?P<op><->|->|[~&|().,=])|(?P<ident>[A-Za-z][A-Za-z0-9_]*)|(?P<bad>.)",
    re.DOTALL,
)
_VAR = re.compile(r"[a-z][A-Za-z0-9_]*\Z")


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, line: int, column: int, expected: frozenset[str] = frozenset()):
        self.line = line
        self.column = column
        self.expected = expected
        detail = f" (expected one of: {', '.join(sorted(expected))})" if expected else ""
        super().__init__(f"{line}:{column}: {message}{detail}")


@dataclass(frozen=True)
class Token:
    kind: str  # "op", "ident", "var", or "eof"
    text: str
    line: int
    column: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start = 1, 0
    for m in _TOKEN.finditer(text):
        col = m.start() - line_start + 1
        kind = m.lastgroup
        lexeme = m.group()
        if kind == "ws":
            for i, ch in enumerate(lexeme):
                if ch == "\n":
                    line += 1
                    line_start = m.start() + i + 1
            continue
        if kind == "bad":
            raise FormulaSyntaxError(f"unexpected character {lexeme!r}", line, col)
        if kind == "ident":
            if lexeme in KEYWORDS:
                kind = "op"
            elif _VAR.match(lexeme):
                kind = "var"
            else:
                raise FormulaSyntaxError(f"invalid identifier {lexeme!r}", line, col)
        tokens.append(Token(kind, lexeme, line, col))
    tokens.append(Token("eof", "<end of input>", line, len(text) - line_start + 1))
    return tokens


_FORMULA_START = frozenset({"forall", "exists", "~", "(", "R", "s", "<variable>"})


class Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def fail(self, expected) -> None:
        t = self.tok
        raise FormulaSyntaxError(f"unexpected {t.text!r}", t.line, t.column, frozenset(expected))

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail({text})
        t = self.tok
        self.pos += 1
        return t

    def var(self) -> str:
        if self.tok.kind != "var":
            self.fail({"<variable>"})
        name = self.tok.text
        self.pos += 1
        return name

    # -- grammar

    def parse(self) -> Formula:
        f = self.formula()
        if self.tok.kind != "eof":
            self.fail({"<end of input>", "&", "|", "->", "<->"})
        return f

    def formula(self) -> Formula:
        if self.at("forall") or self.at("exists"):
            return self.quant()
        return self.iff()

    def quant(self) -> Formula:
        kw = self.tok.text
        self.pos += 1
        name = self.var()
        self.expect(".")
        body = self.formula()
        return Forall(name, body) if kw == "forall" else Exists(name, body)

    def iff(self) -> Formula:
        f = self.imp()
        while self.at("<->"):
            self.pos += 1
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:
        f = self.disj()
        if self.at("->"):
            self.pos += 1
            return Implies(f, self.imp())
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.at("|"):
            self.pos += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.at("&"):
            self.pos += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        if self.at("~"):
            self.pos += 1
            return Not(self.unary())
        if self.at("forall") or self.at("exists"):
            return self.quant()
        if self.at("("):
            self.pos += 1
            f = self.formula()
            self.expect(")")
            return f
        if self.at("R"):
            self.pos += 1
            self.expect("(")
            left = self.term()
            self.expect(",")
            right = self.term()
            self.expect(")")
            return Rel(left, right)
        if self.tok.kind == "var" or self.at("s"):
            left = self.term()
            self.expect("=")
            return Eq(left, self.term())
        self.fail(_FORMULA_START)
        raise AssertionError("unreachable")

    def term(self) -> Term:
        if self.at("s"):
            self.pos += 1
            self.expect("(")
            inner = self.term()
            self.expect(")")
            return Succ(inner)
        return Var(self.var())


def parse(text: str) -> Formula:
    return Parser(text).parse()


def parse_term(text: str) -> Term:
    p = Parser(text)
    t = p.term()
    if p.tok.kind != "eof":
        p.fail({"<end of input>"})
    return t
