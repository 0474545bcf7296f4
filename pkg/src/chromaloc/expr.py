"""Recursive-descent parser and evaluator for localisation expressions.

Grammar::

    expr   := term ('|' term)*
    term   := factor (('*' | '&') factor)*
    factor := 'id' | 'zero' | 'rat' | 'ploc' '(' prime ')'
            | 'lift' '(' prime ',' extnat ')'
            | 'invert' '{' prime (',' prime)* '}'
            | 'params' '(' extnat (';' prime '->' extnat)* ')'
            | '(' expr ')'

Inside ``params`` the pairs after the first may also be separated by ``,``.
    extnat := decimal-integer | 'inf'

``*`` and ``&`` both mean meet (composition); ``|`` is join.  Both levels
are left-associative.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import lattice as L
from .core import INF, ExtNat, ParseError, Prime, PrimeError

__all__ = ["Atom", "BinOp", "LatticeExpr", "parse_lattice_expr", "eval_lattice", "evaluate"]


@dataclass(frozen=True)
class Atom:
    kind: str  # id | zero | rat | ploc | lift | invert | params
    args: tuple = ()


@dataclass(frozen=True)
class BinOp:
    op: str  # '*', '&' or '|'
    left: "LatticeExpr"
    right: "LatticeExpr"


LatticeExpr = Union[Atom, BinOp]

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_]+)|(?P<punct>->|[()\{\},;*&|]))")
_FACTOR_START = frozenset({"id", "zero", "rat", "ploc", "lift", "invert", "params", "("})


@dataclass
class _Tok:
    kind: str  # int | word | punct | eof
    text: str
    offset: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", len(text[:pos].encode()))
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), len(text[:start].encode())))
        pos = m.end()
    toks.append(_Tok("eof", "", len(text.encode())))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected) -> None:
        tok = self.tok
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise ParseError(f"unexpected {what}", tok.offset, frozenset(expected))

    def accept(self, text: str) -> bool:
        if self.tok.kind != "int" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> None:
        if not self.accept(text):
            self.fail({text})

    def prime(self) -> Prime:
        tok = self.tok
        if tok.kind != "int":
            self.fail({"prime"})
        self.i += 1
        try:
            return Prime(int(tok.text))
        except PrimeError as exc:
            raise PrimeError(f"{exc} (at offset {tok.offset})") from None

    def extnat(self) -> ExtNat:
        tok = self.tok
        if tok.kind == "int":
            self.i += 1
            return int(tok.text)
        if self.accept("inf"):
            return INF
        self.fail({"integer", "inf"})

    def expr(self) -> LatticeExpr:
        node = self.term()
        while self.accept("|"):
            node = BinOp("|", node, self.term())
        return node

    def term(self) -> LatticeExpr:
        node = self.factor()
        while True:
            op = self.tok.text if self.tok.kind == "punct" else None
            if op in ("*", "&"):
                self.i += 1
                node = BinOp(op, node, self.factor())
            else:
                return node

    def factor(self) -> LatticeExpr:
        tok = self.tok
        if tok.kind == "word" and tok.text in ("id", "zero", "rat"):
            self.i += 1
            return Atom(tok.text)
        if self.accept("ploc"):
            self.expect("(")
            p = self.prime()
            self.expect(")")
            return Atom("ploc", (p,))
        if self.accept("lift"):
            self.expect("(")
            p = self.prime()
            self.expect(",")
            n = self.extnat()
            self.expect(")")
            return Atom("lift", (p, n))
        if self.accept("invert"):
            self.expect("{")
            primes = [self.prime()]
            while self.accept(","):
                primes.append(self.prime())
            self.expect("}")
            return Atom("invert", tuple(primes))
        if self.accept("params"):
            self.expect("(")
            default = self.extnat()
            pairs = []
            seen = set()
            more = self.accept(";")
            while more:
                offset = self.tok.offset
                p = self.prime()
                if p in seen:
                    raise ParseError(f"duplicate prime {p} in params", offset)
                seen.add(p)
                self.expect("->")
                pairs.append((p, self.extnat()))
                more = self.accept(";") or self.accept(",")
            self.expect(")")
            return Atom("params", (default, tuple(pairs)))
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        self.fail(_FACTOR_START)


def parse_lattice_expr(text: str) -> LatticeExpr:
    parser = _Parser(text)
    node = parser.expr()
    if parser.tok.kind != "eof":
        parser.fail({"|", "*", "&", "end of input"})
    return node


def eval_lattice(e: LatticeExpr) -> L.GlobalFiniteLoc:
    if isinstance(e, BinOp):
        left, right = eval_lattice(e.left), eval_lattice(e.right)
        return L.g_join(left, right) if e.op == "|" else L.g_meet(left, right)
    if e.kind == "id":
        return L.IDENTITY
    if e.kind == "zero":
        return L.ZERO
    if e.kind == "rat":
        return L.RATIONALISATION
    if e.kind == "ploc":
        return L.p_localisation(e.args[0])
    if e.kind == "lift":
        p, n = e.args
        return L.lift_to_global(p, L.PLocalFiniteLoc(n))
    if e.kind == "invert":
        return L.invert_primes(e.args)
    if e.kind == "params":
        default, pairs = e.args
        return L.params(default, pairs)
    raise ValueError(f"unknown atom {e.kind!r}")


def evaluate(text: str) -> L.GlobalFiniteLoc:
    return eval_lattice(parse_lattice_expr(text))
