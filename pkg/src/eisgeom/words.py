"""A tiny grammar for group words.

    word   := factor*
    factor := atom ('^' integer)?
    atom   := SYMBOL | '(' word ')' | 'Delta(' word (',' word)* ')'

Symbols are S0..S11, SA..SD (reflections) and g0..g11, gA..gD (abstract
generators); juxtaposition means product.  ``Delta(a, b, c)`` expands to
(a b c)(a b) a.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Generic, Iterable, Sequence, TypeVar, Union

T = TypeVar("T")

_TOKEN = re.compile(r"\s*(?:(Delta)\s*\(|([SgT](?:\d+|[A-D]))|(\^)\s*(-?\d+)|([(),])|(\S))")


class WordSyntaxError(ValueError):
    pass


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int


@dataclass(frozen=True)
class Seq:
    items: tuple["Node", ...]


@dataclass(frozen=True)
class Delta:
    args: tuple["Node", ...]


Node = Union[Sym, Pow, Seq, Delta]


def _tokens(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"cannot read word at {text[pos:]!r}")
        delta, sym, caret, exp, punct, junk = m.groups()
        if junk:
            raise WordSyntaxError(f"unexpected {junk!r}")
        if delta:
            out.append(("delta", delta))
        elif sym:
            out.append(("sym", sym))
        elif caret:
            out.append(("pow", exp))
        else:
            out.append(("punct", punct))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def word(self) -> Seq:
        items = []
        while True:
            kind, val = self.peek()
            if kind is None or (kind == "punct" and val in "),"):
                return Seq(tuple(items))
            items.append(self.factor())

    def factor(self) -> Node:
        node = self.atom()
        while self.peek()[0] == "pow":
            node = Pow(node, int(self.take()[1]))
        return node

    def atom(self) -> Node:
        kind, val = self.take()
        if kind == "sym":
            return Sym(val)
        if kind == "punct" and val == "(":
            inner = self.word()
            self.expect(")")
            return inner
        if kind == "delta":
            args = [self.word()]
            while self.peek() == ("punct", ","):
                self.take()
                args.append(self.word())
            self.expect(")")
            return Delta(tuple(args))
        raise WordSyntaxError(f"unexpected token {val!r}")

    def expect(self, p: str) -> None:
        kind, val = self.take()
        if (kind, val) != ("punct", p):
            raise WordSyntaxError(f"expected {p!r}, got {val!r}")


def parse_word(text: str) -> Seq:
    p = _Parser(text)
    node = p.word()
    if p.i != len(p.toks):
        raise WordSyntaxError(f"trailing input in {text!r}")
    return node


def symbols(node: Node) -> set[str]:
    if isinstance(node, Sym):
        return {node.name}
    if isinstance(node, Pow):
        return symbols(node.base)
    items = node.items if isinstance(node, Seq) else node.args
    out: set[str] = set()
    for it in items:
        out |= symbols(it)
    return out


@dataclass
class GroupOps(Generic[T]):
    """How to compute in a target group."""

    identity: Callable[[], T]
    mul: Callable[[T, T], T]
    inv: Callable[[T], T]
    gen: Callable[[str], T]


def _power(g: T, k: int, ops: GroupOps[T]) -> T:
    if k < 0:
        g, k = ops.inv(g), -k
    out = ops.identity()
    base = g
    while k:
        if k & 1:
            out = ops.mul(out, base)
        k >>= 1
        if k:
            base = ops.mul(base, base)
    return out


def evaluate(node: Node, ops: GroupOps[T]) -> T:
    """Left-to-right product in the target group."""
    if isinstance(node, Sym):
        return ops.gen(node.name)
    if isinstance(node, Pow):
        return _power(evaluate(node.base, ops), node.exp, ops)
    if isinstance(node, Seq):
        out = ops.identity()
        for it in node.items:
            out = ops.mul(out, evaluate(it, ops))
        return out
    vals = [evaluate(a, ops) for a in node.args]
    return delta(vals, ops)


def delta(gens: Sequence[T], ops: GroupOps[T]) -> T:
    """(g1 ... gm)(g1 ... g_{m-1}) ... (g1 g2) g1."""
    prefixes = []
    acc = ops.identity()
    for g in gens:
        acc = ops.mul(acc, g)
        prefixes.append(acc)
    out = ops.identity()
    for p in reversed(prefixes):
        out = ops.mul(out, p)
    return out


def render_word(node: Node) -> str:
    if isinstance(node, Sym):
        return node.name
    if isinstance(node, Pow):
        inner = render_word(node.base)
        if not isinstance(node.base, Sym):
            inner = f"({inner})"
        return f"{inner}^{node.exp}"
    if isinstance(node, Seq):
        return " ".join(render_word(i) for i in node.items)
    return "Delta(" + ", ".join(render_word(a) for a in node.args) + ")"


def word_of(names: Iterable[str]) -> Seq:
    return Seq(tuple(Sym(n) for n in names))
