"""Term ASTs, a parser and printer, and the finite big-operator constructors.

Concrete syntax: ``&`` (meet), ``|`` (join), ``->`` (implication, right
associative, loosest), ``top``, ``bot``; atoms are identifiers, optionally
``name@index`` for product-graph atoms.  ``&`` binds tighter than ``|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import TermSyntaxError


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class And:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Or:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Impl:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


Term = Union[Atom, And, Or, Impl, Top, Bot]

TOP = Top()
BOT = Bot()


def is_lattice_term(t: Term) -> bool:
    """True iff `t` is implication-free."""
    if isinstance(t, Impl):
        return False
    if isinstance(t, (And, Or)):
        return is_lattice_term(t.left) and is_lattice_term(t.right)
    return True


def atoms_of(t: Term) -> frozenset[str]:
    if isinstance(t, Atom):
        return frozenset({t.name})
    if isinstance(t, (And, Or, Impl)):
        return atoms_of(t.left) | atoms_of(t.right)
    return frozenset()


# --- parsing ---------------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # "ident", "&", "|", "->", "(", ")", "@"
    text: str
    pos: int


_IDENT_CHARS = frozenset(
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_"
)


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if text.startswith("->", pos):
            tokens.append(_Token("->", "->", pos))
            pos += 2
            continue
        if ch in "&|()@":
            tokens.append(_Token(ch, ch, pos))
            pos += 1
            continue
        if ch in _IDENT_CHARS:
            start = pos
            while pos < n and text[pos] in _IDENT_CHARS:
                pos += 1
            tokens.append(_Token("ident", text[start:pos], start))
            continue
        raise TermSyntaxError(f"unexpected character {ch!r}", pos)
    return tokens


def parse_term(text: str) -> Term:
    """Parse the concrete syntax into an AST; raises TermSyntaxError with position."""
    tokens = _tokenize(text)
    index = 0

    def peek() -> _Token | None:
        return tokens[index] if index < len(tokens) else None

    def advance() -> _Token:
        nonlocal index
        tok = peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input", len(text))
        index += 1
        return tok

    def expect(kind: str) -> _Token:
        tok = advance()
        if tok.kind != kind:
            raise TermSyntaxError(f"expected {kind!r}, found {tok.text!r}", tok.pos)
        return tok

    def parse_impl() -> Term:
        left = parse_or()
        tok = peek()
        if tok is not None and tok.kind == "->":
            advance()
            return Impl(left, parse_impl())
        return left

    def parse_or() -> Term:
        t = parse_and()
        while (tok := peek()) is not None and tok.kind == "|":
            advance()
            t = Or(t, parse_and())
        return t

    def parse_and() -> Term:
        t = parse_atomexpr()
        while (tok := peek()) is not None and tok.kind == "&":
            advance()
            t = And(t, parse_atomexpr())
        return t

    def parse_atomexpr() -> Term:
        tok = advance()
        if tok.kind == "(":
            t = parse_impl()
            expect(")")
            return t
        if tok.kind == "ident":
            if tok.text == "top":
                return TOP
            if tok.text == "bot":
                return BOT
            name = tok.text
            nxt = peek()
            if nxt is not None and nxt.kind == "@":
                advance()
                comp = expect("ident")
                return Atom(f"{name}@{comp.text}")
            return Atom(name)
        raise TermSyntaxError(f"unexpected token {tok.text!r}", tok.pos)

    term = parse_impl()
    if index != len(tokens):
        tok = tokens[index]
        raise TermSyntaxError(f"unexpected token {tok.text!r}", tok.pos)
    return term


# --- printing --------------------------------------------------------------

_IMPL_PREC, _OR_PREC, _AND_PREC, _LEAF_PREC = 1, 2, 3, 4


def _render(t: Term, min_prec: int) -> str:
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Top):
        return "top"
    if isinstance(t, Bot):
        return "bot"
    if isinstance(t, And):
        text = f"{_render(t.left, _AND_PREC)} & {_render(t.right, _LEAF_PREC)}"
        prec = _AND_PREC
    elif isinstance(t, Or):
        text = f"{_render(t.left, _OR_PREC)} | {_render(t.right, _AND_PREC)}"
        prec = _OR_PREC
    else:  # Impl is right-associative, so the left side needs the tighter context
        text = f"{_render(t.left, _OR_PREC)} -> {_render(t.right, _IMPL_PREC)}"
        prec = _IMPL_PREC
    return f"({text})" if prec < min_prec else text


def print_term(t: Term) -> str:
    """Minimal-parentheses rendering; parse_term(print_term(t)) == t."""
    return _render(t, _IMPL_PREC)


# --- finite big operators ---------------------------------------------------

def big_or(terms: Iterable[Term]) -> Term:
    """Left fold of `|` over the set of terms in printed order; empty gives bot."""
    items = sorted(set(terms), key=print_term)
    if not items:
        return BOT
    acc = items[0]
    for t in items[1:]:
        acc = Or(acc, t)
    return acc


def big_and(terms: Iterable[Term]) -> Term:
    """Left fold of `&` over the set of terms in printed order; empty gives top."""
    items = sorted(set(terms), key=print_term)
    if not items:
        return TOP
    acc = items[0]
    for t in items[1:]:
        acc = And(acc, t)
    return acc
