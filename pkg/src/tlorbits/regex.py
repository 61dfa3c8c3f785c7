"""Regular expressions over an explicit alphabet.

Grammar::

    expr  := alt
    alt   := inter ('|' inter)*
    inter := cat ('&' cat)*
    cat   := rep+
    rep   := atom ('*' | '+')*
    atom  := letter | '_' | '()' | '~' atom | '(' expr ')'

``_`` is any letter, ``()`` the empty word, ``~`` complement relative to the
alphabet and ``&`` intersection. Whitespace is ignored.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .errors import InputError, RegexSyntaxError, UnknownLetter

OPERATORS = set("|&*+~()_")


class Regex:
    __slots__ = ()

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class EmptySet(Regex):
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Sym(Regex):
    letter: str


@dataclass(frozen=True)
class Concat(Regex):
    parts: Tuple[Regex, ...]


@dataclass(frozen=True)
class Union(Regex):
    parts: Tuple[Regex, ...]


@dataclass(frozen=True)
class Inter(Regex):
    parts: Tuple[Regex, ...]


@dataclass(frozen=True)
class Complement(Regex):
    inner: Regex


@dataclass(frozen=True)
class Star(Regex):
    inner: Regex


@dataclass(frozen=True)
class Plus(Regex):
    inner: Regex


def check_alphabet(alphabet) -> tuple:
    letters = tuple(alphabet)
    if not letters:
        raise InputError("alphabet must not be empty")
    for a in letters:
        if len(a) != 1 or a in OPERATORS or a.isspace() or not a.isascii():
            raise InputError(f"invalid letter {a!r}")
    if len(set(letters)) != len(letters):
        raise InputError("alphabet has repeated letters")
    return letters


def any_letter(alphabet) -> Regex:
    syms = tuple(Sym(a) for a in alphabet)
    return syms[0] if len(syms) == 1 else Union(syms)


class _Parser:
    def __init__(self, text, alphabet):
        self.text = text
        self.alphabet = alphabet
        self.pos = 0

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self, ch):
        if self.peek() != ch:
            found = "end of input" if self.peek() is None else repr(self.peek())
            raise RegexSyntaxError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def parse(self):
        node = self.alt()
        if self.peek() is not None:
            raise RegexSyntaxError(f"unexpected {self.peek()!r}", self.pos)
        return node

    def alt(self):
        parts = [self.inter()]
        while self.peek() == "|":
            self.pos += 1
            parts.append(self.inter())
        return parts[0] if len(parts) == 1 else Union(tuple(parts))

    def inter(self):
        parts = [self.cat()]
        while self.peek() == "&":
            self.pos += 1
            parts.append(self.cat())
        return parts[0] if len(parts) == 1 else Inter(tuple(parts))

    def cat(self):
        parts = []
        while self.peek() is not None and self.peek() not in "|&)*+":
            parts.append(self.rep())
        if not parts:
            found = "end of input" if self.peek() is None else repr(self.peek())
            raise RegexSyntaxError(f"expected an expression, found {found}", self.pos)
        return parts[0] if len(parts) == 1 else Concat(tuple(parts))

    def rep(self):
        node = self.atom()
        while self.peek() in ("*", "+"):
            op = self.peek()
            self.pos += 1
            node = Star(node) if op == "*" else Plus(node)
        return node

    def atom(self):
        ch = self.peek()
        start = self.pos
        if ch == "_":
            self.pos += 1
            return any_letter(self.alphabet)
        if ch == "~":
            self.pos += 1
            return Complement(self.atom())
        if ch == "(":
            self.pos += 1
            if self.peek() == ")":
                self.pos += 1
                return Epsilon()
            node = self.alt()
            self.take(")")
            return node
        if ch is None or ch in OPERATORS:
            raise RegexSyntaxError(f"unexpected {ch!r}" if ch else "unexpected end of input", start)
        if ch not in self.alphabet:
            raise UnknownLetter(ch, self.alphabet)
        self.pos += 1
        return Sym(ch)


def parse_regex(text: str, alphabet) -> Regex:
    alphabet = check_alphabet(alphabet)
    return _Parser(text, alphabet).parse()


_PREC = {Union: 0, Inter: 1, Concat: 2}


def to_text(node: Regex, prec: int = 0) -> str:
    """Render back into the grammar accepted by :func:`parse_regex`."""
    if isinstance(node, Sym):
        return node.letter
    if isinstance(node, Epsilon):
        return "()"
    if isinstance(node, EmptySet):
        return "~(_*)"
    if isinstance(node, (Star, Plus)):
        op = "*" if isinstance(node, Star) else "+"
        return to_text(node.inner, 3) + op
    if isinstance(node, Complement):
        return "~" + to_text(node.inner, 3)
    sep = {Union: "|", Inter: "&", Concat: ""}[type(node)]
    own = _PREC[type(node)]
    body = sep.join(to_text(p, own + 1) for p in node.parts)
    return f"({body})" if own < prec else body
