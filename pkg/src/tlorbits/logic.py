"""Unary temporal logic with language-indexed modalities.

``F[L] phi`` holds at position i of w when some j > i satisfies phi and the
infix strictly between i and j belongs to L; ``P[L] phi`` is the mirror
image. Positions of a word w run over 0..|w|+1, where 0 is labelled ``min``
and |w|+1 is labelled ``max``.

Formula grammar::

    phi := 'true' | 'false' | 'min' | 'max' | "'" letter "'"
         | '!' phi | phi '&' phi | phi '|' phi
         | 'F[' regex ']' phi | 'P[' regex ']' phi | '(' phi ')'

``&`` binds tighter than ``|``; negation and modalities are prefix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, Tuple

import numpy as np

from . import regex as rx
from .automata import Dfa, regex_to_dfa, reverse, words
from .errors import FormulaSyntaxError, PositionOutOfRange, SampleLimit, UnknownLetter

MAX_SAMPLE_LEN = 14


class Formula:
    __slots__ = ()

    def __str__(self):
        return to_text(self)

    def __and__(self, other):
        return And(self, other)

    def __or__(self, other):
        return Or(self, other)

    def __invert__(self):
        return Not(self)


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Min(Formula):
    pass


@dataclass(frozen=True)
class Max(Formula):
    pass


@dataclass(frozen=True)
class Letter(Formula):
    letter: str


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Finally(Formula):
    lang: Dfa
    sub: Formula
    label: str = field(default="", compare=False)


@dataclass(frozen=True)
class Previously(Formula):
    lang: Dfa
    sub: Formula
    label: str = field(default="", compare=False)


def _label(node) -> str:
    return node.label or f"<dfa:{node.lang.states}>"


def to_text(phi: Formula, prec: int = 0) -> str:
    if isinstance(phi, Top):
        return "true"
    if isinstance(phi, Bottom):
        return "false"
    if isinstance(phi, Min):
        return "min"
    if isinstance(phi, Max):
        return "max"
    if isinstance(phi, Letter):
        return f"'{phi.letter}'"
    if isinstance(phi, Not):
        return "!" + to_text(phi.sub, 2)
    if isinstance(phi, Finally):
        return f"F[{_label(phi)}] " + to_text(phi.sub, 2)
    if isinstance(phi, Previously):
        return f"P[{_label(phi)}] " + to_text(phi.sub, 2)
    own, op = (1, " & ") if isinstance(phi, And) else (0, " | ")
    body = to_text(phi.left, own) + op + to_text(phi.right, own)
    return f"({body})" if own < prec else body


# ---------------------------------------------------------------- parsing

class _Parser:
    def __init__(self, text, alphabet, max_states):
        self.text = text
        self.alphabet = alphabet
        self.max_states = max_states
        self.pos = 0

    def error(self, msg):
        raise FormulaSyntaxError(msg, self.pos)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def keyword(self, word):
        self.skip()
        end = self.pos + len(word)
        if self.text.startswith(word, self.pos) and not self.text[end:end + 1].isalnum():
            self.pos = end
            return True
        return False

    def parse(self):
        phi = self.disj()
        if self.peek() is not None:
            self.error(f"unexpected {self.peek()!r}")
        return phi

    def disj(self):
        phi = self.conj()
        while self.peek() == "|":
            self.pos += 1
            phi = Or(phi, self.conj())
        return phi

    def conj(self):
        phi = self.unary()
        while self.peek() == "&":
            self.pos += 1
            phi = And(phi, self.unary())
        return phi

    def unary(self):
        ch = self.peek()
        if ch is None:
            self.error("unexpected end of formula")
        if ch == "!":
            self.pos += 1
            return Not(self.unary())
        if ch in "FP" and self.text[self.pos + 1:self.pos + 2] == "[":
            self.pos += 2
            close = self.text.find("]", self.pos)
            if close < 0:
                self.error("unterminated modality payload")
            source = self.text[self.pos:close].strip()
            try:
                dfa = regex_to_dfa(source, self.alphabet, self.max_states)
            except rx.RegexSyntaxError as exc:
                raise FormulaSyntaxError(f"bad payload regex: {exc}", self.pos) from None
            self.pos = close + 1
            cls = Finally if ch == "F" else Previously
            return cls(dfa, self.unary(), source)
        if ch == "(":
            self.pos += 1
            phi = self.disj()
            if self.peek() != ")":
                self.error("expected ')'")
            self.pos += 1
            return phi
        if ch == "'":
            letter = self.text[self.pos + 1:self.pos + 2]
            if self.text[self.pos + 2:self.pos + 3] != "'":
                self.error("malformed letter literal")
            if letter not in self.alphabet:
                raise UnknownLetter(letter, self.alphabet)
            self.pos += 3
            return Letter(letter)
        for word, node in (("true", Top()), ("false", Bottom()), ("min", Min()), ("max", Max())):
            if self.keyword(word):
                return node
        self.error(f"unexpected {ch!r}")


def parse_formula(text: str, alphabet, max_states: int = 4096) -> Formula:
    return _Parser(text, rx.check_alphabet(alphabet), max_states).parse()


# ---------------------------------------------------------------- structure

def rank(phi: Formula) -> int:
    """Nesting depth of temporal modalities."""
    if isinstance(phi, (Finally, Previously)):
        return rank(phi.sub) + 1
    if isinstance(phi, Not):
        return rank(phi.sub)
    if isinstance(phi, (And, Or)):
        return max(rank(phi.left), rank(phi.right))
    return 0


def subformulas(phi: Formula) -> Iterator[Formula]:
    yield phi
    if isinstance(phi, (Not, Finally, Previously)):
        yield from subformulas(phi.sub)
    elif isinstance(phi, (And, Or)):
        yield from subformulas(phi.left)
        yield from subformulas(phi.right)


def is_pure_future(phi: Formula) -> bool:
    return not any(isinstance(p, Previously) for p in subformulas(phi))


def is_pure_past(phi: Formula) -> bool:
    return not any(isinstance(p, Finally) for p in subformulas(phi))


def mirror(phi: Formula) -> Formula:
    """Formula with the same meaning on reversed words (F and P swapped, payloads reversed)."""
    if isinstance(phi, Min):
        return Max()
    if isinstance(phi, Max):
        return Min()
    if isinstance(phi, Not):
        return Not(mirror(phi.sub))
    if isinstance(phi, And):
        return And(mirror(phi.left), mirror(phi.right))
    if isinstance(phi, Or):
        return Or(mirror(phi.left), mirror(phi.right))
    if isinstance(phi, Finally):
        return Previously(reverse(phi.lang), mirror(phi.sub), f"rev({_label(phi)})")
    if isinstance(phi, Previously):
        return Finally(reverse(phi.lang), mirror(phi.sub), f"rev({_label(phi)})")
    return phi


# ---------------------------------------------------------------- semantics

def labels(word) -> Tuple[str, ...]:
    """Labels of positions 0..|w|+1."""
    return ("min",) + tuple(word) + ("max",)


def infix_matrix(lang: Dfa, word) -> np.ndarray:
    """``m[i, j]`` iff i < j and the letters strictly between positions i and j form a word of ``lang``."""
    n = len(word)
    idx = lang.letter_index
    try:
        letters = [idx[a] for a in word]
    except KeyError as exc:
        raise UnknownLetter(exc.args[0], lang.alphabet) from None
    delta, acc = lang.delta, lang.accepting
    m = np.zeros((n + 2, n + 2), dtype=bool)
    for i in range(n + 1):
        q = lang.initial
        m[i, i + 1] = q in acc
        for j in range(i + 2, n + 2):
            q = delta[q][letters[j - 2]]
            m[i, j] = q in acc
    return m


def truth_vector(phi: Formula, word, _cache: Dict | None = None) -> np.ndarray:
    """Truth value of ``phi`` at every position of ``word``."""
    cache = {} if _cache is None else _cache
    key = ("phi", phi)
    if key in cache:
        return cache[key]
    n = len(word)
    if isinstance(phi, Top):
        out = np.ones(n + 2, dtype=bool)
    elif isinstance(phi, Bottom):
        out = np.zeros(n + 2, dtype=bool)
    elif isinstance(phi, (Min, Max, Letter)):
        want = "min" if isinstance(phi, Min) else "max" if isinstance(phi, Max) else phi.letter
        out = np.array([lab == want for lab in labels(word)], dtype=bool)
    elif isinstance(phi, Not):
        out = ~truth_vector(phi.sub, word, cache)
    elif isinstance(phi, And):
        out = truth_vector(phi.left, word, cache) & truth_vector(phi.right, word, cache)
    elif isinstance(phi, Or):
        out = truth_vector(phi.left, word, cache) | truth_vector(phi.right, word, cache)
    elif isinstance(phi, (Finally, Previously)):
        sub = truth_vector(phi.sub, word, cache)
        mkey = ("infix", phi.lang)
        if mkey not in cache:
            cache[mkey] = infix_matrix(phi.lang, word)
        m = cache[mkey]
        if isinstance(phi, Finally):
            out = (m & sub[None, :]).any(axis=1)
        else:
            out = (m & sub[:, None]).any(axis=0)
    else:
        raise TypeError(f"not a formula: {phi!r}")
    cache[key] = out
    return out


def evaluate(phi: Formula, word, i: int, _cache=None) -> bool:
    if not 0 <= i <= len(word) + 1:
        raise PositionOutOfRange(f"position {i} outside 0..{len(word) + 1}")
    return bool(truth_vector(phi, word, _cache)[i])


def evaluate_naive(phi: Formula, word, i: int) -> bool:
    """Direct recursive reading of the semantics, no precomputation."""
    if isinstance(phi, Top):
        return True
    if isinstance(phi, Bottom):
        return False
    if isinstance(phi, Min):
        return i == 0
    if isinstance(phi, Max):
        return i == len(word) + 1
    if isinstance(phi, Letter):
        return 1 <= i <= len(word) and word[i - 1] == phi.letter
    if isinstance(phi, Not):
        return not evaluate_naive(phi.sub, word, i)
    if isinstance(phi, And):
        return evaluate_naive(phi.left, word, i) and evaluate_naive(phi.right, word, i)
    if isinstance(phi, Or):
        return evaluate_naive(phi.left, word, i) or evaluate_naive(phi.right, word, i)
    if isinstance(phi, Finally):
        return any(phi.lang.accepts(word[i:j - 1]) and evaluate_naive(phi.sub, word, j)
                   for j in range(i + 1, len(word) + 2))
    if isinstance(phi, Previously):
        return any(phi.lang.accepts(word[j:i - 1]) and evaluate_naive(phi.sub, word, j)
                   for j in range(0, i))
    raise TypeError(f"not a formula: {phi!r}")


def _sample(phi, alphabet, maxlen, at_max):
    if maxlen > MAX_SAMPLE_LEN:
        raise SampleLimit(f"sample length {maxlen} exceeds {MAX_SAMPLE_LEN}")
    out = []
    for w in words(alphabet, maxlen):
        if evaluate(phi, w, len(w) + 1 if at_max else 0):
            out.append(w)
    return out


def l_min_sample(phi: Formula, alphabet, maxlen: int):
    """Words of length <= maxlen satisfying ``phi`` at the leftmost position."""
    return _sample(phi, alphabet, maxlen, at_max=False)


def l_max_sample(phi: Formula, alphabet, maxlen: int):
    """Words of length <= maxlen satisfying ``phi`` at the rightmost position."""
    return _sample(phi, alphabet, maxlen, at_max=True)
