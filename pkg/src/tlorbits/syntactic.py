"""Morphisms into finite monoids and syntactic morphisms of regular languages."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, Tuple

import numpy as np

from . import regex as rx
from .automata import DEFAULT_MAX_STATES, Dfa, minimize, regex_to_dfa
from .errors import AlphabetMismatch, InputError, MonoidBlowupLimit, UnknownLetter
from .monoid import FiniteMonoid, saturate

DEFAULT_MAX_MONOID = 5000


class Morphism:
    """A monoid morphism A* -> M fixed by the images of the letters."""

    def __init__(self, alphabet, codomain: FiniteMonoid, letter_image):
        self.alphabet = rx.check_alphabet(alphabet)
        self.codomain = codomain
        if not isinstance(letter_image, dict):
            letter_image = dict(zip(self.alphabet, letter_image))
        if set(letter_image) != set(self.alphabet):
            raise AlphabetMismatch("letter images must cover exactly the alphabet")
        for a, s in letter_image.items():
            if not 0 <= int(s) < codomain.size:
                raise InputError(f"image of {a!r} is not an element of the codomain")
        self.letter_image: Dict[str, int] = {a: int(letter_image[a]) for a in self.alphabet}

    def __repr__(self):
        return f"Morphism({''.join(self.alphabet)!r} -> {self.codomain!r})"

    def __call__(self, word) -> int:
        return self.word_image(word)

    def word_image(self, word) -> int:
        T = self.codomain.table
        s = self.codomain.identity
        for a in word:
            try:
                s = T[s, self.letter_image[a]]
            except KeyError:
                raise UnknownLetter(a, self.alphabet) from None
        return int(s)

    @cached_property
    def image(self) -> Tuple[int, ...]:
        """Elements reachable as images of words (including the empty word)."""
        seed = set(self.letter_image.values()) | {self.codomain.identity}
        return tuple(saturate(self.codomain.table, seed))

    @property
    def surjective(self) -> bool:
        return len(self.image) == self.codomain.size

    @cached_property
    def semigroup_image(self) -> Tuple[int, ...]:
        """alpha(A+): saturation of the letter images alone."""
        return tuple(saturate(self.codomain.table, set(self.letter_image.values())))

    def to_json(self) -> dict:
        return {"alphabet": list(self.alphabet), "monoid": self.codomain.to_json(),
                "letters": dict(self.letter_image)}

    @classmethod
    def from_json(cls, data) -> "Morphism":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(data["alphabet"], FiniteMonoid.from_json(data["monoid"]), data["letters"])
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed morphism JSON: {exc}") from None

    def preimage_dfa(self, accepting: Iterable[int]) -> Dfa:
        """DFA for the language recognized by this morphism with accepting set ``accepting``."""
        T = self.codomain.table
        idx = [self.letter_image[a] for a in self.alphabet]
        delta = tuple(tuple(int(T[s, x]) for x in idx) for s in range(self.codomain.size))
        return Dfa(self.alphabet, self.codomain.size, self.codomain.identity,
                   frozenset(int(s) for s in accepting), delta)


def word_image(morphism: Morphism, word) -> int:
    return morphism.word_image(word)


@dataclass(frozen=True)
class RecognizedLanguage:
    morphism: Morphism
    accepting: FrozenSet[int]
    source: str = ""

    @property
    def monoid(self) -> FiniteMonoid:
        return self.morphism.codomain

    def contains(self, word) -> bool:
        return self.morphism.word_image(word) in self.accepting

    def to_json(self) -> dict:
        out = self.morphism.to_json()
        out["accepting"] = sorted(self.accepting)
        return out


def transition_monoid(dfa: Dfa, max_size: int = DEFAULT_MAX_MONOID):
    """Transition monoid of ``dfa``.

    Returns ``(monoid, letter_images, transforms)`` where ``transforms[s]`` is
    the state map of element ``s``. Elements are numbered in BFS order from
    the identity transformation, which is element 0. Products read left to
    right: ``s*t`` applies ``s`` first.
    """
    n, k = dfa.states, len(dfa.alphabet)
    gens = [tuple(dfa.delta[q][i] for q in range(n)) for i in range(k)]
    ident = tuple(range(n))
    index = {ident: 0}
    transforms = [ident]
    parent = [(-1, -1)]
    right = []  # right[s][i] = s * letter_i
    i = 0
    while i < len(transforms):
        f = transforms[i]
        row = []
        for a, g in enumerate(gens):
            h = tuple(g[q] for q in f)
            j = index.get(h)
            if j is None:
                if len(transforms) >= max_size:
                    raise MonoidBlowupLimit(f"transition monoid exceeds {max_size} elements")
                j = index[h] = len(transforms)
                transforms.append(h)
                parent.append((i, a))
            row.append(j)
        right.append(row)
        i += 1
    size = len(transforms)
    right = np.array(right, dtype=np.int64).reshape(size, k)
    table = np.empty((size, size), dtype=np.int64)
    table[:, 0] = np.arange(size)
    # column t = column parent(t), then one more letter on the right
    for t in range(1, size):
        p, a = parent[t]
        table[:, t] = right[table[:, p], a]
    monoid = FiniteMonoid(table, 0, validate=False)
    letters = {dfa.alphabet[a]: int(right[0, a]) for a in range(k)}
    return monoid, letters, transforms


def syntactic_morphism(dfa: Dfa, max_size: int = DEFAULT_MAX_MONOID, source: str = "") -> RecognizedLanguage:
    """Syntactic morphism of the language of ``dfa`` and its accepting set."""
    dfa = minimize(dfa)
    monoid, letters, transforms = transition_monoid(dfa, max_size)
    accepting = frozenset(s for s, f in enumerate(transforms) if f[dfa.initial] in dfa.accepting)
    return RecognizedLanguage(Morphism(dfa.alphabet, monoid, letters), accepting, source)


def syntactic_semigroup(lang: RecognizedLanguage) -> Tuple[int, ...]:
    return lang.morphism.semigroup_image


def language_from_regex(text: str, alphabet, max_states: int = DEFAULT_MAX_STATES,
                        max_monoid: int = DEFAULT_MAX_MONOID) -> RecognizedLanguage:
    return syntactic_morphism(regex_to_dfa(text, alphabet, max_states), max_monoid, source=text)
