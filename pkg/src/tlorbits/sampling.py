"""Random formulas over the languages recognized by a morphism, and the
rank-k indistinguishability checks built on them.

For eta: A* -> N, an idempotent f of N, words u, v, z with eta-image f and
P = z^k u z^2k v z^k, the words

    x P^k P^k y      and      x P^k z^k v z^k P^k y

cannot be told apart at position 0 by formulas of rank <= k whose payloads
are recognized by eta. Dropping x, y and the leading P^k gives the
pure-future variant ``P^k`` versus ``z^k v z^k P^k``. A found
distinguishing formula is a hard failure; a pass is sampling evidence.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .automata import Dfa, minimize
from .errors import InputError
from .logic import (
    And,
    Bottom,
    Finally,
    Formula,
    Letter,
    Max,
    Min,
    Not,
    Or,
    Previously,
    Top,
    evaluate,
)
from .syntactic import Morphism


def labelled_payloads(eta: Morphism) -> List[Tuple[Tuple[int, ...], Dfa]]:
    """``(X, dfa)`` with ``dfa`` minimal for eta^-1(X), one per distinct language, X smallest first."""
    n = eta.codomain.size
    if n > 12:
        raise InputError("payload enumeration needs a codomain of at most 12 elements")
    seen, out = set(), []
    for r in range(n + 1):
        for X in combinations(range(n), r):
            dfa = minimize(eta.preimage_dfa(X))
            if dfa not in seen:
                seen.add(dfa)
                out.append((X, dfa))
    return out


def recognized_payloads(eta: Morphism) -> List[Dfa]:
    """Minimal DFAs of eta^-1(X) for every subset X of N, deduplicated."""
    return [dfa for _, dfa in labelled_payloads(eta)]


class FormulaSampler:
    """Depth-bounded random formulas with eta-recognized payloads."""

    def __init__(self, eta: Morphism, seed: int = 0, pure_future: bool = False):
        self.eta = eta
        self.payloads = [(f"eta^-1{{{','.join(map(str, X))}}}", dfa)
                         for X, dfa in labelled_payloads(eta)]
        self.rng = random.Random(seed)
        self.pure_future = pure_future
        self.atoms = [Top(), Bottom(), Min(), Max()] + [Letter(a) for a in eta.alphabet]

    def formula(self, rank: int) -> Formula:
        """A formula of rank at most ``rank`` (exactly ``rank`` on its modal spine)."""
        rng = self.rng
        if rank == 0:
            phi = rng.choice(self.atoms)
            for _ in range(rng.randint(0, 2)):
                op = rng.random()
                other = rng.choice(self.atoms)
                phi = Not(phi) if op < 0.3 else And(phi, other) if op < 0.65 else Or(phi, other)
            return phi
        label, lang = rng.choice(self.payloads)
        sub = self.formula(rank - 1)
        if self.pure_future or rng.random() < 0.5:
            phi = Finally(lang, sub, label)
        else:
            phi = Previously(lang, sub, label)
        op = rng.random()
        if op < 0.25:
            phi = Not(phi)
        elif op < 0.6:
            phi = And(phi, self.formula(rng.randint(0, rank)))
        elif op < 0.8:
            phi = Or(phi, Not(self.formula(rng.randint(0, rank))))
        return phi


@dataclass(frozen=True)
class Distinguisher:
    formula: Formula
    left: str
    right: str
    left_value: bool
    right_value: bool


def idempotent_words(eta: Morphism, f: int, words: Sequence[str]) -> None:
    for w in words:
        if eta.word_image(w) != f:
            raise InputError(f"eta({w!r}) = {eta.word_image(w)} differs from {f}")
    if not eta.codomain.is_idempotent(f):
        raise InputError(f"{f} is not idempotent in the codomain")


def block(u: str, v: str, z: str, k: int) -> str:
    return z * k + u + z * (2 * k) + v + z * k


def prop4_words(u, v, z, x, y, k):
    p = block(u, v, z, k) * k
    return x + p + p + y, x + p + z * k + v + z * k + p + y


def prop10_words(u, v, z, k):
    p = block(u, v, z, k) * k
    return p, z * k + v + z * k + p


def _search(eta, left, right, k, trials, seed, pure_future) -> Optional[Distinguisher]:
    sampler = FormulaSampler(eta, seed, pure_future)
    lcache, rcache = {}, {}
    for _ in range(trials):
        phi = sampler.formula(sampler.rng.randint(0, k))
        a = evaluate(phi, left, 0, lcache)
        b = evaluate(phi, right, 0, rcache)
        if a != b:
            return Distinguisher(phi, left, right, a, b)
    return None


def prop4_equivalence_test(eta: Morphism, k: int, trials: int, *, f: int, u: str, v: str, z: str,
                           x: str = "", y: str = "", seed: int = 0) -> Optional[Distinguisher]:
    """``None`` when no sampled rank-<=k formula separates the two words."""
    idempotent_words(eta, f, (u, v, z))
    left, right = prop4_words(u, v, z, x, y, k)
    return _search(eta, left, right, k, trials, seed, pure_future=False)


def prop10_equivalence_test(eta: Morphism, k: int, trials: int, *, f: int, u: str, v: str, z: str,
                            seed: int = 0) -> Optional[Distinguisher]:
    """Pure-future variant, compared at position 0."""
    idempotent_words(eta, f, (u, v, z))
    left, right = prop10_words(u, v, z, k)
    return _search(eta, left, right, k, trials, seed, pure_future=True)
