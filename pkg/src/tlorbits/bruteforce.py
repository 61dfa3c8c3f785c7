"""Word-enumeration oracles, kept apart from the main pipeline.

Nothing here uses transition monoids, pair saturation, orbits or the
equation checks of :mod:`tlorbits.monoid`. The syntactic congruence is
computed from membership queries ``x u y in L`` over finite context sets,
pairs come from enumerating words with equal class-morphism images, and
every equation is scanned with plain loops.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

from .automata import Dfa, words


class IncompleteQuotient(Exception):
    """Some product left the set of classes reached by the enumerated words."""


@dataclass
class Quotient:
    """A monoid presented by representative words and a product table."""

    reps: List[str]
    table: List[List[int]]
    identity: int
    accepting: frozenset
    classify: Callable[[str], int]

    @property
    def size(self):
        return len(self.reps)


def access_words(dfa: Dfa) -> List[str]:
    """One shortest word reaching each reachable state."""
    found = {dfa.initial: ""}
    queue = deque([dfa.initial])
    while queue:
        q = queue.popleft()
        for a, r in zip(dfa.alphabet, dfa.delta[q]):
            if r not in found:
                found[r] = found[q] + a
                queue.append(r)
    return list(found.values())


def separating_words(dfa: Dfa, max_len: int) -> List[str]:
    """Greedy set of suffixes (length <= max_len) telling apart the states reachable in ``dfa``."""
    states = sorted(set(dfa.run(w) for w in access_words(dfa)))
    chosen: List[str] = []
    key = {q: () for q in states}
    for y in words(dfa.alphabet, max_len):
        groups = len(set(key.values()))
        if groups == len(states):
            break
        trial = {q: key[q] + (dfa.run(y, q) in dfa.accepting,) for q in states}
        if len(set(trial.values())) > groups:
            key = trial
            chosen.append(y)
    return chosen or [""]


def syntactic_quotient(accepts: Callable[[str], bool], alphabet: Sequence[str], max_word: int,
                       left: Sequence[str], right: Sequence[str]) -> Quotient:
    """Quotient of the words of length <= max_word by the context relation.

    Two words u, v are identified when ``accepts(x+u+y) == accepts(x+v+y)``
    for every x in ``left`` and y in ``right``; with left contexts reaching
    every state and right contexts separating them this is the syntactic
    congruence.
    """
    memo: Dict[str, tuple] = {}

    def signature(u):
        if u not in memo:
            memo[u] = tuple(accepts(x + u + y) for x in left for y in right)
        return memo[u]

    index: Dict[tuple, int] = {}
    reps: List[str] = []
    for u in words(alphabet, max_word):
        sig = signature(u)
        if sig not in index:
            index[sig] = len(reps)
            reps.append(u)

    def classify(u):
        sig = signature(u)
        if sig not in index:
            raise IncompleteQuotient(f"class of {u!r} not reached by words of length <= {max_word}")
        return index[sig]

    table = [[classify(u + v) for v in reps] for u in reps]
    accepting = frozenset(i for i, u in enumerate(reps) if accepts(u))
    return Quotient(reps, table, classify(""), accepting, classify)


def dfa_quotient(dfa: Dfa, max_word: int = 6, accepts=None) -> Quotient:
    """Syntactic quotient with contexts read off ``dfa``; membership defaults to running ``dfa``."""
    left = access_words(dfa)
    right = separating_words(dfa, max(len(left), 1))
    return syntactic_quotient(accepts or dfa.accepts, dfa.alphabet, max_word, left, right)


# ---------------------------------------------------------------- class images

def class_image(variant: str, word: str):
    if variant == "st":
        return 0
    if variant == "dd":
        return len(word) > 0
    if variant == "at":
        return frozenset(word)
    raise ValueError(variant)


def enumerated_pairs(classify: Callable[[str], int], eta: Callable[[str], object],
                     alphabet, max_len: int) -> set:
    """{(alpha(u), alpha(v)) : eta(u) = eta(v)} over words of length <= max_len."""
    buckets: Dict[object, set] = {}
    for w in words(alphabet, max_len):
        buckets.setdefault(eta(w), set()).add(classify(w))
    return {(s, t) for images in buckets.values() for s in images for t in images}


# ---------------------------------------------------------------- equations

def _mul(table, *xs):
    acc = xs[0]
    for x in xs[1:]:
        acc = table[acc][x]
    return acc


def _omega(table, s):
    powers = [s]
    while True:
        p = powers[-1]
        if table[p][p] == p:
            return p
        powers.append(table[p][s])


def idempotents(table):
    return [e for e in range(len(table)) if table[e][e] == e]


def orbit_sets(table, pairs) -> Dict[int, set]:
    return {e: {_mul(table, e, t, e) for (s, t) in pairs if s == e} for e in idempotents(table)}


def in_da(table, elements) -> bool:
    for s in elements:
        for t in elements:
            w = _omega(table, table[s][t])
            if w != _mul(table, w, t, w):
                return False
    return True


def r_trivial(table, elements) -> bool:
    return all(_mul(table, _omega(table, table[s][t]), s) == _omega(table, table[s][t])
               for s in elements for t in elements)


def l_trivial(table, elements) -> bool:
    return all(_mul(table, t, _omega(table, table[s][t])) == _omega(table, table[s][t])
               for s in elements for t in elements)


def _esete_holds(table, pairs, rhs_kind) -> bool:
    n = len(table)
    for e in idempotents(table):
        for s in range(n):
            for t in range(n):
                paired = (e, t) in pairs if rhs_kind == "lpol" else (e, s) in pairs
                if not paired:
                    continue
                ese, ete = _mul(table, e, s, e), _mul(table, e, t, e)
                x = table[ese][ete]
                xw = _omega(table, x)
                lhs = table[xw][x]
                if rhs_kind == "upol":
                    rhs = _mul(table, xw, ete, xw)
                elif rhs_kind == "rpol":
                    rhs = table[ete][xw]
                else:
                    rhs = table[xw][ese]
                if lhs != rhs:
                    return False
    return True


def verdicts(table, pairs) -> Dict[str, bool]:
    """All orbit-level and global equation verdicts from a table and a pair set."""
    orbs = orbit_sets(table, pairs)
    return {
        "TL": all(in_da(table, o) for o in orbs.values()),
        "TL_F": all(l_trivial(table, o) for o in orbs.values()),
        "TL_P": all(r_trivial(table, o) for o in orbs.values()),
        "TL_FP": all(l_trivial(table, o) and r_trivial(table, o) for o in orbs.values()),
        "UPolBPol": _esete_holds(table, pairs, "upol"),
        "RPolBPol": _esete_holds(table, pairs, "rpol"),
        "LPolBPol": _esete_holds(table, pairs, "lpol"),
    }


def classify_by_enumeration(q: Quotient, alphabet, variant: str, pair_len: int) -> Dict[str, bool]:
    pairs = enumerated_pairs(q.classify, lambda w: class_image(variant, w), alphabet, pair_len)
    return verdicts(q.table, pairs)
