"""NFAs, complete DFAs, and the regex compilation pipeline.

Union, concatenation and stars go through epsilon-NFAs and the subset
construction. Complement and intersection are done on minimal DFAs, which
keeps state counts predictable.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Dict, FrozenSet, List, Optional, Set, Tuple

from . import regex as rx
from .errors import InputError, StateBlowupLimit, UnknownLetter

DEFAULT_MAX_STATES = 4096


@dataclass(frozen=True)
class Dfa:
    """Complete DFA; ``delta[q][i]`` is the successor of ``q`` on ``alphabet[i]``."""

    alphabet: Tuple[str, ...]
    states: int
    initial: int
    accepting: FrozenSet[int]
    delta: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if self.states < 1 or not 0 <= self.initial < self.states:
            raise InputError("DFA needs at least one state and a valid initial state")
        if len(self.delta) != self.states:
            raise InputError("DFA transition table has the wrong number of rows")
        for row in self.delta:
            if len(row) != len(self.alphabet) or any(not 0 <= q < self.states for q in row):
                raise InputError("DFA transition table is not total over the alphabet")
        if any(not 0 <= q < self.states for q in self.accepting):
            raise InputError("accepting state out of range")

    @property
    def letter_index(self) -> Dict[str, int]:
        return {a: i for i, a in enumerate(self.alphabet)}

    def run(self, word, start: Optional[int] = None) -> int:
        index = self.letter_index
        q = self.initial if start is None else start
        for a in word:
            try:
                q = self.delta[q][index[a]]
            except KeyError:
                raise UnknownLetter(a, self.alphabet) from None
        return q

    def accepts(self, word) -> bool:
        return self.run(word) in self.accepting

    def complement(self) -> "Dfa":
        return Dfa(self.alphabet, self.states, self.initial,
                   frozenset(range(self.states)) - self.accepting, self.delta)

    def reachable(self) -> List[int]:
        seen = {self.initial}
        order = [self.initial]
        queue = deque(order)
        while queue:
            q = queue.popleft()
            for r in self.delta[q]:
                if r not in seen:
                    seen.add(r)
                    order.append(r)
                    queue.append(r)
        return order

    def to_json(self) -> dict:
        return {
            "alphabet": list(self.alphabet),
            "states": self.states,
            "initial": self.initial,
            "accepting": sorted(self.accepting),
            "delta": [dict(zip(self.alphabet, row)) for row in self.delta],
        }

    @classmethod
    def from_json(cls, data) -> "Dfa":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            alphabet = rx.check_alphabet(data["alphabet"])
            delta = tuple(tuple(int(row[a]) for a in alphabet) for row in data["delta"])
            return cls(alphabet, int(data["states"]), int(data["initial"]),
                       frozenset(int(q) for q in data["accepting"]), delta)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed DFA JSON: {exc}") from None


def minimize(dfa: Dfa) -> Dfa:
    """Trim unreachable states and merge equivalent ones (Moore refinement).

    States of the result are numbered in BFS order from the initial state.
    """
    reach = dfa.reachable()
    block = {q: int(q in dfa.accepting) for q in reach}
    n_blocks = len(set(block.values()))
    while True:
        sig = {q: (block[q],) + tuple(block[r] for r in dfa.delta[q]) for q in reach}
        ids: Dict[tuple, int] = {}
        new = {q: ids.setdefault(sig[q], len(ids)) for q in reach}
        block = new
        if len(ids) == n_blocks:
            break
        n_blocks = len(ids)
    # renumber blocks in BFS order
    rep = {}
    for q in reach:
        rep.setdefault(block[q], q)
    order = [block[dfa.initial]]
    number = {order[0]: 0}
    queue = deque(order)
    while queue:
        b = queue.popleft()
        for r in dfa.delta[rep[b]]:
            if block[r] not in number:
                number[block[r]] = len(number)
                order.append(block[r])
                queue.append(block[r])
    delta = tuple(tuple(number[block[r]] for r in dfa.delta[rep[b]]) for b in order)
    accepting = frozenset(number[block[q]] for q in reach if q in dfa.accepting)
    return Dfa(dfa.alphabet, len(order), 0, accepting, delta)


def product_dfa(left: Dfa, right: Dfa, mode: str = "and") -> Dfa:
    if left.alphabet != right.alphabet:
        raise InputError("product of DFAs over different alphabets")
    keep = {"and": lambda x, y: x and y, "or": lambda x, y: x or y}[mode]
    index = {(left.initial, right.initial): 0}
    pairs = [(left.initial, right.initial)]
    delta = []
    i = 0
    while i < len(pairs):
        p, q = pairs[i]
        row = []
        for a in range(len(left.alphabet)):
            nxt = (left.delta[p][a], right.delta[q][a])
            if nxt not in index:
                index[nxt] = len(pairs)
                pairs.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
        i += 1
    accepting = frozenset(k for k, (p, q) in enumerate(pairs)
                          if keep(p in left.accepting, q in right.accepting))
    return Dfa(left.alphabet, len(pairs), 0, accepting, tuple(delta))


@dataclass
class Nfa:
    """Epsilon-NFA; ``edges[q]`` maps a letter (or ``None`` for epsilon) to targets."""

    alphabet: Tuple[str, ...]
    edges: List[Dict[Optional[str], Set[int]]]
    initial: Set[int]
    accepting: Set[int]

    @classmethod
    def empty(cls, alphabet):
        return cls(tuple(alphabet), [], set(), set())

    def add_state(self) -> int:
        self.edges.append({})
        return len(self.edges) - 1

    def add_edge(self, p, label, q):
        self.edges[p].setdefault(label, set()).add(q)

    def closure(self, states) -> FrozenSet[int]:
        stack = list(states)
        seen = set(states)
        while stack:
            p = stack.pop()
            for q in self.edges[p].get(None, ()):
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)

    def determinize(self, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
        start = self.closure(self.initial)
        index = {start: 0}
        subsets = [start]
        delta = []
        i = 0
        while i < len(subsets):
            cur = subsets[i]
            row = []
            for a in self.alphabet:
                step = set()
                for p in cur:
                    step |= self.edges[p].get(a, set())
                nxt = self.closure(step)
                if nxt not in index:
                    if len(subsets) >= max_states:
                        raise StateBlowupLimit(f"subset construction exceeded {max_states} states")
                    index[nxt] = len(subsets)
                    subsets.append(nxt)
                row.append(index[nxt])
            delta.append(tuple(row))
            i += 1
        accepting = frozenset(k for k, s in enumerate(subsets) if s & self.accepting)
        return Dfa(self.alphabet, len(subsets), 0, accepting, tuple(delta))


def _embed_dfa(nfa: Nfa, dfa: Dfa) -> Tuple[int, int]:
    """Copy ``dfa`` into ``nfa``; returns (entry, exit) states joined by epsilon edges."""
    base = len(nfa.edges)
    for _ in range(dfa.states):
        nfa.add_state()
    for q, row in enumerate(dfa.delta):
        for a, r in zip(dfa.alphabet, row):
            nfa.add_edge(base + q, a, base + r)
    entry, exit_ = nfa.add_state(), nfa.add_state()
    nfa.add_edge(entry, None, base + dfa.initial)
    for q in dfa.accepting:
        nfa.add_edge(base + q, None, exit_)
    return entry, exit_


def _thompson(nfa: Nfa, node: rx.Regex, max_states: int) -> Tuple[int, int]:
    if isinstance(node, (rx.Complement, rx.Inter)):
        return _embed_dfa(nfa, _compile(node, nfa.alphabet, max_states))
    if len(nfa.edges) > 8 * max_states:
        raise StateBlowupLimit("NFA construction exceeded the state budget")
    entry, exit_ = nfa.add_state(), nfa.add_state()
    if isinstance(node, rx.Epsilon):
        nfa.add_edge(entry, None, exit_)
    elif isinstance(node, rx.Sym):
        if node.letter not in nfa.alphabet:
            raise UnknownLetter(node.letter, nfa.alphabet)
        nfa.add_edge(entry, node.letter, exit_)
    elif isinstance(node, rx.EmptySet):
        pass
    elif isinstance(node, rx.Union):
        for part in node.parts:
            p, q = _thompson(nfa, part, max_states)
            nfa.add_edge(entry, None, p)
            nfa.add_edge(q, None, exit_)
    elif isinstance(node, rx.Concat):
        cur = entry
        for part in node.parts:
            p, q = _thompson(nfa, part, max_states)
            nfa.add_edge(cur, None, p)
            cur = q
        nfa.add_edge(cur, None, exit_)
    elif isinstance(node, (rx.Star, rx.Plus)):
        p, q = _thompson(nfa, node.inner, max_states)
        nfa.add_edge(entry, None, p)
        nfa.add_edge(q, None, exit_)
        nfa.add_edge(q, None, p)
        if isinstance(node, rx.Star):
            nfa.add_edge(entry, None, exit_)
    else:
        raise TypeError(f"unknown regex node {node!r}")
    return entry, exit_


def _compile(node: rx.Regex, alphabet, max_states: int) -> Dfa:
    if isinstance(node, rx.Complement):
        return minimize(_compile(node.inner, alphabet, max_states).complement())
    if isinstance(node, rx.Inter):
        acc = _compile(node.parts[0], alphabet, max_states)
        for part in node.parts[1:]:
            acc = minimize(product_dfa(acc, _compile(part, alphabet, max_states)))
        return acc
    nfa = Nfa.empty(alphabet)
    entry, exit_ = _thompson(nfa, node, max_states)
    nfa.initial = {entry}
    nfa.accepting = {exit_}
    return minimize(nfa.determinize(max_states))


def compile_regex(node: rx.Regex, alphabet, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    """Minimal complete DFA for ``node``."""
    alphabet = rx.check_alphabet(alphabet)
    dfa = _compile(node, alphabet, max_states)
    if dfa.states > max_states:
        raise StateBlowupLimit(f"minimal DFA has {dfa.states} > {max_states} states")
    return dfa


def regex_to_dfa(text: str, alphabet, max_states: int = DEFAULT_MAX_STATES) -> Dfa:
    return compile_regex(rx.parse_regex(text, alphabet), alphabet, max_states)


def reverse(dfa: Dfa) -> Dfa:
    """Minimal DFA for the mirror language."""
    nfa = Nfa.empty(dfa.alphabet)
    for _ in range(dfa.states):
        nfa.add_state()
    for q, row in enumerate(dfa.delta):
        for a, r in zip(dfa.alphabet, row):
            nfa.add_edge(r, a, q)
    nfa.initial = set(dfa.accepting)
    nfa.accepting = {dfa.initial}
    return minimize(nfa.determinize(max(DEFAULT_MAX_STATES, 2 ** min(dfa.states, 16))))


def words(alphabet, max_len: int, min_len: int = 0):
    """All words of length ``min_len..max_len`` in length-lexicographic order."""
    for n in range(min_len, max_len + 1):
        for letters in product(alphabet, repeat=n):
            yield "".join(letters)
