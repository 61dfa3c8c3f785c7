"""C-pairs through C-morphisms.

A pair (s, t) of elements of M is an eta-pair for alpha when some words u, v
satisfy eta(u) = eta(v), alpha(u) = s and alpha(v) = t. For ST, DD and AT a
fixed small morphism eta makes the eta-pairs exactly the C-pairs; for a
custom class the user supplies eta and the class is the set of languages it
recognizes.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .errors import AlphabetMismatch, InputError
from .monoid import FiniteMonoid
from .syntactic import Morphism

VARIANTS = ("st", "dd", "at", "custom")


@dataclass(frozen=True)
class ClassSpec:
    variant: str
    morphism: Optional[Morphism] = None
    label: str = ""

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise InputError(f"unknown class {self.variant!r}")
        if (self.variant == "custom") != (self.morphism is not None):
            raise InputError("a morphism is given exactly for the custom class")

    @property
    def name(self) -> str:
        return self.label or self.variant

    @classmethod
    def parse(cls, text: str) -> "ClassSpec":
        """``st``, ``dd``, ``at`` or ``custom:<path to morphism JSON>``."""
        text = text.strip()
        if text.lower().startswith("custom:"):
            path = Path(text.split(":", 1)[1])
            try:
                data = json.loads(path.read_text())
            except (OSError, ValueError) as exc:
                raise InputError(f"cannot read custom morphism {path}: {exc}") from None
            eta = check_surjective(Morphism.from_json(data))
            return cls("custom", eta, label="custom")
        return cls(text.lower())

    def morphism_for(self, alphabet) -> Morphism:
        if self.variant == "custom":
            if tuple(alphabet) != self.morphism.alphabet:
                raise AlphabetMismatch(
                    f"class alphabet {''.join(self.morphism.alphabet)!r} "
                    f"differs from {''.join(alphabet)!r}")
            return self.morphism
        return canonical_morphism(self, alphabet)


ST, DD, AT = ClassSpec("st"), ClassSpec("dd"), ClassSpec("at")


def canonical_morphism(spec, alphabet) -> Morphism:
    """The C-morphism whose eta-pairs are the C-pairs, for ST, DD and AT.

    ST: the trivial monoid. DD: U1 = {1, 0} with every letter sent to 0
    (element 1 here), separating the empty word from the rest. AT: subsets
    of the alphabet under union, encoded as bitmasks; a letter goes to its
    singleton.
    """
    variant = spec.variant if isinstance(spec, ClassSpec) else spec
    alphabet = tuple(alphabet)
    if variant == "st":
        return Morphism(alphabet, FiniteMonoid([[0]], 0), {a: 0 for a in alphabet})
    if variant == "dd":
        return Morphism(alphabet, FiniteMonoid([[0, 1], [1, 1]], 0), {a: 1 for a in alphabet})
    if variant == "at":
        n = 1 << len(alphabet)
        table = [[i | j for j in range(n)] for i in range(n)]
        return Morphism(alphabet, FiniteMonoid(table, 0, validate=False),
                        {a: 1 << i for i, a in enumerate(alphabet)})
    raise InputError(f"no canonical morphism for class {variant!r}")


def check_surjective(eta: Morphism) -> Morphism:
    """``eta`` itself when surjective, else ``eta`` with codomain cut to its image."""
    if eta.surjective:
        return eta
    keep = list(eta.image)
    renum = {s: i for i, s in enumerate(keep)}
    T = eta.codomain.table
    table = [[renum[int(T[s, t])] for t in keep] for s in keep]
    sub = FiniteMonoid(table, renum[eta.codomain.identity])
    return Morphism(eta.alphabet, sub, {a: renum[s] for a, s in eta.letter_image.items()})


def joint_image(alpha: Morphism, eta: Morphism) -> np.ndarray:
    """Boolean matrix R over M x N with R[s, r] iff some word w has (alpha(w), eta(w)) = (s, r)."""
    if alpha.alphabet != eta.alphabet:
        raise AlphabetMismatch(
            f"alphabets differ: {''.join(alpha.alphabet)!r} vs {''.join(eta.alphabet)!r}")
    TM, TN = alpha.codomain.table, eta.codomain.table
    gens = [(alpha.letter_image[a], eta.letter_image[a]) for a in alpha.alphabet]
    R = np.zeros((alpha.codomain.size, eta.codomain.size), dtype=bool)
    start = (alpha.codomain.identity, eta.codomain.identity)
    R[start] = True
    work = [start]
    while work:
        s, r = work.pop()
        for x, y in gens:
            nxt = (int(TM[s, x]), int(TN[r, y]))
            if not R[nxt]:
                R[nxt] = True
                work.append(nxt)
    return R


class PairSet:
    """Symmetric relation on M, stored as a boolean matrix."""

    def __init__(self, matrix, provenance: str = ""):
        matrix = np.array(matrix, dtype=bool)
        matrix.setflags(write=False)
        self.matrix = matrix
        self.provenance = provenance

    def __contains__(self, pair) -> bool:
        s, t = pair
        return bool(self.matrix[s, t])

    def __eq__(self, other):
        return isinstance(other, PairSet) and np.array_equal(self.matrix, other.matrix)

    def __len__(self):
        return int(self.matrix.sum())

    def __repr__(self):
        return f"PairSet({len(self)} pairs, provenance={self.provenance!r})"

    def partners(self, s: int) -> np.ndarray:
        return np.flatnonzero(self.matrix[s])

    def pairs(self):
        return [(int(s), int(t)) for s, t in np.argwhere(self.matrix)]

    def to_json(self) -> dict:
        return {"pairs": [list(p) for p in self.pairs()], "class": self.provenance}


def eta_pairs(alpha: Morphism, eta: Morphism, provenance: str = "") -> PairSet:
    R = joint_image(alpha, eta).astype(np.int64)
    return PairSet((R @ R.T) > 0, provenance)


def c_pairs(alpha: Morphism, spec: ClassSpec) -> PairSet:
    return eta_pairs(alpha, spec.morphism_for(alpha.alphabet), spec.name)
