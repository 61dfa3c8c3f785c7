"""Finite monoids given by multiplication tables.

Elements are the dense indices ``0..size-1``. The identity is stored
explicitly; it need not be element 0.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

import numpy as np

from .errors import AssociativityViolation, ClosureViolation, IdentityViolation, InputError


@dataclass(frozen=True)
class Witness:
    """A violated equation: ``lhs != rhs`` at the given elements."""

    s: int
    t: Optional[int]
    lhs: int
    rhs: int
    e: Optional[int] = None

    def as_dict(self):
        d = {"s": self.s, "lhs": self.lhs, "rhs": self.rhs}
        if self.t is not None:
            d["t"] = self.t
        if self.e is not None:
            d["e"] = self.e
        return d


class FiniteMonoid:
    def __init__(self, table, identity: int, *, validate: bool = True):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise InputError("multiplication table must be a non-empty square matrix")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise InputError("table entries must be element indices")
        if not 0 <= identity < n:
            raise InputError(f"identity {identity} out of range")
        table.setflags(write=False)
        self.table = table
        self.identity = int(identity)
        if validate:
            self._validate()

    def _validate(self):
        T, one = self.table, self.identity
        for s in range(self.size):
            if T[one, s] != s or T[s, one] != s:
                raise IdentityViolation(s)
        # (st)u vs s(tu) for all triples, one s-slab at a time
        for s in range(self.size):
            left = T[T[s, :], :]  # [t, u] -> (st)u
            right = T[s, T]  # [t, u] -> s(tu)
            bad = np.argwhere(left != right)
            if len(bad):
                t, u = bad[0]
                raise AssociativityViolation(s, int(t), int(u))

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteMonoid(size={self.size}, identity={self.identity})"

    def multiply(self, s: int, t: int) -> int:
        return int(self.table[s, t])

    def product(self, elements: Iterable[int]) -> int:
        acc = self.identity
        for x in elements:
            acc = int(self.table[acc, x])
        return acc

    @cached_property
    def omega(self) -> np.ndarray:
        """``omega[s]`` is the idempotent power of ``s``."""
        T = self.table
        out = np.empty(self.size, dtype=np.int64)
        for s in range(self.size):
            p = s
            while T[p, p] != p:
                p = T[p, s]
            out[s] = p
        out.setflags(write=False)
        return out

    def omega_power(self, s: int) -> int:
        return int(self.omega[s])

    def omega_plus(self, s: int) -> int:
        """``s^(omega+1)``."""
        return int(self.table[self.omega[s], s])

    @cached_property
    def idempotents(self) -> tuple:
        d = np.diagonal(self.table)
        return tuple(int(e) for e in np.flatnonzero(d == np.arange(self.size)))

    def is_idempotent(self, s: int) -> bool:
        return int(self.table[s, s]) == s

    @cached_property
    def green(self) -> "GreenData":
        return GreenData.of(self)

    def j_depth(self, r: int) -> int:
        return int(self.green.j_depth[r])

    def generated_submonoid(self, generators: Iterable[int], unit: Optional[int] = None) -> "SubMonoid":
        """Least multiplicatively closed set containing ``generators`` and ``unit``."""
        unit = self.identity if unit is None else unit
        elements = saturate(self.table, set(generators) | {unit})
        return SubMonoid(self, elements, unit)

    def full(self) -> "SubMonoid":
        return SubMonoid(self, range(self.size), self.identity)

    def to_json(self) -> dict:
        return {"size": self.size, "identity": self.identity, "table": self.table.tolist()}

    @classmethod
    def from_json(cls, data) -> "FiniteMonoid":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            table, identity = data["table"], data["identity"]
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed monoid JSON: {exc}") from None
        m = cls(table, identity)
        if "size" in data and data["size"] != m.size:
            raise InputError("monoid JSON 'size' disagrees with its table")
        return m


def build_monoid(table, identity: int) -> FiniteMonoid:
    return FiniteMonoid(table, identity)


def saturate(table: np.ndarray, seed: Iterable[int]) -> list:
    """Closure of ``seed`` under the multiplication of ``table``."""
    found = set(int(x) for x in seed)
    frontier = list(found)
    while frontier:
        new = []
        members = np.fromiter(found, dtype=np.int64)
        for x in frontier:
            for y in np.concatenate([table[x, members], table[members, x]]).tolist():
                if y not in found:
                    found.add(y)
                    new.append(y)
        frontier = new
    return sorted(found)


class GreenData:
    """Green preorders as boolean matrices; ``leqJ[s, t]`` means s <=J t."""

    def __init__(self, leqJ, leqL, leqR):
        self.leqJ, self.leqL, self.leqR = leqJ, leqL, leqR

    @classmethod
    def of(cls, M: FiniteMonoid) -> "GreenData":
        T, n = M.table, M.size
        leqJ = np.zeros((n, n), dtype=bool)
        leqL = np.zeros((n, n), dtype=bool)
        leqR = np.zeros((n, n), dtype=bool)
        for t in range(n):
            leqR[T[t, :], t] = True  # tM
            leqL[T[:, t], t] = True  # Mt
            leqJ[T[T[:, t], :].ravel(), t] = True  # MtM
        for a in (leqJ, leqL, leqR):
            a.setflags(write=False)
        return cls(leqJ, leqL, leqR)

    @property
    def J(self):
        return self.leqJ & self.leqJ.T

    @property
    def L(self):
        return self.leqL & self.leqL.T

    @property
    def R(self):
        return self.leqR & self.leqR.T

    @cached_property
    def j_depth(self) -> np.ndarray:
        """Length of the longest strict chain r <J r1 <J ... <J rn above each r."""
        strict = self.leqJ & ~self.leqJ.T
        n = strict.shape[0]
        depth = np.full(n, -1, dtype=np.int64)
        # strictly larger elements sit above; process by number of elements above
        order = np.argsort(strict.sum(axis=1), kind="stable")
        for r in order:
            above = np.flatnonzero(strict[r])
            depth[r] = 0 if len(above) == 0 else 1 + depth[above].max()
        return depth


class SubMonoid:
    """A multiplicatively closed subset with its own neutral element.

    Products and omega-powers are read from the parent table.
    """

    def __init__(self, parent: FiniteMonoid, elements: Iterable[int], local_identity: int):
        self.parent = parent
        self.elements = tuple(sorted(set(int(x) for x in elements)))
        self.local_identity = int(local_identity)
        T = parent.table
        idx = np.array(self.elements, dtype=np.int64)
        if self.local_identity not in self.elements:
            raise ClosureViolation(f"identity {local_identity} is not a member")
        products = T[idx[:, None], idx[None, :]]
        outside = ~np.isin(products, idx)
        if outside.any():
            i, j = np.argwhere(outside)[0]
            raise ClosureViolation(
                f"{self.elements[i]}*{self.elements[j]}={products[i, j]} leaves the set"
            )
        e = self.local_identity
        if not (np.array_equal(T[e, idx], idx) and np.array_equal(T[idx, e], idx)):
            raise ClosureViolation(f"{e} is not neutral on the set")
        self._idx = idx

    def __len__(self):
        return len(self.elements)

    def __contains__(self, s):
        return s in self.elements

    def __iter__(self):
        return iter(self.elements)

    def __repr__(self):
        return f"SubMonoid({list(self.elements)}, identity={self.local_identity})"


def _first(lhs, rhs, xs, ys=None):
    bad = np.argwhere(lhs != rhs)
    if not len(bad):
        return None
    if ys is None:
        i = bad[0][0]
        return Witness(int(xs[i]), None, int(lhs[i]), int(rhs[i]))
    i, j = bad[0]
    return Witness(int(xs[i]), int(ys[j]), int(lhs[i, j]), int(rhs[i, j]))


def _st_omega(sub: SubMonoid):
    T, om, X = sub.parent.table, sub.parent.omega, sub._idx
    return T, X, om[T[X[:, None], X[None, :]]]


def check_da(sub: SubMonoid) -> Optional[Witness]:
    """(st)^w = (st)^w t (st)^w over the subset; ``None`` when it holds."""
    T, X, w = _st_omega(sub)
    return _first(w, T[T[w, X[None, :]], w], X, X)


def check_r_trivial(sub: SubMonoid) -> Optional[Witness]:
    """(st)^w s = (st)^w."""
    T, X, w = _st_omega(sub)
    return _first(T[w, X[:, None]], w, X, X)


def check_l_trivial(sub: SubMonoid) -> Optional[Witness]:
    """t (st)^w = (st)^w."""
    T, X, w = _st_omega(sub)
    return _first(T[X[None, :], w], w, X, X)


def check_j_trivial(sub: SubMonoid) -> Optional[Witness]:
    T, X, w = _st_omega(sub)
    r_side = T[w, X[:, None]]
    l_side = T[X[None, :], w]
    # first (s, t) failing either equation; the R-equation is reported first
    bad = (r_side != w) | (l_side != w)
    hits = np.argwhere(bad)
    if not len(hits):
        return None
    i, j = hits[0]
    lhs = r_side[i, j] if r_side[i, j] != w[i, j] else l_side[i, j]
    return Witness(int(X[i]), int(X[j]), int(lhs), int(w[i, j]))


def check_aperiodic(sub: SubMonoid) -> Optional[Witness]:
    """s^(w+1) = s^w."""
    T, om, X = sub.parent.table, sub.parent.omega, sub._idx
    return _first(T[om[X], X], om[X], X)


# Small named monoids used in docs and tests.

def trivial_monoid() -> FiniteMonoid:
    return FiniteMonoid([[0]], 0)


def u1() -> FiniteMonoid:
    """{1, 0} with 0 absorbing; index 0 is the identity, index 1 the zero."""
    return FiniteMonoid([[0, 1], [1, 1]], 0)


def cyclic_group(n: int) -> FiniteMonoid:
    return FiniteMonoid([[(i + j) % n for j in range(n)] for i in range(n)], 0)
