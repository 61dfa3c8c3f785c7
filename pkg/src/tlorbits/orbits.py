"""C-orbits and the membership verdicts built on them.

For an idempotent e of M, the C-orbit of e is the set of all ete such that
(e, t) is a C-pair; it is a monoid with identity e. Membership of L in
TL(C), TL_F(C), TL_P(C) and their intersection reduces to every orbit of
the syntactic morphism lying in DA, being L-trivial, R-trivial, or
J-trivial respectively. UPol(BPol(C)) has an equation over pairs with a
free third variable; the RPol/LPol equations are only sufficient.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Optional

import numpy as np

from .errors import NotIdempotent
from .monoid import (
    SubMonoid,
    Witness,
    check_aperiodic,
    check_da,
    check_j_trivial,
    check_l_trivial,
    check_r_trivial,
)
from .pairs import ClassSpec, PairSet, c_pairs, eta_pairs, joint_image
from .syntactic import Morphism, RecognizedLanguage

PROPERTIES = ("TL", "TL_F", "TL_P", "TL_FP", "UPolBPol", "RPolBPol", "LPolBPol")
DEFAULT_PROPERTIES = ("TL", "TL_F", "TL_P", "TL_FP", "UPolBPol")
SUFFICIENT_ONLY = frozenset({"RPolBPol", "LPolBPol"})


@dataclass(frozen=True)
class Orbit:
    base: int
    members: SubMonoid

    def __len__(self):
        return len(self.members)


@dataclass(frozen=True)
class Verdict:
    prop: str
    result: bool
    witness: Optional[Witness] = None
    sufficient_only: bool = False

    def __bool__(self):
        return self.result

    def to_json(self) -> dict:
        out = {"holds" if self.sufficient_only else "in": self.result}
        if self.witness is not None:
            out["witness"] = self.witness.as_dict()
        return out


def _morphism(alpha) -> Morphism:
    return alpha.morphism if isinstance(alpha, RecognizedLanguage) else alpha


def orbit(alpha, pairs: PairSet, e: int) -> Orbit:
    M = _morphism(alpha).codomain
    if not M.is_idempotent(e):
        raise NotIdempotent(f"{e} is not idempotent")
    T = M.table
    ts = pairs.partners(e)
    members = set(T[T[e, ts], e].tolist())
    # SubMonoid validates closure and neutrality of e
    return Orbit(e, SubMonoid(M, members, e))


def orbits(alpha, pairs: PairSet) -> Dict[int, Orbit]:
    M = _morphism(alpha).codomain
    return {e: orbit(alpha, pairs, e) for e in M.idempotents}


def _pairs(alpha, spec_or_pairs) -> PairSet:
    if isinstance(spec_or_pairs, PairSet):
        return spec_or_pairs
    return c_pairs(_morphism(alpha), spec_or_pairs)


def _orbit_verdict(name, check: Callable, alpha, spec) -> Verdict:
    for e, orb in orbits(alpha, _pairs(alpha, spec)).items():
        w = check(orb.members)
        if w is not None:
            return Verdict(name, False, Witness(w.s, w.t, w.lhs, w.rhs, e))
    return Verdict(name, True)


def verdict_tl(alpha, spec) -> Verdict:
    """Every orbit in DA."""
    return _orbit_verdict("TL", check_da, alpha, spec)


def verdict_tl_f(alpha, spec) -> Verdict:
    return _orbit_verdict("TL_F", check_l_trivial, alpha, spec)


def verdict_tl_p(alpha, spec) -> Verdict:
    return _orbit_verdict("TL_P", check_r_trivial, alpha, spec)


def verdict_tl_fp(alpha, spec) -> Verdict:
    return _orbit_verdict("TL_FP", check_j_trivial, alpha, spec)


def orbits_aperiodic(alpha, spec) -> Verdict:
    return _orbit_verdict("orbit-aperiodic", check_aperiodic, alpha, spec)


def _esete_scan(name, alpha, spec, rhs_of, swap=False, sufficient=False) -> Verdict:
    """Scan x = esete over idempotents e, paired s (or paired t when ``swap``) and free t (or s).

    ``rhs_of(T, x, x^w, ese, ete)`` gives the right-hand side; the left-hand
    side is x^(w+1) in all three equations.
    """
    M = _morphism(alpha).codomain
    T, om = M.table, M.omega
    pairs = _pairs(alpha, spec)
    every = np.arange(M.size)
    for e in M.idempotents:
        partners = pairs.partners(e)
        if swap:
            s_range, t_range = every, partners
        else:
            s_range, t_range = partners, every
        if not len(s_range) or not len(t_range):
            continue
        ese = T[T[e, s_range], e][:, None]
        ete = T[T[e, t_range], e][None, :]
        x = T[ese, ete]
        xw = om[x]
        lhs = T[xw, x]
        rhs = rhs_of(T, x, xw, ese, ete)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j = bad[0]
            w = Witness(int(s_range[i]), int(t_range[j]), int(lhs[i, j]), int(rhs[i, j]), e)
            return Verdict(name, False, w, sufficient)
    return Verdict(name, True, None, sufficient)


def check_upol_bpol(alpha, spec) -> Verdict:
    """(esete)^(w+1) = (esete)^w ete (esete)^w for C-pairs (e, s) and all t."""
    return _esete_scan("UPolBPol", alpha, spec,
                       lambda T, x, xw, ese, ete: T[T[xw, ete], xw])


def check_rpol_bpol(alpha, spec) -> Verdict:
    """(esete)^(w+1) = ete (esete)^w for C-pairs (e, s) and all t; sufficient only."""
    return _esete_scan("RPolBPol", alpha, spec,
                       lambda T, x, xw, ese, ete: T[ete, xw], sufficient=True)


def check_lpol_bpol(alpha, spec) -> Verdict:
    """(esete)^(w+1) = (esete)^w ese for C-pairs (e, t) and all s; sufficient only."""
    return _esete_scan("LPolBPol", alpha, spec,
                       lambda T, x, xw, ese, ete: T[xw, ese], swap=True, sufficient=True)


# Direct characterizations for the three historical classes. None of these
# goes through pairs or orbits.

def specialized_st(alpha) -> Verdict:
    """M in DA."""
    M = _morphism(alpha).codomain
    w = check_da(M.full())
    if w is None:
        return Verdict("DA-global", True)
    return Verdict("DA-global", False, Witness(w.s, w.t, w.lhs, w.rhs, M.identity))


def specialized_dd(alpha) -> Verdict:
    """eSe in DA for every idempotent e of the syntactic semigroup S."""
    m = _morphism(alpha)
    M = m.codomain
    T = M.table
    S = np.array(m.semigroup_image, dtype=np.int64)
    for e in S.tolist():
        if T[e, e] != e:
            continue
        local = SubMonoid(M, set(T[T[e, S], e].tolist()), e)
        w = check_da(local)
        if w is not None:
            return Verdict("eSe-DA", False, Witness(w.s, w.t, w.lhs, w.rhs, e))
    return Verdict("eSe-DA", True)


def specialized_at(alpha) -> Verdict:
    """M in MeDA: eN_ee in DA where N_e is generated by {s : e <=J s}."""
    M = _morphism(alpha).codomain
    T = M.table
    leqJ = M.green.leqJ
    for e in M.idempotents:
        N_e = M.generated_submonoid(np.flatnonzero(leqJ[e]).tolist())
        idx = np.array(N_e.elements, dtype=np.int64)
        local = SubMonoid(M, set(T[T[e, idx], e].tolist()), e)
        w = check_da(local)
        if w is not None:
            return Verdict("MeDA", False, Witness(w.s, w.t, w.lhs, w.rhs, e))
    return Verdict("MeDA", True)


SPECIALIZED = {"st": specialized_st, "dd": specialized_dd, "at": specialized_at}


def orbit_containment_check(alpha, eta: Morphism, pairs: Optional[PairSet] = None):
    """Find, for every orbit, an idempotent f of N with the orbit inside alpha(eta^-1(f)).

    Returns ``None`` when every orbit is covered, else the first uncovered
    idempotent e of M.
    """
    m = _morphism(alpha)
    R = joint_image(m, eta)
    if pairs is None:
        pairs = eta_pairs(m, eta)
    fs = list(eta.codomain.idempotents)
    for e, orb in orbits(m, pairs).items():
        idx = list(orb.members.elements)
        if not any(R[idx, f].all() for f in fs):
            return e
    return None


VERDICTS = {
    "TL": verdict_tl,
    "TL_F": verdict_tl_f,
    "TL_P": verdict_tl_p,
    "TL_FP": verdict_tl_fp,
    "UPolBPol": check_upol_bpol,
    "RPolBPol": check_rpol_bpol,
    "LPolBPol": check_lpol_bpol,
}


def classify(lang: RecognizedLanguage, spec: ClassSpec, properties=DEFAULT_PROPERTIES) -> Dict[str, Verdict]:
    """Verdicts for the requested properties, sharing one pair computation."""
    pairs = c_pairs(lang.morphism, spec)
    return {p: VERDICTS[p](lang, pairs) for p in properties}
