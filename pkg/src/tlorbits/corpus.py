"""Corpus files, random language generation, and the self-test suites."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence

import numpy as np

from . import bruteforce as bf
from .automata import Dfa, regex_to_dfa, words
from .errors import InputError
from .logic import evaluate, evaluate_naive, mirror, parse_formula
from .monoid import check_da, check_j_trivial, check_l_trivial, check_r_trivial
from .orbits import (
    PROPERTIES,
    SPECIALIZED,
    check_lpol_bpol,
    check_rpol_bpol,
    check_upol_bpol,
    classify,
    orbit_containment_check,
    orbits,
    orbits_aperiodic,
    verdict_tl,
    verdict_tl_f,
    verdict_tl_fp,
    verdict_tl_p,
)
from .pairs import AT, DD, ST, c_pairs, canonical_morphism
from .sampling import prop4_equivalence_test, prop10_equivalence_test
from .syntactic import RecognizedLanguage, syntactic_morphism


@dataclass
class CorpusEntry:
    id: str
    language: str
    alphabet: List[str]
    expected: Dict[str, Dict[str, bool]] = field(default_factory=dict)

    def dfa(self, max_states: int = 4096) -> Dfa:
        if self.language.endswith(".json") and Path(self.language).is_file():
            return Dfa.from_json(Path(self.language).read_text())
        return regex_to_dfa(self.language, self.alphabet, max_states)

    def compile(self) -> RecognizedLanguage:
        return syntactic_morphism(self.dfa(), source=self.language)


def bundled_corpus_path() -> Path:
    return Path(str(resources.files("tlorbits") / "data" / "corpus.jsonl"))


def load_corpus(path=None) -> List[CorpusEntry]:
    path = bundled_corpus_path() if path is None else Path(path)
    entries = []
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise InputError(f"cannot read corpus {path}: {exc}") from None
    for n, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            data = json.loads(line)
            entries.append(CorpusEntry(str(data["id"]), data["language"], list(data["alphabet"]),
                                       data.get("expected", {})))
        except (ValueError, KeyError, TypeError) as exc:
            raise InputError(f"{path}:{n}: bad corpus entry ({exc})") from None
    return sorted(entries, key=lambda e: e.id)


# ---------------------------------------------------------------- random languages

def random_regex(rng: random.Random, alphabet: str, depth: int) -> str:
    if depth == 0 or rng.random() < 0.2:
        r = rng.random()
        return rng.choice(alphabet) if r < 0.75 else "_" if r < 0.9 else "()"
    sub = lambda: random_regex(rng, alphabet, depth - 1)  # noqa: E731
    op = rng.random()
    if op < 0.4:
        return sub() + sub()
    if op < 0.58:
        return f"({sub()}|{sub()})"
    if op < 0.76:
        return f"({sub()})*"
    if op < 0.82:
        return f"({sub()})+"
    if op < 0.92:
        return f"~({sub()})"
    return f"({sub()}&{sub()})"


def random_corpus(n: int, seed: int = 0, alphabets: Sequence[str] = ("ab", "abc"),
                  min_states: int = 2, max_states: int = 8, depth: int = 6) -> List[CorpusEntry]:
    """``n`` pairwise distinct random languages with minimal DFAs of bounded size."""
    rng = random.Random(seed)
    seen = set()
    out = []
    while len(out) < n:
        alphabet = rng.choice(alphabets)
        text = random_regex(rng, alphabet, depth)
        dfa = regex_to_dfa(text, alphabet)
        if not min_states <= dfa.states <= max_states or dfa in seen:
            continue
        seen.add(dfa)
        out.append(CorpusEntry(f"rand-{seed}-{len(out):04d}", text, list(alphabet)))
    return out


# ---------------------------------------------------------------- checks
# Each suite returns (checked, failures) where failures are short strings.

CLASSES = {"st": ST, "dd": DD, "at": AT}


def check_expectations(entry: CorpusEntry, lang: RecognizedLanguage):
    failures, checked = [], 0
    for cls, props in entry.expected.items():
        got = classify(lang, CLASSES[cls], [p for p in props if p in PROPERTIES])
        for p, want in props.items():
            if p not in got:
                continue
            checked += 1
            if got[p].result != want:
                failures.append(f"{entry.id} {cls} {p}: expected {want}, got {got[p].result}")
    return checked, failures


def check_specialized(entry, lang):
    failures = []
    for name, spec in CLASSES.items():
        if verdict_tl(lang, spec).result != SPECIALIZED[name](lang).result:
            failures.append(f"{entry.id}: generic TL({name}) disagrees with the direct check")
    return 3, failures


def check_implications(entry, lang):
    failures = []
    for name, spec in CLASSES.items():
        pairs = c_pairs(lang.morphism, spec)
        tl, tlf, tlp, tlfp = (v(lang, pairs).result for v in
                              (verdict_tl, verdict_tl_f, verdict_tl_p, verdict_tl_fp))
        upol = check_upol_bpol(lang, pairs).result
        rules = {
            "UPolBPol => TL": not upol or tl,
            "RPol => TL_F": not check_rpol_bpol(lang, pairs).result or tlf,
            "LPol => TL_P": not check_lpol_bpol(lang, pairs).result or tlp,
            "UPolBPol => aperiodic orbits": not upol or orbits_aperiodic(lang, pairs).result,
            "TL_F & TL_P <=> TL_FP": (tlf and tlp) == tlfp,
            "TL_FP => TL": not tlfp or tl,
        }
        failures += [f"{entry.id} {name}: {rule}" for rule, ok in rules.items() if not ok]
    return 3 * 6, failures


def check_orbit_structure(entry, lang):
    """Orbit closure/neutrality (raised on construction) and containment in some alpha(eta^-1(f))."""
    failures, checked = [], 0
    for name, spec in CLASSES.items():
        eta = canonical_morphism(spec, lang.morphism.alphabet)
        pairs = c_pairs(lang.morphism, spec)
        checked += len(orbits(lang, pairs))
        e = orbit_containment_check(lang, eta, pairs)
        if e is not None:
            failures.append(f"{entry.id} {name}: orbit of {e} not inside any alpha(eta^-1(f))")
    return checked, failures


def check_monoid_laws(entry, lang):
    M = lang.monoid
    failures = []
    G = M.green
    j_vs_r = (G.J & G.leqR) & ~G.R
    if j_vs_r.any():
        failures.append(f"{entry.id}: J and <=R without R at {np.argwhere(j_vs_r)[0].tolist()}")
    om = M.omega
    if not np.array_equal(M.table[om, om], om) or not np.array_equal(om[om], om):
        failures.append(f"{entry.id}: omega power not idempotent")
    full = M.full()
    if (check_j_trivial(full) is None) != (check_l_trivial(full) is None and check_r_trivial(full) is None):
        failures.append(f"{entry.id}: J-trivial disagrees with L- and R-trivial")
    if check_j_trivial(full) is None and check_da(full) is not None:
        failures.append(f"{entry.id}: J-trivial monoid outside DA")
    return 4, failures


def check_round_trip(entry, lang, max_len: int = 8):
    dfa = entry.dfa()
    bad = [w for w in words(dfa.alphabet, max_len) if dfa.accepts(w) != lang.contains(w)]
    return 1, [f"{entry.id}: morphism and DFA disagree on {bad[0]!r}"] if bad else []


def closing_quotient(dfa: Dfa, start: int = 6, stop: int = 12) -> Optional[bf.Quotient]:
    """Context quotient over words of length ``start``, lengthened until every product is a known class."""
    for n in range(start, stop + 1):
        try:
            return bf.dfa_quotient(dfa, n)
        except bf.IncompleteQuotient:
            continue
    return None


def check_bruteforce(entry, lang, max_states: int = 6):
    """Compare with the context quotient of short words."""
    dfa = entry.dfa()
    if dfa.states > max_states:
        return 0, []
    q = closing_quotient(dfa)
    if q is None:
        return 1, [f"{entry.id}: brute-force quotient incomplete at length 12"]
    iso = quotient_isomorphism(q, lang)
    return 1, [] if iso is not None else [f"{entry.id}: brute-force quotient not isomorphic"]


def quotient_isomorphism(q: bf.Quotient, lang: RecognizedLanguage) -> Optional[List[int]]:
    """The map class(u) -> alpha(u) when it is an isomorphism preserving acceptance."""
    M = lang.monoid
    if q.size != M.size:
        return None
    phi = [lang.morphism.word_image(u) for u in q.reps]
    if len(set(phi)) != M.size or phi[q.identity] != M.identity:
        return None
    for i in range(q.size):
        for j in range(q.size):
            if phi[q.table[i][j]] != M.table[phi[i], phi[j]]:
                return None
    if {phi[i] for i in q.accepting} != set(lang.accepting):
        return None
    return phi


ENTRY_SUITES: Dict[str, Callable] = {
    "monoid-laws": check_monoid_laws,
    "round-trip": check_round_trip,
    "bruteforce-congruence": check_bruteforce,
    "generic-vs-specialized": check_specialized,
    "implications": check_implications,
    "orbit-structure": check_orbit_structure,
    "expectations": check_expectations,
}


def semantics_suite(seed: int, n: int = 200):
    """Fast versus naive evaluation, and invariance under mirroring, on random words."""
    rng = random.Random(seed)
    alphabet = "ab"
    texts = ["'a'", "min", "max", "F[_*] 'a'", "P[_*] 'b'", "F[()] 'b'", "P[()] min",
             "F[a*] max", "!F[_*] ('a' & P[b+] min)", "F[~(_*a_*)] ('a' | max)",
             "P[(ab)*] (min | 'b') & F[_] !'a'"]
    formulas = [parse_formula(t, alphabet) for t in texts]
    failures = []
    for _ in range(n):
        phi = rng.choice(formulas)
        w = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 6)))
        i = rng.randint(0, len(w) + 1)
        value = evaluate(phi, w, i)
        if value != evaluate_naive(phi, w, i):
            failures.append(f"{phi} on {w!r} at {i}: evaluators disagree")
        if value != evaluate(mirror(phi), w[::-1], len(w) + 1 - i):
            failures.append(f"{phi} on {w!r} at {i}: mirror image disagrees")
    return 2 * n, failures


def logic_props_suite(seed: int, trials: int = 100):
    failures = []
    for variant, f, u, v, z in (("dd", 1, "a", "a", "a"), ("at", 3, "ab", "ba", "ab")):
        eta = canonical_morphism(variant, "ab")
        for k in (0, 1, 2):
            if prop4_equivalence_test(eta, k, trials, f=f, u=u, v=v, z=z, x="b", y="a", seed=seed) is not None:
                failures.append(f"two-sided {variant} k={k}: distinguisher found")
            if prop10_equivalence_test(eta, k, trials, f=f, u=u, v=v, z=z, seed=seed) is not None:
                failures.append(f"pure-future {variant} k={k}: distinguisher found")
    return 12, failures


def selftest(entries: Sequence[CorpusEntry], seed: int = 0, random_languages: int = 40):
    """Run every suite; returns ``{suite: {"checked": n, "failures": [...]}}``."""
    report = {name: {"checked": 0, "failures": []} for name in ENTRY_SUITES}
    pool = list(entries) + random_corpus(random_languages, seed)
    for entry in pool:
        lang = entry.compile()
        for name, suite in ENTRY_SUITES.items():
            checked, failures = suite(entry, lang)
            report[name]["checked"] += checked
            report[name]["failures"] += failures
    for name, suite in (("semantics", semantics_suite), ("indistinguishability", logic_props_suite)):
        checked, failures = suite(seed)
        report[name] = {"checked": checked, "failures": failures}
    return report
