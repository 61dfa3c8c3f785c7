import numpy as np
import pytest

from tlorbits import bruteforce as bf
from tlorbits.corpus import load_corpus, random_corpus
from tlorbits.errors import ClosureViolation, NotIdempotent
from tlorbits.monoid import SubMonoid, cyclic_group
from tlorbits.orbits import (
    PROPERTIES,
    check_lpol_bpol,
    check_rpol_bpol,
    check_upol_bpol,
    classify,
    orbit,
    orbit_containment_check,
    orbits,
    specialized_at,
    specialized_dd,
    specialized_st,
    verdict_tl,
    verdict_tl_f,
    verdict_tl_fp,
    verdict_tl_p,
)
from tlorbits.pairs import AT, DD, ST, ClassSpec, PairSet, c_pairs, canonical_morphism, check_surjective
from tlorbits.syntactic import Morphism, language_from_regex


@pytest.fixture(scope="module")
def ab_star():
    return language_from_regex("(ab)*", "ab")


@pytest.fixture(scope="module")
def any_a():
    return language_from_regex("_*a_*", "ab")


# ---------------------------------------------------------------- orbits

def test_st_orbit_is_eme(ab_star):
    M = ab_star.monoid
    pairs = c_pairs(ab_star.morphism, ST)
    T = M.table
    for e in M.idempotents:
        assert set(orbit(ab_star, pairs, e).members) == set(T[T[e, :], e].tolist())
    assert len(orbit(ab_star, pairs, M.identity)) == M.size


def test_dd_orbit_is_ese(ab_star):
    M, alpha = ab_star.monoid, ab_star.morphism
    T = M.table
    S = list(alpha.semigroup_image)
    pairs = c_pairs(alpha, DD)
    for e in S:
        if M.is_idempotent(e):
            assert set(orbit(ab_star, pairs, e).members) == {int(T[T[e, s], e]) for s in S}
    # only the empty word maps to 1, so its orbit is trivial
    assert set(orbit(ab_star, pairs, M.identity).members) == {M.identity}


def test_orbit_needs_idempotent(ab_star):
    with pytest.raises(NotIdempotent):
        orbit(ab_star, c_pairs(ab_star.morphism, ST), ab_star.morphism("a"))


def test_orbit_of_arbitrary_relation_can_fail(ab_star):
    """A relation that is not a pair set can break closure; the constructor notices."""
    alpha = ab_star.morphism
    m = np.zeros((6, 6), dtype=bool)
    e = alpha("ab")
    m[e, alpha("aa")] = True  # e is not even related to itself
    with pytest.raises(ClosureViolation):
        orbit(ab_star, PairSet(m), e)


@pytest.mark.parametrize("variant", ["st", "dd", "at"])
@pytest.mark.parametrize("entry", random_corpus(25, seed=3), ids=lambda e: e.language)
def test_orbits_are_submonoids_and_contained(entry, variant):
    lang = entry.compile()
    eta = canonical_morphism(variant, lang.morphism.alphabet)
    pairs = c_pairs(lang.morphism, ClassSpec(variant))
    for e, orb in orbits(lang, pairs).items():
        assert isinstance(orb.members, SubMonoid) and orb.members.local_identity == e
    assert orbit_containment_check(lang, eta, pairs) is None


def test_containment_examples(ab_star, any_a):
    assert orbit_containment_check(ab_star, canonical_morphism(ST, "ab")) is None
    assert orbit_containment_check(ab_star, canonical_morphism(DD, "ab")) is None
    assert orbit_containment_check(any_a, canonical_morphism(AT, "ab")) is None


# ---------------------------------------------------------------- verdicts

def test_tl_examples(ab_star, any_a):
    assert verdict_tl(any_a, ST).result
    v = verdict_tl(ab_star, ST)
    a, b = ab_star.morphism("a"), ab_star.morphism("b")
    assert not v.result and (v.witness.e, v.witness.s, v.witness.t) == (ab_star.monoid.identity, a, b)
    assert verdict_tl(ab_star, DD).result


def test_fp_examples():
    any_a = language_from_regex("_*a_*", "ab")
    for verdict in (verdict_tl_f, verdict_tl_p, verdict_tl_fp):
        assert verdict(any_a, ST).result
    starts = language_from_regex("a_*", "ab")
    assert not verdict_tl_f(starts, ST).result and verdict_tl_p(starts, ST).result
    ends = language_from_regex("_*a", "ab")
    assert verdict_tl_f(ends, ST).result and not verdict_tl_p(ends, ST).result
    assert not verdict_tl_fp(starts, ST).result and not verdict_tl_fp(ends, ST).result


def test_starts_with_a_monoid_is_left_zero():
    lang = language_from_regex("a_*", "ab")
    M, alpha = lang.monoid, lang.morphism
    a, b = alpha("a"), alpha("b")
    assert M.size == 3 and M.multiply(a, b) == a and M.multiply(b, a) == b
    assert M.green.L[a, b]


def test_upol_examples(ab_star, any_a):
    assert check_upol_bpol(language_from_regex("_*", "ab"), ST).result
    assert check_upol_bpol(any_a, ST).result
    assert not check_upol_bpol(ab_star, ST).result


def test_rpol_lpol_examples():
    assert check_rpol_bpol(language_from_regex("_*", "ab"), ST).result
    starts = language_from_regex("a_*", "ab")
    v = check_rpol_bpol(starts, ST)
    a, b = starts.morphism("a"), starts.morphism("b")
    assert not v.result and (v.witness.s, v.witness.t, v.witness.lhs, v.witness.rhs) == (a, b, a, b)
    assert v.to_json()["holds"] is False
    ends = language_from_regex("_*a", "ab")
    assert not check_lpol_bpol(ends, ST).result
    assert check_rpol_bpol(ends, ST).result


def test_specialized_examples(ab_star, any_a):
    assert specialized_st(any_a).result
    assert specialized_dd(ab_star).result
    even = language_from_regex("(aa)*", "a")
    assert not specialized_dd(even).result
    assert not verdict_tl(even, DD).result and not verdict_tl(even, AT).result


def test_curated_classifications(ab_star):
    assert not verdict_tl(ab_star, ST).result and verdict_tl(ab_star, DD).result
    mid = language_from_regex("_*a_*", "ab")
    assert verdict_tl_f(mid, ST).result and verdict_tl_p(mid, ST).result


def test_verdict_json_shape(ab_star):
    out = classify(ab_star, ST, PROPERTIES)
    assert set(out) == set(PROPERTIES)
    assert "in" in out["TL"].to_json() and "holds" in out["RPolBPol"].to_json()
    assert set(out["TL"].to_json()["witness"]) == {"e", "s", "t", "lhs", "rhs"}


def test_custom_class_equal_to_language(ab_star):
    """With eta = alpha only diagonal pairs exist, so orbits are {e} and everything is in."""
    pairs = c_pairs(ab_star.morphism, ClassSpec("custom", ab_star.morphism))
    assert all(len(o) == 1 for o in orbits(ab_star, pairs).values())
    assert verdict_tl_fp(ab_star, pairs).result


# ---------------------------------------------------------------- cross-checks

@pytest.mark.parametrize("entry", random_corpus(60, seed=1), ids=lambda e: e.language)
def test_generic_equals_specialized(entry):
    lang = entry.compile()
    assert verdict_tl(lang, ST).result == specialized_st(lang).result
    assert verdict_tl(lang, DD).result == specialized_dd(lang).result
    assert verdict_tl(lang, AT).result == specialized_at(lang).result


@pytest.mark.parametrize("entry", random_corpus(30, seed=2, max_states=5), ids=lambda e: e.language)
def test_vectorized_verdicts_match_plain_loops(entry):
    lang = entry.compile()
    T = lang.monoid.table.tolist()
    for spec in (ST, DD, AT):
        pairs = c_pairs(lang.morphism, spec)
        expected = bf.verdicts(T, set(pairs.pairs()))
        got = {p: v.result for p, v in classify(lang, spec, PROPERTIES).items()}
        assert got == expected


@pytest.mark.parametrize("entry", load_corpus(), ids=lambda e: e.id)
def test_bundled_expectations(entry):
    lang = entry.compile()
    for cls, props in entry.expected.items():
        got = classify(lang, {"st": ST, "dd": DD, "at": AT}[cls], list(props))
        assert {p: v.result for p, v in got.items()} == props


def test_non_surjective_custom_class_is_cut_down(any_a):
    eta = check_surjective(Morphism("ab", cyclic_group(3), {"a": 0, "b": 0}))
    assert verdict_tl(any_a, ClassSpec("custom", eta)).result == verdict_tl(any_a, ST).result
