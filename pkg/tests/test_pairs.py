import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlorbits import bruteforce as bf
from tlorbits.corpus import random_corpus
from tlorbits.errors import AlphabetMismatch, InputError
from tlorbits.monoid import cyclic_group
from tlorbits.pairs import AT, DD, ST, ClassSpec, c_pairs, canonical_morphism, check_surjective, eta_pairs
from tlorbits.syntactic import Morphism, language_from_regex


def test_canonical_st():
    eta = canonical_morphism(ST, "ab")
    assert eta.codomain.size == 1


def test_canonical_dd():
    eta = canonical_morphism(DD, "ab")
    N = eta.codomain
    assert N.size == 2 and eta("a") == eta("b") == eta("abba") != eta("")
    assert N.multiply(eta("a"), eta("a")) == eta("a")


def test_canonical_at():
    eta = canonical_morphism(AT, "ab")
    assert eta.codomain.size == 4
    assert eta("aab") == eta("ba") != eta("aaa")
    assert eta("") == eta.codomain.identity
    assert eta.surjective


def test_trivial_eta_gives_everything():
    alpha = language_from_regex("_*ab_*", "ab").morphism
    assert c_pairs(alpha, ST).matrix.all()


def test_dd_pairs_on_ab_star():
    alpha = language_from_regex("(ab)*", "ab").morphism
    one = alpha.codomain.identity
    S = [s for s in range(6) if s != one]
    expected = {(one, one)} | {(s, t) for s in S for t in S}
    assert set(c_pairs(alpha, DD).pairs()) == expected


def test_at_pairs_on_any_a():
    alpha = language_from_regex("_*a_*", "ab").morphism
    one, s = alpha(""), alpha("a")
    pairs = c_pairs(alpha, AT)
    assert (one, s) not in pairs and (s, one) not in pairs
    assert (s, s) in pairs and (one, one) in pairs


def test_custom_eta_equal_to_alpha_is_diagonal():
    alpha = language_from_regex("(ab)*", "ab").morphism
    pairs = eta_pairs(alpha, alpha, "custom")
    assert np.array_equal(pairs.matrix, np.eye(6, dtype=bool))


def test_check_surjective():
    assert check_surjective(canonical_morphism(ST, "ab")).codomain.size == 1
    stuck = Morphism("ab", cyclic_group(2), {"a": 0, "b": 0})
    cut = check_surjective(stuck)
    assert cut.codomain.size == 1 and cut.surjective
    at = canonical_morphism(AT, "abc")
    assert check_surjective(at) is at


def test_class_spec_parsing(tmp_path):
    assert ClassSpec.parse("DD") == DD
    with pytest.raises(InputError):
        ClassSpec.parse("xx")
    path = tmp_path / "eta.json"
    path.write_text(json.dumps(canonical_morphism(AT, "ab").to_json()))
    spec = ClassSpec.parse(f"custom:{path}")
    alpha = language_from_regex("_*a_*", "ab").morphism
    assert c_pairs(alpha, spec) == c_pairs(alpha, AT)
    with pytest.raises(AlphabetMismatch):
        spec.morphism_for("abc")
    with pytest.raises(InputError):
        ClassSpec.parse(f"custom:{tmp_path / 'missing.json'}")


def test_pair_json():
    alpha = language_from_regex("_*a_*", "ab").morphism
    out = c_pairs(alpha, DD).to_json()
    assert out["class"] == "dd" and [1, 1] in out["pairs"]


@pytest.mark.parametrize("variant", ["st", "dd", "at"])
@pytest.mark.parametrize("entry", random_corpus(12, seed=5, max_states=5), ids=lambda e: e.language)
def test_saturation_matches_enumeration(entry, variant):
    """Pairs from the joint image equal pairs from enumerating words (|M| and |N| small)."""
    lang = entry.compile()
    alpha = lang.morphism
    if alpha.codomain.size > 8:
        pytest.skip("enumeration only reaches all pairs for small monoids")
    length = 8 if len(alpha.alphabet) == 2 else 6
    enumerated = bf.enumerated_pairs(alpha, lambda w: bf.class_image(variant, w), alpha.alphabet, length)
    assert set(c_pairs(alpha, ClassSpec(variant)).pairs()) == enumerated


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["st", "dd", "at"]))
def test_pair_relation_properties(seed, variant):
    """Symmetric, reflexive on the image, and closed under products."""
    lang = random_corpus(1, seed=seed)[0].compile()
    M = lang.monoid
    P = c_pairs(lang.morphism, ClassSpec(variant)).matrix
    assert np.array_equal(P, P.T)
    assert all(P[s, s] for s in range(M.size))
    T = M.table
    idx = np.argwhere(P)
    for s, t in idx[:40]:
        for s2, t2 in idx[:40]:
            assert P[T[s, s2], T[t, t2]]


def test_pairs_are_monotone_in_the_class():
    """ST pairs contain DD pairs, which contain AT pairs."""
    for entry in random_corpus(20, seed=9):
        alpha = entry.compile().morphism
        st_, dd, at = (c_pairs(alpha, c).matrix for c in (ST, DD, AT))
        assert not (dd & ~st_).any() and not (at & ~dd).any()
