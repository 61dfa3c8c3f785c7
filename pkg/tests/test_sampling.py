import pytest

from tlorbits.errors import InputError
from tlorbits.logic import evaluate, is_pure_future, parse_formula, rank
from tlorbits.pairs import canonical_morphism
from tlorbits.sampling import (
    FormulaSampler,
    _search,
    block,
    prop4_equivalence_test,
    prop4_words,
    prop10_equivalence_test,
    prop10_words,
    recognized_payloads,
)

DD = canonical_morphism("dd", "ab")
AT = canonical_morphism("at", "ab")


def test_payload_counts():
    # DD recognizes 4 languages: empty, {eps}, A+, A*
    assert len(recognized_payloads(DD)) == 4
    assert len(recognized_payloads(AT)) == 16
    assert len(recognized_payloads(canonical_morphism("st", "ab"))) == 2


def test_sampler_respects_rank_and_purity():
    sampler = FormulaSampler(AT, seed=4, pure_future=True)
    for k in range(4):
        for _ in range(50):
            phi = sampler.formula(k)
            assert rank(phi) <= k and is_pure_future(phi)


def test_sampler_is_deterministic():
    a, b = FormulaSampler(DD, seed=7), FormulaSampler(DD, seed=7)
    assert [str(a.formula(2)) for _ in range(20)] == [str(b.formula(2)) for _ in range(20)]


def test_word_shapes():
    assert block("u", "v", "z", 1) == "zuzzvz"
    assert prop4_words("u", "v", "z", "x", "y", 0) == ("xy", "xvy")
    assert prop10_words("u", "v", "z", 1) == ("zuzzvz", "zvzzuzzvz")


@pytest.mark.parametrize("k", [0, 1, 2])
def test_dd_passes(k):
    assert prop4_equivalence_test(DD, k, 300, f=1, u="a", v="a", z="a", x="b", y="ba", seed=k) is None
    assert prop10_equivalence_test(DD, k, 300, f=1, u="a", v="a", z="a", seed=k) is None


@pytest.mark.parametrize("k", [0, 1, 2])
def test_at_passes(k):
    assert prop4_equivalence_test(AT, k, 300, f=3, u="ab", v="ba", z="ab", seed=k) is None
    assert prop10_equivalence_test(AT, k, 300, f=3, u="ab", v="ba", z="ab", seed=k) is None


def test_inputs_must_map_to_the_idempotent():
    with pytest.raises(InputError):
        prop4_equivalence_test(AT, 1, 10, f=3, u="a", v="ab", z="ab")
    with pytest.raises(InputError):
        prop10_equivalence_test(AT, 1, 10, f=1, u="a", v="a", z="b")


def test_search_can_find_distinguishers():
    """The same search reports a formula when the two words genuinely differ at low rank."""
    found = _search(AT, "ab", "ba", 1, 300, seed=0, pure_future=False)
    assert found is not None
    assert evaluate(found.formula, "ab", 0) != evaluate(found.formula, "ba", 0)
    phi = parse_formula("F[()] 'a'", "ab")
    assert evaluate(phi, "ab", 0) and not evaluate(phi, "ba", 0)
