import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tlorbits.automata import regex_to_dfa, words
from tlorbits.errors import FormulaSyntaxError, PositionOutOfRange, SampleLimit, UnknownLetter
from tlorbits.logic import (
    And,
    Finally,
    Letter,
    Max,
    Min,
    Not,
    Previously,
    Top,
    evaluate,
    evaluate_naive,
    is_pure_future,
    is_pure_past,
    l_max_sample,
    l_min_sample,
    mirror,
    parse_formula,
    rank,
    to_text,
)

ANY = regex_to_dfa("_*", "ab")
EPS = regex_to_dfa("()", "ab")
A, B = Letter("a"), Letter("b")


# ---------------------------------------------------------------- parsing

def test_parse_finally_any():
    assert parse_formula("F[_*] 'a'", "ab") == Finally(ANY, A)


def test_parse_next_encoding():
    assert parse_formula("F[()] 'a'", "ab") == Finally(EPS, A)


@pytest.mark.parametrize("text", ["F['a' &", "'a' &", "(min", "F[_* 'a'", "'ab'", "maxx", ""])
def test_formula_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text, "ab")


def test_formula_unknown_letter():
    with pytest.raises(UnknownLetter):
        parse_formula("'c'", "ab")


def test_precedence():
    phi = parse_formula("'a' | 'b' & min", "ab")
    assert phi == A | (B & Min())
    assert parse_formula("!F[_*] 'a' & max", "ab") == And(Not(Finally(ANY, A)), Max())


@pytest.mark.parametrize("text", ["F[_*] ('a' & P[b+] min)", "!('a' | 'b') & true", "P[()] F[a*] max | false"])
def test_text_round_trip(text):
    phi = parse_formula(text, "ab")
    assert parse_formula(to_text(phi), "ab") == phi


# ---------------------------------------------------------------- structure

def test_rank_examples():
    assert rank(A) == 0
    assert rank(Not(A)) == 0
    assert rank(Finally(ANY, And(A, Previously(ANY, B)))) == 2


def test_purity_examples():
    assert is_pure_future(A) and is_pure_past(A)
    assert is_pure_future(Finally(ANY, A)) and not is_pure_past(Finally(ANY, A))
    assert not is_pure_future(Previously(ANY, A)) and is_pure_past(Previously(ANY, A))


# ---------------------------------------------------------------- semantics

def test_labels_on_empty_word():
    assert evaluate(Min(), "", 0)
    assert not evaluate(Min(), "", 1)
    assert evaluate(Max(), "", 1)


def test_next_and_eventually_examples():
    assert evaluate(Finally(EPS, A), "ab", 0)
    assert not evaluate(Finally(EPS, B), "ab", 0)
    assert evaluate(Finally(ANY, A), "ba", 0)


def test_position_range():
    with pytest.raises(PositionOutOfRange):
        evaluate(Top(), "ab", 4)
    with pytest.raises(PositionOutOfRange):
        evaluate(Top(), "ab", -1)


def test_payload_filters_infix():
    # some later b reached across an infix of a's only
    phi = parse_formula("F[a*] 'b'", "ab")
    assert evaluate(phi, "aab", 0) and evaluate(phi, "bab", 1)
    assert not evaluate(phi, "aba", 2)
    assert not evaluate(phi, "abaa", 2)


def _suite(alphabet="ab"):
    texts = ["'a'", "min", "max", "true", "F[_*] 'a'", "P[_*] 'b'", "F[()] 'b'", "P[()] min",
             "F[a*] max", "!F[_*] ('a' & P[b+] min)", "F[~(_*a_*)] ('a' | max)",
             "P[(ab)*] (min | 'b') & F[_] !'a'", "F[_*a] P[b*] 'a'", "F[_ _] F[()] max"]
    return [parse_formula(t, alphabet) for t in texts]


def test_dual_implementations_agree_exhaustively():
    for phi in _suite():
        for w in words("ab", 6):
            for i in range(len(w) + 2):
                assert evaluate(phi, w, i) == evaluate_naive(phi, w, i), (str(phi), w, i)


def test_mirror_duality():
    for phi in _suite():
        m = mirror(phi)
        for w in words("ab", 5):
            for i in range(len(w) + 2):
                assert evaluate(phi, w, i) == evaluate(m, w[::-1], len(w) + 1 - i)


@pytest.mark.parametrize("sub", ["'a'", "max", "min", "F[_*] 'b'"])
def test_modalities_with_trivial_payloads(sub):
    psi = parse_formula(sub, "ab")
    for w in words("ab", 6):
        for i in range(len(w) + 2):
            # F[()] is next
            nxt = i + 1 <= len(w) + 1 and evaluate(psi, w, i + 1)
            assert evaluate(Finally(EPS, psi), w, i) == nxt
            # F[_*] is the classic eventually
            later = any(evaluate(psi, w, j) for j in range(i + 1, len(w) + 2))
            assert evaluate(Finally(ANY, psi), w, i) == later
            earlier = any(evaluate(psi, w, j) for j in range(0, i))
            assert evaluate(Previously(ANY, psi), w, i) == earlier


formula_texts = st.recursive(
    st.sampled_from(["'a'", "'b'", "min", "max", "true", "false"]),
    lambda inner: st.one_of(
        inner.map(lambda p: f"!{p}"),
        st.tuples(inner, inner).map(lambda p: f"({p[0]} & {p[1]})"),
        st.tuples(inner, inner).map(lambda p: f"({p[0]} | {p[1]})"),
        st.tuples(st.sampled_from(["_*", "()", "a*", "_b", "~(_*b)", "(ab)*"]), inner)
        .map(lambda p: f"F[{p[0]}] {p[1]}"),
        st.tuples(st.sampled_from(["_*", "()", "b+", "a_*"]), inner).map(lambda p: f"P[{p[0]}] {p[1]}"),
    ),
    max_leaves=6,
)


@settings(max_examples=150, deadline=None)
@given(formula_texts, st.text("ab", max_size=7), st.data())
def test_random_dual_agreement(text, w, data):
    phi = parse_formula(text, "ab")
    i = data.draw(st.integers(0, len(w) + 1))
    assert evaluate(phi, w, i) == evaluate_naive(phi, w, i)


# ---------------------------------------------------------------- sampling

def test_sample_examples():
    assert l_min_sample(Top(), "ab", 2) == list(words("ab", 2))
    assert l_min_sample(Finally(EPS, Max()), "ab", 2) == [""]
    assert l_max_sample(Previously(EPS, Min()), "ab", 2) == [""]


CURATED = [
    ("F[_*] 'a'", "_*a_*"),
    ("F[()] 'a'", "a_*"),
    ("F[_*] ('a' & F[()] max)", "_*a"),
    ("!F[_*] 'a'", "b*"),
    ("F[a*] max", "a*"),
    ("F[_*] ('a' & F[_*] 'b')", "_*a_*b_*"),
    ("F[(ab)*] max", "(ab)*"),
]


@pytest.mark.parametrize("formula,regex", CURATED)
def test_sample_matches_regex(formula, regex):
    dfa = regex_to_dfa(regex, "ab")
    expected = [w for w in words("ab", 8) if dfa.accepts(w)]
    assert l_min_sample(parse_formula(formula, "ab"), "ab", 8) == expected


def test_mirror_sample_at_max():
    phi = parse_formula("F[()] 'a'", "ab")
    ends = regex_to_dfa("_*a", "ab")
    assert l_max_sample(mirror(phi), "ab", 6) == [w for w in words("ab", 6) if ends.accepts(w)]


def test_sample_limit():
    with pytest.raises(SampleLimit):
        l_min_sample(Top(), "ab", 99)


def test_cache_is_per_word():
    phi = parse_formula("F[_*] 'a'", "ab")
    rng = random.Random(0)
    for _ in range(20):
        w = "".join(rng.choice("ab") for _ in range(5))
        assert evaluate(phi, w, 0, {}) == ("a" in w)
