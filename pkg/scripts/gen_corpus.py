"""Regenerate the bundled corpus expectations by brute force.

Membership is answered by Python's ``re`` module whenever the expression
avoids ``~`` and ``&``; the compiled DFA is consulted only to choose the
finite context sets. The syntactic monoid is the context quotient of short
words, pairs come from enumerating words with equal class images, and every
verdict is a plain equation scan (see ``tlorbits.bruteforce``).

    python scripts/gen_corpus.py > src/tlorbits/data/corpus.jsonl
"""
import json
import re
import sys

from tlorbits import regex as rx
from tlorbits.automata import regex_to_dfa
from tlorbits.bruteforce import IncompleteQuotient, classify_by_enumeration, dfa_quotient

CURATED = [
    ("any-a", "_*a_*", "ab"),
    ("ab-star", "(ab)*", "ab"),
    ("even-a", "(aa)*", "a"),
    ("starts-a", "a_*", "ab"),
    ("ends-a", "_*a", "ab"),
    ("all", "_*", "ab"),
    ("all-3", "_*", "abc"),
    ("ab-plus", "(ab)+", "ab"),
    ("a-then-b", "a*b*", "ab"),
    ("factor-aa", "_*aa_*", "ab"),
    ("factor-ab", "_*ab_*", "ab"),
    ("ab-or-b-star", "(ab|b)*", "ab"),
    ("one-b", "a*ba*", "ab"),
    ("even-b", "(a*ba*b)*a*", "ab"),
    ("subword-ab", "_*a_*b_*", "ab"),
    ("a-dots-b", "a_*b", "ab"),
    ("no-aa", "~(_*aa_*)", "ab"),
    ("a-gap-b", "_*a_b_*", "ab"),
    ("length-2", "__", "ab"),
    ("alternating", "(ab)*|(ba)*", "ab"),
    ("a-plus", "a+", "ab"),
    ("ends-ab", "_*ab", "ab"),
    ("between-c", "_*ac*b_*", "abc"),
    ("between-ab", "_*a(a|b)*c_*", "abc"),
    ("c-separated", "(a|b)*c(a|b)*", "abc"),
    ("abc-star", "(abc)*", "abc"),
    ("b-before-c", "_*ab*c_*", "abc"),
    ("aca-factor", "_*aca_*", "abc"),
    ("a-only-c-a", "_*ac*a_*", "abc"),
    ("ab-blocks-c", "(c*ac*b)*", "abc"),
    ("a-even-b-a", "_*a(bb)*a_*", "ab"),
]

CLASSES = ("st", "dd", "at")


def python_regex(node):
    """Translation into ``re`` syntax, or ``None`` when complement or intersection occur."""
    if isinstance(node, rx.Sym):
        return re.escape(node.letter)
    if isinstance(node, rx.Epsilon):
        return ""
    if isinstance(node, rx.EmptySet):
        return "(?!)"
    if isinstance(node, (rx.Star, rx.Plus)):
        inner = python_regex(node.inner)
        if inner is None:
            return None
        return f"(?:{inner})" + ("*" if isinstance(node, rx.Star) else "+")
    if isinstance(node, (rx.Union, rx.Concat)):
        parts = [python_regex(p) for p in node.parts]
        if any(p is None for p in parts):
            return None
        sep = "|" if isinstance(node, rx.Union) else ""
        return "(?:" + sep.join(f"(?:{p})" for p in parts) + ")"
    return None


def expectations(text, alphabet):
    dfa = regex_to_dfa(text, alphabet)
    pattern = python_regex(rx.parse_regex(text, alphabet))
    accepts = dfa.accepts if pattern is None else re.compile(pattern).fullmatch
    member = (lambda w: accepts(w) is not None) if pattern is not None else accepts
    word_len = 6 if len(alphabet) <= 2 else 5
    while True:
        try:
            q = dfa_quotient(dfa, word_len, member)
            break
        except IncompleteQuotient:
            word_len += 1
    pair_len = 8 if len(alphabet) <= 2 else 6
    return q.size, {c: classify_by_enumeration(q, alphabet, c, pair_len) for c in CLASSES}


def main(out=sys.stdout):
    for ident, text, alphabet in CURATED:
        size, expected = expectations(text, alphabet)
        entry = {"id": ident, "language": text, "alphabet": list(alphabet),
                 "monoid_size": size, "expected": expected}
        out.write(json.dumps(entry, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
