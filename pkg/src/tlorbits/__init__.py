"""Membership in unary temporal logic classes via orbits of the syntactic monoid.

Typical use::

    from tlorbits import language_from_regex, classify, DD
    lang = language_from_regex("(ab)*", "ab")
    classify(lang, DD)["TL"].result   # True
"""
from .automata import Dfa, minimize, regex_to_dfa
from .errors import InputError, ResourceLimit, TLOrbitsError
from .logic import evaluate, l_max_sample, l_min_sample, parse_formula, rank
from .monoid import FiniteMonoid, SubMonoid, check_da, check_j_trivial, check_l_trivial, check_r_trivial
from .orbits import PROPERTIES, Verdict, classify, orbit, orbits, verdict_tl
from .pairs import AT, DD, ST, ClassSpec, PairSet, c_pairs, eta_pairs
from .regex import parse_regex
from .syntactic import Morphism, RecognizedLanguage, language_from_regex, syntactic_morphism

__version__ = "0.1.0"

__all__ = [
    "AT", "DD", "ST", "ClassSpec", "Dfa", "FiniteMonoid", "InputError", "Morphism", "PROPERTIES",
    "PairSet", "RecognizedLanguage", "ResourceLimit", "SubMonoid", "TLOrbitsError", "Verdict",
    "c_pairs", "check_da", "check_j_trivial", "check_l_trivial", "check_r_trivial", "classify",
    "eta_pairs", "evaluate", "l_max_sample", "l_min_sample", "language_from_regex", "minimize",
    "orbit", "orbits", "parse_formula", "parse_regex", "rank", "regex_to_dfa", "syntactic_morphism",
    "verdict_tl",
]
