"""Command-line entry point: ``tlorbits <command> ...``.

Exit codes: 0 on success (including "out" verdicts), 1 when ``selftest``
finds a failure, 2 on malformed input, 3 when a resource cap is hit.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .automata import DEFAULT_MAX_STATES, Dfa, minimize, regex_to_dfa
from .corpus import load_corpus, selftest
from .errors import InputError, ResourceLimit
from .logic import MAX_SAMPLE_LEN, evaluate, l_max_sample, l_min_sample, parse_formula
from .orbits import DEFAULT_PROPERTIES, PROPERTIES, classify, orbits
from .pairs import ClassSpec, c_pairs
from .syntactic import DEFAULT_MAX_MONOID, syntactic_morphism

SCHEMA = 1


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--alphabet", default="ab", help="letters of the ambient alphabet (default: ab)")
    p.add_argument("--class", dest="cls", default="st", help="st, dd, at or custom:<morphism.json>")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    p.add_argument("--max-monoid", type=int, default=DEFAULT_MAX_MONOID)
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tlorbits", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", parents=[common], help="membership verdicts for a language")
    c.add_argument("language", help="regex, or path to a DFA JSON file")
    c.add_argument("--properties", default=",".join(DEFAULT_PROPERTIES),
                   help=f"comma-separated subset of {','.join(PROPERTIES)}")
    for name, text in (("monoid", "syntactic monoid, morphism and accepting set"),
                       ("pairs", "C-pairs of the syntactic morphism"),
                       ("orbits", "C-orbits of the idempotents")):
        sub.add_parser(name, parents=[common], help=text).add_argument("language")

    e = sub.add_parser("eval", parents=[common], help="evaluate a formula on a word")
    e.add_argument("formula")
    e.add_argument("word")
    e.add_argument("--at", default="min", help="min, max, or a position index")

    s = sub.add_parser("sample", parents=[common], help="short words satisfying a formula")
    s.add_argument("formula")
    s.add_argument("--maxlen", type=int, default=6)
    s.add_argument("--at", choices=("min", "max"), default="min")

    t = sub.add_parser("selftest", parents=[common], help="corpus regression and property suites")
    t.add_argument("--corpus", default=None, help="JSON-lines corpus (default: bundled)")
    t.add_argument("--random", type=int, default=40, help="extra random languages to check")
    return parser


def load_language(text: str, alphabet: str, args):
    path = Path(text)
    if text.endswith(".json") and path.is_file():
        try:
            dfa = Dfa.from_json(path.read_text())
        except ValueError as exc:
            raise InputError(f"cannot read DFA {path}: {exc}") from None
        if "".join(dfa.alphabet) != alphabet:
            raise InputError(f"DFA alphabet {''.join(dfa.alphabet)!r} differs from --alphabet {alphabet!r}")
        dfa = minimize(dfa)
    else:
        dfa = regex_to_dfa(text, alphabet, args.max_states)
    return syntactic_morphism(dfa, args.max_monoid, source=text)


def _orbit_sizes(lang, pairs) -> dict:
    return {str(e): len(o) for e, o in orbits(lang, pairs).items()}


def cmd_classify(args):
    lang = load_language(args.language, args.alphabet, args)
    spec = ClassSpec.parse(args.cls)
    props = [p.strip() for p in args.properties.split(",") if p.strip()]
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown:
        raise InputError(f"unknown properties {unknown}; choose from {list(PROPERTIES)}")
    pairs = c_pairs(lang.morphism, spec)
    verdicts = classify(lang, spec, props)
    out = {"language": args.language, "class": spec.name, "monoid_size": lang.monoid.size,
           "verdicts": {p: v.to_json() for p, v in verdicts.items()},
           "orbit_sizes": _orbit_sizes(lang, pairs)}
    lines = [f"{args.language} over {args.alphabet}, class {spec.name}, |M| = {lang.monoid.size}"]
    for p, v in verdicts.items():
        word = ("holds" if v.result else "fails") if v.sufficient_only else ("in" if v.result else "out")
        extra = f"  witness {v.witness.as_dict()}" if v.witness is not None else ""
        lines.append(f"  {p:<9} {word}{extra}")
    return out, "\n".join(lines)


def cmd_monoid(args):
    lang = load_language(args.language, args.alphabet, args)
    M = lang.monoid
    out = {"language": args.language, "monoid": M.to_json(),
           "letters": dict(lang.morphism.letter_image), "accepting": sorted(lang.accepting),
           "idempotents": list(M.idempotents)}
    text = (f"|M| = {M.size}, identity {M.identity}\n"
            f"letters   {dict(lang.morphism.letter_image)}\n"
            f"accepting {sorted(lang.accepting)}\n"
            f"idempotents {list(M.idempotents)}\n"
            + "\n".join(" ".join(f"{x:>3}" for x in row) for row in M.table.tolist()))
    return out, text


def cmd_pairs(args):
    lang = load_language(args.language, args.alphabet, args)
    spec = ClassSpec.parse(args.cls)
    pairs = c_pairs(lang.morphism, spec)
    out = {"language": args.language, **pairs.to_json(), "class": spec.name}
    return out, f"{len(pairs)} {spec.name}-pairs: " + " ".join(f"({s},{t})" for s, t in pairs.pairs())


def cmd_orbits(args):
    lang = load_language(args.language, args.alphabet, args)
    spec = ClassSpec.parse(args.cls)
    orbs = orbits(lang, c_pairs(lang.morphism, spec))
    out = {"language": args.language, "class": spec.name,
           "orbits": {str(e): sorted(o.members.elements) for e, o in orbs.items()}}
    return out, "\n".join(f"e={e}: {sorted(o.members.elements)}" for e, o in orbs.items())


def _position(at: str, word: str) -> int:
    if at == "min":
        return 0
    if at == "max":
        return len(word) + 1
    try:
        return int(at)
    except ValueError:
        raise InputError(f"--at expects min, max or an integer, not {at!r}") from None


def cmd_eval(args):
    phi = parse_formula(args.formula, args.alphabet, args.max_states)
    i = _position(args.at, args.word)
    value = evaluate(phi, args.word, i)
    out = {"formula": args.formula, "word": args.word, "position": i, "value": value}
    return out, str(value).lower()


def cmd_sample(args):
    if args.maxlen > MAX_SAMPLE_LEN:
        raise ResourceLimit(f"--maxlen {args.maxlen} exceeds {MAX_SAMPLE_LEN}")
    phi = parse_formula(args.formula, args.alphabet, args.max_states)
    sample = (l_max_sample if args.at == "max" else l_min_sample)(phi, args.alphabet, args.maxlen)
    out = {"formula": args.formula, "at": args.at, "maxlen": args.maxlen, "words": sample}
    return out, "\n".join(w if w else "(empty)" for w in sample)


def cmd_selftest(args):
    entries = load_corpus(args.corpus) if args.corpus else load_corpus()
    report = selftest(entries, seed=args.seed, random_languages=args.random)
    failed = sum(len(r["failures"]) for r in report.values())
    out = {"corpus_entries": len(entries), "suites": report, "failures": failed}
    lines = []
    for name, r in report.items():
        status = "ok" if not r["failures"] else "FAIL"
        lines.append(f"{name:<24} {r['checked']:>6} checked  {status}")
        lines += [f"    {f}" for f in r["failures"]]
    lines.append(f"{len(entries)} corpus entries, {failed} failures")
    return out, "\n".join(lines), 1 if failed else 0


COMMANDS = {"classify": cmd_classify, "monoid": cmd_monoid, "pairs": cmd_pairs, "orbits": cmd_orbits,
            "eval": cmd_eval, "sample": cmd_sample, "selftest": cmd_selftest}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimit as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    out, text, code = result if len(result) == 3 else (*result, 0)
    if args.json:
        print(json.dumps({"schema": SCHEMA, **out}, sort_keys=True))
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
