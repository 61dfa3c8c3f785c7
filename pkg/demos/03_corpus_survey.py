r"""
Surveying the bundled corpus
============================

The package ships curated languages with expected verdicts computed by an
independent word-enumeration pipeline. Here we recompute everything and print
a small table, then cross-check the generic TL verdict against the direct
characterizations on a batch of random languages.
"""

# %%
from tlorbits.corpus import load_corpus, random_corpus
from tlorbits.orbits import SPECIALIZED, classify, verdict_tl
from tlorbits.pairs import AT, DD, ST

entries = load_corpus()
print(f"{'id':<14} {'language':<18} {'|M|':>4}   TL st/dd/at   TL_F st  TL_P st")
for e in entries:
    lang = e.compile()
    tl = "".join("+" if verdict_tl(lang, c).result else "-" for c in (ST, DD, AT))
    st = classify(lang, ST, ["TL_F", "TL_P"])
    mark = lambda v: "in " if v.result else "out"  # noqa: E731
    print(f"{e.id:<14} {e.language:<18} {lang.monoid.size:>4}   {tl:<13} {mark(st['TL_F']):<8} {mark(st['TL_P'])}")

# %%
# How often does each pattern of (ST, DD, AT) TL verdicts occur among random languages?
from collections import Counter

pool = [e.compile() for e in random_corpus(150, seed=7)]
patterns = Counter(tuple(verdict_tl(lang, c).result for c in (ST, DD, AT)) for lang in pool)
for pattern, n in patterns.most_common():
    print(pattern, n)

# %%
# The generic orbit-based verdict against the three direct checks.
disagree = sum(verdict_tl(lang, spec).result != SPECIALIZED[name](lang).result
               for lang in pool for name, spec in (("st", ST), ("dd", DD), ("at", AT)))
print("disagreements:", disagree)
