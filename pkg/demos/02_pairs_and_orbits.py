r"""
Pairs, orbits and verdicts
==========================

A class of languages enters through a morphism eta. Two monoid elements form
a pair when some words with equal eta-image reach them. Each idempotent e
then carries an orbit {ete : (e, t) a pair}, and membership questions become
equations checked orbit by orbit.
"""

# %%
import numpy as np

from tlorbits import AT, DD, ST, c_pairs, classify, language_from_regex, orbits
from tlorbits.pairs import canonical_morphism

lang = language_from_regex("(ab)*", "ab")
alpha = lang.morphism
names = {alpha(w): w or "1" for w in ["", "a", "b", "ab", "ba", "aa"]}

# %%
# The three built-in classes and the monoids behind them.
for spec in (ST, DD, AT):
    eta = canonical_morphism(spec, "ab")
    print(spec.name, "codomain size", eta.codomain.size, "letters", eta.letter_image)

# %%
# Pair matrices shrink as the class gets finer: ST relates everything, DD
# keeps the empty word apart, AT also separates by alphabet content.
for spec in (ST, DD, AT):
    P = c_pairs(alpha, spec)
    print(spec.name, len(P), "pairs")
    print(P.matrix.astype(int))

# %%
# Orbits per idempotent.
for spec in (ST, DD):
    orbs = orbits(lang, c_pairs(alpha, spec))
    print(spec.name, {names[e]: sorted(names[s] for s in o.members) for e, o in orbs.items()})

# %%
# With ST the orbit of 1 is the whole monoid, which is not in DA, so (ab)* is
# out. With DD the orbit of 1 collapses to {1} and every other orbit is tiny.
for spec in (ST, DD, AT):
    verdicts = classify(lang, spec)
    print(spec.name, {p: v.result for p, v in verdicts.items()})

# %%
# A witness is reported as indices into the monoid.
print(classify(lang, ST)["TL"].to_json())
print(np.array([names[s] for s in range(6)]))
