r"""
Evaluating temporal formulas
============================

F[L] phi holds at i when phi holds at some later j and the letters strictly
between i and j spell a word of L. Positions run from 0 (min) to |w|+1 (max).
"""

# %%
from tlorbits.logic import evaluate, l_max_sample, l_min_sample, mirror, parse_formula, rank, truth_vector

phi = parse_formula("F[()] 'a'", "ab")          # next letter is a
psi = parse_formula("F[_*] ('a' & F[()] max)", "ab")  # last letter is a
print(phi, "| rank", rank(phi))
for w in ["ab", "ba", "aa", ""]:
    print(repr(w), evaluate(phi, w, 0), evaluate(psi, w, 0))

# %%
# Truth values at every position at once.
chi = parse_formula("P[b*] 'a'", "ab")
print(truth_vector(chi, "abba").astype(int))

# %%
# Language samples: words whose leftmost position satisfies the formula.
print(l_min_sample(phi, "ab", 3))
print(l_min_sample(parse_formula("F[(ab)*] max", "ab"), "ab", 6))

# %%
# Mirroring swaps F and P, reverses payloads, and is read from the right end.
print(l_max_sample(mirror(phi), "ab", 3))
