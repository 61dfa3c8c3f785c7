r"""
Words that low-rank formulas cannot tell apart
==============================================

Given an idempotent f of the class monoid and words u, v, z mapped to f, the
words built from the block z^k u z^2k v z^k should look the same to every
formula of rank at most k whose payloads the class recognizes. We sample
such formulas and look for a counterexample.
"""

# %%
from tlorbits.pairs import canonical_morphism
from tlorbits.sampling import FormulaSampler, prop4_equivalence_test, prop4_words, prop10_equivalence_test

at = canonical_morphism("at", "ab")
print(prop4_words("ab", "ba", "ab", "", "", 1))

# %%
for k in range(3):
    r4 = prop4_equivalence_test(at, k, 400, f=3, u="ab", v="ba", z="ab", seed=k)
    r10 = prop10_equivalence_test(at, k, 400, f=3, u="ab", v="ba", z="ab", seed=k)
    print(f"k={k}: two-sided {'pass' if r4 is None else r4.formula}, "
          f"pure future {'pass' if r10 is None else r10.formula}")

# %%
# A few of the formulas that were tried.
sampler = FormulaSampler(at, seed=1)
for _ in range(4):
    print(sampler.formula(2))
