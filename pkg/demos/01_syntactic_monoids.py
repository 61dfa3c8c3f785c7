r"""
Syntactic monoids
=================

From a regular expression to its minimal automaton and its syntactic monoid,
then a look at idempotents, omega powers and the Green preorders.
"""

# %%
# The language (ab)* over {a, b}. Its minimal DFA has a sink, so three states.
import numpy as np

from tlorbits import language_from_regex, regex_to_dfa
from tlorbits.monoid import check_da

dfa = regex_to_dfa("(ab)*", "ab")
print("states:", dfa.states, "accepting:", sorted(dfa.accepting))
print("delta:", dfa.delta)

# %%
# The transition monoid of the minimal DFA is the syntactic monoid. Element 0
# is the identity; the table is indexed [left, right].
lang = language_from_regex("(ab)*", "ab")
M, alpha = lang.monoid, lang.morphism
print(M.table)
names = {alpha(w): w or "1" for w in ["", "a", "b", "ab", "ba", "aa"]}
print({k: names[k] for k in sorted(names)})
print("accepting images:", sorted(names[s] for s in lang.accepting))

# %%
# Idempotents and omega powers. a*a falls to the zero, so a^omega is the zero.
print("idempotents:", [names[e] for e in M.idempotents])
print("omega:", {names[s]: names[int(w)] for s, w in enumerate(M.omega)})

# %%
# Green preorders are boolean matrices, leqJ[s, t] meaning s <=J t.
g = M.green
order = [alpha(w) for w in ["", "a", "b", "ab", "ba", "aa"]]
print(g.leqJ[np.ix_(order, order)].astype(int))
print("J-depths:", {names[s]: M.j_depth(s) for s in order})

# %%
# The monoid is not in DA, and the check says where: s = a, t = b.
w = check_da(M.full())
print("DA witness:", names[w.s], names[w.t], "->", names[w.lhs], "!=", names[w.rhs])

# %%
# Compare with "contains an a": two elements, both idempotent, comfortably in DA.
other = language_from_regex("_*a_*", "ab")
print(other.monoid.table, check_da(other.monoid.full()))
