"""
Closed forms at sorted words
============================

The bracket of 1^m1 2^m2 ... r^mr is a product of binomials, so its
stationary probability only depends on the multiset of the m_i.
"""

# %%
from itertools import permutations

from mtasep.formulas import chained_sorted_bracket, sorted_bracket_formula
from mtasep.mlq import bracket, partition_function
from mtasep.words import sorted_word

for n in range(2, 8):
    m = (1,) * n
    print(n, sorted_bracket_formula(m), partition_function(m), bracket(sorted_word(m)))

# %%
m = (2, 1, 3)
for p in sorted(set(permutations(m))):
    print(p, sorted_bracket_formula(p), "/", partition_function(p))

# %%
# merging the two largest letters one step at a time gives the same product
assert chained_sorted_bracket((2, 1, 3, 1)) == sorted_bracket_formula((2, 1, 3, 1))

# %%
# every identity in one go
from mtasep.verify import run_all

for res in run_all(nmax=5):
    print(res.line())
