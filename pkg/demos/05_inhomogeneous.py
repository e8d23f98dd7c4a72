"""
Inhomogeneous rates
===================

Particles of class i swap at rate x_i. The closed form for the sorted word
uses v_i = 1/x_i; the exact solve shows which letter's class the rate must
belong to.
"""

# %%
from fractions import Fraction

from mtasep.chain import ChainSpec, Convention, simulate, stationary_exact
from mtasep.formulas import inhom_sorted_probability
from mtasep.words import sorted_word

m, x = (1, 1, 1), (1, 2)
print("closed form:", inhom_sorted_probability(m, x))
for conv in Convention:
    spec = ChainSpec(m, x, conv)
    print(conv.value, "exact:", stationary_exact(spec)[sorted_word(m)])

# %%
spec = ChainSpec(m, x, Convention.JUMPER_CLASS)
counts = simulate(spec, sorted_word(m), 10**6, seed=1)
print("empirical:", counts[sorted_word(m)] / (10**6 + 1))

# %%
m, x = (1, 1, 1, 1), (Fraction(1, 2), 3, 1)
print(inhom_sorted_probability(m, x), stationary_exact(ChainSpec(m, x))[sorted_word(m)])
