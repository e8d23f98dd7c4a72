"""
Stationary distribution two ways
================================

Solve the chain exactly over the rationals and compare with MLQ counts.
"""

# %%
from mtasep.chain import balance_defects, stationary_exact, stationary_mlq, transitions

print(transitions((1, 4, 2, 3)))

# %%
exact = stationary_exact((1, 1, 2))
by_mlq = stationary_mlq((1, 1, 2))
print(exact.to_csv())
assert exact.entries == by_mlq.entries
assert balance_defects(exact) == {}

# %%
# JSON export keeps rationals exact, over the common denominator Z
print(stationary_exact((1, 1, 1, 1)).to_json(indent=1))
