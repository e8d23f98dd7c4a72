"""
Seeded Monte Carlo
==================

Simulate the chain and measure the distance to the exact law.
"""

# %%
from mtasep.chain import RNG_ALGORITHM, ChainSpec, simulate, stationary_exact, tv_distance

spec = ChainSpec((1, 1, 1, 1))
counts = simulate(spec, (1, 2, 3, 4), steps=10**6, seed=1)
print(RNG_ALGORITHM)
print("TV distance:", float(tv_distance(counts, stationary_exact(spec))))

# %%
# same seed, same trajectory
assert simulate(spec, (1, 2, 3, 4), 1000, 5) == simulate(spec, (1, 2, 3, 4), 1000, 5)
