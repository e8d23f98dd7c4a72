"""
Multi-line queues and the labelling procedure
=============================================

Build an MLQ by hand, label it, then count the MLQs that end in each word.
"""

# %%
from mtasep.mlq import MLQ, bracket, count_all, label, mlqs_representing, partition_function, render_ascii

# a 7 x 10 MLQ of type (2,1,1,1,3,1,1); columns are 0-based here
rows = [
    [0, 7],
    [0, 1, 5],
    [0, 1, 8, 9],
    [0, 1, 2, 4, 8],
    [0, 2, 3, 4, 6, 7, 8, 9],
    [0, 1, 2, 3, 5, 6, 7, 8, 9],
    list(range(10)),
]
q = MLQ.from_columns(10, rows)
print(q.type)
print(render_ascii(q))
print()
print(render_ascii(label(q)))

# %%
# every box of a row claims the first free box weakly to its right in the
# row below; the result does not depend on how equal labels are ordered
assert label(q).labels == label(q, descending_ties=True).labels

# %%
# brackets for all permutations of 1234
counts = count_all((1, 1, 1, 1))
for w in sorted(counts):
    if w[0] == 1:
        print("".join(map(str, w)), counts[w])
print("total", sum(counts.values()), "=", partition_function((1, 1, 1, 1)))

# %%
# the five MLQs ending in 1423
for lq in mlqs_representing((1, 4, 2, 3)):
    print(render_ascii(lq))
    print()

print("[1233] =", bracket((1, 2, 3, 3)))
