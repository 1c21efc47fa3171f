# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#   kernelspec:
#     display_name: Python 3
#     language: python
#     name: python3
# ---

# %% [markdown]
# # Four symbols: where Huffman loses
#
# For sorted sources p1 >= p2 >= p3 >= p4 the Huffman code fails to be
# competitively optimal exactly inside a hexahedron of the sorted simplex.
# Its volume is a third of the cell.

# %%
from fractions import Fraction as F

from compadv import make_source
from compadv.families import classify_n4, n4_nonoptimal_fraction, n4_volumes
from compadv.simulate import hexahedron_flags, leaf_flags, sample_batch

# %%
v = n4_volumes()
print({k: str(x) for k, x in v.items()})
print("fraction:", n4_nonoptimal_fraction())

# %% [markdown]
# A few sources on each side of the boundary p2 + p3 = p1.

# %%
for probs in ([F(2, 5), F(3, 10), F(1, 5), F(1, 10)],
              [F(7, 10), F(1, 10), F(1, 10), F(1, 10)],
              [F(1, 3), F(1, 3), F(1, 6), F(1, 6)]):
    print([str(x) for x in probs], classify_n4(make_source(probs)).value)

# %% [markdown]
# ## Monte Carlo check
#
# Flat Dirichlet samples, classified both by the hexahedron and by the
# sufficient leaf test on the Huffman tree.

# %%
p = sample_batch(2024, 4, 0, 200000)
hexa = hexahedron_flags(p)
leaf = leaf_flags(p)
print("hexahedron:", hexa.mean(), " leaf:", leaf.mean(), " disagree:", (hexa != leaf).sum())
