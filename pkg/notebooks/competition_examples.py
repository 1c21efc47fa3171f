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
# # Competing prefix codes
#
# Small worked cases: two Huffman codes that disagree, a non-transitive
# cycle of codes, and the two extremal families.

# %%
from fractions import Fraction as F

from compadv import (advantage, compete, expected_length, family_one_third,
                     family_sf_gap, fixture_four_codes, fixture_two_huffman,
                     huffman_profiles, is_competitively_optimal)
from compadv.verdict import Method

# %% [markdown]
# ## Two Huffman codes for the same source
#
# Both length profiles have expected length 2, but only the balanced one
# survives every challenger.

# %%
s = fixture_two_huffman()
for p in sorted(huffman_profiles(s)):
    v = is_competitively_optimal(s, p, Method.BRUTE_FORCE)
    print(p, expected_length(s, p), v.status.value, v.certificate)

# %% [markdown]
# ## A dominance cycle
#
# Each code beats the next one by exactly 1/9, so "beats" is not transitive.

# %%
s, codes = fixture_four_codes()
for a, b in (("H1", "H2"), ("C1", "H1"), ("H2", "C1")):
    r = compete(s, codes[a], codes[b])
    print(f"{a} vs {b}: wins {sorted(r.wins)} losses {sorted(r.losses)} advantage {r.advantage}")

# %% [markdown]
# ## Approaching one third
#
# The challenger's advantage over Huffman climbs toward 1/3 while its
# expected length approaches Huffman's.

# %%
for k in range(1, 6):
    eps = F(1, 3 * 10 ** k)
    f = family_one_third(6, eps)
    d = advantage(f.source, f.challenger_profile, f.huffman_profile)
    gap = expected_length(f.source, f.challenger_profile) - expected_length(f.source, f.huffman_profile)
    print(f"eps={eps}: advantage {float(d):.6f}  length gap {float(gap):.2e}")

# %% [markdown]
# ## Huffman against Shannon-Fano
#
# A near-dyadic source on which Huffman wins almost every symbol.

# %%
for n in (3, 6, 9, 12):
    f = family_sf_gap(n, F(1, 2 * 4 ** n))
    d = advantage(f.source, f.challenger_profile, f.reference_profile)
    print(n, float(d), float(1 - F(2) ** (2 - n)))
