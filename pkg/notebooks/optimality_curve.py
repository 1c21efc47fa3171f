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
# # How often is Huffman beaten?
#
# Fraction of flat Dirichlet sources whose Huffman code is flagged as not
# competitively optimal, as the alphabet grows. Three detectors:
#
# * `leaf` (root scope): the leaf test on the root's two children only.
#   This is the curve used by the default simulation.
# * `leaf-all`: the same test over every sibling pair.
# * `subset`: the exact subset search, feasible up to 16 symbols.

# %%
import time

import matplotlib.pyplot as plt

from compadv.kraft import LeafScope
from compadv.simulate import ExperimentConfig, run_experiment
from compadv.verdict import Method

SAMPLES = 20000
SEED = 2024

# %%
runs = {}
t0 = time.perf_counter()
runs["leaf"] = run_experiment(ExperimentConfig(2, 34, SAMPLES, SEED))
runs["leaf-all"] = run_experiment(ExperimentConfig(2, 34, SAMPLES, SEED, leaf_scope=LeafScope.ALL))
runs["subset"] = run_experiment(ExperimentConfig(2, 9, 2000, SEED, Method.SUBSET_EXACT))
print(f"{time.perf_counter() - t0:.1f} s")

# %%
for n in (4, 5, 7, 10, 15, 20):
    row = [f"{n:>3}"]
    for name, r in runs.items():
        row.append(f"{name}={r.row(n).fraction:.4f}" if n <= r.config.n_max else "")
    print("  ".join(row))

# %%
fig, ax = plt.subplots(figsize=(6, 4))
for name, r in runs.items():
    ax.plot([x.n for x in r.rows], [x.fraction for x in r.rows], marker=".", label=name)
ax.set_xlabel("alphabet size n")
ax.set_ylabel("fraction not competitively optimal")
ax.legend()
fig.tight_layout()
fig.savefig("optimality_curve.png", dpi=120)
