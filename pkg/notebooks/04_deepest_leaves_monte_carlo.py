"""
How often does a random plane tree have exactly k deepest leaves?

Exact fractions from the tree DP are compared with a seeded simulation.
"""

# %%
from ulis.sampler import estimate_ank
from ulis.trees import ratio_report

rows = ratio_report(100)
for r in rows:
    if r.n in (5, 10, 25, 50, 100):
        print(f"n={r.n:<4} exact unique-deepest fraction {r.value:.5f}")

# %% Simulation at a size the DP also reaches, then one beyond it.
for n in (100, 400):
    rep = estimate_ank(n, k_max=5, trials=100_000, seed=7)
    cells = "  ".join(f"k={k}: {e:.4f}+-{s:.4f}" for k, (e, s) in enumerate(zip(rep.estimates, rep.stderr), 1))
    print(f"n={n}  {cells}")
print("geometric reference:", [2.0 ** -k for k in range(1, 6)])
