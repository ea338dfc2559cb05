"""
Growth of the 231 and 321 counts next to the singularity of the closed form.
"""

# %%
import numpy as np

from ulis.enumeration import count_ulis_avoiders
from ulis.series import U231_RADICAND, find_real_root, growth_profile, solve_u231

root = find_real_root(U231_RADICAND, 0.0, 0.5, 1e-12)
print(f"root {root:.12f}  growth {1 / root:.6f}")

# %% nth roots of the 231 coefficients creep upward toward 1/root.
coeffs = solve_u231(80).integer_coefficients()
prof = np.array(growth_profile(list(enumerate(coeffs))))
print(prof[[9, 19, 39, 79]])

# %% Ratios of consecutive terms converge faster than nth roots.
ratios = np.array([coeffs[n + 1] / coeffs[n] for n in range(60, 80)])
print(ratios[-5:], "vs", 1 / root)

# %% The 321 counts by brute force stay well below 4 on reachable n.
u321 = {n: count_ulis_avoiders((3, 2, 1), n) for n in range(12)}
for n, r in growth_profile(u321):
    print(n, u321[n], f"{r:.4f}")
