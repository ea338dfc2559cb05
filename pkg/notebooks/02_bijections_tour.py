"""
The maps to trees, paths and tableaux, applied to a few small permutations.
"""

# %%
from ulis.bijections import ck_f, ck_f_inverse, max_depth_leaf_count, phi, psi, rs_insert, unique_max_peak
from ulis.lis import rank_profile

p = (2, 3, 1, 4)
print("permutation", p, "LIS count", rank_profile(p).lis_count)

# %% psi sends a 132-avoider to a plane tree; deepest leaves count the LIS.
t = psi(p)
print("tree", t, "height/deepest leaves", max_depth_leaf_count(t))

# %% phi sends it to a Dyck path; a ULIS shows up as a single highest peak.
d = phi(p)
print("path", d, "unique top peak at height", unique_max_peak(d))
q = (3, 4, 1, 2)
print("two LIS:", phi(q), unique_max_peak(phi(q)))

# %% The 321 side: f adds one entry and keeps the permutation 321-free.
r = (3, 5, 1, 2, 4, 7, 8, 6)
image = ck_f(r)
print(r, "->", image, "->", ck_f_inverse(image))

# %% Row insertion, printed as P then Q.
P, Q = rs_insert((2, 1, 4, 3))
print(P, Q, sep="\n--\n")
