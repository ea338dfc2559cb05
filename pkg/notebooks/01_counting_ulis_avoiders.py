"""
Counting pattern avoiders with a unique longest increasing subsequence.

Run top to bottom with ``python3 notebooks/01_counting_ulis_avoiders.py``.
"""

# %%
from ulis.enumeration import count_avoiders, count_ulis_avoiders
from ulis.series import solve_u231
from ulis.trees import catalan, u132_fast

# %% Every length-3 pattern is avoided by a Catalan number of permutations.
for q in [(1, 2, 3), (1, 3, 2), (2, 3, 1), (3, 2, 1)]:
    print(q, [count_avoiders(q, n) for n in range(8)])
print("catalan", [catalan(n) for n in range(8)])

# %% Restricting to a unique LIS splits the four patterns apart.
table = {q: [count_ulis_avoiders(q, n) for n in range(11)]
         for q in [(1, 2, 3), (1, 3, 2), (2, 3, 1), (3, 2, 1)]}
for q, row in table.items():
    print("".join(map(str, q)), row)

# %% The 231 column agrees with the series solution, and 132 with the tree count.
u = solve_u231(10)
assert [u[n] for n in range(11)] == table[(2, 3, 1)]
assert [u132_fast(n) for n in range(11)] == table[(1, 3, 2)]
print("231 and 132 columns confirmed by independent routes")

# %% Longer series terms cost nothing once the equation is solved.
print(solve_u231(30).integer_coefficients()[20:])
