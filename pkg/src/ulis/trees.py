"""
Exact counting of plane trees with a unique deepest leaf.

Under the plane-tree bijection, the longest increasing subsequences of a
132-avoider correspond to the leaves of its tree at maximum depth, so u_n(132)
equals the number of trees on n+1 vertices with exactly one deepest leaf.
The dynamic program below is polynomial, which reaches n in the hundreds.

Heights are measured in edges; a single vertex has height 0 and is its own
deepest leaf.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "catalan", "binomial", "TreeCountDP", "tree_count_dp",
    "count_unique_deepest_leaf_trees", "u132_fast", "RatioRow", "ratio_report", "ratio_flags",
]

DEFAULT_MAX_VERTICES = 200


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan needs n >= 0, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def binomial(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"binomial needs 0 <= k <= n, got n={n}, k={k}")
    return math.comb(n, k)


class TreeCountDP:
    """Memoized tables for trees on at most ``max_vertices`` vertices.

    ``forests(m, h)``: ordered forests with m vertices in total, every tree of height <= h.
    ``trees(n, h)``: trees with n vertices and height <= h.
    ``unique(n, h)``: trees with n vertices, height exactly h and one leaf at depth h.
    """

    def __init__(self, max_vertices: int = DEFAULT_MAX_VERTICES):
        if max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")
        self.max_vertices = N = max_vertices
        # F[h+1][m] so that h = -1 has a row
        F = [[1] + [0] * N]
        for h in range(0, N):
            t = [0] + [F[h][s - 1] for s in range(1, N + 1)]  # t(s, h) = F(s-1, h-1)
            row = [1] + [0] * N
            for m in range(1, N + 1):
                row[m] = sum(t[s] * row[m - s] for s in range(1, m + 1))
            F.append(row)
        self._F = F
        # G(m, h) = sum_a F(a, h) F(m-a, h): the forests left and right of the tall subtree
        self._G = [
            [sum(r[a] * r[m - a] for a in range(m + 1)) for m in range(N + 1)] for r in F
        ]
        W = [[0] * N for _ in range(N + 1)]
        W[1][0] = 1
        for h in range(1, N):
            g = self._G[h - 1]  # side forests of height <= h-2
            for n in range(h + 1, N + 1):
                W[n][h] = sum(W[k][h - 1] * g[n - 1 - k] for k in range(h, n))
        self._W = W

    def _check(self, n: int) -> None:
        if not 0 <= n <= self.max_vertices:
            raise ValueError(f"size {n} outside the table (max {self.max_vertices})")

    def forests(self, m: int, h: int) -> int:
        self._check(m)
        if h < 0:
            return 1 if m == 0 else 0
        return self._F[min(h, self.max_vertices - 1) + 1][m]

    def trees(self, n: int, h: int) -> int:
        if n < 1:
            return 0
        return self.forests(n - 1, h - 1)

    def side_forests(self, m: int, h: int) -> int:
        self._check(m)
        if h < 0:
            return 1 if m == 0 else 0
        return self._G[min(h, self.max_vertices - 1) + 1][m]

    def unique(self, n: int, h: int) -> int:
        self._check(n)
        if n < 1 or not 0 <= h < self.max_vertices:
            return 0
        return self._W[n][h]

    def unique_total(self, n: int) -> int:
        self._check(n)
        if n < 1:
            raise ValueError("a tree has at least one vertex")
        return sum(self._W[n])


@lru_cache(maxsize=8)
def tree_count_dp(max_vertices: int = DEFAULT_MAX_VERTICES) -> TreeCountDP:
    return TreeCountDP(max_vertices)


def _table_for(n: int) -> TreeCountDP:
    size = DEFAULT_MAX_VERTICES
    while size < n:
        size *= 2
    return tree_count_dp(size)


def count_unique_deepest_leaf_trees(n: int) -> int:
    """Plane trees on ``n`` vertices with exactly one leaf at maximum depth."""
    if n < 1:
        raise ValueError(f"a tree has at least one vertex, got n={n}")
    return _table_for(n).unique_total(n)


def u132_fast(n: int) -> int:
    """u_n(132) through the tree count on n+1 vertices."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return count_unique_deepest_leaf_trees(n + 1)


@dataclass(frozen=True)
class RatioRow:
    n: int
    ratio: Fraction
    value: float

    def __str__(self):
        return f"{self.n} {self.ratio} {self.value:.15g}"


def ratio_report(max_n: int) -> list[RatioRow]:
    """u_n(132)/C_n for n = 1..max_n, exact and as a float."""
    if max_n < 1:
        raise ValueError("max_n must be at least 1")
    rows = []
    for n in range(1, max_n + 1):
        r = Fraction(u132_fast(n), catalan(n))
        rows.append(RatioRow(n, r, float(r)))
    return rows


def ratio_flags(rows: list[RatioRow]) -> list[tuple[int, str]]:
    """Rows with n >= 3 where the ratio fails to decrease or sits at or below 1/2.

    These are observations about the computed range only; an empty list is
    evidence for, not a proof of, monotonic decrease toward 1/2.
    """
    flags = []
    for prev, row in zip(rows, rows[1:]):
        if row.n >= 3 and prev.n >= 3 and row.ratio >= prev.ratio:
            flags.append((row.n, "not decreasing"))
    for row in rows:
        if row.n >= 3 and row.ratio <= Fraction(1, 2):
            flags.append((row.n, "at or below 1/2"))
    return sorted(flags)
