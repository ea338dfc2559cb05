"""Longest increasing subsequences: ranks, exact counts and the ULIS predicate."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

__all__ = ["RankProfile", "rank_profile", "lis_length", "lis_count", "has_ulis", "rank_classes"]


@dataclass(frozen=True)
class RankProfile:
    """Per-position ranks plus the length and number of longest increasing subsequences.

    The rank of an entry is the length of the longest increasing subsequence
    ending at it (the entry itself included). ``ends[i]`` is the number of
    increasing subsequences of length ``ranks[i]`` that end at position i+1.
    """

    ranks: tuple[int, ...]
    ends: tuple[int, ...]
    lis_length: int
    lis_count: int


def rank_profile(p: Sequence[int]) -> RankProfile:
    """O(n^2) dynamic program with exact integer counts.

    >>> rank_profile([2, 4, 6, 1, 3, 5]).lis_count
    4
    """
    n = len(p)
    ranks = [0] * n
    ends = [0] * n
    for j in range(n):
        v = p[j]
        best, ways = 0, 1
        for i in range(j):
            if p[i] < v:
                r = ranks[i]
                if r > best:
                    best, ways = r, ends[i]
                elif r == best:
                    ways += ends[i]
        ranks[j] = best + 1
        ends[j] = ways
    length = max(ranks, default=0)
    # the empty permutation has exactly one (empty) longest increasing subsequence
    count = sum(c for r, c in zip(ranks, ends) if r == length) if n else 1
    return RankProfile(tuple(ranks), tuple(ends), length, count)


def lis_length(p: Sequence[int]) -> int:
    return rank_profile(p).lis_length


def lis_count(p: Sequence[int]) -> int:
    return rank_profile(p).lis_count


def has_ulis(p: Sequence[int]) -> bool:
    """True iff ``p`` has exactly one longest increasing subsequence (true for the empty permutation)."""
    return rank_profile(p).lis_count == 1


def rank_classes(p: Sequence[int]) -> list[list[int]]:
    """Positions (1-based) grouped by rank; entry r-1 lists rank r left to right.

    Within a class the entries decrease, so in a 321-avoider each class has
    at most two positions.
    """
    prof = rank_profile(p)
    classes: list[list[int]] = [[] for _ in range(prof.lis_length)]
    for i, r in enumerate(prof.ranks, start=1):
        classes[r - 1].append(i)
    return classes
