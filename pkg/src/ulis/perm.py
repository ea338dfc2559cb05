"""
Permutations in one-line notation, pattern containment, and the structural
decompositions (direct sums, skew blocks) the rest of the package is built on.

Positions and values are 1-based everywhere they are reported.

>>> p = make_permutation([3, 7, 5, 2, 4, 1, 6])
>>> contains_pattern(p, [2, 4, 1, 3])
True
>>> str(reverse_complement([2, 3, 1, 4]))
'1,4,2,3'
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

__all__ = [
    "InvalidPermutation", "PatternOccurrence", "Permutation",
    "make_permutation", "parse_permutation", "standardize",
    "find_pattern", "contains_pattern", "avoids", "require_avoids",
    "inverse", "reverse_complement", "direct_sum", "skew_sum",
    "is_sum_indecomposable", "sum_blocks", "skew_blocks", "is_skew_indecomposable",
    "is_involution", "fixed_points", "left_to_right_maxima", "right_to_left_minima",
]


class InvalidPermutation(ValueError):
    """Raised when a sequence is not a rearrangement of 1..n."""


class PatternOccurrence(ValueError):
    """Raised when an input contains a pattern it was required to avoid.

    ``positions`` holds the 1-based positions of one occurrence.
    """

    def __init__(self, perm, pattern, positions):
        self.perm = perm
        self.pattern = pattern
        self.positions = positions
        entries = ",".join(str(perm[i - 1]) for i in positions)
        super().__init__(
            f"{perm} contains {Permutation(pattern)} at positions "
            f"{list(positions)} (entries {entries})"
        )


class Permutation(tuple):
    """An immutable permutation of 1..n in one-line notation.

    A plain tuple subclass, so it hashes, compares and slices like one. Use
    :func:`make_permutation` to build one from untrusted input.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        if isinstance(values, Permutation):
            return values
        return _validated(cls, tuple(values))

    @property
    def n(self) -> int:
        return len(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({list(self)})"


def _validated(cls, values: tuple) -> Permutation:
    n = len(values)
    seen = [False] * (n + 1)
    for index, v in enumerate(values, start=1):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidPermutation(f"index {index}: non-integer value {v!r}")
        if v < 1:
            raise InvalidPermutation(f"index {index}: non-positive value {v}")
        if v > n:
            raise InvalidPermutation(f"index {index}: value {v} out of range 1..{n}")
        if seen[v]:
            raise InvalidPermutation(f"index {index}: duplicate value {v}")
        seen[v] = True
    return tuple.__new__(cls, values)


def _trusted(values) -> Permutation:
    # skips validation; only for values produced by this package
    return tuple.__new__(Permutation, values)


def make_permutation(values: Iterable[int]) -> Permutation:
    """Validate ``values`` as a rearrangement of 1..n and wrap it.

    >>> make_permutation([2, 2, 1])
    Traceback (most recent call last):
    ...
    ulis.perm.InvalidPermutation: index 2: duplicate value 2
    """
    return Permutation(values)


def parse_permutation(text: str) -> Permutation:
    """Parse comma-separated one-line notation such as ``"3,5,1,2,4"``."""
    text = text.strip()
    if not text:
        return _trusted(())
    try:
        values = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InvalidPermutation(f"cannot parse {text!r} as one-line notation") from exc
    return Permutation(values)


def standardize(values: Sequence[int]) -> Permutation:
    """Order-isomorphic permutation of distinct integers (e.g. ``[4,3,5] -> 2,1,3``)."""
    order = sorted(range(len(values)), key=values.__getitem__)
    out = [0] * len(values)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return _trusted(out)


def find_pattern(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...] | None:
    """Positions (1-based) of the leftmost occurrence of ``q`` in ``p``, or None.

    Pruned backtracking: an index is accepted only when it is order-consistent
    with every entry already chosen, and only if enough entries remain.
    """
    k = len(q)
    if k == 0:
        raise ValueError("pattern must have length >= 1")
    n = len(p)
    chosen: list[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k:
            return True
        qd = q[depth]
        for i in range(start, n - (k - depth) + 1):
            v = p[i]
            if all((p[j] < v) == (q[t] < qd) for t, j in enumerate(chosen)):
                chosen.append(i)
                if extend(i + 1):
                    return True
                chosen.pop()
        return False

    if k <= n and extend(0):
        return tuple(i + 1 for i in chosen)
    return None


def contains_pattern(p: Sequence[int], q: Sequence[int]) -> bool:
    return find_pattern(p, q) is not None


def avoids(p: Sequence[int], q: Sequence[int]) -> bool:
    return find_pattern(p, q) is None


def require_avoids(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Return ``p`` as a Permutation, raising :class:`PatternOccurrence` if it contains ``q``."""
    p = Permutation(p)
    hit = find_pattern(p, q)
    if hit is not None:
        raise PatternOccurrence(p, q, hit)
    return p


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, start=1):
        out[v - 1] = i
    return _trusted(out)


def reverse_complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return _trusted(n + 1 - v for v in reversed(p))


def direct_sum(p: Sequence[int], r: Sequence[int]) -> Permutation:
    """``p`` on the values 1..m followed by ``r`` shifted up by m."""
    m = len(p)
    return _trusted((*p, *(v + m for v in r)))


def skew_sum(p: Sequence[int], r: Sequence[int]) -> Permutation:
    """``p`` shifted above ``r``, followed by ``r``."""
    m = len(r)
    return _trusted((*(v + m for v in p), *r))


def _cuts(p: Sequence[int], skew: bool) -> list[int]:
    # prefix lengths i (0 < i < n) after which p splits
    n = len(p)
    cuts = []
    if skew:
        low = n + 1
        for i, v in enumerate(p[:-1], start=1):
            low = min(low, v)
            if low == n - i + 1:
                cuts.append(i)
    else:
        high = 0
        for i, v in enumerate(p[:-1], start=1):
            high = max(high, v)
            if high == i:
                cuts.append(i)
    return cuts


def _split(p: Sequence[int], cuts: list[int]) -> list[Permutation]:
    bounds = [0, *cuts, len(p)]
    return [standardize(p[a:b]) for a, b in zip(bounds, bounds[1:])]


def is_sum_indecomposable(p: Sequence[int]) -> bool:
    if len(p) == 0:
        raise ValueError("sum-indecomposability is undefined for the empty permutation")
    return not _cuts(p, skew=False)


def sum_blocks(p: Sequence[int]) -> list[Permutation]:
    """Maximal cut of ``p`` into sum-indecomposable blocks, each standardized."""
    return _split(p, _cuts(p, skew=False)) if len(p) else []


def skew_blocks(p: Sequence[int]) -> list[Permutation]:
    """Maximal cut of ``p`` into skew-indecomposable blocks, each standardized.

    >>> [str(b) for b in skew_blocks([6, 7, 4, 3, 5, 2, 1])]
    ['1,2', '2,1,3', '1', '1']
    """
    return _split(p, _cuts(p, skew=True)) if len(p) else []


def is_skew_indecomposable(p: Sequence[int]) -> bool:
    return len(skew_blocks(p)) == 1


def is_involution(p: Sequence[int]) -> bool:
    return all(p[v - 1] == i for i, v in enumerate(p, start=1))


def fixed_points(p: Sequence[int]) -> int:
    return sum(1 for i, v in enumerate(p, start=1) if v == i)


def left_to_right_maxima(p: Sequence[int]) -> list[int]:
    """Positions (1-based) of entries larger than everything to their left."""
    out, best = [], 0
    for i, v in enumerate(p, start=1):
        if v > best:
            out.append(i)
            best = v
    return out


def right_to_left_minima(p: Sequence[int]) -> list[int]:
    """Positions (1-based) of entries smaller than everything to their right."""
    out, best = [], len(p) + 1
    for i in range(len(p), 0, -1):
        if p[i - 1] < best:
            out.append(i)
            best = p[i - 1]
    out.reverse()
    return out
