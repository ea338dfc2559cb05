"""
Exhaustive generation of permutations avoiding a pattern of length three,
and the brute-force counters built on it.

Generation extends a prefix one value at a time. For every length-3 pattern
the set of values that would complete an occurrence is a union of intervals
determined by the prefix, and it only grows as the prefix grows. It is kept as
a bitmask, so testing a candidate is a single AND and no occurrence is ever
built and thrown away.

A candidate is also dropped when it would forbid a value that has not been
placed yet. Such a prefix has no completion, and with this check every node
of the walk extends to at least one avoider.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .lis import has_ulis
from .perm import Permutation, _trusted, is_involution

__all__ = [
    "DEFAULT_CEILING", "BALLOT_EXHAUSTIVE_CEILING", "CeilingExceeded",
    "CountTable", "OBJECT_CLASSES", "METHODS",
    "avoiders", "top_level_prefixes", "count_avoiders",
    "count_ulis_avoiders", "count_ulis_avoiders_filtered", "count_ulis_involutions", "count_involution_avoiders",
    "is_bidirectional_ballot", "bidirectional_ballot_sequences", "count_bidirectional_ballot",
]

DEFAULT_CEILING = 14
BALLOT_EXHAUSTIVE_CEILING = 24

OBJECT_CLASSES = ("permutations", "involutions", "ballot", "avoiders-total", "involution-avoiders-total")
METHODS = ("brute", "series", "tree-dp")


class CeilingExceeded(ValueError):
    """Raised when an exhaustive run is requested beyond its size guard."""


@dataclass(frozen=True)
class CountTable:
    """Exact counts indexed by n, with the method that produced them."""

    pattern: Permutation | None
    object_class: str
    method: str
    rows: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.object_class not in OBJECT_CLASSES:
            raise ValueError(f"unknown object class {self.object_class!r}")
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        ns = [n for n, _ in self.rows]
        if ns != list(range(ns[0], ns[0] + len(ns))) if ns else False:
            raise ValueError("rows must be sorted by n with no gaps")
        if any(c < 0 for _, c in self.rows):
            raise ValueError("counts must be nonnegative")

    def as_dict(self) -> dict[int, int]:
        return dict(self.rows)

    def counts(self) -> list[int]:
        return [c for _, c in self.rows]


def _pattern_code(q: Sequence[int]) -> tuple[int, ...]:
    q = tuple(q)
    if sorted(q) != [1, 2, 3]:
        raise ValueError(f"generation supports patterns of length 3 only, got {q}")
    return q


def _check_n(n: int, ceiling: int) -> None:
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > ceiling:
        raise CeilingExceeded(
            f"n={n} exceeds the exhaustive ceiling {ceiling}; "
            f"pass a larger ceiling explicitly if the run time is acceptable"
        )


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def _newly_forbidden(q: tuple[int, ...], v: int, used: int, full: int) -> int:
    """Values that can no longer follow once ``v`` is appended after the values in ``used``.

    ``v`` plays the middle role of the pattern; the mask is the range the
    third entry would have to fall in.
    """
    below = used & ((1 << v) - 1)
    above = used >> (v + 1)
    if q == (1, 2, 3):
        return full & ~((2 << v) - 1) if below else 0
    if q == (1, 3, 2):
        if not below:
            return 0
        m = _low(below)
        return ((1 << v) - 1) & ~((2 << m) - 1)
    if q == (2, 1, 3):
        if not above:
            return 0
        m = v + 1 + _low(above)
        return full & ~((2 << m) - 1)
    if q == (2, 3, 1):
        if not below:
            return 0
        m = below.bit_length() - 1
        return ((1 << m) - 1) & ~1
    if q == (3, 1, 2):
        if not above:
            return 0
        m = used.bit_length() - 1
        return ((1 << m) - 1) & ~((2 << v) - 1)
    # (3, 2, 1)
    return ((1 << v) - 1) & ~1 if above else 0


def _seed(q: tuple[int, ...], n: int, prefix: Sequence[int]):
    """Replay ``prefix`` into (used, forbidden) masks, or None if no avoider starts with it."""
    full = ((2 << n) - 1) & ~1
    used = forb = 0
    for v in prefix:
        if not 1 <= v <= n or used >> v & 1 or forb >> v & 1:
            return None
        forb |= _newly_forbidden(q, v, used, full)
        used |= 1 << v
    if forb & full & ~used:
        return None
    return full, used, forb


def avoiders(
    q: Sequence[int], n: int, *, ceiling: int = DEFAULT_CEILING, prefix: Sequence[int] = ()
) -> Iterator[Permutation]:
    """Every ``q``-avoiding permutation of length ``n``, once each, in lexicographic order.

    ``prefix`` restricts the stream to avoiders starting with it; it is how
    work is split across processes.
    """
    q = _pattern_code(q)
    _check_n(n, ceiling)
    seeded = _seed(q, n, prefix)
    if seeded is None:
        return
    full, used, forb = seeded
    word = list(prefix)

    def walk(used: int, forb: int) -> Iterator[Permutation]:
        if used == full:
            yield _trusted(word)
            return
        cand = full & ~used & ~forb
        while cand:
            bit = cand & -cand
            cand ^= bit
            nf = forb | _newly_forbidden(q, v := bit.bit_length() - 1, used, full)
            if nf & full & ~(used | bit):
                continue
            word.append(v)
            yield from walk(used | bit, nf)
            word.pop()

    yield from walk(used, forb)


def top_level_prefixes(q: Sequence[int], n: int, depth: int = 1) -> list[tuple[int, ...]]:
    """The live prefixes of length ``depth``, in lexicographic order.

    The avoider streams under these prefixes partition the full stream.
    """
    q = _pattern_code(q)
    depth = min(depth, n)
    return [
        pre for pre in itertools.permutations(range(1, n + 1), depth)
        if _seed(q, n, pre) is not None
    ]


def count_avoiders(q: Sequence[int], n: int, *, ceiling: int = DEFAULT_CEILING) -> int:
    return sum(1 for _ in avoiders(q, n, ceiling=ceiling))


def _count_ulis_under(q: tuple[int, ...], n: int, prefix: tuple[int, ...]) -> int:
    """ULIS avoiders under ``prefix``, carrying the rank DP along the walk instead of per leaf."""
    seeded = _seed(q, n, prefix)
    if seeded is None:
        return 0
    full, used, forb = seeded
    rank = [0] * (n + 1)
    ways = [0] * (n + 1)
    word: list[int] = []

    def push(v: int) -> tuple[int, int]:
        best, c = 0, 1
        for u in word:
            if u < v:
                r = rank[u]
                if r > best:
                    best, c = r, ways[u]
                elif r == best:
                    c += ways[u]
        rank[v], ways[v] = best + 1, c
        word.append(v)
        return best + 1, c

    top = tops = 0
    for v in prefix:
        r, c = push(v)
        if r > top:
            top, tops = r, c
        elif r == top:
            tops += c

    def walk(used: int, forb: int, top: int, tops: int) -> int:
        if used == full:
            return 1 if tops == 1 or n == 0 else 0
        total = 0
        cand = full & ~used & ~forb
        while cand:
            bit = cand & -cand
            cand ^= bit
            nf = forb | _newly_forbidden(q, v := bit.bit_length() - 1, used, full)
            if nf & full & ~(used | bit):
                continue
            r, c = push(v)
            if r > top:
                nt, ns = r, c
            elif r == top:
                nt, ns = top, tops + c
            else:
                nt, ns = top, tops
            total += walk(used | bit, nf, nt, ns)
            word.pop()
        return total

    return walk(used, forb, top, tops)


def _count_job(args) -> int:
    q, n, prefix = args
    return _count_ulis_under(q, n, prefix)


def count_ulis_avoiders(
    q: Sequence[int], n: int, *, ceiling: int = DEFAULT_CEILING, workers: int = 1
) -> int:
    """u_n(q): the ``q``-avoiders of length ``n`` that have a unique longest increasing subsequence.

    With ``workers > 1`` the generation tree is split by its first value and the
    subtrees are counted in separate processes; the sum does not depend on the split.
    """
    q = _pattern_code(q)
    _check_n(n, ceiling)
    if workers <= 1 or n < 2:
        return _count_ulis_under(q, n, ())
    jobs = [(q, n, pre) for pre in top_level_prefixes(q, n)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_job, jobs))


def count_ulis_avoiders_filtered(q: Sequence[int], n: int, *, ceiling: int = DEFAULT_CEILING) -> int:
    """Same as :func:`count_ulis_avoiders`, but by running :func:`has_ulis` on every emitted avoider."""
    return sum(1 for p in avoiders(q, n, ceiling=ceiling) if has_ulis(p))


def count_ulis_involutions(q: Sequence[int], n: int, *, ceiling: int = DEFAULT_CEILING) -> int:
    """i_n(q): ``q``-avoiding involutions of length ``n`` with a ULIS."""
    return sum(1 for p in avoiders(q, n, ceiling=ceiling) if is_involution(p) and has_ulis(p))


def count_involution_avoiders(q: Sequence[int], n: int, *, ceiling: int = DEFAULT_CEILING) -> int:
    """All ``q``-avoiding involutions of length ``n``."""
    return sum(1 for p in avoiders(q, n, ceiling=ceiling) if is_involution(p))


def is_bidirectional_ballot(steps: str) -> bool:
    """Every nonempty prefix and every nonempty suffix has strictly more U than D."""
    if not steps or set(steps) - {"U", "D"}:
        return False
    h = 0
    heights = []
    for s in steps:
        h += 1 if s == "U" else -1
        heights.append(h)
    # suffix after position k has surplus h_final - h_k
    return min(heights) >= 1 and all(x < h for x in heights[:-1])


def bidirectional_ballot_sequences(n: int) -> Iterator[str]:
    """All bidirectional ballot words of length ``n``, U before D, by a prefix-pruned walk.

    Heights h_1..h_n must all be at least 1 and the final height must exceed
    every earlier one. A prefix is abandoned as soon as it cannot still end
    above the highest point it has reached.
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    word: list[str] = []

    def walk(h: int, peak: int, left: int) -> Iterator[str]:
        # peak: highest of the heights before the current one (0 if none)
        if left == 0:
            if h > peak:
                yield "".join(word)
            return
        top = max(peak, h) if word else 0
        for step, nh in (("U", h + 1), ("D", h - 1)):
            if nh < 1 or nh + left - 1 <= top:
                continue
            word.append(step)
            yield from walk(nh, top, left - 1)
            word.pop()

    yield from walk(0, 0, n)


def count_bidirectional_ballot(n: int, *, method: str = "exhaustive") -> int:
    """B_n. ``exhaustive`` tests all 2^n words (n <= 24); ``pruned`` walks live prefixes only."""
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if method == "pruned":
        return sum(1 for _ in bidirectional_ballot_sequences(n))
    if method != "exhaustive":
        raise ValueError(f"unknown method {method!r}")
    if n > BALLOT_EXHAUSTIVE_CEILING:
        raise CeilingExceeded(
            f"n={n} exceeds the 2^n exhaustive ceiling {BALLOT_EXHAUSTIVE_CEILING}; use method='pruned'"
        )
    total = 0
    for word in range(1 << n):
        # bit i set means step i+1 is U
        h = 0
        ok = True
        heights = []
        for i in range(n):
            h += 1 if word >> i & 1 else -1
            if h < 1:
                ok = False
                break
            heights.append(h)
        if ok and all(x < h for x in heights[:-1]):
            total += 1
    return total
