"""
Structural maps on pattern-avoiding permutations:

* ``psi``: 132-avoiders of length n to plane trees on n+1 vertices,
* ``phi``: 132-avoiders of length n to Dyck paths of semilength n,
* ``ck_f``: 321-avoiders of length n to sum-indecomposable 321-avoiders of length n+1,
* ``rs_insert``: Robinson-Schensted row insertion.

Every entry point checks its avoidance precondition first and reports an
occurrence of the forbidden pattern when it fails.
"""

from __future__ import annotations

from bisect import bisect_right
from collections.abc import Sequence
from dataclasses import dataclass

from .perm import (
    Permutation, _trusted, is_sum_indecomposable, left_to_right_maxima,
    require_avoids, right_to_left_minima, skew_blocks, skew_sum,
)

__all__ = [
    "PlaneTree", "DyckPath", "YoungTableau", "InvalidDyckPath",
    "psi", "max_depth_leaf_count", "phi", "phi_inverse", "peaks", "unique_max_peak",
    "is_symmetric", "dyck_to_tree", "tree_to_dyck", "ck_f", "ck_f_inverse",
    "rs_insert", "rs_shape", "odd_columns",
]

P132 = (1, 3, 2)
P321 = (3, 2, 1)


# -- plane trees ---------------------------------------------------------

@dataclass(frozen=True)
class PlaneTree:
    """Rooted ordered unlabeled tree; a vertex is the tuple of its child subtrees."""

    children: tuple[PlaneTree, ...] = ()

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    @property
    def height(self) -> int:
        """Largest leaf depth, in edges (0 for a single vertex)."""
        return max_depth_leaf_count(self)[0]

    def to_parens(self) -> str:
        """Balanced parentheses, one pair per vertex: a single vertex is ``()``."""
        return "(" + "".join(c.to_parens() for c in self.children) + ")"

    @classmethod
    def from_parens(cls, text: str) -> PlaneTree:
        stack: list[list[PlaneTree]] = []
        root = None
        for ch in text:
            if ch == "(":
                if root is not None:
                    raise ValueError(f"{text!r} holds more than one tree")
                stack.append([])
            elif ch == ")":
                if not stack:
                    raise ValueError(f"unbalanced parentheses in {text!r}")
                node = cls(tuple(stack.pop()))
                if stack:
                    stack[-1].append(node)
                else:
                    root = node
            else:
                raise ValueError(f"unexpected character {ch!r}")
        if root is None or stack:
            raise ValueError(f"unbalanced parentheses in {text!r}")
        return root

    def __str__(self) -> str:
        return self.to_parens()


def max_depth_leaf_count(t: PlaneTree) -> tuple[int, int]:
    """(height, number of leaves at that depth)."""
    height, count = 0, 0
    stack = [(t, 0)]
    while stack:
        node, depth = stack.pop()
        if node.children:
            stack.extend((c, depth + 1) for c in node.children)
        elif depth > height:
            height, count = depth, 1
        elif depth == height:
            count += 1
    return height, count


def psi(p: Sequence[int]) -> PlaneTree:
    """Plane tree on n+1 vertices of a 132-avoider.

    A skew-indecomposable avoider ends in its maximum, ``L n``, and maps to a
    root whose only child carries ``psi(L)``. Otherwise the trees of the skew
    blocks are glued at their roots, left to right.
    """
    return _psi(require_avoids(p, P132))


def _psi(p: Sequence[int]) -> PlaneTree:
    if not p:
        return PlaneTree()
    blocks = skew_blocks(p)
    if len(blocks) == 1:
        return PlaneTree((_psi(p[:-1]),))
    return PlaneTree(tuple(_psi(b).children[0] for b in blocks))


# -- Dyck paths ----------------------------------------------------------

class InvalidDyckPath(ValueError):
    pass


class DyckPath(str):
    """A word over {U, D} with as many U as D and no prefix with more D than U."""

    def __new__(cls, steps: str = ""):
        if isinstance(steps, DyckPath):
            return steps
        steps = str(steps)
        h = 0
        for i, s in enumerate(steps, start=1):
            if s == "U":
                h += 1
            elif s == "D":
                h -= 1
            else:
                raise InvalidDyckPath(f"step {i}: expected U or D, got {s!r}")
            if h < 0:
                raise InvalidDyckPath(f"step {i}: path goes below the axis")
        if h:
            raise InvalidDyckPath(f"path ends at height {h}, not 0")
        return str.__new__(cls, steps)

    @property
    def semilength(self) -> int:
        return len(self) // 2

    def heights(self) -> list[int]:
        """Heights after each step."""
        out, h = [], 0
        for s in self:
            h += 1 if s == "U" else -1
            out.append(h)
        return out


def _primes(d: str) -> list[str]:
    # factors between consecutive returns to the axis
    out, h, start = [], 0, 0
    for i, s in enumerate(d):
        h += 1 if s == "U" else -1
        if h == 0:
            out.append(d[start:i + 1])
            start = i + 1
    return out


def phi(p: Sequence[int]) -> DyckPath:
    """Dyck path of semilength n of a 132-avoider: ``U phi(L) D`` for ``L n``, concatenation over skew blocks."""
    return str.__new__(DyckPath, _phi(require_avoids(p, P132)))


def _phi(p: Sequence[int]) -> str:
    if not p:
        return ""
    blocks = skew_blocks(p)
    if len(blocks) == 1:
        return "U" + _phi(p[:-1]) + "D"
    return "".join(_phi(b) for b in blocks)


def phi_inverse(d: str) -> Permutation:
    return _phi_inverse(DyckPath(d))


def _phi_inverse(d: str) -> Permutation:
    blocks = []
    for prime in _primes(d):
        inner = _phi_inverse(prime[1:-1])
        blocks.append(_trusted((*inner, len(inner) + 1)))
    out = _trusted(())
    for b in reversed(blocks):
        out = skew_sum(b, out)
    return out


def peaks(d: str) -> list[tuple[int, int]]:
    """(x, y) of every point entered by U and left by D."""
    d = DyckPath(d)
    hs = d.heights()
    return [(i + 1, hs[i]) for i in range(len(d) - 1) if d[i] == "U" and d[i + 1] == "D"]


def unique_max_peak(d: str) -> int | None:
    """Height of the highest peak if exactly one peak reaches it, else None."""
    ps = peaks(d)
    if not ps:
        return None
    top = max(y for _, y in ps)
    return top if sum(1 for _, y in ps if y == top) == 1 else None


def is_symmetric(d: str) -> bool:
    """Mirror image in the vertical line through the midpoint equals the path."""
    d = DyckPath(d)
    return d == d[::-1].translate(_SWAP)


_SWAP = str.maketrans("UD", "DU")


def dyck_to_tree(d: str) -> PlaneTree:
    """U opens a new rightmost child and descends into it, D climbs back to the parent."""
    d = DyckPath(d)
    stack: list[list[PlaneTree]] = [[]]
    for s in d:
        if s == "U":
            stack.append([])
        else:
            node = PlaneTree(tuple(stack.pop()))
            stack[-1].append(node)
    return PlaneTree(tuple(stack[0]))


def tree_to_dyck(t: PlaneTree) -> DyckPath:
    return str.__new__(DyckPath, t.to_parens()[1:-1].replace("(", "U").replace(")", "D"))


# -- the Claesson-Kitaev map ---------------------------------------------

def _marked_after_one(p: Sequence[int], start: int) -> list[int]:
    # 0-based positions at or after `start` holding a left-to-right maximum
    # of p that is not also a right-to-left minimum
    rl = set(right_to_left_minima(p))
    return [i - 1 for i in left_to_right_maxima(p) if i - 1 >= start and i not in rl]


def ck_f(p: Sequence[int]) -> Permutation:
    """Sum-indecomposable 321-avoider of length n+1 built from a 321-avoider of length n >= 1.

    Mark the left-to-right maxima right of the entry 1 that are not
    right-to-left minima, insert n+1 just left of 1 and mark it too, then
    rotate the marked values one step to the left along their positions.

    >>> str(ck_f([3, 5, 1, 2, 4, 7, 8, 6]))
    '3,5,7,1,2,4,8,9,6'
    """
    p = require_avoids(p, P321)
    n = len(p)
    if n == 0:
        raise ValueError("ck_f needs a permutation of length at least 1")
    one = p.index(1)
    marked = _marked_after_one(p, one + 1)
    out = [*p[:one], n + 1, *p[one:]]
    slots = [one] + [i + 1 for i in marked]
    values = [out[i] for i in slots]
    for i, v in zip(slots, values[1:] + values[:1]):
        out[i] = v
    return _trusted(out)


def ck_f_inverse(r: Sequence[int]) -> Permutation:
    """Undo :func:`ck_f` on a sum-indecomposable 321-avoider of length >= 2."""
    r = require_avoids(r, P321)
    m = len(r)
    if m < 2:
        raise ValueError("ck_f_inverse needs a permutation of length at least 2")
    if not is_sum_indecomposable(r):
        raise ValueError(f"{r} is sum-decomposable, so it is not an image of ck_f")
    one = r.index(1)
    slots = [one - 1] + _marked_after_one(r, one + 1)
    values = [r[i] for i in slots]
    if values[-1] != m:
        raise AssertionError(f"marked entries of {r} do not end with {m}")
    out = list(r)
    for i, v in zip(slots, values[-1:] + values[:-1]):
        out[i] = v
    del out[one - 1]
    return _trusted(out)


# -- Robinson-Schensted --------------------------------------------------

@dataclass(frozen=True)
class YoungTableau:
    """Rows of increasing integers, row lengths weakly decreasing, columns increasing."""

    rows: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        lengths = [len(r) for r in self.rows]
        if any(not r for r in self.rows) or lengths != sorted(lengths, reverse=True):
            raise ValueError(f"row lengths {lengths} do not form a partition")
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ValueError(f"row {r} is not strictly increasing")
        for upper, lower in zip(self.rows, self.rows[1:]):
            if any(a >= b for a, b in zip(upper, lower)):
                raise ValueError("columns are not strictly increasing")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def columns(self) -> list[tuple[int, ...]]:
        if not self.rows:
            return []
        return [tuple(r[j] for r in self.rows if j < len(r)) for j in range(len(self.rows[0]))]

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, r)) for r in self.rows)


def rs_insert(p: Sequence[int]) -> tuple[YoungTableau, YoungTableau]:
    """Insertion tableau P and recording tableau Q of ``p`` by row bumping."""
    prows: list[list[int]] = []
    qrows: list[list[int]] = []
    for step, v in enumerate(p, start=1):
        x = v
        for r, row in enumerate(prows):
            j = bisect_right(row, x)
            if j == len(row):
                row.append(x)
                qrows[r].append(step)
                break
            row[j], x = x, row[j]
        else:
            prows.append([x])
            qrows.append([step])
    return (
        YoungTableau(tuple(map(tuple, prows))),
        YoungTableau(tuple(map(tuple, qrows))),
    )


def rs_shape(p: Sequence[int]) -> tuple[int, ...]:
    return rs_insert(p)[0].shape


def odd_columns(t: YoungTableau) -> int:
    return sum(1 for c in t.columns() if len(c) % 2)
