"""
Uniform random plane trees through the cycle lemma, and Monte Carlo estimates
of the probability that a random tree has exactly k leaves at maximum depth.

Random numbers come from numpy's PCG64 bit generator seeded with the 64-bit
user seed. A run is reproducible from (n, k_max, trials, seed, workers):

* single-stream mode (``workers=1``) draws every trial from ``PCG64(seed)``
  in batches of ``BATCH`` words;
* parallel mode spawns one child ``SeedSequence`` per worker from ``seed``,
  gives worker i the i-th contiguous share of the trials, and adds the counts.

Sampling a Dyck path of semilength n: shuffle n up steps and n+1 down steps
uniformly, then rotate the word to start just after the first position where
its running sum reaches its minimum. Exactly one rotation of each such word
stays nonnegative until the final down step, which is dropped. Every Dyck
path arises from exactly 2n+1 words, so the result is uniform.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .bijections import DyckPath, PlaneTree, dyck_to_tree, max_depth_leaf_count

__all__ = [
    "RNG_ALGORITHM", "BATCH", "make_rng", "sample_dyck_words", "sample_dyck_path",
    "deepest_leaf_counts", "SampleReport", "estimate_ank", "dyck_to_tree",
]

RNG_ALGORITHM = "numpy.random.PCG64"
BATCH = 4096


def make_rng(seed: int | np.random.SeedSequence) -> np.random.Generator:
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    if not 0 <= seed < 2**64:
        raise ValueError(f"seed must fit in 64 unsigned bits, got {seed}")
    return np.random.Generator(np.random.PCG64(seed))


def sample_dyck_words(semilength: int, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` uniform Dyck paths as rows of +1/-1 steps, shape (count, 2*semilength)."""
    if semilength < 0:
        raise ValueError("semilength must be nonnegative")
    L = 2 * semilength + 1
    base = np.ones((count, L), dtype=np.int8)
    base[:, semilength:] = -1
    words = rng.permuted(base, axis=1)
    sums = np.cumsum(words, axis=1, dtype=np.int32)
    start = (np.argmin(sums, axis=1) + 1) % L
    idx = (start[:, None] + np.arange(L)[None, :]) % L
    rotated = np.take_along_axis(words, idx, axis=1)
    return rotated[:, :-1]


def sample_dyck_path(semilength: int, rng: np.random.Generator) -> DyckPath:
    row = sample_dyck_words(semilength, 1, rng)[0]
    return DyckPath("".join("U" if s > 0 else "D" for s in row))


def deepest_leaf_counts(words: np.ndarray) -> np.ndarray:
    """Leaves at maximum depth of the tree of each row.

    Vertices are the up steps and a vertex's depth is the height its up step
    reaches, so the deepest leaves are exactly the steps ending at the row's
    maximum height.
    """
    if words.shape[1] == 0:
        return np.ones(words.shape[0], dtype=np.int64)
    heights = np.cumsum(words, axis=1, dtype=np.int32)
    top = heights.max(axis=1, keepdims=True)
    return (heights == top).sum(axis=1)


@dataclass(frozen=True)
class SampleReport:
    """Counts of sampled trees by number of deepest leaves.

    ``counts[k-1]`` is the number of trials with exactly k deepest leaves for
    k = 1..k_max; ``overflow`` counts the rest.
    """

    n: int
    trials: int
    seed: int
    k_max: int
    counts: tuple[int, ...]
    overflow: int
    rng: str = RNG_ALGORITHM
    batch: int = BATCH
    substreams: tuple[tuple[int, int], ...] = field(default=())

    @property
    def estimates(self) -> list[float]:
        return [c / self.trials for c in self.counts]

    @property
    def overflow_fraction(self) -> float:
        return self.overflow / self.trials

    @property
    def stderr(self) -> list[float]:
        return [math.sqrt(p * (1 - p) / self.trials) for p in self.estimates]

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "trials": self.trials,
            "seed": self.seed,
            "k_max": self.k_max,
            "rng": self.rng,
            "batch": self.batch,
            "substreams": [list(s) for s in self.substreams],
            "counts": list(self.counts),
            "overflow": self.overflow,
            "estimates": self.estimates,
            "stderr": self.stderr,
        }


def _tally(n: int, k_max: int, trials: int, rng: np.random.Generator) -> np.ndarray:
    bins = np.zeros(k_max + 1, dtype=np.int64)
    done = 0
    while done < trials:
        size = min(BATCH, trials - done)
        k = deepest_leaf_counts(sample_dyck_words(n - 1, size, rng))
        bins += np.bincount(np.minimum(k, k_max + 1) - 1, minlength=k_max + 1)
        done += size
    return bins


def _tally_job(args) -> np.ndarray:
    n, k_max, trials, seq = args
    return _tally(n, k_max, trials, make_rng(seq))


def estimate_ank(n: int, k_max: int = 8, trials: int = 100_000, seed: int = 0, workers: int = 1) -> SampleReport:
    """Monte Carlo frequencies of trees on ``n`` vertices with k deepest leaves."""
    if n < 1:
        raise ValueError("a tree has at least one vertex")
    if trials < 1:
        raise ValueError("trials must be positive")
    if k_max < 1:
        raise ValueError("k_max must be positive")
    if workers <= 1:
        bins = _tally(n, k_max, trials, make_rng(seed))
        layout: tuple[tuple[int, int], ...] = ()
    else:
        children = np.random.SeedSequence(seed).spawn(workers)
        shares = [trials // workers + (i < trials % workers) for i in range(workers)]
        jobs = [(n, k_max, s, c) for s, c in zip(shares, children) if s]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            bins = sum(pool.map(_tally_job, jobs))
        layout = tuple((i, s) for i, s in enumerate(shares))
    return SampleReport(
        n=n, trials=trials, seed=seed, k_max=k_max,
        counts=tuple(int(c) for c in bins[:k_max]), overflow=int(bins[k_max]),
        substreams=layout,
    )


def tree_deepest_leaves(d: DyckPath) -> int:
    """Object-level route: path to tree, then count its deepest leaves."""
    t: PlaneTree = dyck_to_tree(d)
    return max_depth_leaf_count(t)[1]
