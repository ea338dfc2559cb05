"""
Self-checks grouped into named suites, as run by ``ulis verify``.

Each suite walks its checks in a fixed order and stops at the first failure,
which it reports with the offending object in one-line notation.
"""

from __future__ import annotations

import itertools
from collections.abc import Callable, Iterator
from dataclasses import dataclass
from importlib import resources

from . import bijections as bij
from . import series as ser
from .enumeration import (
    avoiders, count_bidirectional_ballot, count_involution_avoiders,
    count_ulis_avoiders, count_ulis_involutions,
)
from .lis import has_ulis, lis_length, rank_profile
from .perm import avoids, fixed_points, is_involution, is_sum_indecomposable
from .trees import binomial, catalan, count_unique_deepest_leaf_trees, u132_fast

__all__ = ["SuiteResult", "SUITES", "run_suite", "load_bfile"]


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    checks: int
    failure: str | None = None

    @property
    def passed(self) -> bool:
        return self.failure is None

    def __str__(self):
        if self.passed:
            return f"PASS {self.suite} ({self.checks} checks)"
        return f"FAIL {self.suite} after {self.checks} checks: {self.failure}"


class _Failed(Exception):
    pass


def load_bfile(name: str) -> dict[int, int]:
    """Read a vendored ``n a(n)`` fixture from the package data."""
    text = resources.files("ulis").joinpath("data", name).read_text()
    out = {}
    for line in text.splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            n, a = line.split()
            out[int(n)] = int(a)
    return out


def _check(cond: bool, message: str) -> int:
    if not cond:
        raise _Failed(message)
    return 1


def _suite_bijections(max_n: int) -> Iterator[int]:
    max_n = min(max_n, 9)
    for n in range(1, max_n + 1):
        trees = set()
        for p in avoiders((1, 3, 2), n):
            d = bij.phi(p)
            yield _check(bij.phi_inverse(d) == p, f"phi round trip fails at {p}")
            t = bij.psi(p)
            yield _check(t.size == n + 1, f"psi({p}) has {t.size} vertices")
            trees.add(t)
            prof = rank_profile(p)
            yield _check(bij.max_depth_leaf_count(t)[1] == prof.lis_count,
                         f"deepest leaves of psi({p}) differ from its LIS count")
            peak = bij.unique_max_peak(d)
            expect = prof.lis_length if prof.lis_count == 1 else None
            yield _check(peak == expect, f"unique highest peak of phi({p}) is {peak}, expected {expect}")
            yield _check(is_involution(p) == bij.is_symmetric(d), f"symmetry of phi({p}) disagrees with involution")
        yield _check(len(trees) == catalan(n), f"psi is not injective at n={n}")
    for n in range(1, max_n + 1):
        images = set()
        for p in avoiders((3, 2, 1), n):
            r = bij.ck_f(p)
            yield _check(bij.ck_f_inverse(r) == p, f"ck_f round trip fails at {p}")
            images.add(r)
        target = {r for r in avoiders((3, 2, 1), n + 1) if is_sum_indecomposable(r)}
        yield _check(images == target, f"ck_f image differs from the indecomposable 321-avoiders at n={n}")
    for m in range(1, min(max_n // 2, 5) + 1):
        for p in avoiders((3, 2, 1), 2 * m):
            if bij.rs_shape(p) != (m, m):
                continue
            r = bij.ck_f(p)
            before = rank_profile(p).ranks
            after = rank_profile(r).ranks
            rank_p = {v: before[i] for i, v in enumerate(p)}
            rank_r = {v: after[i] for i, v in enumerate(r)}
            yield _check(all(rank_r[v] <= rank_p[v] for v in p), f"ck_f raises a rank in {p}")
            yield _check(has_ulis(r) and lis_length(r) == m + 1, f"ck_f({p}) = {r} lacks a ULIS of length {m + 1}")


def _suite_rs(max_n: int) -> Iterator[int]:
    max_n = min(max_n, 8)
    for n in range(max_n + 1):
        for p in itertools.permutations(range(1, n + 1)):
            P, Q = bij.rs_insert(p)
            label = ",".join(map(str, p))
            yield _check(P.shape == Q.shape, f"P and Q shapes differ for {label}")
            yield _check((len(P.shape) <= 2) == avoids(p, (3, 2, 1)), f"row count vs 321-avoidance fails for {label}")
            yield _check((P == Q) == is_involution(p), f"P == Q vs involution fails for {label}")
            first = P.shape[0] if P.shape else 0
            yield _check(first == lis_length(p), f"first row length differs from LIS length for {label}")
            if is_involution(p):
                yield _check(bij.odd_columns(P) == fixed_points(p), f"odd columns differ from fixed points for {label}")
            if n and P.shape == (n // 2, n // 2):
                # two disjoint increasing runs of length n/2 cover p, so neither is unique
                yield _check(not has_ulis(p), f"{label} has shape {P.shape} but a ULIS")
    for m in range(1, 7):
        syt = 0
        for top in itertools.combinations(range(1, 2 * m + 1), m):
            bottom = tuple(sorted(set(range(1, 2 * m + 1)) - set(top)))
            try:
                bij.YoungTableau((top, bottom))
            except ValueError:
                continue
            syt += 1
        yield _check(syt == catalan(m), f"{syt} standard tableaux of shape ({m},{m}), expected C_{m}")


def _suite_series(max_n: int) -> Iterator[int]:
    order = max(max_n, 40)
    rad = ser.PowerSeries(ser.U231_RADICAND, order)
    sq = ser.ps_sqrt(rad)
    residual = ser.ps_mul(sq, sq) - rad
    for k in range(order + 1):
        yield _check(residual[k] == 0, f"sqrt residual nonzero at coefficient {k}: {residual[k]}")
    u = ser.solve_u231(order)
    z = ser.PowerSeries.z(order)
    eq = u - 1 - z * u * (u - z)
    for k in range(order + 1):
        yield _check(eq[k] == 0, f"functional equation residual nonzero at coefficient {k}")
    closed = ser.closed_form_u231(order)
    for k in range(order + 1):
        yield _check(closed[k] == u[k], f"closed form differs at coefficient {k}: {closed[k]} vs {u[k]}")
        yield _check(u[k].denominator == 1 and u[k] >= 0, f"coefficient {k} is not a nonnegative integer")
    a = u.integer_coefficients()
    for total in range(2, order + 1):
        for m in range(1, total):
            yield _check(a[m] * a[total - m] <= a[total], f"superadditivity fails at m={m}, n={total - m}")
    root = ser.find_real_root(ser.U231_RADICAND, 0.0, 0.5, 1e-12)
    yield _check(abs(root - 0.2956) <= 5e-4, f"singularity {root} is not near 0.2956")


def _suite_oeis(max_n: int) -> Iterator[int]:
    a082582 = load_bfile("b082582.txt")
    a152880 = load_bfile("b152880.txt")
    for n, a in a082582.items():
        if n <= max_n:
            got = count_ulis_avoiders((2, 3, 1), n)
            yield _check(got == a, f"u_{n}(231) = {got}, A082582 has {a}")
            yield _check(ser.solve_u231(max_n)[n] == a, f"series coefficient {n} differs from A082582")
    for n, a in a152880.items():
        if n <= max_n:
            got = count_ulis_avoiders((1, 3, 2), n)
            yield _check(got == a, f"u_{n}(132) = {got}, A152880 has {a}")
            yield _check(u132_fast(n) == a, f"tree count for n={n} differs from A152880")


def _suite_ballot(max_n: int) -> Iterator[int]:
    max_n = min(max_n, 12)
    for n in range(1, max_n + 1):
        i_n = count_ulis_involutions((1, 3, 2), n)
        b = count_bidirectional_ballot(n + 1)
        yield _check(i_n == b, f"i_{n}(132) = {i_n} but B_{n + 1} = {b}")
        yield _check(count_bidirectional_ballot(n + 1, method="pruned") == b, f"pruned B_{n + 1} disagrees")
        tot = count_involution_avoiders((1, 3, 2), n)
        yield _check(tot == binomial(n, n // 2), f"I_{n}(132) = {tot}, expected binom({n},{n // 2})")
    for n in range(1, min(max_n, 10) + 1):
        yield _check(count_ulis_involutions((2, 3, 1), n) == 1, f"i_{n}(231) != 1")
        yield _check(count_ulis_involutions((3, 2, 1), n) == 1, f"i_{n}(321) != 1")


def _suite_sampler(max_n: int) -> Iterator[int]:
    import numpy as np

    from .sampler import deepest_leaf_counts, estimate_ank

    # the rotation sends every word with n U and n+1 D to a Dyck path, each path 2n+1 times
    for s in range(0, 5):
        L = 2 * s + 1
        hits: dict[str, int] = {}
        for ups in itertools.combinations(range(L), s):
            w = [-1] * L
            for i in ups:
                w[i] = 1
            sums = list(itertools.accumulate(w))
            start = (sums.index(min(sums)) + 1) % L
            rot = w[start:] + w[:start]
            path = "".join("U" if x > 0 else "D" for x in rot[:-1])
            bij.DyckPath(path)
            hits[path] = hits.get(path, 0) + 1
        yield _check(len(hits) == catalan(s) and set(hits.values()) == {L},
                     f"cycle-lemma rotation is not {L}-to-1 at semilength {s}")
    for n in range(2, min(max_n, 12) + 1):
        exact = count_unique_deepest_leaf_trees(n) / catalan(n - 1)
        rep = estimate_ank(n, k_max=4, trials=20_000, seed=n)
        tol = 5 * max(rep.stderr[0], 1e-3)
        yield _check(abs(rep.estimates[0] - exact) <= tol,
                     f"sampled a({n},1) = {rep.estimates[0]:.4f}, exact {exact:.4f}")
    words = np.array([[1, 1, -1, -1], [1, -1, 1, -1]], dtype=np.int8)
    yield _check(list(deepest_leaf_counts(words)) == [1, 2], "vectorized deepest-leaf count is wrong")


SUITES: dict[str, tuple[Callable[[int], Iterator[int]], int]] = {
    "bijections": (_suite_bijections, 8),
    "rs": (_suite_rs, 8),
    "series": (_suite_series, 40),
    "oeis": (_suite_oeis, 9),
    "ballot": (_suite_ballot, 12),
    "sampler": (_suite_sampler, 12),
}


def run_suite(name: str, max_n: int | None = None) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, default = SUITES[name]
    checks = 0
    try:
        for ok in fn(default if max_n is None else max_n):
            checks += ok
    except _Failed as exc:
        return SuiteResult(name, checks, str(exc))
    return SuiteResult(name, checks)
