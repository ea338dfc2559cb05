"""
Truncated formal power series with exact rational coefficients, and the
generating-function computations for ULIS counts.

A series carries its truncation order explicitly: coefficients 0..order are
known, anything beyond is unknown and asking for it is an error. Arithmetic
between series of different orders truncates to the smaller one.

>>> z = PowerSeries.z(6)
>>> (1 / (1 - z)).coefficients
(Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(1, 1))
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from numbers import Rational

__all__ = [
    "PowerSeries", "ps_add", "ps_sub", "ps_mul", "ps_div", "ps_sqrt",
    "solve_u231", "closed_form_u231", "U231_RADICAND", "indecomposable_from_total",
    "find_real_root", "growth_profile",
]


class PowerSeries:
    """Coefficients ``c[0..order]`` of a formal series in z, as Fractions."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable, order: int | None = None):
        c = [Fraction(x) for x in coefficients]
        if order is None:
            order = len(c) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = c[: order + 1] + [Fraction(0)] * (order + 1 - len(c))
        self._c = tuple(c)

    @classmethod
    def constant(cls, value, order: int) -> PowerSeries:
        return cls([value], order)

    @classmethod
    def z(cls, order: int) -> PowerSeries:
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._c

    def __getitem__(self, k: int) -> Fraction:
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient {k} is beyond the truncation order {self.order}")
        return self._c[k]

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError(f"cannot raise the order from {self.order} to {order}")
        return PowerSeries(self._c, order)

    def shift_down(self, k: int = 1) -> PowerSeries:
        """Divide by z**k; the first k coefficients must vanish."""
        if any(self._c[:k]):
            raise ValueError(f"series is not divisible by z^{k}")
        if k > self.order:
            raise ValueError("nothing left after the shift")
        return PowerSeries(self._c[k:], self.order - k)

    def integer_coefficients(self) -> list[int]:
        if any(c.denominator != 1 for c in self._c):
            raise ValueError("series has non-integer coefficients")
        return [int(c) for c in self._c]

    def _coerce(self, other) -> PowerSeries | None:
        if isinstance(other, PowerSeries):
            return other
        if isinstance(other, (int, Rational)):
            return PowerSeries.constant(other, self.order)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ps_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ps_sub(self, other)

    def __rsub__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ps_sub(other, self)

    def __mul__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ps_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ps_div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        return NotImplemented if other is None else ps_div(other, self)

    def __neg__(self):
        return PowerSeries([-c for c in self._c])

    def __pow__(self, k: int):
        if k < 0:
            return 1 / self ** (-k)
        out = PowerSeries.constant(1, self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._c)
        return f"PowerSeries([{terms}], order={self.order})"


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries([a[k] + b[k] for k in range(n + 1)])


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    return PowerSeries([a[k] - b[k] for k in range(n + 1)])


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    return PowerSeries([sum(ac[i] * bc[k - i] for i in range(k + 1)) for k in range(n + 1)])


def ps_div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """a / b by forward substitution; b needs a nonzero constant term."""
    if b[0] == 0:
        raise ZeroDivisionError("divisor has zero constant term")
    n = min(a.order, b.order)
    bc = b.coefficients
    q: list[Fraction] = []
    for k in range(n + 1):
        q.append((a[k] - sum(q[i] * bc[k - i] for i in range(k))) / bc[0])
    return PowerSeries(q)


def ps_sqrt(a: PowerSeries) -> PowerSeries:
    """The square root with constant term +1 of a series with constant term 1.

    Solves s*s = a one degree at a time: the z^k coefficient gives
    2*s[k] + sum(s[i]*s[k-i], 0<i<k) = a[k].
    """
    if a[0] != 1:
        raise ValueError(f"constant term must be 1, got {a[0]}")
    s = [Fraction(1)]
    for k in range(1, a.order + 1):
        cross = sum(s[i] * s[k - i] for i in range(1, k))
        s.append((a[k] - cross) / 2)
    return PowerSeries(s)


# 1 - 4z + 2z^2 + z^4
U231_RADICAND = (1, -4, 2, 0, 1)


def solve_u231(order: int) -> PowerSeries:
    """Formal solution of u = 1 + z*u*(u - z) with u(0) = 1.

    Each pass of u <- 1 + z*u*(u - z) fixes one more coefficient, since the
    right side only reads coefficients of u below the one it determines.
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    z = PowerSeries.z(order)
    u = PowerSeries.constant(1, order)
    for _ in range(order):
        u = 1 + z * u * (u - z)
    return u


def closed_form_u231(order: int) -> PowerSeries:
    """(1 + z^2 - sqrt(1 - 4z + 2z^2 + z^4)) / (2z), expanded to ``order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    big = order + 1
    numerator = PowerSeries([1, 0, 1], big) - ps_sqrt(PowerSeries(U231_RADICAND, big))
    if numerator[0] != 0:
        raise AssertionError(f"numerator constant term is {numerator[0]}, expected exact cancellation")
    return numerator.shift_down(1) / 2


def indecomposable_from_total(u: PowerSeries) -> PowerSeries:
    """u1 = 1 - 1/u, the inverse of u = 1/(1 - u1)."""
    if u[0] != 1:
        raise ValueError(f"constant term must be 1, got {u[0]}")
    return 1 - 1 / u


def _horner(poly: Sequence, x: float) -> float:
    acc = 0.0
    for c in reversed(poly):
        acc = acc * x + float(c)
    return acc


def find_real_root(poly: Sequence, lo: float, hi: float, tol: float = 1e-12) -> float:
    """Bisection root of ``poly`` (coefficients in increasing degree) inside a sign-changing bracket.

    >>> round(find_real_root([1, -2], 0.0, 1.0), 9)
    0.5
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    flo, fhi = _horner(poly, lo), _horner(poly, hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise ValueError(f"no sign change on [{lo}, {hi}]: p(lo)={flo}, p(hi)={fhi}")
    while hi - lo > tol:
        mid = (lo + hi) / 2
        fmid = _horner(poly, mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return (lo + hi) / 2


def growth_profile(counts) -> list[tuple[int, float]]:
    """(n, count**(1/n)) for every row with n >= 1.

    Accepts a CountTable, a mapping n -> count, or (n, count) pairs. Roots
    are taken through logarithms so counts of any size are fine.
    """
    if hasattr(counts, "rows"):
        rows = counts.rows
    elif isinstance(counts, Mapping):
        rows = sorted(counts.items())
    else:
        rows = list(counts)
    out = []
    for n, c in rows:
        if c <= 0:
            raise ValueError(f"count at n={n} is {c}; growth needs positive counts")
        if n >= 1:
            out.append((n, math.exp(math.log(c) / n)))
    return out
