"""Truncated integer power series in q.

Deliberately naive: this module is the brute-force oracle the matrix and
recurrence code is checked against, so it shares no code with them beyond
the arithmetic functions themselves.
"""

from __future__ import annotations

from collections.abc import Iterable
from functools import lru_cache

from .arithmetic import FunctionPair

__all__ = [
    "TruncatedSeries",
    "add",
    "mul",
    "coefficient",
    "monomial",
    "geometric_reciprocal",
    "pochhammer_finite",
    "lambert_partial_sum",
    "partition_series",
    "series_a_ni",
    "product_coefficient",
]


class TruncatedSeries:
    """sum_{j<=order} coeffs[j] q^j, exact modulo q^(order+1)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None) -> None:
        cs = [int(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [0] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a series needs at least one coefficient")
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def __getitem__(self, n: int) -> int:
        return coefficient(self, n)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other.scale(-1))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries(c * x for x in self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    n = min(a.order, b.order)
    return TruncatedSeries(a.coeffs[j] + b.coeffs[j] for j in range(n + 1))


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the smaller order."""
    n = min(a.order, b.order)
    ac, bc = a.coeffs, b.coeffs
    out = [0] * (n + 1)
    for i in range(n + 1):
        ai = ac[i]
        if ai:
            for j in range(n + 1 - i):
                out[i + j] += ai * bc[j]
    return TruncatedSeries(out)


def coefficient(a: TruncatedSeries, n: int) -> int:
    if not 0 <= n <= a.order:
        raise IndexError(f"coefficient q^{n} is outside the truncation order {a.order}")
    return a.coeffs[n]


def monomial(power: int, order: int, c: int = 1) -> TruncatedSeries:
    """c*q^power truncated at ``order`` (zero if power > order)."""
    out = [0] * (order + 1)
    if power <= order:
        out[power] = c
    return TruncatedSeries(out)


def geometric_reciprocal(i: int, order: int) -> TruncatedSeries:
    """1/(1 - q^i) = sum_s q^(s*i)."""
    if i < 1:
        raise ValueError("i must be positive")
    out = [0] * (order + 1)
    for j in range(0, order + 1, i):
        out[j] = 1
    return TruncatedSeries(out)


@lru_cache(maxsize=256)
def pochhammer_finite(n: int, order: int) -> TruncatedSeries:
    """(q;q)_n = prod_{i=1..n} (1 - q^i), built by literally multiplying the factors."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    acc = monomial(0, order)
    for i in range(1, n + 1):
        acc = mul(acc, add(monomial(0, order), monomial(i, order, -1)))
    return acc


def lambert_partial_sum(pair: FunctionPair, m: int, order: int) -> TruncatedSeries:
    """sum_{n=1..m+1} f(n) q^n / (1 - q^n)."""
    if order < m:
        raise ValueError("order must be at least m")
    acc = TruncatedSeries([0] * (order + 1))
    for n in range(1, m + 2):
        term = mul(monomial(n, order, pair.f(n)), geometric_reciprocal(n, order))
        acc = add(acc, term)
    return acc


def partition_series(order: int) -> TruncatedSeries:
    """1/(q;q)_inf as the product of geometric series (independent of the pentagonal recurrence)."""
    acc = monomial(0, order)
    for i in range(1, order + 1):
        acc = mul(acc, geometric_reciprocal(i, order))
    return acc


def series_a_ni(n: int, i: int) -> int:
    """[q^n] q^i/(1-q^i) (q;q)_inf, via an order-n truncated product."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    lhs = mul(monomial(i, n), geometric_reciprocal(i, n))
    return product_coefficient(lhs, pochhammer_finite(n, n), n)


def product_coefficient(a: TruncatedSeries, b: TruncatedSeries, n: int) -> int:
    """coefficient(mul(a, b), n) without forming the whole product."""
    if not 0 <= n <= min(a.order, b.order):
        raise IndexError(f"coefficient q^{n} is outside the truncation order")
    ac, bc = a.coeffs, b.coeffs
    return sum(ac[j] * bc[n - j] for j in range(n + 1))
