"""Generalized pentagonal numbers, Euler's (q;q)_inf coefficients and p(n)."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from math import isqrt

__all__ = [
    "PentagonalTerm",
    "PartitionTable",
    "pentagonal_bound",
    "enumerate_pentagonal",
    "euler_coefficient",
    "partition_number",
]


@dataclass(frozen=True, order=True)
class PentagonalTerm:
    """One exponent k(3k+b)/2 of the pentagonal series, ordered by ``omega``."""

    omega: int
    k: int
    b: int

    @classmethod
    def make(cls, k: int, b: int) -> "PentagonalTerm":
        if k < 1 or b not in (-1, 1):
            raise ValueError(f"invalid pentagonal index (k={k}, b={b})")
        return cls(omega=k * (3 * k + b) // 2, k=k, b=b)

    @property
    def sign(self) -> int:
        """(-1)**k, the coefficient of q**omega in (q;q)_inf."""
        return -1 if self.k % 2 else 1


def pentagonal_bound(n: int, b: int) -> int:
    """Largest k >= 0 with k(3k+b)/2 <= n, i.e. floor((sqrt(24n+1) - b)/6)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if b not in (-1, 1):
        raise ValueError("b must be +1 or -1")
    # floor((y - b)/6) == floor((floor(y) - b)/6) for integer b
    return (isqrt(24 * n + 1) - b) // 6


def enumerate_pentagonal(n: int) -> list[PentagonalTerm]:
    """All generalized pentagonal terms with 1 <= omega <= n, ascending."""
    terms = [
        PentagonalTerm.make(k, b)
        for b in (-1, 1)
        for k in range(1, pentagonal_bound(n, b) + 1)
    ]
    terms.sort()
    return terms


def euler_coefficient(n: int) -> int:
    """[q^n] (q;q)_inf."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    for b in (-1, 1):
        k = pentagonal_bound(n, b)
        if k >= 1 and k * (3 * k + b) // 2 == n:
            return -1 if k % 2 else 1
    return 0


class PartitionTable:
    """Memoized p(0..capacity), grown by doubling.

    Growth happens under a lock and the published list is replaced wholesale,
    so readers never see a half-filled table.
    """

    def __init__(self, capacity: int = 64) -> None:
        self._lock = threading.Lock()
        self.values: list[int] = [1]
        self._extend(capacity)

    @property
    def capacity(self) -> int:
        return len(self.values) - 1

    def _extend(self, target: int) -> None:
        vals = list(self.values)
        for m in range(len(vals), target + 1):
            total = 0
            for t in enumerate_pentagonal(m):
                total += -t.sign * vals[m - t.omega]
            vals.append(total)
        self.values = vals

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        vals = self.values
        if n < len(vals):
            return vals[n]
        with self._lock:
            if n > self.capacity:
                self._extend(max(n, 2 * self.capacity))
            return self.values[n]


_PARTITIONS = PartitionTable()


def partition_number(n: int) -> int:
    """Euler's partition function p(n) (0 for negative n)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _PARTITIONS[n]
