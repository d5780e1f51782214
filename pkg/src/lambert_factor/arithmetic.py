"""Classical multiplicative functions and their Lambert-series partners."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from math import isqrt, prod
from typing import Callable, Literal

__all__ = [
    "FunctionPair",
    "factorize",
    "divisors",
    "moebius",
    "euler_phi",
    "liouville_lambda",
    "sigma_alpha",
    "divisor_sum_transform",
    "is_square",
    "builtin_pairs",
    "get_pair",
    "PAIR_NAMES",
]

ArithFn = Callable[[int], int]

_prime_lock = threading.Lock()
_primes: list[int] = [2, 3, 5, 7, 11, 13]
_sieved_to = 13


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return [i for i, v in enumerate(flags) if v]


def _primes_upto(limit: int) -> list[int]:
    """A list containing at least every prime <= limit."""
    global _primes, _sieved_to
    if _sieved_to >= limit:
        return _primes
    with _prime_lock:
        if _sieved_to < limit:
            target = max(limit, 2 * _sieved_to)
            _primes = _sieve(target)
            _sieved_to = target
        return _primes


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of ``n`` as ascending (prime, exponent) pairs."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = []
    for p in _primes_upto(isqrt(n)):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**j for d in divs for j in range(e + 1)]
    return sorted(divs)


def moebius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def liouville_lambda(n: int) -> int:
    return -1 if sum(e for _, e in factorize(n)) % 2 else 1


def sigma_alpha(n: int, alpha: int = 1) -> int:
    """Sum of alpha-th powers of the divisors of ``n``; alpha must be a nonnegative int."""
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError("alpha must be a nonnegative integer")
    alpha = int(alpha)
    if alpha == 0:
        return prod(e + 1 for _, e in factorize(n))
    return prod((p ** (alpha * (e + 1)) - 1) // (p**alpha - 1) for p, e in factorize(n))


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def divisor_sum_transform(f: ArithFn, n: int) -> int:
    """sum_{d | n} f(d)."""
    return sum(f(d) for d in divisors(n))


@dataclass(frozen=True)
class FunctionPair:
    """An arithmetic function ``f`` with its divisor sum ``g``.

    Both are evaluated only on positive integers; ``f_at``/``g_at`` extend
    them by zero to n < 1.
    """

    name: str
    f: ArithFn
    g: ArithFn
    origin: Literal["builtin", "tabulated"] = "builtin"
    params: dict = field(default_factory=dict, compare=False)

    def f_at(self, n: int) -> int:
        return self.f(n) if n >= 1 else 0

    def g_at(self, n: int) -> int:
        return self.g(n) if n >= 1 else 0


def _mu_pair() -> FunctionPair:
    return FunctionPair("mu", moebius, lambda n: int(n == 1))


def _phi_pair() -> FunctionPair:
    return FunctionPair("phi", euler_phi, lambda n: n)


def _sigma_pair(alpha: int) -> FunctionPair:
    if alpha < 0 or int(alpha) != alpha:
        raise ValueError("alpha must be a nonnegative integer")
    alpha = int(alpha)
    return FunctionPair(
        "sigma",
        lambda n: n**alpha,
        lambda n: sigma_alpha(n, alpha),
        params={"alpha": alpha},
    )


def _lambda_pair() -> FunctionPair:
    return FunctionPair("lambda", liouville_lambda, lambda n: int(is_square(n)))


PAIR_NAMES = ("mu", "phi", "sigma", "lambda")


def get_pair(name: str, alpha: int = 1) -> FunctionPair:
    """Look up a builtin pair by name; ``alpha`` only matters for ``sigma``."""
    if name == "mu":
        return _mu_pair()
    if name == "phi":
        return _phi_pair()
    if name == "sigma":
        return _sigma_pair(alpha)
    if name == "lambda":
        return _lambda_pair()
    raise KeyError(f"unknown pair {name!r}; expected one of {', '.join(PAIR_NAMES)}")


def builtin_pairs(alpha: int = 1) -> list[FunctionPair]:
    """The four classical Lambert pairs (mu, [n=1]), (phi, n), (n^a, sigma_a), (lambda, [square])."""
    return [get_pair(name, alpha) for name in PAIR_NAMES]
