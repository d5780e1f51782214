"""Lambert series factorization: A_n, its inverse, B vectors and recurrences.

Everything here is exact integer arithmetic. The pentagonal sums use
``enumerate_pentagonal`` for their ranges; terms whose argument drops below 1
vanish because f and g are extended by zero.
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt
from operator import mul

from .arithmetic import FunctionPair, divisors, is_square, moebius
from .pentagonal import enumerate_pentagonal, euler_coefficient, partition_number, pentagonal_bound

__all__ = [
    "InconsistencyError",
    "UnitLowerTriangular",
    "BVector",
    "AfSequence",
    "AverageOrderTable",
    "entry_a",
    "build_A",
    "build_A_inverse",
    "a_f_sequence",
    "compute_B",
    "recover_f",
    "g_recurrence",
    "sigma_recurrence",
    "SIGMA_INTERPRETATIONS",
    "DEFAULT_SIGMA_INTERPRETATION",
    "select_sigma_interpretation",
    "closed_B_mu",
    "closed_B_phi",
    "closed_B_lambda",
    "q_polynomial",
    "distinct_partition_stat",
]

GSource = FunctionPair | Callable[[int], int]


class InconsistencyError(RuntimeError):
    """Two independent solution routes disagreed; indicates a construction bug."""


@dataclass(frozen=True)
class UnitLowerTriangular:
    """Dense lower-triangular integer matrix with ones on the diagonal.

    ``rows[r]`` holds the entries (r+1, 1) ... (r+1, r+1); indexing through
    ``[i, j]`` is 1-based like the matrices in the literature.
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        for r, row in enumerate(self.rows):
            if len(row) != r + 1:
                raise ValueError(f"row {r + 1} has {len(row)} entries, expected {r + 1}")
            if row[r] != 1:
                raise ValueError(f"diagonal entry ({r + 1},{r + 1}) is {row[r]}, not 1")

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"({i},{j}) outside a {self.n}x{self.n} matrix")
        return self.rows[i - 1][j - 1] if j <= i else 0

    def row(self, i: int) -> tuple[int, ...]:
        """Lower-triangular part of row ``i`` (1-based)."""
        return self.rows[i - 1]

    def to_dense(self) -> list[list[int]]:
        n = self.n
        return [list(row) + [0] * (n - len(row)) for row in self.rows]

    def leading(self, k: int) -> "UnitLowerTriangular":
        return UnitLowerTriangular(self.rows[:k])

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.n:
            raise ValueError("dimension mismatch")
        return [sum(map(mul, row, vec)) for row in self.rows]

    def matmul(self, other: "UnitLowerTriangular") -> list[list[int]]:
        """Exact product self @ other as a dense lower-triangular list of rows."""
        if other.n != self.n:
            raise ValueError("dimension mismatch")
        n = self.n
        # columns of ``other`` restricted to their nonzero part (rows j..n)
        cols = [[other.rows[k][j] for k in range(j, n)] for j in range(n)]
        out = []
        for i, row in enumerate(self.rows):
            out.append([sum(map(mul, row[j:], cols[j])) for j in range(i + 1)])
        return out

    def solve_forward(self, rhs: Sequence[int]) -> list[int]:
        """Solve self @ x = rhs by forward substitution (exact, no division)."""
        if len(rhs) != self.n:
            raise ValueError("dimension mismatch")
        x: list[int] = []
        for i, row in enumerate(self.rows):
            x.append(rhs[i] - sum(map(mul, row[:i], x)))
        return x


def is_identity(rows: Sequence[Sequence[int]]) -> bool:
    return all(v == (i == j) for i, row in enumerate(rows) for j, v in enumerate(row))


@dataclass(frozen=True)
class BVector:
    """B_{g_f,m} for m = 0 .. n-1."""

    values: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class AfSequence:
    """a_f(0..N); a_f(0) = 1."""

    values: tuple[int, ...]


@dataclass(frozen=True)
class AverageOrderTable:
    """Prefix sums Sigma_{g_f,x} for x = 0 .. N (Sigma_0 = 0)."""

    values: tuple[int, ...]
    interpretation: str


def _euler_table(n: int) -> list[int]:
    return [euler_coefficient(m) for m in range(n + 1)]


def entry_a(n: int, i: int) -> int:
    """a_{n,i}: signed count of (k, s, b) with (s+1)i + k(3k+b)/2 = n."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    return sum(euler_coefficient(n - j) for j in range(i, n + 1, i))


@lru_cache(maxsize=32)
def build_A(n: int) -> UnitLowerTriangular:
    if n < 1:
        raise ValueError("n must be positive")
    eu = _euler_table(n)
    rows = tuple(
        tuple(sum(eu[r - j] for j in range(i, r + 1, i)) for i in range(1, r + 1))
        for r in range(1, n + 1)
    )
    return UnitLowerTriangular(rows)


@lru_cache(maxsize=32)
def build_A_inverse(n: int) -> UnitLowerTriangular:
    """Rows of A_n^{-1} from the closed form sum_{d|r} p(d-i) mu(r/d)."""
    if n < 1:
        raise ValueError("n must be positive")
    rows = []
    for r in range(1, n + 1):
        terms = [(d, moebius(r // d)) for d in divisors(r)]
        terms = [(d, m) for d, m in terms if m]
        rows.append(
            tuple(
                sum(m * partition_number(d - i) for d, m in terms if d >= i)
                for i in range(1, r + 1)
            )
        )
    return UnitLowerTriangular(tuple(rows))


def a_f_sequence(pair: FunctionPair, N: int) -> AfSequence:
    """a_f(n) = sum_{i<=n} f(i) a_{n,i} plus [n = 0]."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    vals = [1]
    if N >= 1:
        A = build_A(N)
        fs = [pair.f(i) for i in range(1, N + 1)]
        vals.extend(sum(map(mul, row, fs)) for row in A.rows)
    return AfSequence(tuple(vals))


def _g_values(g: GSource, n: int) -> list[int]:
    """g(0..n) with g(0) = 0."""
    fn = g.g if isinstance(g, FunctionPair) else g
    return [0] + [fn(m) for m in range(1, n + 1)]


def compute_B(g: GSource, n: int) -> BVector:
    """B_m = g(m+1) + sum_{omega <= m} (-1)^k g(m+1-omega), m = 0 .. n-1."""
    if n < 1:
        raise ValueError("n must be positive")
    gv = _g_values(g, n)
    terms = enumerate_pentagonal(n - 1)
    out = []
    for m in range(n):
        total = gv[m + 1]
        for t in terms:
            if t.omega > m:
                break
            total += t.sign * gv[m + 1 - t.omega]
        out.append(total)
    return BVector(tuple(out))


def recover_f(g: GSource, n: int) -> list[int]:
    """Recover f(1..n) from its divisor sum g by solving A_n f = B twice.

    Route (a) multiplies the closed-form inverse into B, route (b) forward
    substitutes on A_n. Disagreement raises InconsistencyError.
    """
    B = list(compute_B(g, n).values)
    via_inverse = build_A_inverse(n).apply(B)
    via_forward = build_A(n).solve_forward(B)
    if via_inverse != via_forward:
        bad = next(k for k in range(n) if via_inverse[k] != via_forward[k])
        raise InconsistencyError(
            f"inverse and forward-substitution solutions differ first at f({bad + 1}): "
            f"{via_inverse[bad]} != {via_forward[bad]}"
        )
    return via_forward


def g_recurrence(pair: FunctionPair, N: int) -> list[int]:
    """g_f(1..N) from g(n+1) = sum (-1)^(k+1) g(n+1-omega) + a_f(n+1)."""
    if N < 1:
        raise ValueError("N must be positive")
    af = a_f_sequence(pair, N).values
    terms = enumerate_pentagonal(N)
    g = [0] * (N + 1)
    for n in range(N):
        total = af[n + 1]
        for t in terms:
            if t.omega > n:
                break
            total -= t.sign * g[n + 1 - t.omega]
        g[n + 1] = total
    return g[1:]


# Each interpretation maps (pentagonal part for b=-1, part for b=+1, a_f, n) to
# Sigma_{n+1}. The pentagonal parts are sum_k (-1)^(k+1) Sigma_{n+1-omega}.
SIGMA_INTERPRETATIONS: dict[str, Callable[[int, int, Sequence[int], int], int]] = {
    # a_f(1) + ... + a_f(n+1) added once, after the sum over b
    "outside": lambda lo, hi, af, n: lo + hi + sum(af[1 : n + 2]),
    # literal reading: sum_{k=1..n} a_f(k+1) inside the b-sum, so counted twice
    "inside-as-printed": lambda lo, hi, af, n: lo + hi + 2 * sum(af[2 : n + 2]),
    # same lower index as printed but taken once
    "outside-as-printed": lambda lo, hi, af, n: lo + hi + sum(af[2 : n + 2]),
    # full a_f partial sum, but inside the b-sum
    "inside": lambda lo, hi, af, n: lo + hi + 2 * sum(af[1 : n + 2]),
}
DEFAULT_SIGMA_INTERPRETATION = "outside"


def sigma_recurrence(
    pair: FunctionPair, N: int, interpretation: str = DEFAULT_SIGMA_INTERPRETATION
) -> AverageOrderTable:
    """Sigma_{g_f,x} for x = 0..N from the average-order recurrence.

    Sigma_1 = g_f(1) = f(1) seeds the recurrence, which then runs for n >= 1.
    """
    if N < 1:
        raise ValueError("N must be positive")
    step = SIGMA_INTERPRETATIONS[interpretation]
    af = a_f_sequence(pair, N).values
    # the extra k allowed past the usual bound only reaches Sigma_{<=0} = 0
    terms = enumerate_pentagonal(N)
    S = [0, pair.f(1)] + [0] * (N - 1)
    for n in range(1, N):
        part = {-1: 0, 1: 0}
        for t in terms:
            if t.omega > n + 1:
                break
            part[t.b] -= t.sign * S[n + 1 - t.omega]
        S[n + 1] = step(part[-1], part[1], af, n)
    return AverageOrderTable(tuple(S), interpretation)


def select_sigma_interpretation(
    pairs: Sequence[FunctionPair], N: int
) -> tuple[str | None, dict[str, int | None]]:
    """Run every candidate reading against direct prefix sums.

    Returns the (first) interpretation that matches for every pair, plus a map
    from each interpretation to the smallest failing x (None when it passes).
    """
    first_failure: dict[str, int | None] = {}
    for name in SIGMA_INTERPRETATIONS:
        worst = None
        for pair in pairs:
            got = sigma_recurrence(pair, N, name).values
            acc = 0
            for x in range(1, N + 1):
                acc += pair.g(x)
                if got[x] != acc:
                    worst = x if worst is None else min(worst, x)
                    break
        first_failure[name] = worst
    chosen = next((k for k, v in first_failure.items() if v is None), None)
    return chosen, first_failure


def _pentagonal_sum(m: int, summand: Callable[[int, int], int]) -> int:
    """sum over b = +-1, k = 1..floor((sqrt(24m+1)-b)/6) of summand(k, omega)."""
    total = 0
    for b in (-1, 1):
        for k in range(1, pentagonal_bound(m, b) + 1):
            total += summand(k, k * (3 * k + b) // 2)
    return total


def _neg1(k: int) -> int:
    return -1 if k % 2 else 1


def closed_B_mu(m: int) -> int:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return int(m == 0) + _pentagonal_sum(m, lambda k, w: _neg1(k) * (m + 1 - w == 1))


def closed_B_phi(m: int) -> int:
    """Closed form of B_m for g(n) = n in terms of the two pentagonal bounds."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    s = isqrt(24 * m + 1)
    u1 = (s + 1) // 6
    u2 = (s - 1) // 6
    e1, e2 = _neg1(u1), _neg1(u2)
    inner = (
        8
        - 5 * e1
        - 4 * (-2 + e1 + e2) * m
        + 2 * e1 * u1 * (3 * u1 + 2)
        + e2 * (6 * u2 * u2 + 8 * u2 - 3)
    )
    q, r = divmod(inner, 8)
    if r:
        raise InconsistencyError(f"closed form for B_{m}(phi) is not integral")
    return m + 1 - q


def closed_B_lambda(m: int) -> int:
    if m < 0:
        raise ValueError("m must be nonnegative")
    return int(is_square(m + 1)) - _pentagonal_sum(
        m, lambda k, w: -_neg1(k) * is_square(m + 1 - w)
    )


def q_polynomial(n: int) -> list[int]:
    """Coefficients (constant first) of Q_n(q) = 1 - sum_b sum_k (-1)^k q^omega."""
    if n < 1:
        raise ValueError("n must be positive")
    terms = enumerate_pentagonal(n)
    coeffs = [0] * (terms[-1].omega + 1)
    coeffs[0] = 1
    for t in terms:
        coeffs[t.omega] -= t.sign
    return coeffs


def _distinct_partitions(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for part in range(min(n, max_part), 0, -1):
        for rest in _distinct_partitions(n - part, part - 1):
            yield (part,) + rest


def distinct_partition_stat(n: int, i: int) -> int:
    """s_o(n, i) - s_e(n, i) by enumerating partitions of n into distinct parts."""
    if not 1 <= i <= n:
        raise ValueError("need 1 <= i <= n")
    total = 0
    for parts in _distinct_partitions(n, n):
        if i in parts:
            total += 1 if len(parts) % 2 else -1
    return total
