"""Invariant sweeps behind ``lambert-factor verify``."""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field

from .arithmetic import FunctionPair, divisor_sum_transform, get_pair
from .factorization import (
    DEFAULT_SIGMA_INTERPRETATION,
    build_A,
    build_A_inverse,
    closed_B_lambda,
    closed_B_mu,
    closed_B_phi,
    compute_B,
    distinct_partition_stat,
    entry_a,
    g_recurrence,
    is_identity,
    recover_f,
    select_sigma_interpretation,
)
from .series import series_a_ni

__all__ = ["SuiteResult", "SUITES", "run_suite", "run_suites", "verification_pairs"]

MAX_FAILURES = 10
DISTINCT_PARTITION_LIMIT = 25


@dataclass
class SuiteResult:
    name: str
    n: int
    passed: bool = True
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    seconds: float = 0.0

    def fail(self, message: str) -> None:
        self.passed = False
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(message)

    def to_dict(self) -> dict:
        return asdict(self)


def verification_pairs() -> list[FunctionPair]:
    """mu, phi, lambda and sigma at alpha = 0, 1, 2."""
    pairs = [get_pair("mu"), get_pair("phi"), get_pair("lambda")]
    pairs += [get_pair("sigma", alpha) for alpha in (0, 1, 2)]
    return pairs


def _label(pair: FunctionPair) -> str:
    if "alpha" in pair.params:
        return f"{pair.name}[alpha={pair.params['alpha']}]"
    return pair.name


def suite_inverse(res: SuiteResult) -> None:
    N = res.n
    A, Ainv = build_A(N), build_A_inverse(N)
    for n in range(1, N + 1):
        res.checks += 1
        if not is_identity(A.leading(n).matmul(Ainv.leading(n))):
            res.fail(f"A_{n} * A_{n}^-1 != I")


def suite_entries(res: SuiteResult) -> None:
    N = res.n
    A = build_A(N)
    for n in range(1, N + 1):
        for i in range(1, n + 1):
            res.checks += 1
            direct = entry_a(n, i)
            if A[n, i] != direct:
                res.fail(f"build_A({n})[{n},{i}] = {A[n, i]} but entry_a = {direct}")
            oracle = series_a_ni(n, i)
            if oracle != direct:
                res.fail(f"a_({n},{i}): entry_a = {direct}, series = {oracle}")
            if n <= DISTINCT_PARTITION_LIMIT:
                stat = distinct_partition_stat(n, i)
                if stat != direct:
                    res.fail(f"a_({n},{i}): entry_a = {direct}, s_o - s_e = {stat}")
    res.details["distinct_partition_limit"] = min(N, DISTINCT_PARTITION_LIMIT)


def suite_roundtrip(res: SuiteResult) -> None:
    N = res.n
    for pair in verification_pairs():
        res.checks += 1
        expected = [pair.f(k) for k in range(1, N + 1)]
        got = recover_f(pair, N)
        if got != expected:
            k = next(j for j in range(N) if got[j] != expected[j])
            res.fail(f"{_label(pair)}: recovered f({k + 1}) = {got[k]}, expected {expected[k]}")


def suite_recurrence(res: SuiteResult) -> None:
    N = res.n
    for pair in verification_pairs():
        res.checks += 1
        got = g_recurrence(pair, N)
        for k, v in enumerate(got, start=1):
            truth = divisor_sum_transform(pair.f, k)
            if v != truth:
                res.fail(f"{_label(pair)}: g({k}) = {v} by recurrence, {truth} by divisor sum")
                break


def suite_closed_b(res: SuiteResult) -> None:
    N = res.n
    forms: dict[str, Callable[[int], int]] = {
        "mu": closed_B_mu,
        "phi": closed_B_phi,
        "lambda": closed_B_lambda,
    }
    for name, closed in forms.items():
        B = compute_B(get_pair(name), N + 1).values
        for m in range(N + 1):
            res.checks += 1
            if closed(m) != B[m]:
                res.fail(f"{name}: closed B_{m} = {closed(m)}, compute_B = {B[m]}")
                break


def suite_sigma(res: SuiteResult) -> None:
    chosen, failures = select_sigma_interpretation(verification_pairs(), res.n)
    res.checks += len(failures)
    res.details["selected"] = chosen
    res.details["first_failure"] = failures
    if chosen != DEFAULT_SIGMA_INTERPRETATION:
        res.fail(f"oracle selected {chosen!r}, library default is {DEFAULT_SIGMA_INTERPRETATION!r}")
    rejected = [k for k in failures if k != DEFAULT_SIGMA_INTERPRETATION]
    for name in rejected:
        if failures[name] is None:
            res.fail(f"rejected interpretation {name!r} also matches the prefix sums")


SUITES: dict[str, Callable[[SuiteResult], None]] = {
    "inverse": suite_inverse,
    "roundtrip": suite_roundtrip,
    "entries": suite_entries,
    "recurrence": suite_recurrence,
    "closedB": suite_closed_b,
    "sigma": suite_sigma,
}


def run_suite(name: str, n: int) -> SuiteResult:
    if n < 1:
        raise ValueError("n must be positive")
    res = SuiteResult(name=name, n=n)
    t0 = time.perf_counter()
    SUITES[name](res)
    res.seconds = round(time.perf_counter() - t0, 3)
    return res


def run_suites(n: int, names: list[str] | None = None) -> list[SuiteResult]:
    return [run_suite(name, n) for name in (names or list(SUITES))]
