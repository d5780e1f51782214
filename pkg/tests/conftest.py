import pytest

from lambert_factor.arithmetic import get_pair


def partitions_upto(N):
    """p(0..N) by the parts-at-most-k counting DP, independent of pentagonal numbers."""
    ways = [1] + [0] * N
    for part in range(1, N + 1):
        for total in range(part, N + 1):
            ways[total] += ways[total - part]
    return ways


@pytest.fixture(params=["mu", "phi", "lambda", ("sigma", 0), ("sigma", 1), ("sigma", 2)],
                ids=["mu", "phi", "lambda", "sigma0", "sigma1", "sigma2"])
def pair(request):
    if isinstance(request.param, tuple):
        return get_pair(*request.param)
    return get_pair(request.param)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
