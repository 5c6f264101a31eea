import sys

import pytest

from comer import _backend

BACKENDS = sorted(_backend.BACKENDS)


@pytest.fixture(params=BACKENDS)
def backend(request):
    return request.param


def brute_cosets(p, n, g):
    """Cosets straight from the definition, as Python sets."""
    k = (p - 1) // n
    return [{pow(g, a * n + i, p) for a in range(k)} for i in range(n)]


def brute_forbidden_grid(p, n, g):
    """grid[i][j] is True when no x in X_0, y in X_i has x + y in X_j."""
    cosets = brute_cosets(p, n, g)
    grid = []
    for i in range(n):
        sums = {(x + y) % p for x in cosets[0] for y in cosets[i]}
        grid.append([not (sums & cosets[j]) for j in range(n)])
    return grid


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "REPORT", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in lines:
        terminalreporter.write_line(line)
