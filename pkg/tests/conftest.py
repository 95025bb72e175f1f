import numpy as np
import pytest

from bidiagbounds import make_bidiagonal


def random_bidiag(rng, n, diag_range=(0.5, 2.0), super_range=(0.5, 2.0)):
    return make_bidiagonal(
        rng.uniform(*diag_range, size=n),
        rng.uniform(*super_range, size=max(n - 1, 0)),
    )


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def two_by_two():
    """The running 2x2 example: B^T B = [[1,1],[1,2]], J = (3, 7)."""
    return make_bidiagonal([1.0, 1.0], [1.0])


# one line per acceptance criterion, shown after the run (filled in by
# test_acceptance._report; kept here so the summary hook can see them)
acceptance_lines: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)
