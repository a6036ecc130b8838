import numpy as np
import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_unit(rng, n=None):
    x = rng.normal(size=(3,) if n is None else (n, 3))
    return x / np.linalg.norm(x, axis=-1, keepdims=True)


def rodrigues(axis, angle):
    """Right-handed (counterclockwise) rotation matrix; independent of the package."""
    n = np.asarray(axis, dtype=float)
    n = n / np.linalg.norm(n)
    k = np.array([[0, -n[2], n[1]], [n[2], 0, -n[0]], [-n[1], n[0], 0]])
    return np.eye(3) + np.sin(angle) * k + (1 - np.cos(angle)) * (k @ k)


def convention_matrix(axis, angle):
    # the package's rotation (n, phi) turns vectors clockwise about n
    return rodrigues(axis, -angle)
