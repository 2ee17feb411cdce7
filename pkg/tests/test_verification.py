import pytest

from qgfft.graph import Graph, GraphValidationError
from qgfft.verification import run_checks

from conftest import GRAPHS


@pytest.mark.parametrize("N", [2, 8, 64])
def test_all_checks_pass(graph, N):
    checks = run_checks(graph, N)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    names = {c.name for c in checks}
    assert "completeness" in names and "Parseval" in names
    assert ("fft_forward vs naive_forward" in names) == (N <= 32)


def test_tolerance_override():
    checks = run_checks(GRAPHS["C3"], 4, tolerance=0.0)
    assert all(c.tolerance == 0.0 for c in checks)
    assert any(not c.passed for c in checks)


def test_deterministic():
    a = [c.to_json() for c in run_checks(GRAPHS["bowtie"], 8)]
    b = [c.to_json() for c in run_checks(GRAPHS["bowtie"], 8)]
    assert a == b


def test_invalid_graph():
    with pytest.raises(GraphValidationError):
        run_checks(Graph(3, ((0, 1), (1, 2))), 4)
