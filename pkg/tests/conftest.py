import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from qgfft import bowtie, complete_bipartite, cycle_graph

settings.register_profile(
    "default", max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

GRAPHS = {
    "C3": cycle_graph(3),
    "C4": cycle_graph(4),
    "bowtie": bowtie(),
    "K42": complete_bipartite(4, 2),
}


@pytest.fixture(params=sorted(GRAPHS))
def graph(request):
    return GRAPHS[request.param]


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def random_signal(rng, size):
    return rng.normal(size=size) + 1j * rng.normal(size=size)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
