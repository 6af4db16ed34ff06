import pytest
from hypothesis import HealthCheck, settings

from depolab import parse_circuit

settings.register_profile(
    "depolab",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("depolab")


@pytest.fixture
def bell_circuit():
    return parse_circuit("qubits 2\nH 0\nCNOT 0 1\n")


@pytest.fixture
def ghz_circuit():
    return parse_circuit("qubits 3\nH 0\nCNOT 0 1\nCNOT 1 2\n")


@pytest.fixture
def plus_circuit():
    return parse_circuit("qubits 1\nH 0\n")
