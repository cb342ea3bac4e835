import pytest

from subwords import _kernels

KERNELS = ("arch_ends", "first_occurrences", "scan_conjugates", "alpha_table")


@pytest.fixture(params=sorted(_kernels.BACKENDS))
def backend(request, monkeypatch):
    """Run the test once per kernel backend."""
    impl = _kernels.BACKENDS[request.param]
    for name in KERNELS:
        monkeypatch.setattr(_kernels, name, getattr(impl, name))
    return request.param


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running randomized checks")
