"""Shared fixtures: graphs, complexes and exchange modules, built once per n"""

import pytest

from cluster import ExchangeModule, build, build_complex, compute_table

_graphs = {}
_complexes = {}
_modules = {}


def graph_for(n):
    if n not in _graphs:
        _graphs[n] = build(n)
    return _graphs[n]


def complex_for(n):
    if n not in _complexes:
        _complexes[n] = build_complex(n, graph_for(n))
    return _complexes[n]


def module_for(n):
    if n not in _modules:
        _modules[n] = ExchangeModule(n, graph=graph_for(n))
    return _modules[n]


@pytest.fixture(scope="session")
def graphs():
    return graph_for


@pytest.fixture(scope="session")
def complexes():
    return complex_for


@pytest.fixture(scope="session")
def modules():
    return module_for


@pytest.fixture(scope="session")
def pentagon_table():
    """Cluster variables of the pentagon (n = 2)"""
    return module_for(2).table


@pytest.fixture(scope="session")
def hexagon_table():
    return compute_table(3, graph_for(3))


@pytest.fixture(autouse=True)
def _isolated_env(monkeypatch, tmp_path):
    """Keep a developer's .env limits out of the tests"""
    for var in ("ASSOC_MAX_N", "ASSOC_MAX_NODES", "ASSOC_LOG_LEVEL", "ASSOC_ARTIFACT_MAX_AGE"):
        monkeypatch.delenv(var, raising=False)
    monkeypatch.setenv("ASSOC_OUTPUT_DIR", str(tmp_path))
