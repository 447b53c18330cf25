# tests/conftest.py

import pytest
from click.testing import CliRunner
from fastapi.testclient import TestClient

from config import settings
from main import app
from services.enumeration import Corpus
from services.graph_core import Graph
from services.pattern_detector import CATALOG


@pytest.fixture(scope="module")
def test_client():
    return TestClient(app)


@pytest.fixture
def cli_runner():
    return CliRunner()


@pytest.fixture(autouse=True)
def mock_settings(monkeypatch):
    """Mock das configurações globais com valores pequenos para os testes"""
    monkeypatch.setattr(settings, "seeds_raw", "0-4")
    monkeypatch.setattr(settings, "max_n_raw", "4")
    monkeypatch.setattr(settings, "corpus_filter", "connected")
    monkeypatch.setattr(settings, "workers_raw", "1")


# Grafos nomeados usados em vários módulos de teste

@pytest.fixture
def hajos():
    """x=0, y=1, z=2 formam o triângulo central; a=3 (xy), b=4 (xz), c=5 (yz)"""
    return CATALOG["hajos"].graph


@pytest.fixture
def gem():
    """P4 0-1-2-3 com o vértice 4 universal"""
    return CATALOG["gem"].graph


@pytest.fixture
def dart():
    return CATALOG["dart"].graph


@pytest.fixture
def claw():
    return CATALOG["claw"].graph


@pytest.fixture
def butterfly():
    """Centro 0 ligado aos caminhos 1-2-3 e 4-5-6"""
    return CATALOG["butterfly"].graph


@pytest.fixture
def two_p3():
    return CATALOG["2P3"].graph


@pytest.fixture
def p4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4():
    return Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])


@pytest.fixture
def c4():
    return Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def p3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


# Corpora pequenos

@pytest.fixture(scope="session")
def connected_chordal_corpus_5():
    return Corpus.internal(5, "connected-chordal")


@pytest.fixture(scope="session")
def connected_corpus_6():
    return Corpus.internal(6, "connected")
