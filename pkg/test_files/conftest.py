"""Shared fixtures for the approx-veb test suite."""

from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import HealthCheck
from hypothesis import settings as hypothesis_settings

from approx_veb.apps import Graph
from approx_veb.word import WordConfig

hypothesis_settings.register_profile(
    "approx-veb",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
hypothesis_settings.load_profile("approx-veb")


@pytest.fixture
def word64() -> WordConfig:
    return WordConfig(b=64)


@pytest.fixture
def word8() -> WordConfig:
    return WordConfig(b=8)


@pytest.fixture
def triangle() -> Graph:
    graph = Graph(3)
    graph.add_edge(0, 1, 1)
    graph.add_edge(1, 2, 2)
    graph.add_edge(0, 2, 3)
    return graph


@pytest.fixture
def path_graph() -> Graph:
    graph = Graph(3, directed=True)
    graph.add_edge(0, 1, 5)
    graph.add_edge(1, 2, 7)
    return graph


@pytest.fixture
def write_input(tmp_path: Path):
    """Write ``text`` to a file under ``tmp_path`` and return its path."""

    def _write(text: str, name: str = "input.txt") -> Path:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return _write
