"""Shared fixtures: the bundled graph family as a graph6 corpus string."""

from __future__ import annotations

import pytest

from chroma import families, to_graph6


@pytest.fixture(scope="session")
def fixture_corpus() -> str:
    """graph6 text holding every graph from :func:`families.basic_fixtures`."""
    lines = [to_graph6(g) for _, g in families.basic_fixtures()]
    return "\n".join(lines) + "\n"
