"""Exact chromatic-index decisions, criticality, and coloring samplers."""

from __future__ import annotations

import pytest

from chroma import (
    Graph,
    OracleTimeout,
    PartialEdgeColoring,
    UncolorableError,
    chromatic_index,
    complete_coloring,
    decide_colorable,
    families,
    is_critical_edge,
    is_delta_critical,
    sample_colorings,
)

# Known chromatic indices, hand-checkable or classical.
_GROUND_TRUTH = [
    (families.complete(2), 1, "class1"),
    (families.complete(3), 3, "class2"),
    (families.complete(4), 3, "class1"),
    (families.complete(5), 5, "class2"),
    (families.complete(6), 5, "class1"),
    (families.cycle(4), 2, "class1"),
    (families.cycle(5), 3, "class2"),
    (Graph(4, [(0, 1), (0, 2), (0, 3)]), 3, "class1"),
    (families.petersen(), 4, "class2"),
]


def test_chromatic_index_ground_truth():
    for g, chi_prime, cls in _GROUND_TRUTH:
        res = chromatic_index(g)
        assert (res.chi_prime, res.classification) == (chi_prime, cls)
        assert res.witness.hole is None
        assert res.witness.is_complete
        assert res.witness.k == chi_prime
        assert res.witness.check_proper() == []


def test_chromatic_index_rejects_edgeless():
    with pytest.raises(ValueError, match="edgeless"):
        chromatic_index(Graph(3))


def test_decide_colorable():
    assert decide_colorable(families.complete(3), 2) is None
    c = decide_colorable(families.complete(3), 3)
    assert c is not None and c.is_complete
    holey = decide_colorable(families.cycle(5), 2, hole=(0, 1))
    assert holey is not None
    assert holey.color(0, 1) == 0
    assert holey.colored_count == 4


def test_timeout_budget():
    with pytest.raises(OracleTimeout, match="exceeded budget"):
        decide_colorable(families.complete(11), 10, timeout_ms=1)
    with pytest.raises(ValueError, match="timeout must be positive"):
        decide_colorable(families.complete(3), 3, timeout_ms=0)


def test_is_critical_edge():
    c5 = families.cycle(5)
    assert all(is_critical_edge(c5, e) for e in c5.edges)
    k4 = families.complete(4)
    assert not is_critical_edge(k4, (0, 1))
    with pytest.raises(ValueError, match="not in graph"):
        is_critical_edge(c5, (0, 2))


def test_is_delta_critical():
    assert is_delta_critical(families.cycle(5))
    assert is_delta_critical(families.subdivided_complete(4))
    assert is_delta_critical(families.petersen_minus_vertex())
    # Class-2 but not critical: removing one edge leaves them class 2.
    assert not is_delta_critical(families.complete(5))
    assert not is_delta_critical(families.petersen())
    # Class 1.
    assert not is_delta_critical(families.complete(4))
    # Disconnected class-2 graphs never count.
    two_triangles = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_delta_critical(two_triangles)
    assert not is_delta_critical(Graph(3))


def test_sample_colorings_shape_and_determinism():
    g = families.subdivided_complete(4)
    e = g.edges[0]
    first = sample_colorings(g, e, 6, seed=42)
    again = sample_colorings(g, e, 6, seed=42)
    assert len(first) == 6
    for a, b in zip(first, again):
        assert dict(a.edge_items()) == dict(b.edge_items())
    prefix = sample_colorings(g, e, 3, seed=42)
    for a, b in zip(prefix, first):
        assert dict(a.edge_items()) == dict(b.edge_items())
    for c in first:
        assert c.hole == e
        assert c.color(*e) == 0
        assert c.k == g.max_degree
        assert c.is_complete
        assert c.check_proper() == []


def test_sample_colorings_vary_across_seeds():
    g = families.subdivided_complete(4)
    e = g.edges[0]
    a = sample_colorings(g, e, 8, seed=0)
    b = sample_colorings(g, e, 8, seed=1)
    assert any(
        dict(x.edge_items()) != dict(y.edge_items()) for x, y in zip(a, b)
    )


def test_sample_colorings_edge_cases():
    g = families.cycle(5)
    assert sample_colorings(g, (0, 1), 0, seed=0) == []
    with pytest.raises(ValueError, match="nonnegative"):
        sample_colorings(g, (0, 1), -1, seed=0)
    with pytest.raises(ValueError, match="not in graph"):
        sample_colorings(g, (0, 2), 1, seed=0)
    # The Petersen graph is class 2 with no critical edge, so the graph
    # minus any edge still needs five colors and sampling must refuse.
    p = families.petersen()
    with pytest.raises(UncolorableError, match="no max-degree coloring"):
        sample_colorings(p, p.edges[0], 1, seed=0)


def test_complete_coloring_respects_presets():
    g = families.cycle(5)
    partial = PartialEdgeColoring.from_assignment(
        g, 3, {(1, 2): 1}, hole=(0, 1)
    )
    done = complete_coloring(partial)
    assert done is not None
    assert done.color(1, 2) == 1
    assert done.is_complete
    assert done.check_proper() == []
    seeded = complete_coloring(partial, seed=5)
    seeded_again = complete_coloring(partial, seed=5)
    assert seeded is not None and seeded_again is not None
    assert dict(seeded.edge_items()) == dict(seeded_again.edge_items())


def test_complete_coloring_infeasible_preset():
    g = families.cycle(4)
    # Opposite edges forced onto different colors leave the other two
    # edges no consistent pair at k=2.
    partial = PartialEdgeColoring.from_assignment(
        g, 2, {(0, 1): 1, (2, 3): 2}
    )
    assert complete_coloring(partial) is None
