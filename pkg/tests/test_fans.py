"""Fans, Kierstead paths, degree conditions, and branched configurations."""

from __future__ import annotations

import pytest

from chroma import (
    INAPPLICABLE,
    OK,
    VIOLATION,
    ForkLike,
    Graph,
    KiersteadPath,
    Multifan,
    PartialEdgeColoring,
    StructuralError,
    alpha_decompose,
    check_degree_dichotomy,
    check_fork_exclusion,
    check_val,
    empty_partial,
    families,
    find_forklike,
    grow_kierstead,
    grow_multifan,
    kierstead_paths,
    sample_colorings,
    validate_fan_linkage,
    validate_kierstead4,
    validate_kite,
    validate_multifan,
    validate_shortkite,
)


def _host(
    edges: list[tuple[int, int]],
    assign: dict[tuple[int, int], int],
    k: int,
    hole: tuple[int, int] = (0, 1),
) -> PartialEdgeColoring:
    n = 1 + max(max(e) for e in edges)
    g = Graph(n, edges)
    return PartialEdgeColoring.from_assignment(g, k, assign, hole=hole)


def _critical_samples(g: Graph, per_edge: int = 12) -> list[PartialEdgeColoring]:
    out = []
    for e in g.edges:
        out.extend(sample_colorings(g, e, per_edge, seed=3))
    return out


# -- multifans --------------------------------------------------------------


def test_grow_multifan_triangle():
    c = _host([(0, 1), (0, 2), (1, 2)], {(0, 2): 1, (1, 2): 2}, k=2)
    fan = grow_multifan(c)
    assert fan == Multifan(0, (1, 2))
    assert fan.vertices == (0, 1, 2)
    assert fan.edges == ((0, 1), (0, 2))
    assert validate_multifan(c, fan).status == OK
    other = grow_multifan(c, center=1)
    assert other == Multifan(1, (0, 2))
    assert validate_multifan(c, other).status == OK


def test_multifan_violation_on_shared_missing_color():
    c = _host([(0, 1)], {}, k=2)
    fan = grow_multifan(c)
    assert fan == Multifan(0, (1,))
    verdict = validate_multifan(c, fan)
    assert verdict.status == VIOLATION
    assert "share missing color 1" in verdict.detail


def test_multifan_structural_errors():
    c = _host([(0, 1), (0, 2), (1, 2)], {(0, 2): 1, (1, 2): 2}, k=2)
    with pytest.raises(StructuralError, match="at least one spoke"):
        validate_multifan(c, Multifan(0, ()))
    with pytest.raises(StructuralError, match="distinct"):
        validate_multifan(c, Multifan(0, (1, 1)))
    with pytest.raises(StructuralError, match="first fan edge"):
        validate_multifan(c, Multifan(0, (2, 1)))
    with pytest.raises(StructuralError, match="not in graph"):
        validate_multifan(c, Multifan(0, (1, 3)))
    with pytest.raises(StructuralError, match="must be an endpoint"):
        grow_multifan(c, center=2)
    no_hole = PartialEdgeColoring.from_assignment(
        families.path(3), 2, {(0, 1): 1, (1, 2): 2}
    )
    with pytest.raises(StructuralError, match="no designated uncolored edge"):
        grow_multifan(no_hole)
    sparse = empty_partial(families.cycle(5), (0, 1), 2)
    with pytest.raises(StructuralError, match="complete apart from its hole"):
        grow_multifan(sparse)


def test_multifan_rejects_unmissed_spoke_color():
    c = _host([(0, 1), (0, 2), (1, 3)], {(0, 2): 1, (1, 3): 1}, k=2)
    with pytest.raises(StructuralError, match="not missed earlier"):
        validate_multifan(c, Multifan(0, (1, 2)))


# A fan with two induced classes of two spokes each.  The center 0 sees
# spokes 1, 2, 3, 4, 9; spoke colors 1 and 2 are missed by the first
# spoke (class seeds), color 3 hangs off vertex 2, color 4 off vertex 3.
_FAN_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (0, 9),
    (1, 5), (1, 6), (1, 7),
    (2, 8), (2, 10), (2, 11),
    (3, 12), (3, 13), (3, 14),
    (4, 15), (4, 16), (4, 17), (4, 18),
    (9, 19), (9, 20), (9, 21), (9, 22),
]
_FAN_ASSIGN = {
    (0, 2): 1, (0, 3): 2, (0, 4): 3, (0, 9): 4,
    (1, 5): 3, (1, 6): 4, (1, 7): 5,
    (2, 8): 2, (2, 10): 4, (2, 11): 5,
    (3, 12): 1, (3, 13): 3, (3, 14): 5,
    (4, 15): 1, (4, 16): 2, (4, 17): 4, (4, 18): 5,
    (9, 19): 1, (9, 20): 2, (9, 21): 3, (9, 22): 5,
}


def test_alpha_decompose_two_classes():
    c = _host(_FAN_EDGES, _FAN_ASSIGN, k=5)
    fan = grow_multifan(c)
    assert fan == Multifan(0, (1, 2, 3, 4, 9))
    dec = alpha_decompose(c, fan)
    assert dec.parent == {2: 1, 3: 1, 4: 2, 9: 3}
    assert dec.seed_of_vertex == {2: 1, 3: 2, 4: 1, 9: 2}
    assert dec.classes == {1: (2, 4), 2: (3, 9)}
    assert dec.induced_by == {1: 1, 2: 2, 3: 1, 4: 2}
    assert dec.vertex_of_color == {1: 1, 2: 1, 3: 2, 4: 3}
    assert dec.precedes(1, 3)
    assert dec.precedes(2, 4)
    assert not dec.precedes(3, 1)
    assert not dec.precedes(1, 4)
    assert not dec.precedes(3, 3)


def test_alpha_decompose_requires_elementary():
    c = _host([(0, 1)], {}, k=2)
    with pytest.raises(StructuralError, match="not elementary"):
        alpha_decompose(c, Multifan(0, (1,)))


def test_fan_linkage_violation_on_synthetic_host():
    # The crafted two-class fan lives on a host whose hole is not a
    # critical edge, and the cross-class chain condition fails there.
    c = _host(_FAN_EDGES, _FAN_ASSIGN, k=5)
    fan = grow_multifan(c)
    verdict = validate_fan_linkage(c, fan)
    assert verdict.status == VIOLATION
    assert "different seeds but are not linked" in verdict.detail
    dec = alpha_decompose(c, fan)
    assert validate_fan_linkage(c, fan, dec) == verdict


# -- Kierstead paths --------------------------------------------------------

_C5_ASSIGN = {(1, 2): 1, (2, 3): 2, (3, 4): 1, (0, 4): 2}


def _c5_coloring() -> PartialEdgeColoring:
    return PartialEdgeColoring.from_assignment(
        families.cycle(5), 2, _C5_ASSIGN, hole=(0, 1)
    )


def test_kierstead_paths_enumeration():
    c = _c5_coloring()
    assert kierstead_paths(c, 2) == [
        KiersteadPath((0, 1)),
        KiersteadPath((1, 0)),
    ]
    assert kierstead_paths(c, 4) == [
        KiersteadPath((0, 1, 2, 3)),
        KiersteadPath((1, 0, 4, 3)),
    ]
    assert kierstead_paths(c, 5) == [
        KiersteadPath((0, 1, 2, 3, 4)),
        KiersteadPath((1, 0, 4, 3, 2)),
    ]
    with pytest.raises(ValueError, match="2..5"):
        kierstead_paths(c, 6)


def test_grow_kierstead():
    c = _c5_coloring()
    assert grow_kierstead(c, (0, 1)).vertices == (0, 1, 2, 3, 4)
    assert grow_kierstead(c, (1, 0, 4)).vertices == (1, 0, 4, 3, 2)
    with pytest.raises(StructuralError, match="must start with"):
        grow_kierstead(c, (1, 2))
    with pytest.raises(StructuralError, match="not in graph"):
        grow_kierstead(c, (0, 1, 3))
    with pytest.raises(StructuralError, match="at least the uncolored edge"):
        grow_kierstead(c, (0,))


def test_validate_kierstead4_ok_on_cycle():
    c = _c5_coloring()
    for path in kierstead_paths(c, 4):
        assert validate_kierstead4(c, path).status == OK
    with pytest.raises(StructuralError, match="expected 4 vertices"):
        validate_kierstead4(c, kierstead_paths(c, 5)[0])


def test_validate_kierstead4_interior_degree_violation():
    c = _host(
        [(0, 1), (1, 2), (2, 3), (0, 4), (2, 5)],
        {(1, 2): 1, (2, 3): 2, (0, 4): 2, (2, 5): 3},
        k=3,
    )
    verdict = validate_kierstead4(c, KiersteadPath((0, 1, 2, 3)))
    assert verdict.status == VIOLATION
    assert "interior degree below 3" in verdict.detail
    assert "share missing color 3" in verdict.detail


def test_validate_kierstead4_endpoint_sharing_violation():
    c = _host(
        [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (2, 6), (2, 7)],
        {
            (1, 2): 1, (2, 3): 2,
            (1, 4): 2, (1, 5): 3,
            (2, 6): 3, (2, 7): 4,
        },
        k=4,
    )
    verdict = validate_kierstead4(c, KiersteadPath((0, 1, 2, 3)))
    assert verdict.status == VIOLATION
    assert "endpoint 3 shares colors (1, 3, 4)" in verdict.detail


# -- degree conditions ------------------------------------------------------


def test_check_val():
    c5 = families.cycle(5)
    for x, y in c5.edges:
        assert check_val(c5, x, y).status == OK
        assert check_val(c5, y, x).status == OK
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    verdict = check_val(star, 1, 0)
    assert verdict.status == VIOLATION
    assert "has 0 max-degree neighbors besides 0, needs 1" in verdict.detail
    assert check_val(star, 0, 1).status == VIOLATION
    with pytest.raises(StructuralError, match="not in graph"):
        check_val(c5, 0, 2)


def _dichotomy_host() -> Graph:
    # A seven-clique missing one edge, two pendants repairing the degree
    # loss, and two isolated low-degree vertices.
    edges = [
        (u, v) for u in range(7) for v in range(u + 1, 7) if (u, v) != (0, 1)
    ]
    edges += [(0, 7), (1, 8)]
    return Graph(11, edges)


def test_check_degree_dichotomy():
    g = _dichotomy_host()
    assert g.max_degree == 6
    assert check_degree_dichotomy(g, 7, colorings={}).status == OK
    c5 = families.cycle(5)
    verdict = check_degree_dichotomy(c5, 0, colorings={})
    assert verdict.status == INAPPLICABLE
    assert "anchor degree 2 above the bound" in verdict.detail
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    verdict = check_degree_dichotomy(star, 1, colorings={})
    assert verdict.status == VIOLATION
    assert "outside" in verdict.detail


def test_check_degree_dichotomy_shared_color_violation():
    g = _dichotomy_host()
    # An all-uncolored shell misses every color everywhere, so any
    # max-degree vertex shares well over one color with the hole ends.
    shell = empty_partial(g, (0, 7), 6)
    verdict = check_degree_dichotomy(g, 7, colorings={(0, 7): [shell]})
    assert verdict.status == VIOLATION
    assert "shares two missing colors" in verdict.detail


# -- forks, short-kites, kites ----------------------------------------------

_FORK_CORE_EDGES = [(0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6)]
_FORK_CORE_ASSIGN = {(1, 2): 1, (2, 3): 2, (2, 4): 3, (3, 5): 4, (4, 6): 5}


def test_find_fork_and_exclusion_ok():
    c = _host(_FORK_CORE_EDGES, _FORK_CORE_ASSIGN, k=5)
    forks = find_forklike(c, "fork")
    assert len(forks) == 1
    assert forks[0].role_map == {
        "a": 0, "b": 1, "u": 2, "s1": 3, "s2": 4, "t1": 5, "t2": 6
    }
    assert forks[0].edges == (
        (0, 1), (1, 2), (2, 3), (2, 4), (3, 5), (4, 6)
    )
    verdict = check_fork_exclusion(c)
    assert verdict.status == OK
    assert "1 forks, none under the degree bound" in verdict.detail


def test_fork_exclusion_violation_under_high_degree():
    edges = _FORK_CORE_EDGES + [(7, v) for v in range(8, 15)]
    assign = dict(_FORK_CORE_ASSIGN)
    assign.update({(7, 8 + i): 1 + i for i in range(7)})
    c = _host(edges, assign, k=7)
    assert c.graph.max_degree == 7
    verdict = check_fork_exclusion(c)
    assert verdict.status == VIOLATION
    assert "under the exclusion bound" in verdict.detail


_SHORTKITE_EDGES = [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5)]
_SHORTKITE_ASSIGN = {(0, 2): 1, (1, 3): 2, (2, 3): 3, (3, 4): 4, (3, 5): 5}


def test_short_kite_outer_degree_violation():
    c = _host(_SHORTKITE_EDGES, _SHORTKITE_ASSIGN, k=5)
    kites = find_forklike(c, "short-kite")
    assert [sk.role_map for sk in kites] == [
        {"a": 0, "b": 1, "c": 2, "u": 3, "x": 4, "y": 5},
        {"a": 0, "b": 1, "c": 2, "u": 3, "x": 5, "y": 4},
    ]
    verdict = validate_shortkite(c, kites[0])
    assert verdict.status == VIOLATION
    assert "outer degrees 1, 1 both below 4" in verdict.detail


def test_short_kite_ok_when_outer_degree_max():
    edges = _SHORTKITE_EDGES + [(4, 6), (4, 7), (4, 8)]
    assign = dict(_SHORTKITE_ASSIGN)
    assign.update({(4, 6): 1, (4, 7): 2, (4, 8): 3})
    c = _host(edges, assign, k=5)
    sk = next(
        fl for fl in find_forklike(c, "short-kite") if fl.vertex("x") == 4
    )
    assert validate_shortkite(c, sk).status == OK


def test_short_kite_precondition_inapplicable():
    edges = _SHORTKITE_EDGES + [(0, 6)]
    assign = dict(_SHORTKITE_ASSIGN)
    assign[(0, 6)] = 2
    c = _host(edges, assign, k=5)
    sk = ForkLike(
        "short-kite",
        (("a", 0), ("b", 1), ("c", 2), ("u", 3), ("x", 4), ("y", 5)),
    )
    verdict = validate_shortkite(c, sk)
    assert verdict.status == INAPPLICABLE
    assert "bu color missed at a fails" in verdict.detail
    with pytest.raises(StructuralError, match="expected a kite"):
        validate_kite(c, sk)


_KITE_EDGES = [
    (0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7)
]
_KITE_ASSIGN = {
    (0, 2): 1, (1, 3): 2, (2, 3): 3, (3, 4): 4, (3, 5): 5,
    (4, 6): 6, (5, 7): 6,
}


def test_kite_shared_tip_colors_violation():
    c = _host(_KITE_EDGES, _KITE_ASSIGN, k=6)
    kites = find_forklike(c, "kite")
    assert kites
    marked = [validate_kite(c, kt) for kt in kites]
    assert any(
        v.status == VIOLATION and "tips share 5 missing colors" in v.detail
        for v in marked
    )


def test_kite_different_tip_colors_inapplicable():
    assign = dict(_KITE_ASSIGN)
    assign[(5, 7)] = 4
    c = _host(_KITE_EDGES, assign, k=6)
    kites = [
        kt for kt in find_forklike(c, "kite")
        if kt.vertex("s1") == 4 and kt.vertex("s2") == 5
    ]
    assert kites
    verdict = validate_kite(c, kites[0])
    assert verdict.status == INAPPLICABLE
    assert "different colors" in verdict.detail


def test_find_forklike_rejects_unknown_kind():
    c = _c5_coloring()
    with pytest.raises(ValueError, match="unknown kind"):
        find_forklike(c, "spoon")


# -- sampled sweeps over genuinely critical hosts ---------------------------


def _assert_no_violations(c: PartialEdgeColoring) -> None:
    hole = c.hole
    assert hole is not None
    for center in hole:
        fan = grow_multifan(c, center=center)
        assert validate_multifan(c, fan).status == OK
        if c.is_elementary(fan.vertices):
            dec = alpha_decompose(c, fan)
            for color, holder in dec.vertex_of_color.items():
                assert color in c.missing(holder)
            spread = [y for members in dec.classes.values() for y in members]
            assert sorted(spread) == sorted(fan.spokes[1:])
            assert validate_fan_linkage(c, fan, dec).status == OK
    for path in kierstead_paths(c, 4):
        assert validate_kierstead4(c, path).status == OK
    assert check_fork_exclusion(c).status == OK
    for sk in find_forklike(c, "short-kite"):
        assert validate_shortkite(c, sk).status != VIOLATION
    for kt in find_forklike(c, "kite"):
        assert validate_kite(c, kt).status != VIOLATION


def test_sweep_on_critical_hosts():
    for g in (families.cycle(5), families.subdivided_complete(4)):
        for x, y in g.edges:
            assert check_val(g, x, y).status == OK
            assert check_val(g, y, x).status == OK
        for c in _critical_samples(g):
            _assert_no_violations(c)
