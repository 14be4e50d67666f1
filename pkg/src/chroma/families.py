"""Constructors for the small graph families used as fixtures and tests."""

from __future__ import annotations

from .graph import Graph

__all__ = [
    "cycle",
    "path",
    "complete",
    "petersen",
    "petersen_minus_vertex",
    "subdivided_complete",
    "basic_fixtures",
]


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"path needs at least 1 vertex, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def petersen_minus_vertex(v: int = 9) -> Graph:
    """The Petersen graph with one vertex deleted and the rest relabeled."""
    p = petersen()
    if not 0 <= v < 10:
        raise ValueError(f"vertex {v} out of range")
    keep = [u for u in range(10) if u != v]
    relabel = {u: i for i, u in enumerate(keep)}
    edges = [
        (relabel[a], relabel[b]) for a, b in p.edges if v not in (a, b)
    ]
    return Graph(9, edges)


def subdivided_complete(m: int) -> Graph:
    """K_m with one edge subdivided by a new degree-2 vertex.

    The new vertex is ``m`` and replaces the edge 0--1 by the path
    0 -- m -- 1.  For even m this is the textbook example of a graph whose
    chromatic index exceeds its maximum degree without being regular.
    """
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")
    edges = [
        (u, v) for u in range(m) for v in range(u + 1, m) if (u, v) != (0, 1)
    ]
    edges += [(0, m), (1, m)]
    return Graph(m + 1, edges)


def basic_fixtures() -> list[tuple[str, Graph]]:
    """The named fixture family emitted by ``chroma gen-basic``.

    Odd cycles through C9, complete graphs through K7, the Petersen graph,
    the Petersen graph minus one vertex, and K4 with one subdivided edge.
    """
    out: list[tuple[str, Graph]] = []
    for n in (3, 5, 7, 9):
        out.append((f"C{n}", cycle(n)))
    for n in range(2, 8):
        out.append((f"K{n}", complete(n)))
    out.append(("petersen", petersen()))
    out.append(("petersen-minus-v", petersen_minus_vertex()))
    out.append(("subdivided-K4", subdivided_complete(4)))
    return out
