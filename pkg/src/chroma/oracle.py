"""Exact chromatic-index decisions, criticality certification, and sampling.

Everything here is brute force on purpose: a backtracking search over edge
colorings is the ground truth that the structure validators are measured
against, so it must not borrow results from the theory it checks.  Edges
are colored in decreasing endpoint-degree-sum order; for plain decisions
the colors of one maximum-degree vertex's edges are fixed up front to
break color symmetry.  Searches carry a wall-clock budget and report
expiry as :class:`OracleTimeout`, never as a class-1/class-2 answer.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .coloring import PartialEdgeColoring
from .graph import Graph

__all__ = [
    "ChiResult",
    "OracleTimeout",
    "UncolorableError",
    "chromatic_index",
    "decide_colorable",
    "complete_coloring",
    "is_critical_edge",
    "is_delta_critical",
    "sample_colorings",
    "DEFAULT_TIMEOUT_MS",
]

DEFAULT_TIMEOUT_MS = 10_000

_CHECK_INTERVAL = 4096


class OracleTimeout(Exception):
    """A chromatic-index decision exceeded its wall-clock budget."""


class UncolorableError(Exception):
    """No proper coloring exists for the requested palette."""


@dataclass(frozen=True)
class ChiResult:
    """Outcome of a chromatic-index computation with a witness coloring."""

    chi_prime: int
    classification: str  # "class1" or "class2"
    witness: PartialEdgeColoring


def _deadline(timeout_ms: int | None) -> float | None:
    if timeout_ms is None:
        return None
    if timeout_ms <= 0:
        raise ValueError(f"timeout must be positive, got {timeout_ms}")
    return time.monotonic() + timeout_ms / 1000.0


def _search(
    g: Graph,
    k: int,
    hole: tuple[int, int] | None,
    preset: dict[tuple[int, int], int] | None,
    rng: random.Random | None,
    symmetry: bool,
    deadline: float | None,
) -> dict[tuple[int, int], int] | None:
    """Find a proper k-edge-coloring of g (minus ``hole``), else None.

    ``preset`` pins edge colors before the search.  ``rng`` randomizes the
    branch order (and disables symmetry breaking, which would restrict the
    reachable colorings).  Raises OracleTimeout when the deadline passes.
    """
    full = ((1 << k) - 1) << 1
    degs = g.degrees
    avail = [full] * g.n
    assignment: dict[tuple[int, int], int] = {}

    def pin(u: int, v: int, color: int) -> bool:
        bit = 1 << color
        if not (avail[u] & bit and avail[v] & bit):
            return False
        avail[u] &= ~bit
        avail[v] &= ~bit
        assignment[(u, v)] = color
        return True

    if preset:
        for (u, v), color in sorted(preset.items()):
            e = (u, v) if u < v else (v, u)
            if e == hole:
                raise ValueError(f"preset colors the designated hole {hole}")
            if not 1 <= color <= k:
                raise ValueError(f"preset color {color} outside 1..{k}")
            if not pin(*e, color):
                return None

    if symmetry and rng is None and not preset:
        # Any proper coloring can be renamed so one max-degree vertex sees
        # colors 1..d in neighbor order, so pinning them loses nothing.
        vstar = max(range(g.n), key=lambda v: (degs[v], -v))
        color = 0
        ok = True
        for w in g.neighbors(vstar):
            e = (vstar, w) if vstar < w else (w, vstar)
            if e == hole:
                continue
            color += 1
            if color > k or not pin(*e, color):
                ok = False
                break
        if not ok:
            return None

    todo = [
        e
        for e in g.edges
        if e != hole and e not in assignment
    ]
    todo.sort(key=lambda e: (-(degs[e[0]] + degs[e[1]]), e))
    if rng is not None and todo:
        # Shuffle within equal-priority groups: keeps the dense-first shape
        # of the search but varies which coloring is reached first.
        grouped: list[tuple[int, ...]] = []
        start = 0
        for i in range(1, len(todo) + 1):
            if i == len(todo) or (
                degs[todo[i][0]] + degs[todo[i][1]]
                != degs[todo[start][0]] + degs[todo[start][1]]
            ):
                chunk = todo[start:i]
                rng.shuffle(chunk)
                grouped.extend(chunk)
                start = i
        todo = grouped

    nodes = 0

    def rec(i: int) -> bool:
        nonlocal nodes
        nodes += 1
        if deadline is not None and nodes % _CHECK_INTERVAL == 0:
            if time.monotonic() > deadline:
                raise OracleTimeout(f"search exceeded budget after {nodes} nodes")
        if i == len(todo):
            return True
        u, v = todo[i]
        cand = avail[u] & avail[v]
        if not cand:
            return False
        if rng is None:
            while cand:
                bit = cand & -cand
                cand ^= bit
                avail[u] &= ~bit
                avail[v] &= ~bit
                if rec(i + 1):
                    assignment[(u, v)] = bit.bit_length() - 1
                    return True
                avail[u] |= bit
                avail[v] |= bit
            return False
        bits = []
        while cand:
            bit = cand & -cand
            cand ^= bit
            bits.append(bit)
        rng.shuffle(bits)
        for bit in bits:
            avail[u] &= ~bit
            avail[v] &= ~bit
            if rec(i + 1):
                assignment[(u, v)] = bit.bit_length() - 1
                return True
            avail[u] |= bit
            avail[v] |= bit
        return False

    if rec(0):
        return assignment
    return None


def decide_colorable(
    g: Graph,
    k: int,
    *,
    hole: tuple[int, int] | None = None,
    timeout_ms: int | None = DEFAULT_TIMEOUT_MS,
) -> PartialEdgeColoring | None:
    """A proper k-edge-coloring of g (minus ``hole``) or None if impossible."""
    found = _search(g, k, hole, None, None, True, _deadline(timeout_ms))
    if found is None:
        return None
    return PartialEdgeColoring.from_assignment(g, k, found, hole=hole)


def chromatic_index(
    g: Graph, *, timeout_ms: int | None = DEFAULT_TIMEOUT_MS
) -> ChiResult:
    """Decide the chromatic index exactly.

    The index of a simple graph is either the maximum degree or one more,
    so a single colorability decision at the maximum degree settles the
    class; the failure branch always completes since one extra color
    suffices.  Each of the at most two decisions gets its own budget.

    Raises ValueError for edgeless graphs and OracleTimeout on expiry.
    """
    if g.m == 0:
        raise ValueError("chromatic index undefined for an edgeless graph")
    delta = g.max_degree
    witness = decide_colorable(g, delta, timeout_ms=timeout_ms)
    if witness is not None:
        return ChiResult(delta, "class1", witness)
    witness = decide_colorable(g, delta + 1, timeout_ms=timeout_ms)
    if witness is None:
        raise AssertionError("one color above max degree must always suffice")
    return ChiResult(delta + 1, "class2", witness)


def is_critical_edge(
    g: Graph,
    e: tuple[int, int],
    *,
    chi: ChiResult | None = None,
    timeout_ms: int | None = DEFAULT_TIMEOUT_MS,
) -> bool:
    """True when removing ``e`` drops the chromatic index to the max degree.

    Only class-2 graphs have critical edges in this sense; for class-1
    hosts the answer is False without a deletion search.  A precomputed
    ``chi`` for g is reused when given (the per-edge certification loop
    relies on that).
    """
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    if chi is None:
        chi = chromatic_index(g, timeout_ms=timeout_ms)
    if chi.classification != "class2":
        return False
    reduced = g.without_edge(u, v)
    return decide_colorable(reduced, g.max_degree, timeout_ms=timeout_ms) is not None


def is_delta_critical(
    g: Graph,
    *,
    chi: ChiResult | None = None,
    timeout_ms: int | None = DEFAULT_TIMEOUT_MS,
) -> bool:
    """True when g is connected, class 2, and every edge is critical."""
    if g.m == 0 or not g.is_connected():
        return False
    if chi is None:
        chi = chromatic_index(g, timeout_ms=timeout_ms)
    if chi.classification != "class2":
        return False
    return all(
        is_critical_edge(g, e, chi=chi, timeout_ms=timeout_ms) for e in g.edges
    )


def _sample_rng(seed: int, index: int) -> random.Random:
    # Plain integer mixing; avoids hash() so streams are interpreter-stable.
    return random.Random((seed & 0xFFFFFFFFFFFFFFFF) * 1_000_003 + index)


def sample_colorings(
    g: Graph,
    e: tuple[int, int],
    count: int,
    seed: int,
    *,
    timeout_ms: int | None = DEFAULT_TIMEOUT_MS,
) -> list[PartialEdgeColoring]:
    """``count`` proper max-degree colorings of g minus ``e``.

    Each sample is an independent randomized backtracking run, so the
    list is deterministic for a given (seed, count) and a prefix of a
    longer run with the same seed.  Diversity across seeds is all that is
    promised; the distribution is not uniform.

    Raises UncolorableError when no such coloring exists (``e`` was not a
    critical edge) and OracleTimeout if a sample exceeds its budget.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"edge {e} not in graph")
    if count < 0:
        raise ValueError(f"count must be nonnegative, got {count}")
    hole = (u, v) if u < v else (v, u)
    delta = g.max_degree
    out = []
    for i in range(count):
        found = _search(
            g, delta, hole, None, _sample_rng(seed, i), False, _deadline(timeout_ms)
        )
        if found is None:
            raise UncolorableError(
                f"no max-degree coloring of the graph minus {hole} exists"
            )
        out.append(PartialEdgeColoring.from_assignment(g, delta, found, hole=hole))
    return out


def complete_coloring(
    c: PartialEdgeColoring,
    *,
    seed: int | None = None,
    timeout_ms: int | None = DEFAULT_TIMEOUT_MS,
) -> PartialEdgeColoring | None:
    """Extend a partial coloring to all edges except its hole, or None.

    The assigned edges act as hard constraints.  With a seed the branch
    order is randomized (deterministically); otherwise the search is the
    plain ordered one.  Useful for steering a coloring toward a wanted
    missing-color pattern.
    """
    g = c.graph
    preset = {
        e: c.color(*e) for e in g.edges if c.color(*e) and e != c.hole
    }
    rng = None if seed is None else _sample_rng(seed, 0)
    found = _search(g, c.k, c.hole, preset, rng, False, _deadline(timeout_ms))
    if found is None:
        return None
    return PartialEdgeColoring.from_assignment(g, c.k, found, hole=c.hole)
