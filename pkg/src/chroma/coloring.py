"""Partial proper edge colorings and Kempe-chain mechanics.

A :class:`PartialEdgeColoring` assigns colors from ``1 .. k`` to a subset
of the edges of a graph; ``0`` is the uncolored sentinel.  At most one
edge is *designated* uncolored (the hole) in the states the validators
consume, but the colorer builds states with many unassigned edges, so the
class tolerates both.

Per-vertex bookkeeping is exact and incremental: ``present_mask(v)`` is a
bitmask of colors on edges at ``v``, ``missing_mask(v)`` its complement
within ``1 .. k``, and a slot table maps (vertex, color) to the neighbor
across the edge of that color.  All public mutating operations return a
new coloring; the input value is never changed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

__all__ = [
    "PartialEdgeColoring",
    "KempeChain",
    "ChainSwap",
    "RecolorEdge",
    "ColorEdge",
    "SwapScript",
    "ScriptError",
    "ScriptOutcome",
    "empty_partial",
]


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _mask_to_colors(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


class ScriptError(Exception):
    """A swap script step failed; carries the step index and reason."""

    def __init__(self, step_index: int, reason: str):
        self.step_index = step_index
        self.reason = reason
        super().__init__(f"step {step_index}: {reason}")


@dataclass(frozen=True)
class KempeChain:
    """A maximal two-colored component: an alternating path or even cycle.

    ``vertices`` lists the component in order; for a path the order runs
    from the lower-indexed endpoint, for a cycle it starts at the smallest
    vertex and proceeds toward its smaller chain neighbor.  ``edge_colors``
    snapshots the colors at extraction time so a later swap can detect a
    stale chain.
    """

    colors: tuple[int, int]
    shape: str  # "path" or "cycle"
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    edge_colors: tuple[int, ...]

    @property
    def endpoints(self) -> tuple[int, ...]:
        if self.shape != "path":
            return ()
        if len(self.vertices) == 1:
            return (self.vertices[0],)
        return (self.vertices[0], self.vertices[-1])

    def __contains__(self, v: int) -> bool:
        return v in self.vertices

    def oriented_from(self, v: int) -> tuple[int, ...]:
        """The vertex order starting at endpoint ``v`` (paths only)."""
        if self.shape != "path":
            raise ValueError("orientation only applies to path chains")
        if v == self.vertices[0]:
            return self.vertices
        if v == self.vertices[-1]:
            return tuple(reversed(self.vertices))
        raise ValueError(f"{v} is not an endpoint of this chain")

    def segment(self, x: int, y: int) -> "KempeChain":
        """The subchain between ``x`` and ``y`` inclusive (paths only)."""
        if self.shape != "path":
            raise ValueError("segment of a cycle chain is ambiguous")
        try:
            i, j = self.vertices.index(x), self.vertices.index(y)
        except ValueError:
            raise ValueError(f"{x} and {y} must both lie on the chain") from None
        if i > j:
            i, j = j, i
        return KempeChain(
            colors=self.colors,
            shape="path",
            vertices=self.vertices[i:j + 1],
            edges=self.edges[i:j],
            edge_colors=self.edge_colors[i:j],
        )


@dataclass(frozen=True)
class ChainSwap:
    """Swap the two-colored chain through ``anchor``.

    With ``limit`` set, only the segment between ``anchor`` and ``limit``
    is exchanged (the subchain swap); otherwise the whole component flips.
    """

    anchor: int
    colors: tuple[int, int]
    limit: int | None = None


@dataclass(frozen=True)
class RecolorEdge:
    edge: tuple[int, int]
    old: int
    new: int


@dataclass(frozen=True)
class ColorEdge:
    edge: tuple[int, int]
    color: int


Step = ChainSwap | RecolorEdge | ColorEdge


@dataclass(frozen=True)
class SwapScript:
    """A finite recoloring program, applied strictly left to right."""

    steps: tuple[Step, ...]


@dataclass(frozen=True)
class ScriptOutcome:
    coloring: "PartialEdgeColoring"
    transcript: tuple[str, ...]


class PartialEdgeColoring:
    """A proper partial edge coloring with exact present/missing tracking."""

    __slots__ = ("_graph", "_k", "_hole", "_colors", "_present", "_slot")

    def __init__(self, graph: Graph, k: int, hole: tuple[int, int] | None = None):
        if k < 1:
            raise ValueError(f"need at least one color, got k={k}")
        if k > 62:
            raise ValueError(f"palette limited to 62 colors, got k={k}")
        if hole is not None:
            hole = _norm(*hole)
            if not graph.has_edge(*hole):
                raise ValueError(f"designated uncolored edge {hole} not in graph")
        self._graph = graph
        self._k = k
        self._hole = hole
        self._colors = [0] * graph.m
        self._present = [0] * graph.n
        self._slot = [[-1] * (k + 1) for _ in range(graph.n)]

    # -- basic queries ---------------------------------------------------

    @property
    def graph(self) -> Graph:
        return self._graph

    @property
    def k(self) -> int:
        return self._k

    @property
    def hole(self) -> tuple[int, int] | None:
        return self._hole

    @property
    def full_mask(self) -> int:
        return ((1 << self._k) - 1) << 1

    def color(self, u: int, v: int) -> int:
        return self._colors[self._graph.edge_index(u, v)]

    def present_mask(self, v: int) -> int:
        return self._present[v]

    def missing_mask(self, v: int) -> int:
        return self.full_mask & ~self._present[v]

    def missing(self, v: int) -> tuple[int, ...]:
        return _mask_to_colors(self.missing_mask(v))

    def partner(self, v: int, color: int) -> int | None:
        """The neighbor across the color-``color`` edge at ``v``, if any."""
        w = self._slot[v][color]
        return None if w < 0 else w

    @property
    def colored_count(self) -> int:
        return sum(1 for c in self._colors if c)

    def uncolored_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            e for e, c in zip(self._graph.edges, self._colors) if c == 0
        )

    def edge_items(self) -> Iterable[tuple[tuple[int, int], int]]:
        """Pairs of (edge, color) in edge order, 0 meaning unassigned."""
        return zip(self._graph.edges, self._colors)

    @property
    def is_complete(self) -> bool:
        """True when every edge except the designated hole is colored."""
        expect = self._graph.m - (1 if self._hole is not None else 0)
        return self.colored_count == expect

    # -- construction and mutation (private) -----------------------------

    def copy(self) -> "PartialEdgeColoring":
        other = object.__new__(PartialEdgeColoring)
        other._graph = self._graph
        other._k = self._k
        other._hole = self._hole
        other._colors = self._colors[:]
        other._present = self._present[:]
        other._slot = [row[:] for row in self._slot]
        return other

    def _assign(self, u: int, v: int, color: int) -> None:
        if not 1 <= color <= self._k:
            raise ValueError(f"color {color} outside palette 1..{self._k}")
        i = self._graph.edge_index(u, v)
        if self._colors[i]:
            raise ValueError(f"edge ({u}, {v}) already colored {self._colors[i]}")
        bit = 1 << color
        if self._present[u] & bit or self._present[v] & bit:
            raise ValueError(f"color {color} already present at an endpoint of ({u}, {v})")
        self._colors[i] = color
        self._present[u] |= bit
        self._present[v] |= bit
        self._slot[u][color] = v
        self._slot[v][color] = u

    def _unassign(self, u: int, v: int) -> int:
        i = self._graph.edge_index(u, v)
        color = self._colors[i]
        if not color:
            raise ValueError(f"edge ({u}, {v}) is not colored")
        bit = 1 << color
        self._colors[i] = 0
        self._present[u] &= ~bit
        self._present[v] &= ~bit
        self._slot[u][color] = -1
        self._slot[v][color] = -1
        return color

    @classmethod
    def from_assignment(
        cls,
        graph: Graph,
        k: int,
        assignment: dict[tuple[int, int], int],
        hole: tuple[int, int] | None = None,
    ) -> "PartialEdgeColoring":
        """Build a coloring from an explicit edge-to-color mapping."""
        c = cls(graph, k, hole)
        for (u, v), color in sorted(
            (( _norm(u, v)), color) for (u, v), color in assignment.items()
        ):
            if color:
                c._assign(u, v, color)
        return c

    # -- integrity -------------------------------------------------------

    def check_proper(self) -> list[str]:
        """Independently rescan the assignment; return a list of problems."""
        problems = []
        seen = [0] * self._graph.n
        for (u, v), c in zip(self._graph.edges, self._colors):
            if c == 0:
                continue
            if not 1 <= c <= self._k:
                problems.append(f"edge ({u}, {v}) has color {c} outside 1..{self._k}")
                continue
            bit = 1 << c
            if seen[u] & bit:
                problems.append(f"color {c} repeated at vertex {u}")
            if seen[v] & bit:
                problems.append(f"color {c} repeated at vertex {v}")
            seen[u] |= bit
            seen[v] |= bit
        for v in range(self._graph.n):
            if seen[v] != self._present[v]:
                problems.append(f"present mask drift at vertex {v}")
        if self._hole is not None and self._colors[self._graph.edge_index(*self._hole)]:
            problems.append(f"designated uncolored edge {self._hole} is colored")
        return problems

    # -- Kempe machinery -------------------------------------------------

    def kempe_chain(self, x: int, alpha: int, beta: int) -> KempeChain:
        """The maximal (alpha, beta)-component through ``x``.

        Whole components are returned even when ``x`` is interior; callers
        pick segments or orientations explicitly.
        """
        if alpha == beta:
            raise ValueError("chain colors must differ")
        for c in (alpha, beta):
            if not 1 <= c <= self._k:
                raise ValueError(f"color {c} outside palette 1..{self._k}")
        a_next = self._slot[x][alpha]
        b_next = self._slot[x][beta]
        if a_next < 0 and b_next < 0:
            return KempeChain((alpha, beta), "path", (x,), (), ())

        def walk(start: int, first: int) -> list[int]:
            seq = [start]
            color = first
            cur = start
            while True:
                nxt = self._slot[cur][color]
                if nxt < 0 or (nxt == start and len(seq) > 2):
                    if nxt == start and len(seq) > 2:
                        seq.append(start)
                    return seq
                seq.append(nxt)
                cur = nxt
                color = alpha if color == beta else beta

        if a_next >= 0 and b_next >= 0:
            forward = walk(x, alpha)
            if forward[-1] == x:
                cycle = forward[:-1]
                pivot = cycle.index(min(cycle))
                cycle = cycle[pivot:] + cycle[:pivot]
                if len(cycle) > 2 and cycle[-1] < cycle[1]:
                    cycle = [cycle[0]] + cycle[1:][::-1]
                verts = tuple(cycle)
                edges = tuple(
                    _norm(verts[i], verts[(i + 1) % len(verts)])
                    for i in range(len(verts))
                )
                return self._finish_chain((alpha, beta), "cycle", verts, edges)
            backward = walk(x, beta)
            verts_list = forward[::-1] + backward[1:]
        elif a_next >= 0:
            verts_list = walk(x, alpha)
        else:
            verts_list = walk(x, beta)
        if verts_list[0] > verts_list[-1]:
            verts_list.reverse()
        verts = tuple(verts_list)
        edges = tuple(_norm(verts[i], verts[i + 1]) for i in range(len(verts) - 1))
        return self._finish_chain((alpha, beta), "path", verts, edges)

    def _finish_chain(
        self,
        colors: tuple[int, int],
        shape: str,
        verts: tuple[int, ...],
        edges: tuple[tuple[int, int], ...],
    ) -> KempeChain:
        edge_colors = tuple(self._colors[self._graph.edge_index(u, v)] for u, v in edges)
        return KempeChain(colors, shape, verts, edges, edge_colors)

    def _flip_edges(self, chain: KempeChain, edges, expected) -> "PartialEdgeColoring":
        alpha, beta = chain.colors
        for (u, v), c in zip(edges, expected):
            if self._colors[self._graph.edge_index(u, v)] != c:
                raise ValueError(
                    f"stale chain: edge ({u}, {v}) no longer carries color {c}"
                )
        out = self.copy()
        for (u, v), c in zip(edges, expected):
            out._unassign(u, v)
        for (u, v), c in zip(edges, expected):
            out._assign(u, v, beta if c == alpha else alpha)
        return out

    def swap(self, chain: KempeChain) -> "PartialEdgeColoring":
        """Exchange the two colors along a whole chain.

        Swapping a maximal component keeps the coloring proper, and doing
        it twice restores the original value.  Raises ValueError if the
        chain is stale (an edge changed color since extraction).
        """
        return self._flip_edges(chain, chain.edges, chain.edge_colors)

    def swap_subchain(
        self, x: int, y: int, alpha: int, beta: int
    ) -> "PartialEdgeColoring":
        """Exchange colors on the chain segment between ``x`` and ``y``.

        Unlike a whole-chain swap this can break properness at the segment
        boundary; the result is validated and a ValueError raised if the
        exchange is improper.  Requires ``x`` and ``y`` on one path chain.
        """
        chain = self.kempe_chain(x, alpha, beta)
        if y not in chain:
            raise ValueError(
                f"{x} and {y} are not ({alpha}, {beta})-linked; no segment to swap"
            )
        seg = chain.segment(x, y)
        out = self.copy()
        for (u, v) in seg.edges:
            out._unassign(u, v)
        try:
            for (u, v), c in zip(seg.edges, seg.edge_colors):
                out._assign(u, v, beta if c == alpha else alpha)
        except ValueError as exc:
            raise ValueError(f"subchain swap between {x} and {y} is improper: {exc}") from None
        return out

    def linked(self, x: int, y: int, alpha: int, beta: int) -> bool:
        """True when ``x`` and ``y`` lie on the same (alpha, beta)-chain.

        A vertex is trivially linked to itself.
        """
        if x == y:
            return True
        return y in self.kempe_chain(x, alpha, beta)

    # -- vertex-set structure --------------------------------------------

    def elementary_conflict(
        self, vertices: Iterable[int]
    ) -> tuple[int, int, int] | None:
        """First pair of vertices sharing a missing color, with the color."""
        seen: list[tuple[int, int]] = []
        for v in vertices:
            mv = self.missing_mask(v)
            for u, mu in seen:
                both = mu & mv
                if both:
                    return (u, v, (both & -both).bit_length() - 1)
            seen.append((v, mv))
        return None

    def is_elementary(self, vertices: Iterable[int]) -> bool:
        """True when the vertices' missing color sets are pairwise disjoint."""
        return self.elementary_conflict(vertices) is None

    # -- scripts ---------------------------------------------------------

    def apply_script(self, script: SwapScript) -> ScriptOutcome:
        """Run a swap script left to right, collecting a transcript.

        Any failing step raises :class:`ScriptError` carrying the step
        index; the input coloring is unchanged in that case.
        """
        cur = self
        lines = []
        for i, step in enumerate(script.steps):
            try:
                if isinstance(step, ChainSwap):
                    a, b = step.colors
                    if step.limit is None:
                        chain = cur.kempe_chain(step.anchor, a, b)
                        cur = cur.swap(chain)
                        lines.append(
                            f"step {i}: swapped ({a}, {b})-chain at {step.anchor}"
                            f" [{len(chain.edges)} edges]"
                        )
                    else:
                        cur = cur.swap_subchain(step.anchor, step.limit, a, b)
                        lines.append(
                            f"step {i}: swapped ({a}, {b})-subchain"
                            f" {step.anchor}..{step.limit}"
                        )
                elif isinstance(step, RecolorEdge):
                    u, v = step.edge
                    nxt = cur.copy()
                    got = nxt._unassign(u, v)
                    if got != step.old:
                        raise ValueError(
                            f"edge ({u}, {v}) carries {got}, expected {step.old}"
                        )
                    nxt._assign(u, v, step.new)
                    cur = nxt
                    lines.append(
                        f"step {i}: recolored ({u}, {v}) {step.old} -> {step.new}"
                    )
                elif isinstance(step, ColorEdge):
                    u, v = step.edge
                    nxt = cur.copy()
                    nxt._assign(u, v, step.color)
                    cur = nxt
                    lines.append(f"step {i}: colored ({u}, {v}) with {step.color}")
                else:
                    raise ValueError(f"unknown step type {type(step).__name__}")
            except ValueError as exc:
                raise ScriptError(i, str(exc)) from None
        return ScriptOutcome(cur, tuple(lines))

    # -- serialization ---------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "k": self._k,
            "uncolored": list(self._hole) if self._hole is not None else None,
            "edges": [
                [u, v, c] for (u, v), c in zip(self._graph.edges, self._colors)
            ],
        }

    @classmethod
    def from_json_obj(cls, graph: Graph, obj: dict) -> "PartialEdgeColoring":
        hole = tuple(obj["uncolored"]) if obj.get("uncolored") else None
        c = cls(graph, int(obj["k"]), hole)
        listed = {_norm(u, v): color for u, v, color in obj["edges"]}
        if set(listed) != set(graph.edges):
            raise ValueError("serialized edge set does not match the graph")
        for (u, v), color in sorted(listed.items()):
            if color:
                c._assign(u, v, color)
        if hole is not None and c.color(*hole):
            raise ValueError(f"uncolored edge {hole} has a color in the edge list")
        return c

    def __repr__(self) -> str:
        return (
            f"PartialEdgeColoring(k={self._k}, colored={self.colored_count}/"
            f"{self._graph.m}, hole={self._hole})"
        )


def empty_partial(
    graph: Graph, e: tuple[int, int] | None, k: int
) -> PartialEdgeColoring:
    """The all-uncolored shell with designated hole ``e`` and palette ``1..k``.

    Requires ``k >= max_degree``; with fewer colors no proper completion
    can exist and every consumer of these states assumes otherwise.
    """
    if k < graph.max_degree:
        raise ValueError(
            f"palette k={k} below max degree {graph.max_degree}"
        )
    return PartialEdgeColoring(graph, k, e)
