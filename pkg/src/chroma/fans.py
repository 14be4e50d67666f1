"""Structures grown from an uncolored edge and their invariant checkers.

The objects here (multifans, Kierstead paths, forks, short-kites, kites)
are colored configurations anchored at the one uncolored edge of a
partial coloring.  Each checker separates three outcomes: a
StructuralError means the input is not the claimed object at all, a
``violation`` verdict means the object is valid but the checked
conclusion fails, and ``inapplicable`` means the conclusion's hypotheses
are unmet.  On hosts whose uncolored edge is critical the violations are
the interesting output: each one would falsify a known invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import PartialEdgeColoring
from .graph import Graph
from . import oracle

__all__ = [
    "OK",
    "VIOLATION",
    "INAPPLICABLE",
    "Verdict",
    "StructuralError",
    "Multifan",
    "grow_multifan",
    "validate_multifan",
    "AlphaSequenceDecomposition",
    "alpha_decompose",
    "validate_fan_linkage",
    "KiersteadPath",
    "kierstead_paths",
    "grow_kierstead",
    "validate_kierstead4",
    "check_val",
    "check_degree_dichotomy",
    "ForkLike",
    "find_forklike",
    "check_fork_exclusion",
    "validate_shortkite",
    "validate_kite",
]

OK = "ok"
VIOLATION = "violation"
INAPPLICABLE = "inapplicable"


class StructuralError(ValueError):
    """The input does not satisfy the structural definition it claims."""


@dataclass(frozen=True)
class Verdict:
    status: str
    detail: str = ""

    def __bool__(self) -> bool:
        return self.status == OK


def _mask_colors(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def _require_single_hole(c: PartialEdgeColoring) -> tuple[int, int]:
    if c.hole is None:
        raise StructuralError("coloring has no designated uncolored edge")
    if not c.is_complete:
        raise StructuralError("coloring must be complete apart from its hole")
    return c.hole


# ---------------------------------------------------------------------------
# Multifans
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Multifan:
    """A fan at ``center``: spokes y1..yp, the first joined by the hole.

    Every later spoke's edge color is missed by some earlier spoke, which
    is what makes the rotation arguments on fans sound.
    """

    center: int
    spokes: tuple[int, ...]

    @property
    def vertices(self) -> tuple[int, ...]:
        return (self.center,) + self.spokes

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        x = self.center
        return tuple((x, y) if x < y else (y, x) for y in self.spokes)


def grow_multifan(c: PartialEdgeColoring, center: int | None = None) -> Multifan:
    """Grow a maximal multifan at one endpoint of the uncolored edge.

    ``center`` defaults to the lower endpoint of the hole.  Among the
    spokes that could be appended next, the one with the smallest
    (color, vertex) pair wins, so growth is deterministic.
    """
    hole = _require_single_hole(c)
    if center is None:
        center = hole[0]
    if center not in hole:
        raise StructuralError(f"center {center} must be an endpoint of {hole}")
    x = center
    y1 = hole[1] if hole[0] == x else hole[0]
    spokes = [y1]
    in_fan = {x, y1}
    missed = c.missing_mask(y1)
    while True:
        best: tuple[int, int] | None = None
        for color in _mask_colors(missed):
            z = c.partner(x, color)
            if z is not None and z not in in_fan:
                if best is None or (color, z) < best:
                    best = (color, z)
        if best is None:
            return Multifan(x, tuple(spokes))
        _, z = best
        spokes.append(z)
        in_fan.add(z)
        missed |= c.missing_mask(z)


def _check_multifan_structure(c: PartialEdgeColoring, f: Multifan) -> None:
    hole = _require_single_hole(c)
    x = f.center
    if not f.spokes:
        raise StructuralError("multifan needs at least one spoke")
    verts = f.vertices
    if len(set(verts)) != len(verts):
        raise StructuralError("multifan vertices must be distinct")
    e1 = (x, f.spokes[0]) if x < f.spokes[0] else (f.spokes[0], x)
    if e1 != hole:
        raise StructuralError(f"first fan edge {e1} is not the uncolored edge {hole}")
    missed = c.missing_mask(f.spokes[0])
    for y in f.spokes[1:]:
        if not c.graph.has_edge(x, y):
            raise StructuralError(f"fan edge ({x}, {y}) not in graph")
        color = c.color(x, y)
        if color == 0:
            raise StructuralError(f"fan edge ({x}, {y}) is uncolored")
        if not missed >> color & 1:
            raise StructuralError(
                f"color {color} of fan edge ({x}, {y}) is not missed earlier in the fan"
            )
        missed |= c.missing_mask(y)


def validate_multifan(c: PartialEdgeColoring, f: Multifan) -> Verdict:
    """Check fan elementarity and center-to-spoke chain linkage.

    On a host whose hole is a critical edge the fan's vertex set has
    pairwise disjoint missing sets, and for every color pair (one missing
    at the center, one at a spoke) the two vertices end the same chain.
    """
    _check_multifan_structure(c, f)
    conflict = c.elementary_conflict(f.vertices)
    if conflict is not None:
        u, v, color = conflict
        return Verdict(
            VIOLATION,
            f"fan vertices {u} and {v} share missing color {color}",
        )
    x = f.center
    for alpha in c.missing(x):
        for y in f.spokes:
            for beta in c.missing(y):
                if not c.linked(x, y, alpha, beta):
                    return Verdict(
                        VIOLATION,
                        f"center {x} and spoke {y} are not ({alpha}, {beta})-linked",
                    )
    return Verdict(OK)


# ---------------------------------------------------------------------------
# Alpha-sequence decomposition of a multifan
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlphaSequenceDecomposition:
    """Partition of a fan's missing colors by the seed color that induces them.

    Every spoke beyond the first hangs off the unique earlier vertex that
    misses its edge color; following those hooks back leads to a spoke
    whose edge color is missed by the first spoke, and that color is the
    class seed.  ``parent`` records the hooks (roots hang off the first
    spoke), ``induced_by`` maps every missing color of the spokes to its
    seed, and precedence compares colors within one class by ancestry.
    Missing colors of the center sit outside every class by disjointness.
    """

    center: int
    spokes: tuple[int, ...]
    parent: dict[int, int]
    seed_of_vertex: dict[int, int]
    induced_by: dict[int, int]
    vertex_of_color: dict[int, int]
    classes: dict[int, tuple[int, ...]]

    def precedes(self, first: int, second: int) -> bool:
        """True when both colors share a seed and ``first`` is induced
        strictly earlier (at a proper ancestor in the hook forest)."""
        if first == second:
            return False
        a = self.induced_by.get(first)
        b = self.induced_by.get(second)
        if a is None or b is None or a != b:
            return False
        u = self.vertex_of_color[first]
        v = self.vertex_of_color[second]
        while v in self.parent:
            v = self.parent[v]
            if v == u:
                return True
        return False


def alpha_decompose(
    c: PartialEdgeColoring, f: Multifan
) -> AlphaSequenceDecomposition:
    """Decompose the fan's missing colors into their inducing classes.

    Requires an elementary fan; without disjoint missing sets the hooks
    are not unique and there is nothing coherent to decompose.
    """
    _check_multifan_structure(c, f)
    conflict = c.elementary_conflict(f.vertices)
    if conflict is not None:
        raise StructuralError(
            f"fan is not elementary ({conflict[0]} and {conflict[1]} share "
            f"missing color {conflict[2]}); decomposition is not unique"
        )
    x = f.center
    y1 = f.spokes[0]
    vertex_of_color: dict[int, int] = {}
    for y in f.spokes:
        for color in c.missing(y):
            vertex_of_color[color] = y
    parent: dict[int, int] = {}
    seed_of_vertex: dict[int, int] = {}
    for y in f.spokes[1:]:
        spoke_color = c.color(x, y)
        holder = vertex_of_color.get(spoke_color)
        if holder is None:
            raise StructuralError(
                f"spoke color {spoke_color} at ({x}, {y}) missed by no fan vertex"
            )
        parent[y] = holder
        seed_of_vertex[y] = spoke_color if holder == y1 else seed_of_vertex[holder]
    induced_by: dict[int, int] = {}
    for color in c.missing(y1):
        induced_by[color] = color
    for y in f.spokes[1:]:
        for color in c.missing(y):
            induced_by[color] = seed_of_vertex[y]
    classes: dict[int, list[int]] = {}
    for y in f.spokes[1:]:
        classes.setdefault(seed_of_vertex[y], []).append(y)
    return AlphaSequenceDecomposition(
        center=x,
        spokes=f.spokes,
        parent=parent,
        seed_of_vertex=seed_of_vertex,
        induced_by=induced_by,
        vertex_of_color=vertex_of_color,
        classes={seed: tuple(members) for seed, members in classes.items()},
    )


def validate_fan_linkage(
    c: PartialEdgeColoring,
    f: Multifan,
    decomposition: AlphaSequenceDecomposition | None = None,
) -> Verdict:
    """Cross-class colors must be linked; in-class failures must pass the center.

    For missing colors at two different spokes: different seeds force the
    two spokes onto one chain, and with a shared seed where the first
    color is induced earlier, an unlinked pair forces the center onto the
    chain ending at the later color's spoke.
    """
    dec = decomposition if decomposition is not None else alpha_decompose(c, f)
    x = f.center
    spokes = f.spokes
    for i, yi in enumerate(spokes):
        for delta in c.missing(yi):
            for j, yj in enumerate(spokes):
                if i == j:
                    continue
                for lam in c.missing(yj):
                    if dec.induced_by[delta] != dec.induced_by[lam]:
                        if not c.linked(yi, yj, delta, lam):
                            return Verdict(
                                VIOLATION,
                                f"colors {delta} at {yi} and {lam} at {yj} have "
                                f"different seeds but are not linked",
                            )
                    elif dec.precedes(delta, lam):
                        if not c.linked(yi, yj, delta, lam):
                            chain = c.kempe_chain(yj, lam, delta)
                            if x not in chain:
                                return Verdict(
                                    VIOLATION,
                                    f"unlinked same-seed colors {delta} at {yi}, "
                                    f"{lam} at {yj}: center {x} off the chain at {yj}",
                                )
    return Verdict(OK)


# ---------------------------------------------------------------------------
# Kierstead paths
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KiersteadPath:
    """A path v0..vp from the uncolored edge v0v1, each later edge's
    color missed by a vertex at least two positions back."""

    vertices: tuple[int, ...]

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        vs = self.vertices
        return tuple(
            (vs[i], vs[i + 1]) if vs[i] < vs[i + 1] else (vs[i + 1], vs[i])
            for i in range(len(vs) - 1)
        )


def _check_kierstead_structure(
    c: PartialEdgeColoring, vertices: tuple[int, ...]
) -> None:
    hole = _require_single_hole(c)
    if len(vertices) < 2:
        raise StructuralError("a Kierstead path needs at least the uncolored edge")
    if len(set(vertices)) != len(vertices):
        raise StructuralError("Kierstead path vertices must be distinct")
    v0, v1 = vertices[0], vertices[1]
    first = (v0, v1) if v0 < v1 else (v1, v0)
    if first != hole:
        raise StructuralError(f"path must start with the uncolored edge {hole}")
    missed = c.missing_mask(v0)
    for i in range(2, len(vertices)):
        u, v = vertices[i - 1], vertices[i]
        if not c.graph.has_edge(u, v):
            raise StructuralError(f"path edge ({u}, {v}) not in graph")
        color = c.color(u, v)
        if color == 0:
            raise StructuralError(f"path edge ({u}, {v}) is uncolored")
        missed |= c.missing_mask(vertices[i - 2])
        if not missed >> color & 1:
            raise StructuralError(
                f"color {color} of path edge ({u}, {v}) is not missed by any "
                f"vertex at least two steps back"
            )


def kierstead_paths(
    c: PartialEdgeColoring, vertices: int
) -> list[KiersteadPath]:
    """All Kierstead paths with exactly that many vertices, both
    orientations of the uncolored edge, in lexicographic growth order."""
    if not 2 <= vertices <= 5:
        raise ValueError("supported path sizes are 2..5 vertices")
    hole = _require_single_hole(c)
    out: list[KiersteadPath] = []

    def extend(path: list[int], missed_all_but_last: int) -> None:
        if len(path) == vertices:
            out.append(KiersteadPath(tuple(path)))
            return
        tail = path[-1]
        allowed = missed_all_but_last | c.missing_mask(path[-2])
        for color in _mask_colors(allowed):
            w = c.partner(tail, color)
            if w is not None and w not in path:
                path.append(w)
                extend(path, allowed)
                path.pop()

    for v0, v1 in (hole, (hole[1], hole[0])):
        if vertices == 2:
            out.append(KiersteadPath((v0, v1)))
        else:
            extend([v0, v1], 0)
    return out


def grow_kierstead(
    c: PartialEdgeColoring, seed: tuple[int, ...] | KiersteadPath
) -> KiersteadPath:
    """Greedily extend a valid seed path to at most five vertices.

    At each step the smallest (color, vertex) continuation wins, mirroring
    the fan growth rule.  The seed itself is validated first.
    """
    vertices = list(seed.vertices if isinstance(seed, KiersteadPath) else seed)
    _check_kierstead_structure(c, tuple(vertices))
    while len(vertices) < 5:
        allowed = 0
        for v in vertices[:-1]:
            allowed |= c.missing_mask(v)
        tail = vertices[-1]
        best: tuple[int, int] | None = None
        for color in _mask_colors(allowed):
            w = c.partner(tail, color)
            if w is not None and w not in vertices:
                if best is None or (color, w) < best:
                    best = (color, w)
        if best is None:
            break
        vertices.append(best[1])
    return KiersteadPath(tuple(vertices))


def validate_kierstead4(c: PartialEdgeColoring, k: KiersteadPath) -> Verdict:
    """Near-elementarity of a 4-vertex Kierstead path.

    If either middle vertex has submaximal degree the whole vertex set
    must be elementary, and the far endpoint shares at most one missing
    color with the uncolored edge's endpoints.
    """
    if len(k.vertices) != 4:
        raise StructuralError(f"expected 4 vertices, got {len(k.vertices)}")
    _check_kierstead_structure(c, k.vertices)
    g = c.graph
    delta = g.max_degree
    v0, v1, v2, v3 = k.vertices
    if min(g.degree(v1), g.degree(v2)) < delta:
        conflict = c.elementary_conflict(k.vertices)
        if conflict is not None:
            return Verdict(
                VIOLATION,
                f"interior degree below {delta} but {conflict[0]} and "
                f"{conflict[1]} share missing color {conflict[2]}",
            )
    shared = c.missing_mask(v3) & (c.missing_mask(v0) | c.missing_mask(v1))
    if shared.bit_count() > 1:
        return Verdict(
            VIOLATION,
            f"endpoint {v3} shares colors {_mask_colors(shared)} with the "
            f"uncolored edge's endpoints",
        )
    return Verdict(OK)


# ---------------------------------------------------------------------------
# Degree conditions
# ---------------------------------------------------------------------------


def check_val(g: Graph, x: int, y: int) -> Verdict:
    """Adjacency count at a critical edge: x needs at least
    max_degree - d(y) + 1 neighbors of maximum degree besides y."""
    if not g.has_edge(x, y):
        raise StructuralError(f"edge ({x}, {y}) not in graph")
    delta = g.max_degree
    needed = delta - g.degree(y) + 1
    have = sum(1 for z in g.neighbors(x) if z != y and g.degree(z) == delta)
    if have < needed:
        return Verdict(
            VIOLATION,
            f"vertex {x} has {have} max-degree neighbors besides {y}, needs {needed}",
        )
    return Verdict(OK)


def check_degree_dichotomy(
    g: Graph,
    a: int,
    *,
    samples: int = 100,
    seed: int = 0,
    colorings: dict[tuple[int, int], list[PartialEdgeColoring]] | None = None,
    timeout_ms: int | None = oracle.DEFAULT_TIMEOUT_MS,
) -> Verdict:
    """Low-degree anchor forces a degree gap, plus a missing-color bound.

    Inapplicable unless 3·d(a) <= 2·max_degree - n + 2.  Then every other
    vertex must have degree >= max_degree - d(a) + 1 or
    <= n - max_degree + 2·d(a) - 6, and each high-degree vertex shares at
    most one missing color with {a, b} under colorings of the graph minus
    an edge ab to a max-degree neighbor b.  Colorings are sampled unless
    supplied via ``colorings`` (keyed by the normalized edge).
    """
    n = g.n
    delta = g.max_degree
    da = g.degree(a)
    if 3 * da > 2 * delta - n + 2:
        return Verdict(INAPPLICABLE, f"anchor degree {da} above the bound")
    high = delta - da + 1
    low = n - delta + 2 * da - 6
    for v in range(n):
        if v == a:
            continue
        dv = g.degree(v)
        if not (dv >= high or dv <= low):
            return Verdict(
                VIOLATION,
                f"vertex {v} has degree {dv}, outside >= {high} and <= {low}",
            )
    for b in g.neighbors(a):
        if g.degree(b) != delta:
            continue
        e = (a, b) if a < b else (b, a)
        if colorings is not None:
            phis = colorings.get(e, [])
        else:
            phis = oracle.sample_colorings(g, e, samples, seed, timeout_ms=timeout_ms)
        for phi in phis:
            shared_ab = phi.missing_mask(a) | phi.missing_mask(b)
            for v in range(n):
                if v == a or g.degree(v) < high:
                    continue
                if (phi.missing_mask(v) & shared_ab).bit_count() > 1:
                    return Verdict(
                        VIOLATION,
                        f"vertex {v} shares two missing colors with the ends "
                        f"of ({a}, {b})",
                    )
    return Verdict(OK)


# ---------------------------------------------------------------------------
# Forks, short-kites, kites
# ---------------------------------------------------------------------------

_FORK_EDGE_NAMES = {
    "fork": (("a", "b"), ("b", "u"), ("u", "s1"), ("u", "s2"), ("s1", "t1"), ("s2", "t2")),
    "short-kite": (("a", "b"), ("a", "c"), ("b", "u"), ("c", "u"), ("u", "x"), ("u", "y")),
    "kite": (
        ("a", "b"),
        ("a", "c"),
        ("b", "u"),
        ("c", "u"),
        ("u", "s1"),
        ("u", "s2"),
        ("s1", "t1"),
        ("s2", "t2"),
    ),
}


@dataclass(frozen=True)
class ForkLike:
    """A named embedding of one of the three branched configurations."""

    kind: str
    roles: tuple[tuple[str, int], ...]

    @property
    def role_map(self) -> dict[str, int]:
        return dict(self.roles)

    def vertex(self, name: str) -> int:
        for role, v in self.roles:
            if role == name:
                return v
        raise KeyError(name)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        m = self.role_map
        out = []
        for p, q in _FORK_EDGE_NAMES[self.kind]:
            u, v = m[p], m[q]
            out.append((u, v) if u < v else (v, u))
        return tuple(out)


def _partners(c: PartialEdgeColoring, v: int, mask: int) -> list[int]:
    out = []
    for color in _mask_colors(mask):
        w = c.partner(v, color)
        if w is not None:
            out.append(w)
    return out


def find_forklike(c: PartialEdgeColoring, kind: str) -> list[ForkLike]:
    """Exhaustively list embeddings of the requested configuration.

    Forks carry their full color constraints; short-kites and kites carry
    the alternating-path conditions their validators assume.  Both
    orientations of the uncolored edge are tried, and the result order is
    fixed by the growth order of the role tuples.
    """
    if kind not in _FORK_EDGE_NAMES:
        raise ValueError(f"unknown kind {kind!r}")
    hole = _require_single_hole(c)
    out: list[ForkLike] = []
    for a, b in (hole, (hole[1], hole[0])):
        if kind == "fork":
            _find_forks(c, a, b, out)
        elif kind == "short-kite":
            _find_short_kites(c, a, b, out)
        else:
            _find_kites(c, a, b, out)
    return out


def _find_forks(c: PartialEdgeColoring, a: int, b: int, out: list[ForkLike]) -> None:
    miss_a = c.missing_mask(a)
    miss_ab = miss_a | c.missing_mask(b)
    for u in _partners(c, b, miss_a):
        if u == a:
            continue
        branch = [
            s for s in _partners(c, u, miss_ab) if s not in (a, b)
        ]
        for i, s1 in enumerate(branch):
            for s2 in branch[i + 1:]:
                lo, hi = (s1, s2) if s1 < s2 else (s2, s1)
                for t1 in _partners(c, lo, miss_ab):
                    if t1 in (a, b, u, lo, hi):
                        continue
                    for t2 in _partners(c, hi, miss_ab):
                        if t2 in (a, b, u, lo, hi, t1):
                            continue
                        c1 = c.color(lo, t1)
                        c2 = c.color(hi, t2)
                        if (
                            c.missing_mask(t2) >> c1 & 1
                            and c.missing_mask(t1) >> c2 & 1
                        ):
                            out.append(
                                ForkLike(
                                    "fork",
                                    (
                                        ("a", a),
                                        ("b", b),
                                        ("u", u),
                                        ("s1", lo),
                                        ("s2", hi),
                                        ("t1", t1),
                                        ("t2", t2),
                                    ),
                                )
                            )


def _find_short_kites(
    c: PartialEdgeColoring, a: int, b: int, out: list[ForkLike]
) -> None:
    miss_a = c.missing_mask(a)
    miss_b = c.missing_mask(b)
    miss_ab = miss_a | miss_b
    for cc in _partners(c, a, miss_b):
        if cc == b:
            continue
        for u in _partners(c, b, miss_a):
            if u in (a, b, cc):
                continue
            if not c.graph.has_edge(cc, u):
                continue
            cu_color = c.color(cc, u)
            if not (cu_color and miss_ab >> cu_color & 1):
                continue
            for x in _partners(c, u, miss_ab):
                if x in (a, b, cc, u):
                    continue
                for y in _partners(c, u, miss_ab | c.missing_mask(cc)):
                    if y in (a, b, cc, u, x):
                        continue
                    out.append(
                        ForkLike(
                            "short-kite",
                            (
                                ("a", a),
                                ("b", b),
                                ("c", cc),
                                ("u", u),
                                ("x", x),
                                ("y", y),
                            ),
                        )
                    )


def _find_kites(c: PartialEdgeColoring, a: int, b: int, out: list[ForkLike]) -> None:
    miss_a = c.missing_mask(a)
    miss_b = c.missing_mask(b)
    miss_ab = miss_a | miss_b
    for cc in _partners(c, a, miss_b):
        if cc == b:
            continue
        miss_abc = miss_ab | c.missing_mask(cc)
        for u in _partners(c, b, miss_a):
            if u in (a, b, cc):
                continue
            if not c.graph.has_edge(cc, u):
                continue
            cu_color = c.color(cc, u)
            if not (cu_color and miss_ab >> cu_color & 1):
                continue
            miss_abcu = miss_abc | c.missing_mask(u)
            for s1 in _partners(c, u, miss_ab):
                if s1 in (a, b, cc, u):
                    continue
                for s2 in _partners(c, u, miss_abc):
                    if s2 in (a, b, cc, u, s1):
                        continue
                    for t1 in _partners(c, s1, miss_ab | c.missing_mask(u)):
                        if t1 in (a, b, cc, u, s1, s2):
                            continue
                        for t2 in _partners(c, s2, miss_abcu):
                            if t2 in (a, b, cc, u, s1, s2, t1):
                                continue
                            out.append(
                                ForkLike(
                                    "kite",
                                    (
                                        ("a", a),
                                        ("b", b),
                                        ("c", cc),
                                        ("u", u),
                                        ("s1", s1),
                                        ("s2", s2),
                                        ("t1", t1),
                                        ("t2", t2),
                                    ),
                                )
                            )


def _check_forklike_shape(c: PartialEdgeColoring, fl: ForkLike) -> None:
    hole = _require_single_hole(c)
    m = fl.role_map
    verts = [v for _, v in fl.roles]
    if len(set(verts)) != len(verts):
        raise StructuralError(f"{fl.kind} vertices must be distinct")
    if set(m) != {name for pair in _FORK_EDGE_NAMES[fl.kind] for name in pair}:
        raise StructuralError(f"{fl.kind} has the wrong role names")
    ab = (m["a"], m["b"]) if m["a"] < m["b"] else (m["b"], m["a"])
    if ab != hole:
        raise StructuralError(f"{fl.kind} edge ab={ab} is not the uncolored edge")
    for e in fl.edges:
        if not c.graph.has_edge(*e):
            raise StructuralError(f"{fl.kind} edge {e} not in graph")
        if e != hole and c.color(*e) == 0:
            raise StructuralError(f"{fl.kind} edge {e} is uncolored")


def _forklike_precondition_failure(c: PartialEdgeColoring, fl: ForkLike) -> str | None:
    """First failing color condition of the configuration, or None.

    For forks these are the defining constraints; for the kite shapes
    they are the alternating-path conditions the conclusions assume.
    """
    m = fl.role_map
    miss = {name: c.missing_mask(v) for name, v in fl.roles}
    ab_mask = miss["a"] | miss["b"]

    def has(mask: int, u: str, v: str) -> bool:
        return bool(mask >> c.color(m[u], m[v]) & 1)

    if fl.kind == "fork":
        checks = [
            (has(miss["a"], "b", "u"), "bu color missed at a"),
            (has(ab_mask, "u", "s1"), "us1 color missed at a or b"),
            (has(ab_mask, "u", "s2"), "us2 color missed at a or b"),
            (has(ab_mask & miss["t2"], "s1", "t1"), "s1t1 color in the shared set"),
            (has(ab_mask & miss["t1"], "s2", "t2"), "s2t2 color in the shared set"),
        ]
    elif fl.kind == "short-kite":
        checks = [
            (has(miss["a"], "b", "u"), "bu color missed at a"),
            (has(miss["b"], "a", "c"), "ac color missed at b"),
            (has(ab_mask, "c", "u"), "cu color missed at a or b"),
            (has(ab_mask, "u", "x"), "ux color missed at a or b"),
            (has(ab_mask | miss["c"], "u", "y"), "uy color missed at a, b, or c"),
        ]
    else:
        checks = [
            (has(miss["a"], "b", "u"), "bu color missed at a"),
            (has(miss["b"], "a", "c"), "ac color missed at b"),
            (has(ab_mask, "c", "u"), "cu color missed at a or b"),
            (has(ab_mask, "u", "s1"), "us1 color missed at a or b"),
            (has(ab_mask | miss["c"], "u", "s2"), "us2 color missed at a, b, or c"),
            (has(ab_mask | miss["u"], "s1", "t1"), "s1t1 color missed at a, b, or u"),
            (
                has(ab_mask | miss["c"] | miss["u"], "s2", "t2"),
                "s2t2 color missed at a, b, c, or u",
            ),
        ]
    for ok, what in checks:
        if not ok:
            return f"{what} fails"
    return None


def check_fork_exclusion(c: PartialEdgeColoring) -> Verdict:
    """No fork may exist whose degrees satisfy
    max_degree >= d(a) + d(t1) + d(t2) + 1; finding one is a violation."""
    g = c.graph
    delta = g.max_degree
    found = find_forklike(c, "fork")
    for fl in found:
        m = fl.role_map
        if delta >= g.degree(m["a"]) + g.degree(m["t1"]) + g.degree(m["t2"]) + 1:
            return Verdict(
                VIOLATION,
                f"fork at {m} with degree sum under the exclusion bound",
            )
    return Verdict(OK, f"{len(found)} forks, none under the degree bound")


def validate_shortkite(c: PartialEdgeColoring, sk: ForkLike) -> Verdict:
    """Both outer vertices sharing a missing color with the hole's
    endpoints forces one of them to have maximum degree."""
    if sk.kind != "short-kite":
        raise StructuralError(f"expected a short-kite, got {sk.kind}")
    _check_forklike_shape(c, sk)
    failure = _forklike_precondition_failure(c, sk)
    if failure is not None:
        return Verdict(INAPPLICABLE, failure)
    g = c.graph
    m = sk.role_map
    ab_mask = c.missing_mask(m["a"]) | c.missing_mask(m["b"])
    if not (c.missing_mask(m["x"]) & ab_mask) or not (
        c.missing_mask(m["y"]) & ab_mask
    ):
        return Verdict(INAPPLICABLE, "an outer vertex shares no missing color")
    delta = g.max_degree
    if max(g.degree(m["x"]), g.degree(m["y"])) != delta:
        return Verdict(
            VIOLATION,
            f"outer degrees {g.degree(m['x'])}, {g.degree(m['y'])} both below {delta}",
        )
    return Verdict(OK)


def validate_kite(c: PartialEdgeColoring, kt: ForkLike) -> Verdict:
    """With equal tip-edge colors, the tips share at most four missing
    colors with the hole's endpoints."""
    if kt.kind != "kite":
        raise StructuralError(f"expected a kite, got {kt.kind}")
    _check_forklike_shape(c, kt)
    failure = _forklike_precondition_failure(c, kt)
    if failure is not None:
        return Verdict(INAPPLICABLE, failure)
    m = kt.role_map
    if c.color(m["s1"], m["t1"]) != c.color(m["s2"], m["t2"]):
        return Verdict(INAPPLICABLE, "tip edges carry different colors")
    shared = (
        c.missing_mask(m["t1"])
        & c.missing_mask(m["t2"])
        & (c.missing_mask(m["a"]) | c.missing_mask(m["b"]))
    )
    if shared.bit_count() > 4:
        return Verdict(
            VIOLATION,
            f"tips share {shared.bit_count()} missing colors "
            f"{_mask_colors(shared)} with the hole endpoints",
        )
    return Verdict(OK)
