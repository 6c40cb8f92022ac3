"""Bipartite matchings that cover prescribed vertex sets.

The key fact used by the symbol filler: in a bipartite graph with maximum
degree at most n, there is a matching covering every vertex of degree
exactly n.  The constructive route implemented here builds one matching M
saturating the left-side degree-n vertices X1, another matching N
saturating the right-side degree-n vertices Y1, and merges them into a
single matching covering X1 and Y1 by walking the components of the
symmetric difference M xor N.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal

from .core import CellSet
from .errors import NoSaturation, PreconditionViolated

Edge = tuple[int, int]
Vertex = tuple[str, int]  # ("left" | "right", index), sides ordered left < right

LEFT = "left"
RIGHT = "right"
_SIDE_RANK = {LEFT: 0, RIGHT: 1}


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph on left vertices 1..left_size, right 1..right_size.

    Isolated vertices are permitted; they arise naturally as empty board
    lines.  Edges are (left, right) pairs.
    """

    left_size: int
    right_size: int
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        if self.left_size < 1 or self.right_size < 1:
            raise ValueError("vertex class sizes must be positive")
        for left, right in self.edges:
            if not (1 <= left <= self.left_size and 1 <= right <= self.right_size):
                raise ValueError(f"edge ({left}, {right}) out of range")

    def left_adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {}
        for left, right in self.edges:
            adj.setdefault(left, []).append(right)
        return {u: tuple(sorted(vs)) for u, vs in adj.items()}

    def right_adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {}
        for left, right in self.edges:
            adj.setdefault(right, []).append(left)
        return {v: tuple(sorted(us)) for v, us in adj.items()}

    def degree(self, side: str, index: int) -> int:
        pos = 0 if side == LEFT else 1
        return sum(1 for e in self.edges if e[pos] == index)

    def flipped(self) -> "BipartiteGraph":
        return BipartiteGraph(
            self.right_size, self.left_size, frozenset((r, l) for l, r in self.edges)
        )


@dataclass(frozen=True)
class Matching:
    """A set of edges no two of which share an endpoint."""

    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(tuple(e) for e in self.edges))
        lefts = [l for l, _ in self.edges]
        rights = [r for _, r in self.edges]
        if len(set(lefts)) != len(lefts) or len(set(rights)) != len(rights):
            raise ValueError("edges share an endpoint")

    def left_vertices(self) -> frozenset[int]:
        return frozenset(l for l, _ in self.edges)

    def right_vertices(self) -> frozenset[int]:
        return frozenset(r for _, r in self.edges)

    def flipped(self) -> "Matching":
        return Matching(frozenset((r, l) for l, r in self.edges))


def occupancy_graph(cell_set: CellSet) -> BipartiteGraph:
    """Rows on the left, columns on the right, one edge per occupied cell."""
    return BipartiteGraph(cell_set.rows, cell_set.cols, cell_set.cells)


def _augment(
    u: int,
    adj: dict[int, tuple[int, ...]],
    match_left: dict[int, int],
    match_right: dict[int, int],
    visited: set[int],
) -> bool:
    # Prefer a free neighbor before rerouting matched ones; neighbors are
    # scanned in increasing index order in both passes.
    neighbors = adj.get(u, ())
    for v in neighbors:
        if v not in visited and v not in match_right:
            match_right[v] = u
            match_left[u] = v
            return True
    for v in neighbors:
        if v not in visited:
            visited.add(v)
            if _augment(match_right[v], adj, match_left, match_right, visited):
                match_right[v] = u
                match_left[u] = v
                return True
    return False


def saturating_matching(
    graph: BipartiteGraph, side: Literal["left", "right"], targets: Iterable[int]
) -> Matching:
    """Build a matching with exactly one edge per target vertex.

    Targets live on ``side``.  Augmenting paths are grown from each target
    in increasing index order.  If some target cannot be reached, Hall's
    condition fails and NoSaturation reports a target-side witness set
    with more members than neighbors.
    """
    if side not in (LEFT, RIGHT):
        raise PreconditionViolated(f"side must be 'left' or 'right', got {side!r}")
    if side == RIGHT:
        try:
            return saturating_matching(graph.flipped(), LEFT, targets).flipped()
        except NoSaturation as exc:
            raise NoSaturation(side=RIGHT, witness=exc.witness) from None

    target_list = sorted(set(targets))
    for u in target_list:
        if not (1 <= u <= graph.left_size):
            raise PreconditionViolated(f"target {u} is not a left vertex of the graph")

    adj = graph.left_adjacency()
    match_left: dict[int, int] = {}
    match_right: dict[int, int] = {}
    for u in target_list:
        visited: set[int] = set()
        if not _augment(u, adj, match_left, match_right, visited):
            blockers = frozenset({u} | {match_right[v] for v in visited})
            raise NoSaturation(side=LEFT, witness=blockers)
    return Matching(frozenset(match_left.items()))


@dataclass(frozen=True)
class AlternatingComponent:
    """One maximal path or cycle of a symmetric difference M xor N.

    ``vertices`` lists the traversal order; ``edges[i]`` joins
    ``vertices[i]`` to ``vertices[i + 1]`` (indices mod length for a
    cycle) and carries ``tags[i]``, either "M" or "N".  Edges stay in
    (left, right) form regardless of traversal direction.
    """

    kind: Literal["path", "cycle"]
    vertices: tuple[Vertex, ...]
    edges: tuple[Edge, ...]
    tags: tuple[str, ...]

    def edges_tagged(self, tag: str) -> tuple[Edge, ...]:
        return tuple(e for e, t in zip(self.edges, self.tags) if t == tag)


def _vertex_key(vertex: Vertex) -> tuple[int, int]:
    return (_SIDE_RANK[vertex[0]], vertex[1])


def symmetric_difference_components(
    m: Matching, n: Matching
) -> tuple[AlternatingComponent, ...]:
    """Split M xor N into its maximal alternating paths and cycles.

    Every vertex of the difference has degree at most two (at most one
    edge from each matching), so components are paths or even cycles.  A
    path is traversed from its endpoint with the smaller (side, index)
    key, left before right; a cycle starts at its smallest vertex and
    follows its M edge first.  Components are reported sorted by their
    starting vertex.
    """
    tagged: list[tuple[Edge, str]] = []
    for edge in sorted(m.edges - n.edges):
        tagged.append((edge, "M"))
    for edge in sorted(n.edges - m.edges):
        tagged.append((edge, "N"))

    incident: dict[Vertex, list[tuple[Edge, str]]] = {}
    for edge, tag in tagged:
        left, right = edge
        incident.setdefault((LEFT, left), []).append((edge, tag))
        incident.setdefault((RIGHT, right), []).append((edge, tag))

    used: set[tuple[Edge, str]] = set()

    def walk(start: Vertex, first: tuple[Edge, str]) -> AlternatingComponent:
        vertices = [start]
        edges = []
        tags = []
        current = start
        step = first
        while True:
            used.add(step)
            edge, tag = step
            edges.append(edge)
            tags.append(tag)
            side, index = current
            other: Vertex = (
                (RIGHT, edge[1]) if side == LEFT else (LEFT, edge[0])
            )
            if other == start:
                return AlternatingComponent("cycle", tuple(vertices), tuple(edges), tuple(tags))
            vertices.append(other)
            current = other
            candidates = [e for e in incident[other] if e not in used]
            if not candidates:
                return AlternatingComponent("path", tuple(vertices), tuple(edges), tuple(tags))
            step = candidates[0]  # degree <= 2: at most one unused edge remains

    components: list[AlternatingComponent] = []
    endpoints = sorted(
        (v for v, inc in incident.items() if len(inc) == 1), key=_vertex_key
    )
    for vertex in endpoints:
        remaining = [e for e in incident[vertex] if e not in used]
        if remaining:
            components.append(walk(vertex, remaining[0]))

    cycle_vertices = sorted(
        (v for v, inc in incident.items() if any(e not in used for e in inc)),
        key=_vertex_key,
    )
    for vertex in cycle_vertices:
        remaining = [e for e in incident[vertex] if e not in used]
        if not remaining:
            continue
        m_first = [e for e in remaining if e[1] == "M"]
        components.append(walk(vertex, m_first[0] if m_first else remaining[0]))

    return tuple(sorted(components, key=lambda comp: _vertex_key(comp.vertices[0])))


def _require(condition: bool, detail: str) -> None:
    if not condition:
        raise PreconditionViolated(f"matching merge invariant failed: {detail}")


def _select_path_edges(
    comp: AlternatingComponent, x1: frozenset[int], y1: frozenset[int]
) -> tuple[Edge, ...]:
    # Case analysis for one maximal path.  Preconditions guarantee that
    # every M edge has its left endpoint in X1 and every N edge has its
    # right endpoint in Y1; each derived membership below is checked
    # rather than assumed.
    verts = comp.vertices
    tags = comp.tags
    v1, v2, vm = verts[0], verts[1], verts[-1]

    def in_x1(v: Vertex) -> bool:
        return v[0] == LEFT and v[1] in x1

    def in_y1(v: Vertex) -> bool:
        return v[0] == RIGHT and v[1] in y1

    if tags[0] == "M":
        if v2[0] == LEFT:
            # First edge is M with its left endpoint mid-path, so the
            # start v1 is a right vertex that N cannot cover.
            _require(in_x1(v2), f"vertex {v2} should lie in X1")
            _require(v1[0] == RIGHT and not in_y1(v1), f"vertex {v1} should avoid Y1")
            if in_x1(vm):
                return comp.edges_tagged("M")
            if in_y1(vm):
                return comp.edges_tagged("N")
            raise PreconditionViolated(
                f"matching merge invariant failed: far end {vm} lies in neither X1 nor Y1"
            )
        # v2 on the right: v1 is the left endpoint of an M edge.
        _require(v1[0] == LEFT and in_x1(v1), f"vertex {v1} should lie in X1")
        if len(verts) > 2:
            _require(in_y1(v2), f"vertex {v2} should lie in Y1")
        if tags[-1] == "M" and vm[0] == RIGHT:
            _require(not in_y1(vm), f"vertex {vm} should avoid Y1")
        if tags[-1] == "N" and vm[0] == LEFT:
            _require(not in_x1(vm), f"vertex {vm} should avoid X1")
        return comp.edges_tagged("M")

    # Mirror image for paths that start with an N edge.
    if v2[0] == RIGHT:
        _require(in_y1(v2), f"vertex {v2} should lie in Y1")
        _require(v1[0] == LEFT and not in_x1(v1), f"vertex {v1} should avoid X1")
        if in_y1(vm):
            return comp.edges_tagged("N")
        if in_x1(vm):
            return comp.edges_tagged("M")
        raise PreconditionViolated(
            f"matching merge invariant failed: far end {vm} lies in neither X1 nor Y1"
        )
    _require(v1[0] == RIGHT and in_y1(v1), f"vertex {v1} should lie in Y1")
    if len(verts) > 2:
        _require(in_x1(v2), f"vertex {v2} should lie in X1")
    if tags[-1] == "N" and vm[0] == LEFT:
        _require(not in_x1(vm), f"vertex {vm} should avoid X1")
    if tags[-1] == "M" and vm[0] == RIGHT:
        _require(not in_y1(vm), f"vertex {vm} should avoid Y1")
    return comp.edges_tagged("N")


def merge_matchings(
    graph: BipartiteGraph,
    m: Matching,
    n: Matching,
    x1: Iterable[int],
    y1: Iterable[int],
) -> Matching:
    """Merge two saturating matchings into one covering X1 and Y1.

    Preconditions: M and N are matchings inside ``graph``; M covers the
    left set X1 with exactly |X1| edges; N covers the right set Y1 with
    exactly |Y1| edges.  The result K satisfies K subset of (M union N),
    is a matching, and covers X1 union Y1.  K keeps every edge of
    M intersect N, the M edges of each alternating cycle, and the side of
    each alternating path chosen by the endpoint case analysis.
    """
    x1 = frozenset(x1)
    y1 = frozenset(y1)
    if not m.edges <= graph.edges:
        raise PreconditionViolated("M contains an edge outside the graph")
    if not n.edges <= graph.edges:
        raise PreconditionViolated("N contains an edge outside the graph")
    if len(m.edges) != len(x1) or not x1 <= m.left_vertices():
        raise PreconditionViolated("M must cover X1 with exactly |X1| edges")
    if len(n.edges) != len(y1) or not y1 <= n.right_vertices():
        raise PreconditionViolated("N must cover Y1 with exactly |Y1| edges")

    kept: set[Edge] = set(m.edges & n.edges)
    for comp in symmetric_difference_components(m, n):
        if comp.kind == "cycle":
            chosen = comp.edges_tagged("M")
        else:
            chosen = _select_path_edges(comp, x1, y1)
        kept.update(chosen)

    lefts = [l for l, _ in kept]
    rights = [r for _, r in kept]
    _require(len(set(lefts)) == len(lefts), "merged edges share a left endpoint")
    _require(len(set(rights)) == len(rights), "merged edges share a right endpoint")
    _require(x1 <= set(lefts), "merged matching misses part of X1")
    _require(y1 <= set(rights), "merged matching misses part of Y1")
    _require(kept <= (m.edges | n.edges), "merged matching left M union N")
    return Matching(frozenset(kept))
