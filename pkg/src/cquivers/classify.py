"""Membership in the combinatorial mutation class of type A_n.

A simple connected m-coloured quiver belongs to the class iff

1. its underlying graph is hole-free (chordal),
2. every vertex neighbourhood splits into at most two cliques of size
   at most m + 1 each, with no arrows between the two sides, and
3. every triangle has cyclic colour sum m - 1 or 2m + 1 (plain integer
   sums, not reduced mod m + 1).

Chordality is tested with a maximum-cardinality-search elimination order;
a witness hole is recovered by an induced-cycle search only on failure.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .core import (
    ColouredQuiver,
    QuiverError,
    UnderlyingGraph,
    require_valid,
    underlying_graph,
)
from .mutation import NotAMemberError


# -- failure witnesses -------------------------------------------------------


@dataclass(frozen=True)
class NotSimple:
    kind = "not-simple"
    pair: tuple[int, int]

    def to_json(self) -> dict:
        return {"kind": self.kind, "pair": [v + 1 for v in self.pair]}


@dataclass(frozen=True)
class NotConnected:
    kind = "not-connected"
    component_count: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "components": self.component_count}


@dataclass(frozen=True)
class Hole:
    kind = "hole"
    cycle: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "cycle": [v + 1 for v in self.cycle]}


@dataclass(frozen=True)
class BadVertexSplit:
    kind = "bad-vertex-split"
    vertex: int

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertex": self.vertex + 1}


@dataclass(frozen=True)
class BadTriangle:
    kind = "bad-triangle"
    vertices: tuple[int, int, int]
    sums: tuple[int, int]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": [v + 1 for v in self.vertices],
            "sums": list(self.sums),
        }


Failure = NotSimple | NotConnected | Hole | BadVertexSplit | BadTriangle


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    failures: tuple[Failure, ...]

    def to_json(self) -> dict:
        return {"member": self.member, "failures": [f.to_json() for f in self.failures]}


@dataclass(frozen=True)
class CliqueDecomposition:
    """Split of a vertex neighbourhood into at most two cliques.

    part_a holds the component containing the smallest-indexed neighbour;
    the clique sizes counted with the vertex itself are r and k.
    """

    vertex: int
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.part_a) + 1

    @property
    def k(self) -> int:
        return len(self.part_b) + 1


# -- chordality --------------------------------------------------------------


def _mcs_order(g: UnderlyingGraph) -> list[int]:
    """Maximum cardinality search visit order (ties to smallest index)."""
    weight = {v: 0 for v in range(g.n)}
    visited: set[int] = set()
    order: list[int] = []
    for _ in range(g.n):
        v = max(
            (v for v in range(g.n) if v not in visited),
            key=lambda v: (weight[v], -v),
        )
        visited.add(v)
        order.append(v)
        for u in g.neighbours(v):
            if u not in visited:
                weight[u] += 1
    return order


def _is_chordal(g: UnderlyingGraph) -> bool:
    order = _mcs_order(g)
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbours(v) if pos[u] < pos[v]]
        if not earlier:
            continue
        u = max(earlier, key=lambda x: pos[x])
        rest = set(earlier) - {u}
        if not rest <= g.neighbours(u):
            return False
    return True


def _find_hole_witness(g: UnderlyingGraph) -> tuple[int, ...] | None:
    """Search an induced cycle of length >= 4.

    For every non-adjacent pair u, w with a common neighbour v, a shortest
    u-w path avoiding N[v] closes through v to a chordless cycle.
    """
    for v in range(g.n):
        nv = sorted(g.neighbours(v))
        for ai in range(len(nv)):
            for bi in range(ai + 1, len(nv)):
                u, w = nv[ai], nv[bi]
                if g.has_edge(u, w):
                    continue
                blocked = (g.neighbours(v) | {v}) - {u, w}
                path = _shortest_path_avoiding(g, u, w, blocked)
                if path is not None:
                    return (v, *path)
    return None


def _shortest_path_avoiding(
    g: UnderlyingGraph, src: int, dst: int, blocked: set[int] | frozenset[int]
) -> tuple[int, ...] | None:
    prev: dict[int, int | None] = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            cur: int | None = x
            while cur is not None:
                path.append(cur)
                cur = prev[cur]
            return tuple(reversed(path))
        for y in sorted(g.neighbours(x)):
            if y in blocked or y in prev:
                continue
            prev[y] = x
            queue.append(y)
    return None


def find_hole(q: ColouredQuiver) -> tuple[int, ...] | None:
    """A witness induced cycle of length >= 4, or None iff chordal."""
    require_valid(q)
    return find_hole_in_graph(underlying_graph(q))


def find_hole_in_graph(g: UnderlyingGraph) -> tuple[int, ...] | None:
    if _is_chordal(g):
        return None
    witness = _find_hole_witness(g)
    if witness is None:  # pragma: no cover - MCS and witness search disagree
        raise AssertionError("graph not chordal but no hole found")
    return witness


# -- vertex splits -----------------------------------------------------------


def split_in_graph(
    g: UnderlyingGraph, v: int, m: int
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Condition-1 witness on the underlying graph, colour-independent."""
    nv = sorted(g.adjacency[v])
    if not nv:
        return ((), ())
    comps: list[list[int]] = []
    seen: set[int] = set()
    nv_set = set(nv)
    for start in nv:
        if start in seen:
            continue
        comp = set()
        stack = [start]
        while stack:
            x = stack.pop()
            if x in comp:
                continue
            comp.add(x)
            stack.extend((g.neighbours(x) & nv_set) - comp)
        seen |= comp
        comps.append(sorted(comp))
    if len(comps) > 2:
        return None
    for comp in comps:
        if len(comp) > m + 1:
            return None
        for i, a in enumerate(comp):
            for b in comp[i + 1 :]:
                if not g.has_edge(a, b):
                    return None
    comps.sort(key=lambda c: c[0])
    part_a = tuple(comps[0]) if comps else ()
    part_b = tuple(comps[1]) if len(comps) > 1 else ()
    return (part_a, part_b)


def vertex_split(q: ColouredQuiver, v: int) -> CliqueDecomposition | None:
    """Neighbourhood split of v into at most two cliques of size <= m + 1."""
    require_valid(q)
    if not q.is_simple:
        raise QuiverError("vertex_split requires a simple quiver")
    if not (0 <= v < q.n):
        raise QuiverError(f"vertex {v} out of range")
    parts = split_in_graph(underlying_graph(q), v, q.m)
    if parts is None:
        return None
    return CliqueDecomposition(v, parts[0], parts[1])


# -- triangles ---------------------------------------------------------------


def triangle_sums(q: ColouredQuiver, v1: int, v2: int, v3: int) -> tuple[int, int]:
    """Colour sums (s, 3m - s) of the two orientations of a triangle.

    s is the sum along v1 -> v2 -> v3 -> v1; sums are plain integers.
    """
    require_valid(q)
    if not q.is_simple:
        raise QuiverError("triangle_sums requires a simple quiver")
    g = underlying_graph(q)
    for a, b in ((v1, v2), (v2, v3), (v1, v3)):
        if not g.has_edge(a, b):
            raise QuiverError(f"vertices {a}, {b} are not adjacent")
    s = q.colour(v1, v2) + q.colour(v2, v3) + q.colour(v3, v1)  # type: ignore[operator]
    return (s, 3 * q.m - s)


def _triangles(g: UnderlyingGraph):
    for i, j in sorted(g.edges):
        for k in sorted(g.neighbours(i) & g.neighbours(j)):
            if k > j:
                yield (i, j, k)


# -- membership --------------------------------------------------------------


def is_member(q: ColouredQuiver) -> MembershipVerdict:
    """Full membership check with explicit witnesses for every failure."""
    require_valid(q)
    failures: list[Failure] = []
    g = underlying_graph(q)
    if not g.connected:
        failures.append(NotConnected(len(g.components)))
    if not q.is_simple:
        seen_pairs: set[tuple[int, int]] = set()
        for a in q.arrows:
            key = (a.source, a.target)
            if a.mult > 1 or key in seen_pairs:
                failures.append(NotSimple((min(key), max(key))))
                break
            seen_pairs.add(key)
        return MembershipVerdict(False, tuple(failures))
    hole = find_hole_in_graph(g)
    if hole is not None:
        failures.append(Hole(hole))
    for v in range(q.n):
        if g.degree(v) >= 1 and split_in_graph(g, v, q.m) is None:
            failures.append(BadVertexSplit(v))
    for tri in _triangles(g):
        s, rev = triangle_sums(q, *tri)
        if s not in (q.m - 1, 2 * q.m + 1):
            failures.append(BadTriangle(tri, (s, rev)))
    return MembershipVerdict(not failures, tuple(failures))


def require_member(q: ColouredQuiver) -> None:
    verdict = is_member(q)
    if not verdict.member:
        raise NotAMemberError(verdict)
