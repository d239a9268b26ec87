"""Constructive reduction of class members to a line quiver.

Every member that is not already a path has an almost extremal clique: a
clique whose arrow removal leaves a path component.  The reduction walks
such a clique along its pendant path one vertex per mutation power, turns
it extremal, then shrinks it by one vertex, and repeats until the
underlying graph is a path.  All emitted powers lie in [1, m + 1] and the
whole sequence replays forward to the returned line and backward (powers
m + 1 - t, reversed) to the original quiver.

The walk step mutates the clique vertex carrying the tail with power
c1 + 1, where c1 is the smallest colour leaving it into the clique.  The
resulting clique always contains the absorbed tail vertex; depending on
how the tail colour compares with c1 the old clique keeps its size or
sheds a vertex into a fresh triangle, and both shapes advance the tail.
The shapes are re-checked after every step and any mismatch is raised,
never patched silently.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ColouredQuiver,
    QuiverError,
    linear_quiver,
    require_valid,
    underlying_graph,
)
from .classify import require_member
from .analysis import maximal_cliques
from .mutation import MutationSequence, MutationStep, mutate_power


class AlreadyLinearError(QuiverError):
    """The quiver is already a line; there is nothing to reduce."""


@dataclass(frozen=True)
class ExtremalWitness:
    """A clique together with the path component certifying extremality.

    ``tail`` lists the component vertices starting at the clique vertex it
    hangs from; a single-vertex tail means the clique is extremal.
    """

    clique: tuple[int, ...]
    kind: str  # "extremal" | "almost-extremal"
    tail: tuple[int, ...]

    @property
    def apex(self) -> int:
        return self.tail[0]

    def to_json(self) -> dict:
        return {
            "clique": [v + 1 for v in self.clique],
            "kind": self.kind,
            "tail": [v + 1 for v in self.tail],
        }


def _edge_clique_map(q: ColouredQuiver) -> dict[tuple[int, int], tuple[int, ...]]:
    """Unique maximal clique through each edge (members only)."""
    mapping: dict[tuple[int, int], tuple[int, ...]] = {}
    for clique in maximal_cliques(q):
        for ai in range(len(clique)):
            for bi in range(ai + 1, len(clique)):
                edge = (clique[ai], clique[bi])
                if edge in mapping:
                    raise QuiverError(
                        f"edge {edge} lies in two maximal cliques; not a member shape"
                    )
                mapping[edge] = clique
    return mapping


def _clique_of_edge(q: ColouredQuiver, a: int, b: int) -> tuple[int, ...]:
    clique = _edge_clique_map(q).get((min(a, b), max(a, b)))
    if clique is None:
        raise QuiverError(f"no edge between {a} and {b}")
    return clique


def _longest_path(q: ColouredQuiver) -> tuple[int, ...]:
    """Longest simple path in the underlying graph; ties break to the
    lexicographically smallest vertex sequence."""
    g = underlying_graph(q)
    best: tuple[int, ...] = ()

    def extend(path: list[int], seen: set[int]) -> None:
        nonlocal best
        tip = path[-1]
        extended = False
        for u in sorted(g.neighbours(tip)):
            if u in seen:
                continue
            extended = True
            path.append(u)
            seen.add(u)
            extend(path, seen)
            seen.remove(u)
            path.pop()
        if not extended:
            cand = tuple(path)
            if len(cand) > len(best) or (len(cand) == len(best) and cand < best):
                best = cand

    for start in range(q.n):
        extend([start], {start})
    return best


def find_almost_extremal(q: ColouredQuiver) -> ExtremalWitness:
    """Witness clique via the longest-path construction."""
    require_member(q)
    g = underlying_graph(q)
    if g.is_path():
        raise AlreadyLinearError("quiver is already a line")
    path = _longest_path(q)
    first_clique = _clique_of_edge(q, path[0], path[1])
    if len(first_clique) >= 3:
        if not g.neighbours(path[0]) <= set(first_clique):
            raise QuiverError(
                "longest-path endpoint has a neighbour outside its clique; "
                "not a member shape"
            )
        return ExtremalWitness(first_clique, "extremal", (path[0],))
    k = next(i for i, v in enumerate(path) if g.degree(v) >= 3)
    clique = _clique_of_edge(q, path[k], path[k + 1])
    if len(clique) < 3:
        raise QuiverError("branch vertex not in a clique of size >= 3")
    return ExtremalWitness(clique, "almost-extremal", tuple(path[k::-1]))


def _clique_colours(q: ColouredQuiver, apex: int, clique) -> list[tuple[int, int]]:
    """(colour, vertex) of arrows leaving apex into the clique, sorted."""
    out = []
    for x in clique:
        if x == apex:
            continue
        c = q.colour(apex, x)
        assert c is not None
        out.append((c, x))
    out.sort()
    return out


def _apply(q: ColouredQuiver, steps: list[MutationStep], vertex: int, power: int):
    power %= q.m + 1
    if power == 0:
        return q
    steps.append(MutationStep(vertex, power))
    return mutate_power(q, vertex, power)


def make_extremal(
    q: ColouredQuiver, witness: ExtremalWitness
) -> tuple[ColouredQuiver, MutationSequence]:
    """Turn an almost extremal clique with a single pendant neighbour into
    an extremal one.

    Configuration: the apex v sees exactly the clique plus one pendant
    vertex w1 with no other neighbour.  The sequence normalizes the
    pendant colour to the smallest clique colour c1 by mutating at w1,
    then applies power c1 + 1 at v; the pendant joins the clique and the
    vertex of colour c1 drops to a pendant 2-clique.
    """
    require_member(q)
    if witness.kind != "almost-extremal" or len(witness.tail) != 2:
        raise QuiverError("make_extremal expects an almost-extremal witness "
                          "with a two-vertex component")
    v, w1 = witness.tail
    g = underlying_graph(q)
    clique = set(witness.clique)
    if g.neighbours(v) != (clique - {v}) | {w1}:
        raise QuiverError(f"apex {v} does not match the clique-plus-pendant shape")
    if g.neighbours(w1) != {v}:
        raise QuiverError(f"vertex {w1} is not pendant")
    colours = _clique_colours(q, v, clique)
    c1, v1 = colours[0]
    d = q.colour(v, w1)
    assert d is not None
    steps: list[MutationStep] = []
    cur = q
    if d != c1:
        cur = _apply(cur, steps, w1, c1 - d)
    cur = _apply(cur, steps, v, c1 + 1)
    new_clique = set(_clique_of_edge(cur, v, w1))
    expected = (clique - {v1}) | {w1}
    if new_clique != expected:
        raise QuiverError(
            f"make_extremal produced clique {sorted(new_clique)}, "
            f"expected {sorted(expected)}"
        )
    if not underlying_graph(cur).neighbours(w1) <= new_clique:
        raise QuiverError("absorbed pendant is not extremal in the result")
    return cur, MutationSequence(tuple(steps))


def shrink_extremal(
    q: ColouredQuiver, witness: ExtremalWitness
) -> tuple[ColouredQuiver, MutationSequence]:
    """Drop one vertex from an extremal clique.

    Configuration: all neighbours of the apex lie in one clique.  Power
    c1 + 1 at the apex (c1 the smallest leaving colour) expels the
    colour-c1 vertex into a 2-clique whose arrow from the apex has
    colour m.
    """
    require_member(q)
    if witness.kind != "extremal" or len(witness.tail) != 1:
        raise QuiverError("shrink_extremal expects an extremal witness")
    u = witness.apex
    clique = set(witness.clique)
    if len(clique) < 3:
        raise QuiverError("shrink_extremal needs a clique of size >= 3")
    g = underlying_graph(q)
    if g.neighbours(u) != clique - {u}:
        raise QuiverError(f"apex {u} has neighbours outside the clique")
    colours = _clique_colours(q, u, clique)
    c1, v1 = colours[0]
    steps: list[MutationStep] = []
    cur = _apply(q, steps, u, c1 + 1)
    if cur.colour(u, v1) != cur.m:
        raise QuiverError("shrink_extremal did not leave a colour-m pendant arrow")
    g2 = underlying_graph(cur)
    if not (clique - {u, v1}) <= g2.neighbours(u):
        raise QuiverError("shrink_extremal broke the remaining clique")
    if g2.neighbours(v1) & (clique - {u, v1}):
        raise QuiverError("expelled vertex still attached to the clique")
    return cur, MutationSequence(tuple(steps))


def reduce_to_line(
    q: ColouredQuiver, max_steps: int | None = None
) -> tuple[ColouredQuiver, MutationSequence]:
    """Mutate a class member into a quiver whose underlying graph is a path.

    Returns the line quiver together with the mutation sequence used;
    replaying the sequence from the input reproduces the line exactly and
    the inverse sequence recovers the input.
    """
    require_member(q)
    if max_steps is None:
        max_steps = 20 * q.n * (q.m + 2) + 16
    steps: list[MutationStep] = []
    cur = q

    def emit(vertex: int, power: int) -> None:
        nonlocal cur
        power %= cur.m + 1
        if power == 0:
            return
        if len(steps) >= max_steps:
            raise QuiverError(
                "reduction exceeded its safety cap; this would contradict "
                "finiteness of the reduction"
            )
        steps.append(MutationStep(vertex, power))
        cur = mutate_power(cur, vertex, power)

    while not underlying_graph(cur).is_path():
        witness = find_almost_extremal(cur)
        clique = set(witness.clique)
        tail = list(witness.tail)
        while len(tail) > 1:
            apex, w1 = tail[0], tail[1]
            if len(tail) == 2:
                cur2, seq = make_extremal(
                    cur, ExtremalWitness(tuple(sorted(clique)), "almost-extremal",
                                         (apex, w1))
                )
                if len(steps) + len(seq.steps) > max_steps:
                    raise QuiverError("reduction exceeded its safety cap")
                steps.extend(seq.steps)
                cur = cur2
            else:
                c1, _ = _clique_colours(cur, apex, clique)[0]
                emit(apex, c1 + 1)
            clique = set(_clique_of_edge(cur, apex, w1))
            tail = tail[1:]
            outside = underlying_graph(cur).neighbours(tail[0]) - clique
            expected_outside = {tail[1]} if len(tail) > 1 else set()
            if outside != expected_outside:
                raise QuiverError(
                    f"walk step left vertex {tail[0]} with outside neighbours "
                    f"{sorted(outside)}, expected {sorted(expected_outside)}"
                )
        u = tail[0]
        clique = underlying_graph(cur).neighbours(u) | {u}
        cur2, seq = shrink_extremal(
            cur, ExtremalWitness(tuple(sorted(clique)), "extremal", (u,))
        )
        if len(steps) + len(seq.steps) > max_steps:
            raise QuiverError("reduction exceeded its safety cap")
        steps.extend(seq.steps)
        cur = cur2
    return cur, MutationSequence(tuple(steps))


# -- line recolouring --------------------------------------------------------


def recolour_line(n: int, m: int, target) -> MutationSequence:
    """Sequence turning the all-zero line into the given colouration.

    ``target`` lists the colour of each forward arrow i -> i+1.  Each
    colour is carried in from the far endpoint as a packet: mutating the
    endpoint deposits it on the last arrow, and each further mutation
    moves it one arrow leftward.  Arrows are filled left to right, so
    every packet travels through still-zero arrows only and no mutation
    on the way ever composes arrows (power w meets out-colours w and m,
    both too large to reach zero within the window).
    """
    target = list(target)
    if len(target) != n - 1:
        raise ValueError(f"expected {n - 1} target colours, got {len(target)}")
    for c in target:
        if not (0 <= c <= m):
            raise ValueError(f"target colour {c} out of range [0, {m}]")
    steps: list[tuple[int, int]] = []
    for i, w in enumerate(target):
        if w == 0:
            continue
        steps.extend((p, w) for p in range(n - 1, i, -1))
    return MutationSequence.of(steps)


def line_colours(q: ColouredQuiver) -> list[int]:
    """Forward colours of a quiver whose underlying graph is a path,
    read along the path from its smaller endpoint."""
    g = underlying_graph(q)
    if not g.is_path():
        raise QuiverError("quiver is not a line")
    if q.n == 1:
        return []
    ends = sorted(v for v in range(q.n) if g.degree(v) == 1)
    order = [ends[0]]
    while len(order) < q.n:
        tip = order[-1]
        nxt = [u for u in g.neighbours(tip) if len(order) < 2 or u != order[-2]]
        nxt = [u for u in nxt if u not in order]
        order.append(nxt[0])
    colours = []
    for a, b in zip(order, order[1:]):
        c = q.colour(a, b)
        assert c is not None
        colours.append(c)
    return colours


def verify_reduction(q: ColouredQuiver) -> bool:
    """Round-trip check: forward replay reaches the line, inverse replay
    recovers the original."""
    line, seq = reduce_to_line(q)
    if seq.apply(q) != line:
        return False
    if seq.inverse(q.m).apply(line) != q:
        return False
    return underlying_graph(line).is_path()
