"""Coloured quiver data model, validation and serialization.

An m-coloured quiver on n vertices stores, for every ordered vertex pair
(i, j) and colour c in {0, ..., m}, the multiplicity of arrows i -> j of
colour c.  Three structural invariants are expected of well-formed data
(checked by :func:`validate`, never assumed by the constructor):

* no loops,
* monochromatic: at most one colour per ordered pair,
* skew-symmetric: the i -> j multiplicity of colour c equals the
  j -> i multiplicity of colour m - c.

Vertices are 0-based internally; 1-based labels appear only in JSON I/O.
All values here are immutable; every operation returns a new quiver.
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence


class QuiverError(Exception):
    """Base class for domain errors raised by this package."""


class InvalidQuiverError(QuiverError):
    """Raised when an operation requires a quiver satisfying the three
    structural invariants and validation reported violations."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(f"invalid coloured quiver: {report.summary()}")


class Arrow(NamedTuple):
    source: int
    target: int
    colour: int
    mult: int = 1


@dataclass(frozen=True)
class ValidationProblem:
    kind: str  # "loop" | "bichromatic" | "skew"
    where: tuple[int, ...]  # loop: (vertex, colour); bichromatic: (i, j); skew: (i, j, colour)

    def to_json(self) -> dict:
        if self.kind == "loop":
            where = [self.where[0] + 1, self.where[1]]
        elif self.kind == "bichromatic":
            where = [self.where[0] + 1, self.where[1] + 1]
        else:
            where = [self.where[0] + 1, self.where[1] + 1, self.where[2]]
        return {"kind": self.kind, "where": where}


@dataclass(frozen=True)
class ValidationReport:
    problems: tuple[ValidationProblem, ...]

    @property
    def ok(self) -> bool:
        return not self.problems

    def summary(self) -> str:
        if self.ok:
            return "valid"
        return "; ".join(f"{p.kind} at {p.where}" for p in self.problems)

    def to_json(self) -> list[dict]:
        return [p.to_json() for p in self.problems]


@dataclass(frozen=True)
class ColouredQuiver:
    """Immutable m-coloured quiver on vertices 0..n-1.

    ``arrows`` is the full multiplicity map: both directions of every
    skew pair are stored explicitly, sorted by (source, target, colour).
    Use :meth:`from_arrows` to build one from any iterable of arrows.
    """

    m: int
    n: int
    arrows: tuple[Arrow, ...]

    @classmethod
    def from_arrows(
        cls,
        m: int,
        n: int,
        arrows: Iterable[tuple[int, int, int] | tuple[int, int, int, int] | Arrow] = (),
    ) -> "ColouredQuiver":
        if m < 1:
            raise ValueError(f"colour parameter m must be >= 1, got {m}")
        if n < 1:
            raise ValueError(f"vertex count n must be >= 1, got {n}")
        counts: dict[tuple[int, int, int], int] = defaultdict(int)
        for a in arrows:
            if len(a) == 3:
                i, j, c = a  # type: ignore[misc]
                mult = 1
            else:
                i, j, c, mult = a  # type: ignore[misc]
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"vertex out of range in arrow {a!r}")
            if not (0 <= c <= m):
                raise ValueError(f"colour {c} out of range [0, {m}]")
            if mult < 0:
                raise ValueError(f"negative multiplicity in arrow {a!r}")
            counts[(i, j, c)] += mult
        packed = tuple(
            Arrow(i, j, c, v) for (i, j, c), v in sorted(counts.items()) if v > 0
        )
        return cls(m=m, n=n, arrows=packed)

    # -- accessors ---------------------------------------------------------

    @cached_property
    def _mult(self) -> dict[tuple[int, int, int], int]:
        return {(a.source, a.target, a.colour): a.mult for a in self.arrows}

    def multiplicity(self, i: int, j: int, c: int) -> int:
        return self._mult.get((i, j, c % (self.m + 1)), 0)

    @cached_property
    def _pair_colours(self) -> dict[tuple[int, int], tuple[tuple[int, int], ...]]:
        pairs: dict[tuple[int, int], list[tuple[int, int]]] = defaultdict(list)
        for a in self.arrows:
            pairs[(a.source, a.target)].append((a.colour, a.mult))
        return {k: tuple(v) for k, v in pairs.items()}

    def colour(self, i: int, j: int) -> int | None:
        """Colour of the arrow i -> j, or None if absent.

        Requires the pair to be monochromatic.
        """
        entries = self._pair_colours.get((i, j), ())
        if not entries:
            return None
        if len(entries) > 1:
            raise InvalidQuiverError(validate(self))
        return entries[0][0]

    @cached_property
    def underlying_edges(self) -> frozenset[tuple[int, int]]:
        """One undirected edge {i, j} (stored i < j) per adjacent pair."""
        return frozenset(
            (min(a.source, a.target), max(a.source, a.target)) for a in self.arrows
        )

    @cached_property
    def _adj(self) -> dict[int, tuple[int, ...]]:
        nb: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for i, j in self.underlying_edges:
            nb[i].add(j)
            nb[j].add(i)
        return {v: tuple(sorted(s)) for v, s in nb.items()}

    def neighbours(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    @cached_property
    def is_simple(self) -> bool:
        return all(a.mult == 1 for a in self.arrows) and all(
            len(v) == 1 for v in self._pair_colours.values()
        )

    def to_json_obj(self) -> dict:
        return quiver_to_json(self)

    def __repr__(self) -> str:  # compact, tests print these a lot
        drawn = ", ".join(
            f"{a.source + 1}->{a.target + 1}({a.colour})"
            + (f"x{a.mult}" if a.mult != 1 else "")
            for a in self.arrows
            if a.source < a.target
        )
        return f"ColouredQuiver(m={self.m}, n={self.n}, [{drawn}])"


def validate(q: ColouredQuiver) -> ValidationReport:
    """Check the three structural conditions; empty report means valid."""
    problems: list[ValidationProblem] = []
    mm = q.m + 1
    for a in q.arrows:
        if a.source == a.target:
            problems.append(ValidationProblem("loop", (a.source, a.colour)))
    seen_pairs = set()
    for (i, j), entries in q._pair_colours.items():
        if i == j:
            continue
        if len(entries) > 1 and (i, j) not in seen_pairs:
            problems.append(ValidationProblem("bichromatic", (i, j)))
            seen_pairs.add((i, j))
    keys = set(q._mult)
    keys |= {(j, i, (q.m - c) % mm) for (i, j, c) in keys}
    for i, j, c in sorted(keys):
        if i == j:
            continue
        if q.multiplicity(i, j, c) != q.multiplicity(j, i, q.m - c):
            problems.append(ValidationProblem("skew", (i, j, c)))
    return ValidationReport(tuple(problems))


def require_valid(q: ColouredQuiver) -> None:
    report = validate(q)
    if not report.ok:
        raise InvalidQuiverError(report)


# -- construction helpers --------------------------------------------------


def linear_quiver(
    n: int, m: int, colours: Sequence[int] | None = None
) -> ColouredQuiver:
    """Path quiver 0 -> 1 -> ... -> n-1 with the given forward colours.

    Default colouring is all zero (skew partners get colour m).
    """
    if colours is None:
        colours = [0] * (n - 1)
    if len(colours) != n - 1:
        raise ValueError(f"expected {n - 1} colours, got {len(colours)}")
    arrows = []
    for i, c in enumerate(colours):
        if not (0 <= c <= m):
            raise ValueError(f"colour {c} out of range [0, {m}]")
        arrows.append((i, i + 1, c))
        arrows.append((i + 1, i, m - c))
    return ColouredQuiver.from_arrows(m, n, arrows)


def relabel(q: ColouredQuiver, perm: Sequence[int]) -> ColouredQuiver:
    """Apply the vertex bijection v -> perm[v]."""
    if sorted(perm) != list(range(q.n)):
        raise ValueError("perm must be a permutation of range(n)")
    return ColouredQuiver.from_arrows(
        q.m,
        q.n,
        ((perm[a.source], perm[a.target], a.colour, a.mult) for a in q.arrows),
    )


# -- underlying graph ------------------------------------------------------


@dataclass(frozen=True)
class UnderlyingGraph:
    n: int
    edges: frozenset[tuple[int, int]]  # stored i < j

    @cached_property
    def adjacency(self) -> dict[int, frozenset[int]]:
        nb: dict[int, set[int]] = {v: set() for v in range(self.n)}
        for i, j in self.edges:
            nb[i].add(j)
            nb[j].add(i)
        return {v: frozenset(s) for v, s in nb.items()}

    def neighbours(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    @cached_property
    def components(self) -> tuple[tuple[int, ...], ...]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], set()
            while stack:
                v = stack.pop()
                if v in comp:
                    continue
                comp.add(v)
                stack.extend(self.adjacency[v] - comp)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return tuple(comps)

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1

    def is_path(self) -> bool:
        """True when the graph is a simple path on all n vertices."""
        if not self.connected or len(self.edges) != self.n - 1:
            return False
        return all(self.degree(v) <= 2 for v in range(self.n))


def underlying_graph(q: ColouredQuiver) -> UnderlyingGraph:
    return UnderlyingGraph(q.n, q.underlying_edges)


def is_simple(q: ColouredQuiver) -> bool:
    return q.is_simple


def is_connected(q: ColouredQuiver) -> bool:
    return underlying_graph(q).connected


# -- simple view -----------------------------------------------------------


@dataclass(frozen=True)
class SimpleView:
    """Half of a simple quiver: one colour per unordered pair.

    ``edges`` maps (i, j) with i < j to the colour of the i -> j arrow;
    the j -> i partner carries colour m - c implicitly.
    """

    m: int
    n: int
    edges: tuple[tuple[tuple[int, int], int], ...]

    def to_quiver(self) -> ColouredQuiver:
        arrows = []
        for (i, j), c in self.edges:
            arrows.append((i, j, c))
            arrows.append((j, i, self.m - c))
        return ColouredQuiver.from_arrows(self.m, self.n, arrows)


def simple_view(q: ColouredQuiver) -> SimpleView:
    require_valid(q)
    if not q.is_simple:
        raise QuiverError("simple view is defined only for simple quivers")
    edges = tuple(
        sorted(((a.source, a.target), a.colour) for a in q.arrows if a.source < a.target)
    )
    return SimpleView(q.m, q.n, edges)


# -- JSON serialization ----------------------------------------------------


def quiver_to_json(q: ColouredQuiver) -> dict:
    """Canonical JSON object: 1-based vertices, low-to-high arrows only."""
    require_valid(q)
    arrows = [
        {"from": a.source + 1, "to": a.target + 1, "colour": a.colour, "mult": a.mult}
        for a in q.arrows
        if a.source < a.target
    ]
    arrows.sort(key=lambda e: (e["from"], e["to"], e["colour"]))
    return {"m": q.m, "n": q.n, "arrows": arrows}


def quiver_to_json_str(q: ColouredQuiver) -> str:
    return json.dumps(quiver_to_json(q), sort_keys=True, separators=(",", ":"))


def quiver_from_json(obj: dict) -> ColouredQuiver:
    """Parse the canonical format.

    Redundant skew partners (entries with from > to) are accepted when they
    agree with the implied partner and rejected otherwise.
    """
    try:
        m = int(obj["m"])
        n = int(obj["n"])
        raw = obj["arrows"]
    except (KeyError, TypeError) as exc:
        raise QuiverError(f"malformed quiver JSON: {exc}") from exc
    low: dict[tuple[int, int], dict[int, int]] = defaultdict(lambda: defaultdict(int))
    high: dict[tuple[int, int], dict[int, int]] = defaultdict(lambda: defaultdict(int))
    for entry in raw:
        try:
            f = int(entry["from"]) - 1
            t = int(entry["to"]) - 1
            c = int(entry["colour"])
            mult = int(entry.get("mult", 1))
        except (KeyError, TypeError) as exc:
            raise QuiverError(f"malformed arrow entry {entry!r}") from exc
        if f == t:
            raise QuiverError(f"loop arrow in JSON at vertex {f + 1}")
        if not (0 <= f < n and 0 <= t < n):
            raise QuiverError(f"vertex out of range in arrow entry {entry!r}")
        if not (0 <= c <= m):
            raise QuiverError(f"colour out of range in arrow entry {entry!r}")
        if mult < 1:
            raise QuiverError(f"multiplicity must be >= 1 in {entry!r}")
        if f < t:
            low[(f, t)][c] += mult
        else:
            high[(t, f)][m - c] += mult
    for pair, colours in high.items():
        if pair in low:
            if dict(low[pair]) != dict(colours):
                raise QuiverError(
                    f"inconsistent redundant partner arrows for pair "
                    f"({pair[0] + 1}, {pair[1] + 1})"
                )
        else:
            low[pair] = colours
    arrows = []
    for (i, j), colours in low.items():
        for c, v in colours.items():
            arrows.append((i, j, c, v))
            arrows.append((j, i, m - c, v))
    return ColouredQuiver.from_arrows(m, n, arrows)


def quiver_from_json_str(text: str) -> ColouredQuiver:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise QuiverError(f"not valid JSON: {exc}") from exc
    return quiver_from_json(obj)
