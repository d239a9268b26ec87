"""Path weights, clique energy and the 0-coloured part.

The weight of a path is the plain integer sum of its arrow colours (never
reduced mod m + 1).  The energy of a k-clique (k >= 3) is the minimum
weight over all Hamiltonian cycles of the clique, found by brute force
over cyclic orders.  For class members the energy equals m + 2 - k and
every Hamiltonian-cycle weight lies in the Minkowski set
(k - 2) {m - 1, 2m + 1} - (k - 3) m.

The 0-coloured part (colour-0 arrows only) is the Gabriel quiver of the
associated algebra: its cycles all have length m + 2 and every vertex has
in- and out-degree at most two.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import networkx as nx

from .core import ColouredQuiver, QuiverError, require_valid, underlying_graph
from .classify import require_member


def path_weight(q: ColouredQuiver, path: list[int] | tuple[int, ...]) -> int:
    """Sum of arrow colours along consecutive vertices of a path."""
    require_valid(q)
    if not q.is_simple:
        raise QuiverError("path_weight requires a simple quiver")
    if len(path) < 2:
        raise QuiverError("a path needs at least two vertices")
    total = 0
    for a, b in zip(path, path[1:]):
        c = q.colour(a, b)
        if c is None:
            raise QuiverError(f"vertices {a} and {b} are not adjacent")
        total += c
    return total


def _cycle_weight(q: ColouredQuiver, cycle: tuple[int, ...]) -> int:
    return path_weight(q, list(cycle) + [cycle[0]])


def maximal_cliques(q: ColouredQuiver) -> list[tuple[int, ...]]:
    g = nx.Graph()
    g.add_nodes_from(range(q.n))
    g.add_edges_from(q.underlying_edges)
    return sorted(tuple(sorted(c)) for c in nx.find_cliques(g))


def all_cliques(q: ColouredQuiver, min_size: int = 3) -> list[tuple[int, ...]]:
    """Every clique of at least ``min_size`` vertices (not only maximal ones)."""
    found: set[tuple[int, ...]] = set()
    for mc in maximal_cliques(q):
        for size in range(min_size, len(mc) + 1):
            found.update(combinations(mc, size))
    return sorted(found)


def clique_number(q: ColouredQuiver) -> int:
    require_valid(q)
    if not q.is_simple:
        raise QuiverError("clique_number requires a simple quiver")
    return max(len(c) for c in maximal_cliques(q)) if q.n else 0


@dataclass(frozen=True)
class CliqueEnergy:
    clique: tuple[int, ...]
    delta: int
    witness: tuple[int, ...]  # cyclic order achieving the minimum


def _check_clique(q: ColouredQuiver, vertices) -> tuple[int, ...]:
    k = tuple(sorted(set(vertices)))
    g = underlying_graph(q)
    for a, b in combinations(k, 2):
        if not g.has_edge(a, b):
            raise QuiverError(f"{k} is not a clique: {a} and {b} not adjacent")
    return k


def clique_energy(q: ColouredQuiver, vertices) -> CliqueEnergy:
    """Exact minimum Hamiltonian-cycle weight of a clique of size >= 3.

    Brute force over cyclic orders with the smallest vertex fixed first;
    both orientations appear among them.
    """
    require_valid(q)
    if not q.is_simple:
        raise QuiverError("clique_energy requires a simple quiver")
    k = _check_clique(q, vertices)
    if len(k) < 3:
        raise QuiverError("clique energy is defined for cliques of size >= 3")
    start, rest = k[0], k[1:]
    best: tuple[int, tuple[int, ...]] | None = None
    for perm in permutations(rest):
        cycle = (start, *perm)
        w = _cycle_weight(q, cycle)
        if best is None or w < best[0]:
            best = (w, cycle)
    assert best is not None
    return CliqueEnergy(k, best[0], best[1])


@dataclass(frozen=True)
class CliqueEnergyCheck:
    clique: tuple[int, ...]
    delta: int
    expected_delta: int
    weights_in_allowed_set: bool

    @property
    def ok(self) -> bool:
        return self.delta == self.expected_delta and self.weights_in_allowed_set

    def to_json(self) -> dict:
        return {
            "clique": [v + 1 for v in self.clique],
            "delta": self.delta,
            "expected": self.expected_delta,
            "weights_ok": self.weights_in_allowed_set,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class EnergyReport:
    checks: tuple[CliqueEnergyCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {"ok": self.ok, "cliques": [c.to_json() for c in self.checks]}


def allowed_cycle_weights(m: int, k: int) -> set[int]:
    """(k - 2) {m - 1, 2m + 1} - (k - 3) m as a plain integer set."""
    return {
        (k - 2 - i) * (m - 1) + i * (2 * m + 1) - (k - 3) * m for i in range(k - 1)
    }


def verify_energy(q: ColouredQuiver, *, check_member: bool = True) -> EnergyReport:
    """Check delta(K) = m + 2 - k and the allowed-weight set over every
    clique of size >= 3 of a class member.

    ``check_member=False`` skips the membership precondition so that
    non-members can be run as negative controls; their report then shows
    which cliques break the theorem.
    """
    if check_member:
        require_member(q)
    else:
        require_valid(q)
    checks = []
    for k in all_cliques(q, min_size=3):
        size = len(k)
        allowed = allowed_cycle_weights(q.m, size)
        start, rest = k[0], k[1:]
        weights = [
            _cycle_weight(q, (start, *perm)) for perm in permutations(rest)
        ]
        checks.append(
            CliqueEnergyCheck(
                clique=k,
                delta=min(weights),
                expected_delta=q.m + 2 - size,
                weights_in_allowed_set=all(w in allowed for w in weights),
            )
        )
    return EnergyReport(tuple(checks))


# -- 0-coloured part ---------------------------------------------------------


@dataclass(frozen=True)
class ZeroPart:
    n: int
    arrows: tuple[tuple[int, int], ...]  # colour-0 arrows (source, target)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "arrows": [[i + 1, j + 1] for i, j in self.arrows],
        }

    def to_dot(self) -> str:
        lines = ["digraph zero_part {"]
        for v in range(self.n):
            lines.append(f"  {v + 1};")
        for i, j in self.arrows:
            lines.append(f"  {i + 1} -> {j + 1};")
        lines.append("}")
        return "\n".join(lines)


def zero_part(q: ColouredQuiver) -> ZeroPart:
    """Subquiver of colour-0 arrows of a class member."""
    require_member(q)
    arrows = tuple(
        sorted((a.source, a.target) for a in q.arrows if a.colour == 0)
    )
    return ZeroPart(q.n, arrows)


@dataclass(frozen=True)
class ZeroPartCycles:
    cycles: tuple[tuple[int, ...], ...]
    expected_length: int

    @property
    def ok(self) -> bool:
        return all(len(c) == self.expected_length for c in self.cycles)

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "expected_length": self.expected_length,
            "cycles": [[v + 1 for v in c] for c in self.cycles],
        }


def zero_part_cycles(q: ColouredQuiver) -> ZeroPartCycles:
    """All simple cycles of the 0-part; each must have length m + 2."""
    zp = zero_part(q)
    g = nx.DiGraph()
    g.add_nodes_from(range(zp.n))
    g.add_edges_from(zp.arrows)
    cycles = []
    for cyc in nx.simple_cycles(g):
        i = cyc.index(min(cyc))
        cycles.append(tuple(cyc[i:] + cyc[:i]))
    return ZeroPartCycles(tuple(sorted(cycles)), q.m + 2)


@dataclass(frozen=True)
class ZeroPartValency:
    in_degree: tuple[int, ...]
    out_degree: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return max(self.in_degree, default=0) <= 2 and max(
            self.out_degree, default=0
        ) <= 2

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "in_degree": list(self.in_degree),
            "out_degree": list(self.out_degree),
        }


def zero_part_valency(q: ColouredQuiver) -> ZeroPartValency:
    """Per-vertex in/out degrees of the 0-part; both must stay <= 2."""
    zp = zero_part(q)
    indeg = [0] * zp.n
    outdeg = [0] * zp.n
    for i, j in zp.arrows:
        outdeg[i] += 1
        indeg[j] += 1
    return ZeroPartValency(tuple(indeg), tuple(outdeg))
