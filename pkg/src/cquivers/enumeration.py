"""Canonical forms, isomorphism and mutation-class enumeration.

Canonical forms are exact (injective on colour-preserving isomorphism
classes), computed by branch-and-bound minimization over all vertex
relabellings of a blockwise pair encoding.  Mutation classes are explored
breadth-first with canonical-form deduplication and deterministic
(sorted) frontier order.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations, permutations, product

from .core import (
    ColouredQuiver,
    QuiverError,
    UnderlyingGraph,
    linear_quiver,
    relabel,
    require_valid,
)
from .classify import is_member
from .mutation import _mutate_steps_unchecked


class ClassLimitExceeded(QuiverError):
    """Mutation class grew past the requested limit (possibly infinite or
    too large for the budget); carries the partial exploration."""

    def __init__(self, limit: int, partial: "MutationClass"):
        self.limit = limit
        self.partial = partial
        super().__init__(
            f"mutation class exceeded limit {limit}; partial size {len(partial)}"
        )


class BudgetExceeded(QuiverError):
    def __init__(self, space: int, budget: int):
        self.space = space
        self.budget = budget
        super().__init__(
            f"exhaustive generation refused: search space {space} exceeds budget {budget}"
        )


DEFAULT_LIMIT = 10_000


def _env_limit() -> int:
    raw = os.environ.get("QML_LIMIT")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return DEFAULT_LIMIT


# -- canonical form ----------------------------------------------------------

_ABSENT = (0, 0)


def _pair_codes(q: ColouredQuiver) -> dict[tuple[int, int], tuple[int, int]]:
    codes: dict[tuple[int, int], tuple[int, int]] = {}
    for a in q.arrows:
        codes[(a.source, a.target)] = (a.colour + 1, a.mult)
    return codes


def canonical_form(q: ColouredQuiver) -> bytes:
    """Relabelling-invariant exact fingerprint of a valid coloured quiver.

    Minimizes, over all vertex orders, the tuple of per-vertex blocks
    where block k lists the (colour, mult) code of the arrow from each
    earlier vertex to vertex k (absence coded distinctly); skew-symmetry
    makes this a complete description.
    """
    require_valid(q)
    n = q.n
    codes = _pair_codes(q)
    best: list[tuple] | None = None
    used = [False] * n
    prefix: list[int] = []
    blocks: list[tuple] = []

    def swappable(v: int, w: int) -> bool:
        # the transposition (v w) is an automorphism, so subtrees rooted
        # at v and w produce identical block sequences
        if codes.get((v, w)) != codes.get((w, v)):
            return False
        for x in range(n):
            if x in (v, w):
                continue
            if codes.get((v, x)) != codes.get((w, x)):
                return False
            if codes.get((x, v)) != codes.get((x, w)):
                return False
        return True

    def dfs(depth: int) -> None:
        nonlocal best
        if depth == n:
            if best is None or blocks < best:
                best = blocks.copy()
            return
        cands = []
        for v in range(n):
            if used[v]:
                continue
            blk = tuple(codes.get((prefix[t], v), _ABSENT) for t in range(depth))
            cands.append((blk, v))
        cands.sort()
        tried: list[tuple[tuple, int]] = []
        for blk, v in cands:
            # candidates are sorted, so once the extended prefix exceeds the
            # best prefix no later candidate can improve on it
            if best is not None and blocks == best[:depth] and blk > best[depth]:
                break
            if any(pb == blk and swappable(pv, v) for pb, pv in tried):
                continue
            tried.append((blk, v))
            used[v] = True
            prefix.append(v)
            blocks.append(blk)
            dfs(depth + 1)
            blocks.pop()
            prefix.pop()
            used[v] = False

    dfs(0)
    assert best is not None
    return repr((q.m, q.n, tuple(best))).encode()


def are_isomorphic(q1: ColouredQuiver, q2: ColouredQuiver) -> bool:
    """Colour-preserving isomorphism, by exhaustive permutation search."""
    if (q1.m, q1.n) != (q2.m, q2.n):
        return False
    target = set(q2.arrows)
    for perm in permutations(range(q1.n)):
        if set(relabel(q1, perm).arrows) == target:
            return True
    return False


# -- mutation classes --------------------------------------------------------


@dataclass
class MutationClass:
    """BFS closure of a seed under mutation, up to isomorphism.

    ``representatives`` maps canonical form to the first quiver found in
    that class; ``orbit`` maps (form, vertex-of-representative) to the
    form reached by mutating the representative there.
    """

    seed: ColouredQuiver
    representatives: dict[bytes, ColouredQuiver] = field(default_factory=dict)
    orbit: dict[tuple[bytes, int], bytes] = field(default_factory=dict)
    membership_checked: bool = False

    def __len__(self) -> int:
        return len(self.representatives)

    @property
    def forms(self) -> set[bytes]:
        return set(self.representatives)


def mutation_class(
    seed: ColouredQuiver,
    limit: int | None = None,
    *,
    check_membership: bool | None = None,
) -> MutationClass:
    """All quivers mutation-equivalent to the seed, up to isomorphism.

    Aborts with :class:`ClassLimitExceeded` if more than ``limit``
    isomorphism classes appear.  ``check_membership`` (default: on iff the
    seed is a class member) asserts closure: every quiver produced during
    the search must itself pass the membership check.
    """
    require_valid(seed)
    if limit is None:
        limit = _env_limit()
    if check_membership is None:
        check_membership = is_member(seed).member
    cls = MutationClass(seed=seed, membership_checked=check_membership)
    form0 = canonical_form(seed)
    cls.representatives[form0] = seed
    frontier = [(form0, seed)]
    while frontier:
        frontier.sort(key=lambda item: item[0])
        next_frontier = []
        for form, q in frontier:
            for j in range(q.n):
                q2 = _mutate_steps_unchecked(q, j)
                if check_membership and not is_member(q2).member:
                    raise QuiverError(
                        "closure violation: mutation left the class "
                        f"(seed {seed!r}, vertex {j})"
                    )
                f2 = canonical_form(q2)
                cls.orbit[(form, j)] = f2
                if f2 not in cls.representatives:
                    if len(cls.representatives) >= limit:
                        raise ClassLimitExceeded(limit, cls)
                    cls.representatives[f2] = q2
                    next_frontier.append((f2, q2))
        frontier = next_frontier
    return cls


def labelled_class_size(seed: ColouredQuiver, limit: int | None = None) -> int:
    """Size of the mutation class counted as labelled quivers (no iso dedup)."""
    require_valid(seed)
    if limit is None:
        limit = _env_limit() * 100
    seen = {seed}
    frontier = [seed]
    while frontier:
        next_frontier = []
        for q in frontier:
            for j in range(q.n):
                q2 = _mutate_steps_unchecked(q, j)
                if q2 not in seen:
                    if len(seen) >= limit:
                        raise ClassLimitExceeded(
                            limit, MutationClass(seed=seed)
                        )
                    seen.add(q2)
                    next_frontier.append(q2)
        frontier = next_frontier
    return len(seen)


# -- exhaustive generation ---------------------------------------------------


def generate_members(
    n: int, m: int, *, budget: int = 5_000_000
) -> set[bytes]:
    """Canonical forms of every n-vertex member, by exhaustion.

    Enumerates connected underlying graphs on n labelled vertices whose
    shape already satisfies the colour-independent conditions (chordal,
    two-clique neighbourhood splits), then all edge colourings, filtering
    by full membership.
    """
    reps = generate_member_representatives(n, m, budget=budget)
    return set(reps)


def generate_member_representatives(
    n: int, m: int, *, budget: int = 5_000_000
) -> dict[bytes, ColouredQuiver]:
    from .classify import find_hole_in_graph, split_in_graph

    pair_count = n * (n - 1) // 2
    space = (m + 2) ** pair_count
    if space > budget:
        raise BudgetExceeded(space, budget)
    all_pairs = list(combinations(range(n), 2))
    found: dict[bytes, ColouredQuiver] = {}
    for mask in range(1 << pair_count):
        edges = [all_pairs[b] for b in range(pair_count) if mask >> b & 1]
        g = UnderlyingGraph(n, frozenset(edges))
        if not g.connected:
            continue
        if find_hole_in_graph(g) is not None:
            continue
        if any(split_in_graph(g, v, m) is None for v in range(n)):
            continue
        for colouring in product(range(m + 1), repeat=len(edges)):
            arrows = []
            for (i, j), c in zip(edges, colouring):
                arrows.append((i, j, c))
                arrows.append((j, i, m - c))
            q = ColouredQuiver.from_arrows(m, n, arrows)
            if not is_member(q).member:
                continue
            form = canonical_form(q)
            if form not in found:
                found[form] = q
    return found


# -- two-route class verification --------------------------------------------


@dataclass(frozen=True)
class TheoremAReport:
    n: int
    m: int
    ok: bool
    bfs_count: int
    generated_count: int
    only_in_bfs: tuple[bytes, ...]
    only_in_generated: tuple[bytes, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "ok": self.ok,
            "bfs_count": self.bfs_count,
            "generated_count": self.generated_count,
            "only_in_bfs": len(self.only_in_bfs),
            "only_in_generated": len(self.only_in_generated),
        }


def verify_theorem_A(n: int, m: int, limit: int | None = None) -> TheoremAReport:
    """Set equality of the BFS mutation class of the linear quiver and the
    exhaustively generated membership class."""
    bfs = mutation_class(linear_quiver(n, m), limit=limit).forms
    generated = generate_members(n, m)
    return TheoremAReport(
        n=n,
        m=m,
        ok=bfs == generated,
        bfs_count=len(bfs),
        generated_count=len(generated),
        only_in_bfs=tuple(sorted(bfs - generated)),
        only_in_generated=tuple(sorted(generated - bfs)),
    )
