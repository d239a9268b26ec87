"""Coloured quiver mutation.

Two independent implementations of the same operation are provided and
cross-checked by the test suite:

* :func:`mutate_steps` runs the three-step procedure literally
  (compose through colour-0 arrows, cancel, shift colours at the vertex);
* :func:`mutate_formula` evaluates the piecewise closed form per
  ordered pair and colour.

Colour arithmetic at the mutation vertex is modulo m + 1.  Powers of a
mutation are periodic with period m + 1 only on class members; outside
the class iterating literally matters (mu^(m+1) need not be the identity).
"""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    ColouredQuiver,
    QuiverError,
    require_valid,
)


class NotAMemberError(QuiverError):
    """Raised when an operation requires membership in the A_n mutation
    class and the membership check reported failures."""

    def __init__(self, verdict):
        self.verdict = verdict
        kinds = ", ".join(f.kind for f in verdict.failures) or "unknown"
        super().__init__(f"quiver is not a class member (violated: {kinds})")


@dataclass(frozen=True)
class MutationStep:
    """A mutation vertex together with a power in [1, m + 1].

    Power m + 1 is representable on purpose: it is not a no-op outside
    the class.
    """

    vertex: int
    power: int

    def __post_init__(self):
        if self.power < 1:
            raise ValueError(f"mutation power must be >= 1, got {self.power}")

    def to_json(self) -> dict:
        return {"vertex": self.vertex + 1, "power": self.power}


@dataclass(frozen=True)
class MutationSequence:
    steps: tuple[MutationStep, ...]

    @classmethod
    def of(cls, pairs: Iterable[tuple[int, int]]) -> "MutationSequence":
        """Build from (vertex, power) pairs, dropping zero powers."""
        return cls(tuple(MutationStep(v, p) for v, p in pairs if p != 0))

    def __len__(self) -> int:
        return len(self.steps)

    def apply(self, q: ColouredQuiver) -> ColouredQuiver:
        """Left-to-right composition of the steps."""
        for step in self.steps:
            q = mutate_power(q, step.vertex, step.power)
        return q

    def inverse(self, m: int) -> "MutationSequence":
        """Reversed sequence with powers m + 1 - t.

        Exact inverse when every intermediate quiver is a class member
        (mu^(m+1) = Id there).
        """
        return MutationSequence.of(
            (s.vertex, (m + 1 - s.power) % (m + 1)) for s in reversed(self.steps)
        )

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps]}

    def to_json_str(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, obj: dict) -> "MutationSequence":
        try:
            steps = tuple(
                MutationStep(int(s["vertex"]) - 1, int(s["power"]))
                for s in obj["steps"]
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise QuiverError(f"malformed mutation sequence JSON: {exc}") from exc
        return cls(steps)


def _check_vertex(q: ColouredQuiver, j: int) -> None:
    if not (0 <= j < q.n):
        raise QuiverError(f"vertex {j} out of range for n={q.n}")


def _mutate_steps_unchecked(q: ColouredQuiver, j: int) -> ColouredQuiver:
    mm = q.m + 1
    counts: dict[tuple[int, int, int], int] = defaultdict(int)
    for a in q.arrows:
        counts[(a.source, a.target, a.colour)] += a.mult

    # Step 1: for every i -(c)-> j -(0)-> k with i != k, add i -(c)-> k
    # and its skew partner k -(m-c)-> i.
    incoming = [(i, c, v) for (i, k, c), v in counts.items() if k == j and v > 0]
    zero_out = [(k, v) for (i, k, c), v in counts.items() if i == j and c == 0 and v > 0]
    added: dict[tuple[int, int, int], int] = defaultdict(int)
    for i, c, a in incoming:
        for k, b in zero_out:
            if i == k:
                continue
            added[(i, k, c)] += a * b
            added[(k, i, (q.m - c) % mm)] += a * b
    for key, v in added.items():
        counts[key] += v

    # Step 2: restore monochromaticity by cancelling arrows of different
    # colours against each other within each ordered pair.
    buckets: dict[tuple[int, int], dict[int, int]] = defaultdict(dict)
    for (i, k, c), v in counts.items():
        if v > 0:
            buckets[(i, k)][c] = v
    cancelled: dict[tuple[int, int, int], int] = {}
    for (i, k), per_colour in buckets.items():
        total = sum(per_colour.values())
        for c, v in per_colour.items():
            nv = max(0, v - (total - v))
            if nv:
                cancelled[(i, k, c)] = nv

    # Step 3: +1 to colours of arrows into j, -1 to arrows out of j (mod m+1).
    result = []
    for (i, k, c), v in cancelled.items():
        if k == j:
            c = (c + 1) % mm
        elif i == j:
            c = (c - 1) % mm
        result.append((i, k, c, v))
    return ColouredQuiver.from_arrows(q.m, q.n, result)


def mutate_steps(q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Mutation at j via the three-step procedure."""
    require_valid(q)
    _check_vertex(q, j)
    return _mutate_steps_unchecked(q, j)


def mutate_formula(q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Mutation at j via the piecewise formula.

    For arrows into j, new colour-c multiplicity is the old colour-(c-1)
    one; for arrows out of j, the old colour-(c+1) one.  For i, j, k
    pairwise distinct the composition terms through j are folded in before
    the max-cancellation:

        p_ik(c) = q_ik(c) + q_ij(c) q_jk(0) + q_ij(m) q_jk(c)
        new q_ik(c) = max(0, p_ik(c) - sum over t != c of p_ik(t))
    """
    require_valid(q)
    _check_vertex(q, j)
    mm = q.m + 1
    g = q.multiplicity
    arrows = []
    for i in range(q.n):
        for k in range(q.n):
            if i == k:
                continue
            if k == j:
                for c in range(mm):
                    v = g(i, k, c - 1)
                    if v:
                        arrows.append((i, k, c, v))
            elif i == j:
                for c in range(mm):
                    v = g(i, k, c + 1)
                    if v:
                        arrows.append((i, k, c, v))
            else:
                p = [
                    g(i, k, c) + g(i, j, c) * g(j, k, 0) + g(i, j, q.m) * g(j, k, c)
                    for c in range(mm)
                ]
                total = sum(p)
                for c in range(mm):
                    v = max(0, 2 * p[c] - total)
                    if v:
                        arrows.append((i, k, c, v))
    return ColouredQuiver.from_arrows(q.m, q.n, arrows)


def mutate(q: ColouredQuiver, j: int) -> ColouredQuiver:
    """Canonical mutation entry point (the step procedure)."""
    return mutate_steps(q, j)


def mutate_power(
    q: ColouredQuiver, j: int, t: int, *, assume_member: bool = False
) -> ColouredQuiver:
    """t-fold iteration of mutation at j.

    With ``assume_member`` the caller asserts the quiver lies in the A_n
    mutation class, where powers are periodic mod m + 1; otherwise the
    power is applied literally.
    """
    require_valid(q)
    _check_vertex(q, j)
    if t < 0:
        raise QuiverError("mutation power must be >= 0")
    if assume_member:
        t %= q.m + 1
    for _ in range(t):
        q = _mutate_steps_unchecked(q, j)
    return q


def inverse_in_class(
    q: ColouredQuiver, j: int, *, check: bool = True
) -> ColouredQuiver:
    """Inverse mutation on class members: mu_j^m (Lemma: mu_j^(m+1) = Id).

    With ``check`` the membership precondition is verified and a
    :class:`NotAMemberError` names the violated condition.
    """
    if check:
        from .classify import is_member

        verdict = is_member(q)
        if not verdict.member:
            raise NotAMemberError(verdict)
    return mutate_power(q, j, q.m)


def apply_steps(q: ColouredQuiver, pairs: Sequence[tuple[int, int]]) -> ColouredQuiver:
    """Convenience: apply (vertex, power) pairs left to right."""
    return MutationSequence.of(pairs).apply(q)
