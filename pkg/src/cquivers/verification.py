"""Batch verification of the package's headline guarantees.

Each criterion is a function returning a :class:`CriterionResult`; the
CLI ``verify`` subcommand and the acceptance test suite both run them.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from .core import ColouredQuiver, linear_quiver, validate
from .classify import is_member
from .mutation import mutate_formula, mutate_power, mutate_steps
from .enumeration import mutation_class, verify_theorem_A
from .analysis import verify_energy, zero_part_cycles, zero_part_valency, clique_number
from .reduction import line_colours, recolour_line, reduce_to_line


@dataclass
class CriterionResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.name}: {self.detail} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def _timed(name, fn) -> CriterionResult:
    start = time.perf_counter()
    ok, detail = fn()
    return CriterionResult(name, ok, detail, time.perf_counter() - start)


def random_valid_quiver(rng: random.Random, max_n: int = 8, max_m: int = 4,
                        max_mult: int = 3) -> ColouredQuiver:
    """Arbitrary valid quiver: random skew pairs, multiplicities allowed."""
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    arrows = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                continue
            c = rng.randint(0, m)
            mult = rng.randint(1, max_mult)
            arrows.append((i, j, c, mult))
            arrows.append((j, i, m - c, mult))
    return ColouredQuiver.from_arrows(m, n, arrows)


def check_formula_equivalence(samples: int = 10_000, seed: int = 0) -> CriterionResult:
    def run():
        rng = random.Random(seed)
        for k in range(samples):
            q = random_valid_quiver(rng)
            j = rng.randrange(q.n)
            a = mutate_steps(q, j)
            b = mutate_formula(q, j)
            if a != b:
                return False, f"discrepancy at sample {k}: {q!r} vertex {j}"
            if not validate(a).ok:
                return False, f"mutation produced invalid quiver at sample {k}"
        return True, f"{samples} random quivers, steps == formula"
    return _timed("formula/algorithm equivalence", run)


def check_theorem_A(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2))) -> CriterionResult:
    def run():
        counts = []
        for n, m in pairs:
            rep = verify_theorem_A(n, m)
            if not rep.ok:
                return False, f"mismatch at (n={n}, m={m}): {rep.to_json()}"
            counts.append(f"({n},{m})={rep.bfs_count}")
        return True, "class sizes " + ", ".join(counts)
    return _timed("mutation class equals the combinatorial class", run)


def check_power_identity(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2))) -> CriterionResult:
    def run():
        total = 0
        for n, m in pairs:
            cls = mutation_class(linear_quiver(n, m))
            for rep in cls.representatives.values():
                for j in range(rep.n):
                    if mutate_power(rep, j, m + 1) != rep:
                        return False, f"mu^(m+1) != Id at (n={n}, m={m}) vertex {j}"
                    total += 1
        # negative controls: the two non-member examples
        star = ColouredQuiver.from_arrows(
            2, 4, [(0, k, 2) for k in (1, 2, 3)] + [(k, 0, 0) for k in (1, 2, 3)]
        )
        if mutate_power(star, 0, 3) != star:
            return False, "4-star: mu_1^3 should be the identity"
        tri = ColouredQuiver.from_arrows(
            2, 3, [(2, 0, 0), (0, 2, 2), (1, 0, 0), (0, 1, 2), (1, 2, 1), (2, 1, 1)]
        )
        if mutate_power(tri, 1, 3) == tri:
            return False, "non-member triangle: mu_2^3 should differ from Q"
        return True, f"{total} member/vertex identities plus both negative controls"
    return _timed("mutation power identity (period m+1 on members)", run)


def check_closure(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2))) -> CriterionResult:
    def run():
        for n, m in pairs:
            mutation_class(linear_quiver(n, m), check_membership=True)
        return True, "all BFS products passed the membership check inline"
    return _timed("closure under mutation", run)


def check_energy(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2)),
                 extra=()) -> CriterionResult:
    def run():
        checked = 0
        for n, m in pairs:
            for rep in mutation_class(linear_quiver(n, m)).representatives.values():
                report = verify_energy(rep)
                if not report.ok:
                    return False, f"energy failure at (n={n}, m={m}): {rep!r}"
                checked += len(report.checks)
        for q in extra:
            report = verify_energy(q)
            if not report.ok:
                return False, "energy failure on supplied quiver"
            checked += len(report.checks)
        return True, f"{checked} cliques verified (delta = m + 2 - k, weight sets)"
    return _timed("clique energy", run)


def check_clique_number(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2))) -> CriterionResult:
    def run():
        attained = False
        for n, m in pairs:
            for rep in mutation_class(linear_quiver(n, m)).representatives.values():
                w = clique_number(rep)
                if w > m + 2:
                    return False, f"omega = {w} > m + 2 at (n={n}, m={m})"
                if (n, m) == (4, 2) and w == m + 2:
                    attained = True
        if (4, 2) in pairs and not attained:
            return False, "bound m + 2 not attained within class(A_4, m=2)"
        detail = "omega <= m + 2 everywhere"
        if attained:
            detail += "; attained at (4, 2)"
        return True, detail
    return _timed("clique number bound", run)


def check_zero_part(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2)),
                    extra=()) -> CriterionResult:
    def run():
        quivers = []
        for n, m in pairs:
            quivers.extend(mutation_class(linear_quiver(n, m)).representatives.values())
        quivers.extend(extra)
        cycles = 0
        for q in quivers:
            cyc = zero_part_cycles(q)
            if not cyc.ok:
                return False, f"zero-part cycle of wrong length in {q!r}"
            val = zero_part_valency(q)
            if not val.ok:
                return False, f"zero-part valency above 2 in {q!r}"
            cycles += len(cyc.cycles)
        return True, f"{len(quivers)} members: cycle lengths m + 2, valency <= 2 ({cycles} cycles)"
    return _timed("zero-part structure", run)


def check_reduction(pairs=((4, 1), (4, 2)), extra=()) -> CriterionResult:
    def run():
        count = 0
        for n, m in pairs:
            for rep in mutation_class(linear_quiver(n, m)).representatives.values():
                line, seq = reduce_to_line(rep)
                if seq.apply(rep) != line:
                    return False, f"forward replay mismatch on {rep!r}"
                if seq.inverse(rep.m).apply(line) != rep:
                    return False, f"inverse replay mismatch on {rep!r}"
                count += 1
        for q in extra:
            line, seq = reduce_to_line(q)
            if seq.apply(q) != line or seq.inverse(q.m).apply(line) != q:
                return False, "replay mismatch on supplied quiver"
            count += 1
        return True, f"{count} members reduced with exact forward and inverse replay"
    return _timed("reduction to a line", run)


def check_recolouring(n: int = 4, m: int = 2) -> CriterionResult:
    def run():
        base = linear_quiver(n, m)
        for target in product(range(m + 1), repeat=n - 1):
            got = recolour_line(n, m, target).apply(base)
            if line_colours(got) != list(target):
                return False, f"target {target} not reached"
        return True, f"all {(m + 1) ** (n - 1)} colourations of the {n}-line reached"
    return _timed("line recolouring", run)


def run_all(pairs=((2, 1), (3, 1), (4, 1), (2, 2), (3, 2), (4, 2)),
            samples: int = 10_000, extra=()) -> list[CriterionResult]:
    return [
        check_formula_equivalence(samples=samples),
        check_theorem_A(pairs),
        check_power_identity(pairs),
        check_closure(pairs),
        check_energy(pairs, extra=extra),
        check_clique_number(pairs),
        check_zero_part(pairs, extra=extra),
        check_reduction(extra=extra),
        check_recolouring(),
    ]
