"""Independent oracles used by the tests.

Everything here is deliberately naive and shares no code path with the
package internals it checks.
"""
from itertools import permutations


def perm_isomorphic(q1, q2) -> bool:
    """Colour-preserving isomorphism by trying every vertex bijection."""
    if (q1.m, q1.n) != (q2.m, q2.n):
        return False
    a1 = [(a.source, a.target, a.colour, a.mult) for a in q1.arrows]
    target = {(a.source, a.target, a.colour, a.mult) for a in q2.arrows}
    for perm in permutations(range(q1.n)):
        if {(perm[s], perm[t], c, mu) for s, t, c, mu in a1} == target:
            return True
    return False


def fz_mutate(b, j):
    """Classical skew-symmetric matrix mutation."""
    n = len(b)
    nb = [row[:] for row in b]
    for i in range(n):
        for k in range(n):
            if i == j or k == j:
                nb[i][k] = -b[i][k]
            else:
                nb[i][k] = b[i][k] + (abs(b[i][j]) * b[j][k] + b[i][j] * abs(b[j][k])) // 2
    return nb


def _matrix_canon(b):
    n = len(b)
    return min(
        tuple(tuple(b[p[i]][p[k]] for k in range(n)) for i in range(n))
        for p in permutations(range(n))
    )


def fz_class_size(n: int) -> int:
    """Number of quivers mutation-equivalent to the A_n path, up to
    isomorphism, via plain Fomin-Zelevinsky matrix mutation."""
    b = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        b[i][i + 1] = 1
        b[i + 1][i] = -1
    seen = {_matrix_canon(b)}
    frontier = [b]
    while frontier:
        nxt = []
        for mat in frontier:
            for j in range(n):
                mut = fz_mutate(mat, j)
                key = _matrix_canon(mut)
                if key not in seen:
                    seen.add(key)
                    nxt.append(mut)
        frontier = nxt
    return len(seen)


def component_after_removing_clique_arrows(q, clique, start):
    """Vertices reachable from ``start`` once all arrows inside ``clique``
    are removed (Definition of (almost) extremal cliques)."""
    clique = set(clique)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in q.neighbours(v):
            if v in clique and u in clique:
                continue
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return seen


def is_path_component(q, vertices) -> bool:
    vertices = set(vertices)
    if len(vertices) == 1:
        return True
    degs = []
    for v in vertices:
        inside = [u for u in q.neighbours(v) if u in vertices]
        degs.append(len(inside))
    return sorted(degs)[:2] == [1, 1] and all(d <= 2 for d in degs) and sum(degs) == 2 * (len(vertices) - 1)
