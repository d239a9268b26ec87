import random
from itertools import combinations

import pytest

from cquivers import (
    BudgetExceeded,
    ClassLimitExceeded,
    ColouredQuiver,
    are_isomorphic,
    canonical_form,
    generate_members,
    labelled_class_size,
    linear_quiver,
    mutation_class,
    mutate_power,
    relabel,
    verify_theorem_A,
)
from bruteforce import fz_class_size, perm_isomorphic


def test_canonical_invariant_under_relabelling(fig4):
    rng = random.Random(11)
    for q in [linear_quiver(4, 2, [1, 0, 2]), fig4]:
        form = canonical_form(q)
        for _ in range(5):
            perm = list(range(q.n))
            rng.shuffle(perm)
            assert canonical_form(relabel(q, perm)) == form


def test_canonical_identifies_reversed_edge():
    # 1 -> 2 of colour 0 equals 1 -> 2 of colour 2 with the vertices swapped
    a = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0), (1, 0, 2)])
    b = ColouredQuiver.from_arrows(2, 2, [(0, 1, 2), (1, 0, 0)])
    assert canonical_form(a) == canonical_form(b)
    assert perm_isomorphic(a, b)


def test_canonical_separates_colour_one():
    a = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0), (1, 0, 2)])
    c = ColouredQuiver.from_arrows(2, 2, [(0, 1, 1), (1, 0, 1)])
    assert canonical_form(a) != canonical_form(c)
    assert not perm_isomorphic(a, c)


def test_canonical_agrees_with_bruteforce_isomorphism():
    reps = []
    for n, m in [(3, 2), (4, 2), (4, 1), (5, 1)]:
        reps.extend(mutation_class(linear_quiver(n, m)).representatives.values())
    for q1, q2 in combinations(reps, 2):
        assert (canonical_form(q1) == canonical_form(q2)) == perm_isomorphic(q1, q2)


def test_canonical_agrees_with_bruteforce_on_sampled_pairs_n5():
    reps = list(mutation_class(linear_quiver(5, 2)).representatives.values())
    rng = random.Random(5)
    pairs = [rng.sample(range(len(reps)), 2) for _ in range(300)]
    for i, j in pairs:
        q1, q2 = reps[i], reps[j]
        assert (canonical_form(q1) == canonical_form(q2)) == perm_isomorphic(q1, q2)
    # representatives are deduplicated, so distinct entries are never isomorphic
    assert len({canonical_form(q) for q in reps}) == len(reps)


def test_canonical_handles_symmetric_quivers_quickly():
    import time

    # a 12-leaf star has 12! leaf orderings; symmetry pruning must cut them
    n = 13
    star = ColouredQuiver.from_arrows(
        2, n, [(0, k, 1) for k in range(1, n)] + [(k, 0, 1) for k in range(1, n)]
    )
    start = time.perf_counter()
    form = canonical_form(star)
    assert time.perf_counter() - start < 2.0
    perm = list(range(1, n)) + [0]
    assert canonical_form(relabel(star, perm)) == form


def test_are_isomorphic_wrapper():
    a = linear_quiver(3, 2, [0, 1])
    b = relabel(a, [2, 1, 0])
    assert are_isomorphic(a, b)
    assert not are_isomorphic(a, linear_quiver(3, 2, [1, 1]))


# -- mutation classes -----------------------------------------------------------


def test_class_a3_m2_matches_figure_three(fig3):
    cls = mutation_class(linear_quiver(3, 2))
    assert len(cls) == 7
    assert {canonical_form(q) for q in fig3} == cls.forms


def test_single_vertex_class():
    assert len(mutation_class(linear_quiver(1, 2))) == 1


def test_class_a2_m2_has_two_classes():
    # colours 0 and 2 collapse under isomorphism, colour 1 is the other class
    cls = mutation_class(linear_quiver(2, 2))
    assert len(cls) == 2


def test_labelled_count_a3_m2():
    # 3 labelled path graphs x 9 colourings + 6 labelled triangles = 33
    assert labelled_class_size(linear_quiver(3, 2)) == 33


def test_class_respects_limit():
    with pytest.raises(ClassLimitExceeded) as err:
        mutation_class(linear_quiver(4, 2), limit=3)
    assert len(err.value.partial) == 3


def test_orbit_edges_and_power_return():
    cls = mutation_class(linear_quiver(3, 2))
    for (form, j), dst in cls.orbit.items():
        assert dst in cls.representatives
        rep = cls.representatives[form]
        # following the edge then applying mu_j m more times returns
        assert mutate_power(rep, j, rep.m + 1) == rep
    assert len(cls.orbit) == 7 * 3


def test_closure_check_runs_inline():
    cls = mutation_class(linear_quiver(4, 2), check_membership=True)
    assert cls.membership_checked


def test_enumeration_is_deterministic():
    first = mutation_class(linear_quiver(4, 2))
    second = mutation_class(linear_quiver(4, 2))
    assert list(first.representatives) == list(second.representatives)
    assert list(first.representatives.values()) == list(second.representatives.values())


# -- exhaustive generation --------------------------------------------------------


def test_generate_single_vertex():
    assert len(generate_members(1, 2)) == 1


def test_generate_two_vertices_m2():
    assert len(generate_members(2, 2)) == 2


def test_generate_matches_figure_three(fig3):
    assert generate_members(3, 2) == {canonical_form(q) for q in fig3}


def test_generate_refuses_oversized_search():
    with pytest.raises(BudgetExceeded) as err:
        generate_members(8, 4, budget=1000)
    assert err.value.space == 6 ** 28


# -- two-route class verification --------------------------------------------------------------------


@pytest.mark.parametrize("n,m", [(2, 1), (3, 1), (3, 2)])
def test_theorem_a_small(n, m):
    report = verify_theorem_A(n, m)
    assert report.ok, report.to_json()


def test_theorem_a_2_1_single_form():
    report = verify_theorem_A(2, 1)
    assert report.ok and report.bfs_count == 1


def test_theorem_a_4_1_matches_classical_mutation():
    report = verify_theorem_A(4, 1)
    assert report.ok
    # independent oracle: plain Fomin-Zelevinsky matrix mutation BFS
    assert report.bfs_count == fz_class_size(4)


def test_classical_class_sizes_m1():
    # classical mutation classes of A_n up to isomorphism
    for n in (2, 3, 4, 5):
        assert len(mutation_class(linear_quiver(n, 1))) == fz_class_size(n)
