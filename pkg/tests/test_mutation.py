import random

import pytest

from cquivers import (
    ColouredQuiver,
    MutationSequence,
    MutationStep,
    NotAMemberError,
    QuiverError,
    linear_quiver,
    inverse_in_class,
    mutate_formula,
    mutate_power,
    mutate_steps,
    mutation_class,
    validate,
)
from cquivers.verification import random_valid_quiver


def drawn(m, n, arrows):
    """Quiver from single-arrow notation: each (i, j, c) implies the
    skew partner (j, i, m - c)."""
    full = []
    for i, j, c in arrows:
        full.append((i - 1, j - 1, c))
        full.append((j - 1, i - 1, m - c))
    return ColouredQuiver.from_arrows(m, n, full)


# -- the worked 2-coloured chain ----------------------------------------------


def test_steps_cancels_composed_pair(example_310):
    got = mutate_steps(example_310, 1)
    assert got == drawn(2, 3, [(1, 2, 0), (2, 3, 0)])


def test_steps_creates_triangle_from_path():
    q = drawn(2, 3, [(1, 2, 0), (2, 3, 0)])
    got = mutate_steps(q, 1)
    assert got == drawn(2, 3, [(1, 2, 1), (1, 3, 0), (3, 2, 0)])


def test_steps_m1_is_arrow_reversal():
    q = linear_quiver(2, 1)
    got = mutate_steps(q, 0)
    assert got.colour(0, 1) == 1 and got.colour(1, 0) == 0


def test_formula_matches_steps_on_chain(example_310):
    cur = example_310
    for _ in range(4):
        assert mutate_formula(cur, 1) == mutate_steps(cur, 1)
        cur = mutate_steps(cur, 1)


def test_formula_star_cycles_colours(example_39):
    got = mutate_formula(example_39, 0)
    for k in (1, 2, 3):
        assert got.colour(0, k) == 1


def test_formula_isolated_vertex_unchanged():
    q = linear_quiver(1, 2)
    assert mutate_formula(q, 0) == q


def test_power_period_three_outside_class(example_39):
    assert mutate_power(example_39, 0, 3) == example_39


def test_power_not_identity_outside_class(example_310):
    fourth = mutate_power(example_310, 1, 3)
    assert fourth != example_310
    assert fourth == drawn(2, 3, [(1, 3, 0), (3, 2, 1), (2, 1, 0)])


def test_power_zero_is_identity(example_310):
    assert mutate_power(example_310, 1, 0) == example_310


def test_power_reduces_mod_only_when_member_asserted(example_310):
    assert mutate_power(example_310, 1, 3, assume_member=True) == example_310
    assert mutate_power(example_310, 1, 3) != example_310


def test_inverse_m1_is_self_inverse():
    q = linear_quiver(3, 1)
    assert inverse_in_class(q, 1) == mutate_steps(q, 1)


def test_inverse_linear_a3():
    q = linear_quiver(3, 2)
    inv = inverse_in_class(q, 1)
    assert mutate_steps(inv, 1) == q
    assert inv == mutate_power(q, 1, 2)


def test_inverse_on_every_class_member():
    cls = mutation_class(linear_quiver(3, 2))
    for rep in cls.representatives.values():
        for j in range(rep.n):
            assert mutate_steps(inverse_in_class(rep, j), j) == rep


def test_inverse_refuses_non_members(example_310):
    with pytest.raises(NotAMemberError) as err:
        inverse_in_class(example_310, 1)
    assert "bad-triangle" in str(err.value)


def test_mutation_rejects_bad_vertex():
    with pytest.raises(QuiverError):
        mutate_steps(linear_quiver(2, 1), 5)


def test_mutation_rejects_invalid_quiver():
    bad = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0)])  # missing partner
    with pytest.raises(QuiverError):
        mutate_steps(bad, 0)


def test_mutation_handles_multiplicities():
    q = ColouredQuiver.from_arrows(
        2, 3, [(0, 1, 0, 2), (1, 0, 2, 2), (1, 2, 0, 1), (2, 1, 2, 1)]
    )
    got = mutate_steps(q, 1)
    assert validate(got).ok
    # two parallel 1 -> 2 colour-0 arrows compose with 2 -> 3 colour 0
    assert got.multiplicity(0, 2, 0) == 2
    assert got == mutate_formula(q, 1)


def test_randomized_formula_equivalence_and_validity():
    rng = random.Random(1)
    for _ in range(2000):
        q = random_valid_quiver(rng)
        j = rng.randrange(q.n)
        a = mutate_steps(q, j)
        assert a == mutate_formula(q, j)
        assert validate(a).ok


def test_m1_mutation_is_involution_on_class():
    cls = mutation_class(linear_quiver(4, 1))
    for rep in cls.representatives.values():
        for j in range(rep.n):
            assert mutate_power(rep, j, 2) == rep


# -- sequences ----------------------------------------------------------------


def test_sequence_applies_left_to_right():
    q = linear_quiver(3, 2)
    seq = MutationSequence.of([(1, 1), (0, 2)])
    assert seq.apply(q) == mutate_power(mutate_steps(q, 1), 0, 2)


def test_sequence_inverse_on_member():
    q = linear_quiver(4, 2)
    seq = MutationSequence.of([(1, 1), (2, 2), (0, 1)])
    assert seq.inverse(q.m).apply(seq.apply(q)) == q


def test_sequence_json_round_trip():
    seq = MutationSequence.of([(1, 1), (2, 3)])
    again = MutationSequence.from_json(seq.to_json())
    assert again == seq
    assert seq.to_json() == {"steps": [{"vertex": 2, "power": 1}, {"vertex": 3, "power": 3}]}


def test_step_power_must_be_positive():
    with pytest.raises(ValueError):
        MutationStep(0, 0)
