import json

import pytest

from cquivers import (
    ColouredQuiver,
    QuiverError,
    linear_quiver,
    is_connected,
    is_simple,
    quiver_from_json_str,
    quiver_to_json,
    quiver_to_json_str,
    relabel,
    simple_view,
    underlying_graph,
    validate,
)


def test_linear_default_is_valid_and_all_zero():
    q = linear_quiver(3, 2)
    assert validate(q).ok
    assert q.colour(0, 1) == 0 and q.colour(1, 2) == 0
    assert q.colour(1, 0) == 2 and q.colour(2, 1) == 2


def test_linear_single_vertex_has_no_arrows():
    q = linear_quiver(1, 1)
    assert q.n == 1 and q.arrows == ()


def test_linear_custom_colours():
    q = linear_quiver(3, 2, [1, 1])
    assert q.colour(0, 1) == 1 and q.colour(1, 2) == 1
    assert q.colour(1, 0) == 1  # m - 1 = 1


def test_linear_rejects_out_of_range_colour():
    with pytest.raises(ValueError):
        linear_quiver(3, 2, [0, 5])


def test_validate_flags_skew_violation():
    q = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0), (1, 0, 0)])
    problems = validate(q).problems
    kinds = {(p.kind, p.where) for p in problems}
    # the 2 -> 1 colour-0 arrow needs a 1 -> 2 partner of colour 2
    assert ("skew", (1, 0, 0)) in kinds
    assert any(p.to_json() == {"kind": "skew", "where": [2, 1, 0]} for p in problems)


def test_validate_flags_bichromatic_pair():
    q = ColouredQuiver.from_arrows(
        2, 2, [(0, 1, 0), (0, 1, 1), (1, 0, 2), (1, 0, 1)]
    )
    assert any(p.kind == "bichromatic" and p.where == (0, 1) for p in validate(q).problems)


def test_validate_flags_loop():
    q = ColouredQuiver.from_arrows(2, 2, [(0, 0, 1)])
    assert any(p.kind == "loop" for p in validate(q).problems)


def test_underlying_graph_of_triangle(example_310):
    g = underlying_graph(example_310)
    assert g.edges == frozenset({(0, 1), (0, 2), (1, 2)})
    assert g.connected


def test_linear_is_simple_connected_path():
    q = linear_quiver(4, 2)
    assert is_simple(q) and is_connected(q)
    assert underlying_graph(q).is_path()


def test_disconnected_components():
    q = ColouredQuiver.from_arrows(1, 4, [(0, 1, 0), (1, 0, 1), (2, 3, 0), (3, 2, 1)])
    assert not is_connected(q)
    assert len(underlying_graph(q).components) == 2


def test_simple_view_round_trip():
    q = linear_quiver(4, 3, [2, 0, 3])
    view = simple_view(q)
    assert view.to_quiver() == q


def test_simple_view_rejects_multi_arrows():
    q = ColouredQuiver.from_arrows(2, 2, [(0, 1, 0, 2), (1, 0, 2, 2)])
    with pytest.raises(QuiverError):
        simple_view(q)


def test_json_round_trip_is_bit_exact():
    q = linear_quiver(3, 2, [1, 2])
    text = quiver_to_json_str(q)
    again = quiver_to_json_str(quiver_from_json_str(text))
    assert text == again


def test_json_uses_one_based_low_to_high_arrows():
    q = ColouredQuiver.from_arrows(2, 2, [(1, 0, 0), (0, 1, 2)])
    obj = quiver_to_json(q)
    assert obj["arrows"] == [{"from": 1, "to": 2, "colour": 2, "mult": 1}]


def test_json_accepts_redundant_partner():
    text = json.dumps(
        {
            "m": 2,
            "n": 2,
            "arrows": [
                {"from": 1, "to": 2, "colour": 0, "mult": 1},
                {"from": 2, "to": 1, "colour": 2, "mult": 1},
            ],
        }
    )
    q = quiver_from_json_str(text)
    assert q.colour(0, 1) == 0


def test_json_rejects_inconsistent_partner():
    text = json.dumps(
        {
            "m": 2,
            "n": 2,
            "arrows": [
                {"from": 1, "to": 2, "colour": 0, "mult": 1},
                {"from": 2, "to": 1, "colour": 1, "mult": 1},
            ],
        }
    )
    with pytest.raises(QuiverError):
        quiver_from_json_str(text)


def test_json_rejects_loops_and_bad_ranges():
    with pytest.raises(QuiverError):
        quiver_from_json_str('{"m": 2, "n": 2, "arrows": [{"from": 1, "to": 1, "colour": 0}]}')
    with pytest.raises(QuiverError):
        quiver_from_json_str('{"m": 2, "n": 2, "arrows": [{"from": 1, "to": 5, "colour": 0}]}')
    with pytest.raises(QuiverError):
        quiver_from_json_str('{"m": 2, "n": 2, "arrows": [{"from": 1, "to": 2, "colour": 9}]}')


def test_json_multi_arrow_mult():
    q = ColouredQuiver.from_arrows(2, 2, [(0, 1, 1, 3), (1, 0, 1, 3)])
    obj = quiver_to_json(q)
    assert obj["arrows"][0]["mult"] == 3
    assert quiver_from_json_str(json.dumps(obj)) == q


def test_relabel_requires_permutation():
    q = linear_quiver(3, 1)
    with pytest.raises(ValueError):
        relabel(q, [0, 0, 1])


def test_quiver_is_immutable():
    q = linear_quiver(2, 1)
    with pytest.raises(Exception):
        q.m = 3
