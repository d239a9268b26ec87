import json
from pathlib import Path

import pytest

from cquivers import ColouredQuiver, quiver_from_json

DATA = Path(__file__).resolve().parent.parent / "data"


def load_quiver(name: str) -> ColouredQuiver:
    return quiver_from_json(json.loads((DATA / name).read_text()))


@pytest.fixture(scope="session")
def fig3():
    return [load_quiver(f"fig3_{i}.json") for i in range(1, 8)]


@pytest.fixture(scope="session")
def fig4():
    return load_quiver("fig4.json")


@pytest.fixture(scope="session")
def almost_extremal_10():
    return load_quiver("almost_extremal_10.json")


@pytest.fixture(scope="session")
def example_310():
    """The 2-coloured triangle that is not a member but mutates into the
    class: drawn arrows 3->1 (0), 2->1 (0), 2->3 (1)."""
    return ColouredQuiver.from_arrows(
        2, 3, [(2, 0, 0), (0, 2, 2), (1, 0, 0), (0, 1, 2), (1, 2, 1), (2, 1, 1)]
    )


@pytest.fixture(scope="session")
def example_39():
    """The 4-vertex star with all drawn arrows of colour 2: not a member,
    yet mutation at the hub has period 3."""
    return ColouredQuiver.from_arrows(
        2, 4, [(0, k, 2) for k in (1, 2, 3)] + [(k, 0, 0) for k in (1, 2, 3)]
    )
