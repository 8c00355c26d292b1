import json

import pytest

from hamqaoa import make_graph, strip_constant, to_ising, assemble
from hamqaoa.cli import reference_square_model

TRIANGLE_EDGES = [(1, 2), (2, 3), (3, 1)]
SQUARE_EDGES = [(1, 2), (2, 3), (3, 4), (4, 1)]


@pytest.fixture
def triangle():
    return make_graph(3, TRIANGLE_EDGES)


@pytest.fixture
def square():
    return make_graph(4, SQUARE_EDGES)


@pytest.fixture
def triangle_model(triangle):
    """Triangle cost Hamiltonian with unit ZZ coefficients (constant dropped)."""
    return strip_constant(to_ising(assemble(triangle), 3), rescale=2)


@pytest.fixture
def square_fixture_model():
    return reference_square_model()


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "triangle.json"
    path.write_text(json.dumps({"n": 3, "edges": [list(e) for e in TRIANGLE_EDGES]}))
    return str(path)


@pytest.fixture
def square_file(tmp_path):
    path = tmp_path / "square.json"
    path.write_text(json.dumps({"n": 4, "edges": [list(e) for e in SQUARE_EDGES]}))
    return str(path)
