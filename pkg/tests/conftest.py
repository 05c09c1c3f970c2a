import pytest

from graphspectra import shift
from graphspectra.graphs import directed_edge_matrix, genus2_catalog

# Reference 6x6 matrices for the two multi-vertex genus-2 graphs, in the
# labeling where the theta matrix is the 6-cycle adjacency.
THETA_REFERENCE = (
    (0, 1, 0, 0, 0, 1),
    (1, 0, 1, 0, 0, 0),
    (0, 1, 0, 1, 0, 0),
    (0, 0, 1, 0, 1, 0),
    (0, 0, 0, 1, 0, 1),
    (1, 0, 0, 0, 1, 0),
)
DUMBBELL_REFERENCE = (
    (0, 0, 1, 0, 0, 1),
    (1, 1, 0, 0, 0, 0),
    (0, 0, 1, 1, 0, 0),
    (0, 1, 0, 0, 1, 0),
    (1, 0, 0, 0, 1, 0),
    (0, 0, 0, 1, 0, 1),
)


@pytest.fixture(scope="session")
def schottky2():
    return shift.full_schottky_sft(2)


@pytest.fixture(scope="session")
def theta_sft():
    return shift.from_edge_matrix(directed_edge_matrix(genus2_catalog()[1]))


@pytest.fixture(scope="session")
def dumbbell_sft():
    return shift.from_edge_matrix(directed_edge_matrix(genus2_catalog()[2]))
