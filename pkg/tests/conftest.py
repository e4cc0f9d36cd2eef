import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from commondeg.generators import enumerate_all_graphs, enumerate_triangle_free  # noqa: E402


@pytest.fixture(scope="session")
def triangle_free_corpus():
    """All isomorphism classes of triangle-free graphs with 1 <= n <= 9."""
    return {n: [item.graph for item in enumerate_triangle_free(n)] for n in range(1, 10)}


@pytest.fixture(scope="session")
def all_graphs_corpus():
    """All isomorphism classes of graphs with 1 <= n <= 8."""
    return {n: [item.graph for item in enumerate_all_graphs(n)] for n in range(1, 9)}
