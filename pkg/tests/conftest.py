import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from oracles import fig1_edges  # noqa: E402

import evocd  # noqa: E402


@pytest.fixture
def triangle():
    return evocd.load_edge_list("0 1\n1 2\n2 0\n").graph


@pytest.fixture
def fig1():
    """The 12-node toy graph: three 4-cliques plus three bridge edges."""
    text = "\n".join(f"{a} {b}" for a, b in fig1_edges()) + "\n"
    return evocd.load_edge_list(text)


@pytest.fixture
def fig1_truth():
    return np.repeat(np.arange(3), 4)
