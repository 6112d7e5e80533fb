import pytest

import raagpath as rp


@pytest.fixture
def square_map():
    """Square codomain v1..v4 with a 5-vertex path over it; the extra vertex
    over v1 makes the induced homomorphism non-injective."""
    gamma = rp.make_graph(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
    )
    lam = rp.make_graph(
        ["v1p", "v2p", "v3p", "v4p", "v1pp"],
        [("v1p", "v2p"), ("v2p", "v3p"), ("v3p", "v4p"), ("v4p", "v1pp")],
    )
    f = rp.make_map(
        lam, gamma, {"v1p": "v1", "v2p": "v2", "v3p": "v3", "v4p": "v4", "v1pp": "v1"}
    )
    return f


@pytest.fixture
def figure_k23():
    """Complete bipartite graph with parts {v0, v4} and {v1, v2, v3}."""
    return rp.make_graph(
        ["v0", "v1", "v2", "v3", "v4"],
        [("v0", "v1"), ("v0", "v2"), ("v0", "v3"), ("v4", "v1"), ("v4", "v2"), ("v4", "v3")],
    )


def anchored_cycle_path_map(n: int, m: int):
    """Path onto cycle placed so a single vertex sits over v0 (valid for
    n <= 2m - 2): offset n - m."""
    return rp.cycle_to_path_map(n, m, offset=max(0, n - m))
