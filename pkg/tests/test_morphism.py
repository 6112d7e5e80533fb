import pytest

import raagpath as rp
from raagpath import BadParameter, ImageEscapesCodomain, NotAMapOfGraphs

from conftest import anchored_cycle_path_map


def test_identity_is_valid_map():
    c5 = rp.cycle_graph(5)
    f = rp.identity_map(c5)
    assert all(f(v) == v for v in c5.vertices)


def test_square_map_is_valid(square_map):
    assert square_map("v1pp") == "v1"
    assert square_map.preimage("v1") == ("v1p", "v1pp")


def test_constant_map_rejected():
    edge = rp.make_graph(["a", "b"], [("a", "b")])
    target = rp.make_graph(["x", "y"], [("x", "y")])
    with pytest.raises(NotAMapOfGraphs):
        rp.make_map(edge, target, {"a": "x", "b": "x"})


def test_edge_to_nonedge_rejected():
    edge = rp.make_graph(["a", "b"], [("a", "b")])
    target = rp.path_graph(3)
    with pytest.raises(NotAMapOfGraphs):
        rp.make_map(edge, target, {"a": "v0", "b": "v2"})


def test_is_immersion(square_map):
    assert rp.is_immersion(rp.cycle_to_path_map(8, 5))
    assert rp.is_immersion(square_map)
    # two edges at one vertex folded onto a single edge
    vee = rp.make_graph(["a", "b", "c"], [("b", "a"), ("b", "c")])
    edge = rp.make_graph(["x", "y"], [("x", "y")])
    fold = rp.make_map(vee, edge, {"a": "x", "b": "y", "c": "x"})
    assert not rp.is_immersion(fold)


def test_is_covering():
    c5 = rp.cycle_graph(5)
    assert rp.is_covering(rp.identity_map(c5))
    c6, c3 = rp.cycle_graph(6), rp.cycle_graph(3)
    double = rp.make_map(c6, c3, {f"v{j}": f"v{j % 3}" for j in range(6)})
    assert rp.is_covering(double)
    assert not rp.is_covering(rp.cycle_to_path_map(8, 5))


def test_covering_implies_immersion():
    c6, c3 = rp.cycle_graph(6), rp.cycle_graph(3)
    double = rp.make_map(c6, c3, {f"v{j}": f"v{j % 3}" for j in range(6)})
    assert rp.is_immersion(double)


def test_restrict(square_map):
    f = rp.cycle_to_path_map(8, 5)
    dom1 = rp.remove(f.domain, f.preimage("v0"))
    cod1 = rp.remove(f.codomain, ["v0"])
    f1 = rp.restrict(f, dom1, cod1)
    assert rp.is_immersion(f1)
    assert set(f1.domain.vertices) == set(f.domain.vertices) - set(f.preimage("v0"))
    # full restriction is the identity operation
    same = rp.restrict(f, f.domain, f.codomain)
    assert same.assignment == f.assignment
    with pytest.raises(ImageEscapesCodomain):
        rp.restrict(f, f.domain, cod1)


def test_restrict_requires_induced():
    f = rp.cycle_to_path_map(5, 5)
    broken = rp.make_graph(["v0p", "v1p"], [])  # drops the edge: not induced
    with pytest.raises(BadParameter):
        rp.restrict(f, broken, f.codomain)


def test_cycle_to_path_map_examples():
    f = rp.cycle_to_path_map(8, 5)
    assert [f(f"v{j}p") for j in range(8)] == [f"v{j % 5}" for j in range(8)]
    g = rp.cycle_to_path_map(3, 3)
    assert [g(f"v{j}p") for j in range(3)] == ["v0", "v1", "v2"]
    same_size = rp.cycle_to_path_map(5, 5)
    assert rp.is_immersion(same_size) and not rp.is_covering(same_size)
    with pytest.raises(BadParameter):
        rp.cycle_to_path_map(8, 2)
    with pytest.raises(BadParameter):
        rp.cycle_to_path_map(0, 5)


def test_cycle_to_path_always_immersion():
    for m in range(3, 13):
        for n in range(m, 3 * m + 1):
            assert rp.is_immersion(rp.cycle_to_path_map(n, m))


def test_anchored_variant_matches_rotation():
    f = anchored_cycle_path_map(7, 5)
    assert f.preimage("v0") == ("v2p",)
    assert rp.is_immersion(f)


def test_compose_is_map_of_graphs():
    c6, c3 = rp.cycle_graph(6), rp.cycle_graph(3)
    double = rp.make_map(c6, c3, {f"v{j}": f"v{j % 3}" for j in range(6)})
    f = rp.cycle_to_path_map(7, 6)
    comp = rp.compose(f, double)
    assert comp.domain == f.domain and comp.codomain == c3
    assert all(comp(v) == double(f(v)) for v in f.domain.vertices)
