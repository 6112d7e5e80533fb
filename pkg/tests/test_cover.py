import pytest

import raagpath as rp
from raagpath import (
    BadParameter,
    Disconnected,
    EmptyF,
    NotForest,
    ProjectionMismatch,
    RootMismatch,
)

from conftest import anchored_cycle_path_map


def test_walk_validation():
    c3 = rp.cycle_graph(3)
    w = rp.make_walk(c3, "v0", ["v1", "v2", "v0", "v1"])
    assert w.end() == "v1"
    with pytest.raises(BadParameter):
        rp.make_walk(c3, "v0", ["v2", "v0", "v2"])  # backtracks
    with pytest.raises(BadParameter):
        rp.make_walk(c3, "v0", ["v0"])  # not adjacent


def test_cover_step_extends_and_truncates():
    c3 = rp.cycle_graph(3)
    w = rp.make_walk(c3, "v0", ["v1"])
    assert rp.cover_step(w, "v2").steps == ("v1", "v2")
    assert rp.cover_step(w, "v0").steps == ()


def test_deck_from_pair_and_apply():
    c3 = rp.cycle_graph(3)
    u = rp.empty_walk(c3, "v0")
    t = rp.make_walk(c3, "v0", ["v1", "v2", "v0"])
    sigma = rp.deck_from_pair(u, t)
    assert sigma.loop.steps == ("v1", "v2", "v0")
    moved = rp.apply_deck(sigma, rp.make_walk(c3, "v0", ["v1"]))
    assert moved.steps == ("v1", "v2", "v0", "v1")
    # identity fixes everything
    assert rp.deck_from_pair(u, u).is_identity()
    assert rp.apply_deck(rp.identity_deck(c3, "v0"), t) == t
    with pytest.raises(ProjectionMismatch):
        rp.deck_from_pair(u, rp.make_walk(c3, "v0", ["v1"]))


def test_deck_roundtrip_property():
    c5 = rp.cycle_graph(5)
    walks = rp.spanning_tree_lift(c5, "v0")
    loop = rp.make_walk(c5, "v0", ["v1", "v2", "v3", "v4", "v0"])
    sigma = rp.make_deck(loop)
    for u in walks:
        t = rp.apply_deck(sigma, u)
        assert t.end() == u.end()  # decks commute with the projection
        assert rp.deck_from_pair(u, t).loop == sigma.loop
        back = rp.apply_deck(rp.invert_deck(sigma), t)
        assert back == u


def test_decks_compose():
    c3 = rp.cycle_graph(3)
    a = rp.make_deck(rp.make_walk(c3, "v0", ["v1", "v2", "v0"]))
    b = rp.invert_deck(a)
    w = rp.make_walk(c3, "v0", ["v2"])
    lhs = rp.apply_deck(a, rp.apply_deck(b, w))
    rhs = rp.apply_deck(rp.compose_decks(a, b), w)
    assert lhs == rhs == w
    twice = rp.compose_decks(a, a)
    assert rp.apply_deck(twice, w) == rp.apply_deck(a, rp.apply_deck(a, w))


def test_spanning_tree_lift():
    c5 = rp.cycle_graph(5)
    walks = rp.spanning_tree_lift(c5, "v0")
    assert len(walks) == 5
    assert {w.end() for w in walks} == set(c5.vertices)
    single = rp.make_graph(["a"], [])
    assert rp.spanning_tree_lift(single, "a") == (rp.empty_walk(single, "a"),)
    g9 = rp.lowerbound_graph(9)
    assert len(rp.spanning_tree_lift(g9, "v0")) == 9
    with pytest.raises(Disconnected):
        rp.spanning_tree_lift(rp.make_graph(["a", "b"], []), "a")


def test_embed_forest_path_in_cycle_cover():
    f = rp.cycle_to_path_map(8, 5)
    w0 = rp.empty_walk(f.codomain, "v0")
    emb = rp.embed_forest(f, ["v0p"], [w0])
    assert emb.walk_of("v0p") == w0
    assert emb.walk_of("v7p").steps == ("v1", "v2", "v3", "v4", "v0", "v1", "v2")
    for u, w in emb.walks:
        assert w.end() == f(u)


def test_embed_forest_rejects_cycles_and_bad_roots():
    c5 = rp.cycle_graph(5)
    ident = rp.identity_map(c5)
    with pytest.raises(NotForest):
        rp.embed_forest(ident, ["v0"], [rp.empty_walk(c5, "v0")])
    f = rp.cycle_to_path_map(4, 5)
    with pytest.raises(RootMismatch):
        rp.embed_forest(f, ["v0p"], [rp.make_walk(f.codomain, "v0", ["v1"])])


def test_single_vertex_tree_embeds_as_root_walk():
    c3 = rp.cycle_graph(3)
    dot = rp.make_graph(["t"], [])
    f = rp.make_map(dot, c3, {"t": "v1"})
    w = rp.make_walk(c3, "v0", ["v1"])
    emb = rp.embed_forest(f, ["t"], [w])
    assert emb.walk_of("t") == w


def test_embedding_image_is_induced():
    f = anchored_cycle_path_map(8, 5)
    w0 = rp.empty_walk(f.codomain, "v0")
    emb = rp.embed_forest(f, ["v3p"], [w0])
    graph, table = rp.graph_from_walks([w for _, w in emb.walks])
    # adjacency in the cover piece is exactly one-step difference
    for a in graph.vertices:
        for b in graph.vertices:
            wa, wb = table[a], table[b]
            one_step = abs(len(wa) - len(wb)) == 1 and (
                wa.steps[: len(wb.steps)] == wb.steps or wb.steps[: len(wa.steps)] == wa.steps
            )
            assert graph.has_edge(a, b) == one_step


def test_sigma_set_examples():
    for m in (3, 5, 7):
        n = 2 * m - 3
        f = anchored_cycle_path_map(n, m)
        w0 = rp.empty_walk(f.codomain, "v0")
        emb = rp.embed_forest(f, [f"v{n - m}p"], [w0])
        decks = rp.sigma_set(emb, [w0])
        assert len(decks) == 1 and decks[0].is_identity()
    # one larger: the 2m-2 path also pins the identity only
    m = 5
    f = anchored_cycle_path_map(2 * m - 2, m)
    w0 = rp.empty_walk(f.codomain, "v0")
    emb = rp.embed_forest(f, [f"v{m - 2}p"], [w0])
    decks = rp.sigma_set(emb, [w0])
    assert len(decks) == 1 and decks[0].is_identity()
    with pytest.raises(EmptyF):
        rp.sigma_set(emb, [])


def test_sigma_set_size_bound():
    g = rp.cycle_graph(4)
    f = rp.cycle_to_path_map(9, 4)
    walks = rp.spanning_tree_lift(g, "v0")
    emb = rp.embed_forest(f, ["v0p"], [walks[0]])
    decks = rp.sigma_set(emb, walks)
    per_vertex = {}
    for w in walks:
        per_vertex[w.end()] = per_vertex.get(w.end(), 0) + 1
    assert len(decks) <= len(f.domain.vertices) * max(per_vertex.values())


def test_enlarge_identity_case():
    m = 5
    n = 2 * m - 3
    f = anchored_cycle_path_map(n, m)
    w0 = rp.empty_walk(f.codomain, "v0")
    emb = rp.embed_forest(f, [f"v{n - m}p"], [w0])
    enl = rp.enlarge(emb, [w0])
    assert len(enl.graph.vertices) == n  # isomorphic to the original path
    degrees = sorted(len(enl.graph.neighbors(v)) for v in enl.graph.vertices)
    assert degrees == [1, 1] + [2] * (n - 2)
    assert enl.f_names == ("v0",)
    assert len(enl.graph.vertices) <= len(enl.sigma) * len(f.domain.vertices)


def test_enlarge_grows_with_spanning_base_set():
    m = 5
    f = rp.cycle_to_path_map(2 * m - 3, m)  # plain placement spans one side
    walks = rp.spanning_tree_lift(f.codomain, "v0")
    emb = rp.embed_forest(f, ["v0p"], [walks[0]])
    enl = rp.enlarge(emb, walks)
    assert set(enl.f_names) >= {w.name() for w in walks}
    assert len(enl.graph.vertices) <= len(enl.sigma) * len(f.domain.vertices)
    assert rp.is_tree(enl.graph)


def test_enlarge_warns_without_surjectivity():
    c5 = rp.cycle_graph(5)
    dot = rp.make_graph(["t"], [])
    f = rp.make_map(dot, c5, {"t": "v0"})
    emb = rp.embed_forest(f, ["t"], [rp.empty_walk(c5, "v0")])
    with pytest.warns(UserWarning):
        rp.enlarge(emb, [rp.empty_walk(c5, "v0")])


def test_distinct_lifted_endpoints():
    for m in range(3, 11):
        g = rp.lowerbound_graph(m)
        start = rp.empty_walk(g, "v0")
        paths = rp.all_induced_paths_from(g, "v0")
        ends = [rp.extend_walk_along(start, p)[-1] for p in paths]
        assert len(set(ends)) == len(paths)


def test_walk_name_roundtrip():
    c3 = rp.cycle_graph(3)
    w = rp.make_walk(c3, "v0", ["v1", "v2"])
    assert w.name() == "v0.v1.v2"
    assert rp.empty_walk(c3, "v0").name() == "v0"
