import random

import pytest

import raagpath as rp
from raagpath import GraphMismatch, UnknownVertex


def test_commutes_is_non_adjacency():
    p3 = rp.path_graph(3)
    assert rp.commutes(p3, "v0", "v2")
    assert not rp.commutes(p3, "v0", "v1")
    c5 = rp.cycle_graph(5)
    assert not rp.commutes(c5, "v0", "v1")
    assert not rp.commutes(c5, "v0", "v0")
    with pytest.raises(UnknownVertex):
        rp.commutes(c5, "v0", "zzz")


def test_reduced_example_on_square():
    # commuting pairs of the 4-cycle are the two diagonals only
    c4 = rp.make_graph(
        ["v1", "v2", "v3", "v4"],
        [("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "v1")],
    )
    w = rp.parse_word(c4, "v1 v2 v1^-1 v4 v1 v2^-1 v1^-1 v4^-1")
    assert rp.is_reduced(w)


def test_cancellation_found_through_commuting_interior():
    p3 = rp.path_graph(3)
    w = rp.parse_word(p3, "v0 v2 v0^-1")
    assert rp.find_cancellation(w) == (0, 2)
    assert not rp.is_reduced(w)


def test_empty_word_is_reduced():
    g = rp.path_graph(2)
    assert rp.is_reduced(rp.empty_word(g))


def test_innermost_cancellation_examples(square_map):
    lam = square_map.domain
    w = rp.parse_word(lam, "v1p v1pp v4p v1pp^-1 v1p^-1")
    assert rp.find_innermost_cancellation(w, "v1p") == (0, 4)
    assert rp.find_innermost_cancellation(w, "v1pp") is None
    assert rp.find_innermost_cancellation(w, "v2p") is None


def test_reduce_keeps_interior_in_place(square_map):
    lam = square_map.domain
    w = rp.parse_word(lam, "v1p v1pp v4p v1pp^-1 v1p^-1")
    assert rp.word_to_text(rp.reduce_word(w)) == "v1pp v4p v1pp^-1"


def test_reduce_idempotent():
    g = rp.cycle_graph(4)
    rng = random.Random(7)
    for _ in range(50):
        w = rp.random_reduced_word(g, rng.randint(0, 6), rng)
        assert rp.reduce_word(w) == w


def test_supports_and_length(square_map):
    lam = square_map.domain
    w = rp.parse_word(lam, "v1p v1pp v4p v1pp^-1 v1p^-1")
    assert rp.support_letters(w) == {"v1p", "v1pp", "v4p"}
    assert rp.support_elem(w) == {"v1pp", "v4p"}
    assert rp.length_elem(w) == 3
    assert rp.length_elem(rp.empty_word(lam)) == 0


def test_equal_elements_commuting_pair():
    p3 = rp.path_graph(3)
    assert rp.equal_elements(rp.parse_word(p3, "v0 v2"), rp.parse_word(p3, "v2 v0"))
    assert not rp.equal_elements(rp.parse_word(p3, "v0 v1"), rp.parse_word(p3, "v1 v0"))
    with pytest.raises(GraphMismatch):
        rp.equal_elements(rp.parse_word(p3, "v0"), rp.parse_word(rp.path_graph(2), "v0"))


def test_reduced_iff_no_innermost_scan():
    g = rp.cycle_graph(4)
    rng = random.Random(3)
    alphabet = [(v, s) for v in g.vertices for s in (1, -1)]
    for _ in range(300):
        letters = [rng.choice(alphabet) for _ in range(rng.randint(0, 7))]
        w = rp.make_word(g, letters)
        innermost = any(
            rp.find_innermost_cancellation(w, v) is not None for v in g.vertices
        )
        assert rp.is_reduced(w) == (not innermost)


def test_pile_agrees_with_stepwise_reduction():
    g = rp.make_graph(
        ["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]
    )
    rng = random.Random(11)
    alphabet = [(v, s) for v in g.vertices for s in (1, -1)]
    for _ in range(400):
        letters = [rng.choice(alphabet) for _ in range(rng.randint(0, 10))]
        w = rp.make_word(g, letters)
        slow = rp.reduce_word(w)
        fast = rp.canonical_word(w)
        assert len(slow) == len(fast) == rp.length_elem(w)
        assert rp.support_letters(slow) == rp.support_elem(w)
        assert rp.equal_elements(slow, fast)
        assert rp.is_trivial(w) == (len(slow) == 0)


def test_reduction_order_invariance():
    g = rp.cycle_graph(5)
    rng = random.Random(23)
    alphabet = [(v, s) for v in g.vertices for s in (1, -1)]
    for _ in range(100):
        letters = [rng.choice(alphabet) for _ in range(rng.randint(0, 8))]
        w = rp.make_word(g, letters)
        a = rp.reduce_word(w)
        b = rp.reduce_word(w, rng=rng)
        assert len(a) == len(b)
        assert rp.support_letters(a) == rp.support_letters(b)
        assert rp.equal_elements(a, b)


def test_canonical_word_is_least_and_stable():
    p3 = rp.path_graph(3)
    w = rp.parse_word(p3, "v2 v0")  # commuting letters sort to v0 v2
    assert rp.word_to_text(rp.canonical_word(w)) == "v0 v2"
    assert rp.canonical_word(rp.canonical_word(w)) == rp.canonical_word(w)


def test_enumerate_reduced_words_counts():
    single = rp.make_graph(["v"], [])
    words = list(rp.enumerate_reduced_words(single, 2))
    assert [rp.word_to_text(w) for w in words] == ["", "v", "v^-1", "v v", "v^-1 v^-1"]

    c3 = rp.cycle_graph(3)  # free of rank 3
    assert len(list(rp.enumerate_reduced_words(c3, 1))) == 7

    p3 = rp.path_graph(3)
    brute = [
        w
        for w in _all_words(p3, 2)
        if rp.is_reduced(w)
    ]
    assert len(list(rp.enumerate_reduced_words(p3, 2))) == len(brute)


def _all_words(g, max_len):
    alphabet = [(v, s) for v in g.vertices for s in (1, -1)]
    out = [rp.make_word(g, [])]
    layer = [[]]
    for _ in range(max_len):
        layer = [prefix + [l] for prefix in layer for l in alphabet]
        out.extend(rp.make_word(g, seq) for seq in layer)
    return out


def test_enumeration_order_is_length_then_lex():
    p2 = rp.path_graph(2)
    words = [rp.word_to_text(w) for w in rp.enumerate_reduced_words(p2, 2)]
    assert words[0] == ""
    assert words[1:5] == ["v0", "v0^-1", "v1", "v1^-1"]
    assert all(len(a.split()) <= len(b.split()) for a, b in zip(words, words[1:]))


def test_parse_format_roundtrip():
    g = rp.cycle_graph(4)
    text = "v0 v2^-1 v0 v3"
    assert rp.word_to_text(rp.parse_word(g, text)) == text
    assert rp.parse_word(g, "") == rp.empty_word(g)
