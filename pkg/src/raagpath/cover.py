"""Lazy universal cover of a connected graph.

The cover of a graph with a cycle is infinite, so it is never materialised:
its vertices are non-backtracking walks from a fixed base vertex, adjacency
is "differs by one step", and the covering projection reads off the walk's
endpoint.  Deck transformations are reduced closed walks at the base acting
by concatenate-then-cancel-backtracking.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import (
    BadParameter,
    BaseMismatch,
    Disconnected,
    EmptyF,
    NotForest,
    NotImmersion,
    ProjectionMismatch,
    RootMismatch,
    UnknownVertex,
)
from .graph import Graph, components, is_forest
from .morphism import GraphMap, is_immersion, is_vertex_surjective
from .paths import PathSeq


@dataclass(frozen=True)
class Walk:
    """Non-backtracking walk from `base`; a vertex of the universal cover."""

    graph: Graph
    base: str
    steps: tuple[str, ...]

    def end(self) -> str:
        """The covering projection of this cover vertex."""
        return self.steps[-1] if self.steps else self.base

    def name(self) -> str:
        return ".".join((self.base,) + self.steps)

    def __len__(self):
        return len(self.steps)


def make_walk(g: Graph, base: str, steps: Sequence[str] = ()) -> Walk:
    g.index(base)
    seq = (base,) + tuple(steps)
    for v in seq:
        g.index(v)
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise BadParameter(f"walk steps {a!r}, {b!r} are not adjacent")
    for i in range(len(seq) - 2):
        if seq[i] == seq[i + 2]:
            raise BadParameter(f"walk backtracks at {seq[i + 1]!r}")
    return Walk(g, base, tuple(steps))


def empty_walk(g: Graph, base: str) -> Walk:
    return make_walk(g, base, ())


def _reduce_sequence(seq: list[str]) -> list[str]:
    """Cancel backtracking pairs x,y,x greedily; order of cancellation does
    not matter for free reduction of edge walks."""
    stack: list[str] = []
    for v in seq:
        if len(stack) >= 2 and stack[-2] == v:
            stack.pop()
        else:
            stack.append(v)
    return stack


def cover_step(w: Walk, x: str) -> Walk:
    """The cover neighbor of w along the edge from its endpoint to x: one
    step forward, or one step back when x is the previous vertex."""
    if not w.graph.has_edge(w.end(), x):
        raise BadParameter(f"{x!r} is not adjacent to walk endpoint {w.end()!r}")
    prev = w.steps[-2] if len(w.steps) >= 2 else (w.base if w.steps else None)
    if prev == x:
        return Walk(w.graph, w.base, w.steps[:-1])
    return Walk(w.graph, w.base, w.steps + (x,))


def walk_prefixes(w: Walk) -> list[Walk]:
    """All cover vertices along w, from the base walk to w itself."""
    return [Walk(w.graph, w.base, w.steps[:i]) for i in range(len(w.steps) + 1)]


def extend_walk_along(w: Walk, path: PathSeq) -> list[Walk]:
    """Lift a path starting at the projection of w; returns the cover vertex
    for every path vertex (lifts into a cover always exist)."""
    if path.graph != w.graph:
        raise BadParameter("path must live in the walk's graph")
    if path.start() != w.end():
        raise ProjectionMismatch(
            f"path starts at {path.start()!r} but walk ends at {w.end()!r}"
        )
    out = [w]
    for x in path.vertices[1:]:
        out.append(cover_step(out[-1], x))
    return out


# ---------------------------------------------------------------------------
# deck transformations


@dataclass(frozen=True)
class Deck:
    """Deck transformation of the cover: a reduced closed walk at the base."""

    loop: Walk

    def is_identity(self) -> bool:
        return not self.loop.steps


def make_deck(loop: Walk) -> Deck:
    if loop.end() != loop.base:
        raise BadParameter("a deck transformation is a closed walk at the base")
    return Deck(loop)


def identity_deck(g: Graph, base: str) -> Deck:
    return Deck(empty_walk(g, base))


def apply_deck(sigma: Deck, w: Walk) -> Walk:
    """Follow the loop from the base, then w; backtracking cancels.  Commutes
    with the projection by construction."""
    if sigma.loop.graph != w.graph or sigma.loop.base != w.base:
        raise BaseMismatch("deck and walk must share graph and base")
    seq = _reduce_sequence([w.base, *sigma.loop.steps, *w.steps])
    return Walk(w.graph, w.base, tuple(seq[1:]))


def deck_from_pair(u: Walk, t: Walk) -> Deck:
    """The unique deck transformation with sigma(u) = t; both walks must share
    the base and project to the same vertex."""
    if u.graph != t.graph or u.base != t.base:
        raise BaseMismatch("walks must share graph and base")
    if u.end() != t.end():
        raise ProjectionMismatch(
            f"walks project to {u.end()!r} and {t.end()!r}; a deck cannot join them"
        )
    back = [u.base, *u.steps][:-1][::-1]  # u reversed, minus its endpoint
    seq = _reduce_sequence([t.base, *t.steps, *back])
    return make_deck(Walk(u.graph, u.base, tuple(seq[1:])))


def compose_decks(first: Deck, second: Deck) -> Deck:
    """The deck acting as first-after-second."""
    if first.loop.graph != second.loop.graph or first.loop.base != second.loop.base:
        raise BaseMismatch("decks must share graph and base")
    return make_deck(apply_deck(first, second.loop))


def invert_deck(sigma: Deck) -> Deck:
    loop = sigma.loop
    seq = [loop.base, *loop.steps][::-1]
    return make_deck(Walk(loop.graph, loop.base, tuple(seq[1:])))


# ---------------------------------------------------------------------------
# embedding forests into the cover


@dataclass(frozen=True)
class CoverEmbedding:
    """An immersion with forest domain realised inside the universal cover:
    each domain vertex is pinned to a Walk projecting to its image, and
    adjacent domain vertices sit one step apart."""

    map: GraphMap
    walks: tuple[tuple[str, Walk], ...]  # (domain vertex, cover vertex)
    _table: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_table", dict(self.walks))

    def walk_of(self, v: str) -> Walk:
        try:
            return self._table[v]
        except KeyError:
            raise UnknownVertex(f"{v!r} is not a domain vertex") from None

    def base(self) -> str:
        return self.walks[0][1].base


def embed_forest(
    f: GraphMap, roots: Sequence[str], root_walks: Sequence[Walk]
) -> CoverEmbedding:
    """Pin each tree component into the cover by its root; the rest follows
    by stepping along tree edges."""
    if not is_immersion(f):
        raise NotImmersion("only immersions embed into the cover")
    if not is_forest(f.domain):
        raise NotForest("domain must be a forest")
    comps = components(f.domain)
    if len(roots) != len(comps):
        raise RootMismatch(f"need exactly one root per component ({len(comps)}), got {len(roots)}")
    if len(root_walks) != len(roots):
        raise RootMismatch("need exactly one root walk per root")
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    seen_comps = set()
    for r in roots:
        f.domain.index(r)
        seen_comps.add(comp_of[r])
    if len(seen_comps) != len(comps):
        raise RootMismatch("roots must cover every component exactly once")
    if len({w.base for w in root_walks}) > 1 or any(w.graph != f.codomain for w in root_walks):
        raise BaseMismatch("root walks must live in the codomain and share one base")
    table: dict[str, Walk] = {}
    for root, walk in zip(roots, root_walks):
        if walk.end() != f(root):
            raise RootMismatch(
                f"root walk ends at {walk.end()!r} but {root!r} maps to {f(root)!r}"
            )
        table[root] = walk
        stack = [root]
        while stack:
            v = stack.pop()
            for u in f.domain.neighbors(v):
                if u not in table:
                    table[u] = cover_step(table[v], f(u))
                    stack.append(u)
    walks = tuple((v, table[v]) for v in f.domain.vertices)
    if len({w.steps for _, w in walks}) != len(walks):
        raise RootMismatch("root placement makes distinct vertices share a cover vertex")
    return CoverEmbedding(f, walks)


def spanning_tree_lift(g: Graph, base: str) -> tuple[Walk, ...]:
    """Walks of a breadth-first spanning tree rooted at base: one cover vertex
    per graph vertex, projecting onto all of V(g)."""
    g.index(base)
    if len(components(g)) != 1:
        raise Disconnected("spanning tree lift needs a connected graph")
    table = {base: empty_walk(g, base)}
    queue = [base]
    order = [base]
    while queue:
        v = queue.pop(0)
        for u in g.neighbors(v):
            if u not in table:
                table[u] = cover_step(table[v], u)
                queue.append(u)
                order.append(u)
    return tuple(table[v] for v in order)


# ---------------------------------------------------------------------------
# induced subgraphs of the cover, deck orbits, enlargement


def graph_from_walks(walks: Iterable[Walk]) -> tuple[Graph, dict[str, Walk]]:
    """The induced subgraph of the cover on a finite set of walks, with
    deterministic walk-derived vertex names; adjacency is one-step extension."""
    pool = {}
    for w in walks:
        pool[w.steps] = w
    ordered = [pool[s] for s in sorted(pool)]
    ordered.sort(key=lambda w: (len(w.steps), w.steps))
    names = {w.steps: w.name() for w in ordered}
    edges = []
    for w in ordered:
        if w.steps and w.steps[:-1] in pool:
            edges.append((names[w.steps[:-1]], names[w.steps]))
    graph = Graph([names[w.steps] for w in ordered], edges)
    return graph, {names[w.steps]: w for w in ordered}


def projection_map(cover_graph: Graph, walks: Mapping[str, Walk], codomain: Graph) -> GraphMap:
    from .morphism import make_map

    return make_map(cover_graph, codomain, {name: w.end() for name, w in walks.items()})


def sigma_set(e: CoverEmbedding, f_set: Sequence[Walk]) -> tuple[Deck, ...]:
    """All deck transformations moving some embedded vertex onto some member
    of `f_set` over the same graph vertex.  A deck is pinned down by one
    vertex and its image, so candidate pairs exhaust the possibilities."""
    if not f_set:
        raise EmptyF("the base set of cover vertices is empty")
    base = e.base()
    for w in f_set:
        if w.base != base or w.graph != e.map.codomain:
            raise BaseMismatch("base set walks must share the embedding's graph and base")
    decks: dict[tuple[str, ...], Deck] = {}
    for _, u in e.walks:
        for t in f_set:
            if u.end() == t.end():
                sigma = deck_from_pair(u, t)
                decks.setdefault(sigma.loop.steps, sigma)
    ordered = sorted(decks.values(), key=lambda d: (len(d.loop.steps), d.loop.steps))
    return tuple(ordered)


@dataclass(frozen=True)
class EnlargedCover:
    graph: Graph                      # induced subgraph of the cover
    projection: GraphMap              # onto the original codomain
    walks: tuple[tuple[str, Walk], ...]
    sigma: tuple[Deck, ...]
    f_names: tuple[str, ...]          # names of the base-set walks inside graph

    def walk_table(self) -> dict[str, Walk]:
        return dict(self.walks)


def enlarge(e: CoverEmbedding, f_set: Sequence[Walk]) -> EnlargedCover:
    """Union of the deck translates of the embedded graph that meet the base
    set, as an induced subgraph of the cover with its projection."""
    decks = sigma_set(e, f_set)
    translated = []
    for sigma in decks:
        for _, w in e.walks:
            translated.append(apply_deck(sigma, w))
    graph, table = graph_from_walks(translated)
    if not is_vertex_surjective(e.map):
        warnings.warn(
            "embedded graph does not project onto every vertex; the enlarged "
            "cover piece may miss part of the base set",
            stacklevel=2,
        )
    steps_to_name = {w.steps: name for name, w in table.items()}
    f_names = []
    for w in f_set:
        name = steps_to_name.get(w.steps)
        if name is not None:
            f_names.append(name)
    projection = projection_map(graph, table, e.map.codomain)
    return EnlargedCover(
        graph,
        projection,
        tuple(sorted(table.items(), key=lambda kv: graph.index(kv[0]))),
        decks,
        tuple(f_names),
    )
