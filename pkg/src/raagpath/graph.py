"""Finite simplicial graphs with ordered vertex lists.

Vertices are strings.  The vertex list order doubles as the graph's default
total order, which enumeration and product conventions depend on, so derived
graphs (complements, induced subgraphs) keep the ambient order.  Graphs are
immutable values: equality compares vertex order and edge sets.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    BadParameter,
    DuplicateVertex,
    LoopEdge,
    UnknownEndpoint,
    UnknownVertex,
)


class Graph:
    """Undirected loop-free graph without multiple edges."""

    __slots__ = ("vertices", "edges", "_index", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable = ()):
        vertices = tuple(str(v) for v in vertices)
        index: dict[str, int] = {}
        for v in vertices:
            if v in index:
                raise DuplicateVertex(f"vertex {v!r} listed twice")
            index[v] = len(index)
        edge_set = set()
        for e in edges:
            u, w = e
            u, w = str(u), str(w)
            if u == w:
                raise LoopEdge(f"loop at {u!r}")
            for x in (u, w):
                if x not in index:
                    raise UnknownEndpoint(f"edge endpoint {x!r} is not a vertex")
            edge_set.add(frozenset((u, w)))
        adj: dict[str, list[str]] = {v: [] for v in vertices}
        for e in edge_set:
            u, w = sorted(e, key=index.__getitem__)
            adj[u].append(w)
            adj[w].append(u)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "_index", index)
        object.__setattr__(
            self, "_adj", {v: tuple(sorted(ns, key=index.__getitem__)) for v, ns in adj.items()}
        )

    def __setattr__(self, name, value):  # immutable value type
        raise AttributeError("Graph instances are immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self):
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def __contains__(self, v):
        return v in self._index

    def __len__(self):
        return len(self.vertices)

    def index(self, v: str) -> int:
        """Position of v in the vertex order."""
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(f"{v!r} is not a vertex") from None

    def has_edge(self, u: str, v: str) -> bool:
        self.index(u), self.index(v)
        return frozenset((u, v)) in self.edges

    def neighbors(self, v: str) -> tuple[str, ...]:
        """Neighbors of v in vertex order."""
        self.index(v)
        return self._adj[v]

    def link(self, v: str) -> frozenset[str]:
        """The set of neighbors of v."""
        return frozenset(self.neighbors(v))

    def edge_pairs(self) -> tuple[tuple[str, str], ...]:
        """Edges as (u, v) pairs, each and all sorted by vertex order."""
        key = self._index.__getitem__
        pairs = [tuple(sorted(e, key=key)) for e in self.edges]
        return tuple(sorted(pairs, key=lambda p: (key(p[0]), key(p[1]))))


def make_graph(vertices: Iterable[str], edges: Iterable = ()) -> Graph:
    return Graph(vertices, edges)


def link(g: Graph, v: str) -> frozenset[str]:
    return g.link(v)


def complement(g: Graph) -> Graph:
    """Same vertices; two distinct vertices adjacent iff not adjacent in g."""
    vs = g.vertices
    edges = [
        (vs[i], vs[j])
        for i in range(len(vs))
        for j in range(i + 1, len(vs))
        if not g.has_edge(vs[i], vs[j])
    ]
    return Graph(vs, edges)


def induced_subgraph(g: Graph, subset: Iterable[str]) -> Graph:
    """Subgraph on `subset` keeping every edge of g with both ends inside."""
    keep = set()
    for v in subset:
        g.index(v)
        keep.add(v)
    vertices = [v for v in g.vertices if v in keep]
    edges = [e for e in g.edge_pairs() if e[0] in keep and e[1] in keep]
    return Graph(vertices, edges)


def remove(g: Graph, dropped: Iterable[str]) -> Graph:
    """Induced subgraph on everything outside `dropped`."""
    out = set()
    for v in dropped:
        g.index(v)
        out.add(v)
    return induced_subgraph(g, (v for v in g.vertices if v not in out))


def is_induced_subgraph(sub: Graph, g: Graph) -> bool:
    """True if sub's vertices lie in g and sub has exactly g's edges among them."""
    if any(v not in g for v in sub.vertices):
        return False
    sub_vs = set(sub.vertices)
    for i, u in enumerate(sub.vertices):
        for w in sub.vertices[i + 1 :]:
            if g.has_edge(u, w) != sub.has_edge(u, w):
                return False
    for e in sub.edges:
        if not e <= sub_vs:
            return False
    return True


def components(g: Graph) -> tuple[tuple[str, ...], ...]:
    """Connected components, each in vertex order, ordered by first vertex."""
    seen: set[str] = set()
    out = []
    for v in g.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        out.append(tuple(u for u in g.vertices if u in comp))
    return tuple(out)


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return len(g.edges) == len(g.vertices) - len(components(g))


def is_tree(g: Graph) -> bool:
    return is_forest(g) and is_connected(g)


# ---------------------------------------------------------------------------
# standard families


def cycle_graph(m: int) -> Graph:
    """Cycle on v0..v{m-1}; requires m >= 3."""
    if m < 3:
        raise BadParameter(f"cycle needs at least 3 vertices, got {m}")
    vs = [f"v{i}" for i in range(m)]
    edges = [(vs[i], vs[(i + 1) % m]) for i in range(m)]
    return Graph(vs, edges)


def path_graph(n: int, suffix: str = "") -> Graph:
    """Path on v0..v{n-1}, with an optional name suffix for disjoint copies."""
    if n < 1:
        raise BadParameter(f"path needs at least 1 vertex, got {n}")
    vs = [f"v{i}{suffix}" for i in range(n)]
    return Graph(vs, [(vs[i], vs[i + 1]) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise BadParameter(f"complete graph needs at least 1 vertex, got {n}")
    vs = [f"v{i}" for i in range(n)]
    return Graph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    if a < 1 or b < 1:
        raise BadParameter(f"both parts need at least 1 vertex, got {a}, {b}")
    vs = [f"v{i}" for i in range(a + b)]
    return Graph(vs, [(vs[i], vs[a + j]) for i in range(a) for j in range(b)])


def standard_graph(kind: str, *params: int) -> Graph:
    """Dispatch on a family name: cycle, path, complete, complete_bipartite."""
    builders = {
        "cycle": (1, cycle_graph),
        "path": (1, path_graph),
        "complete": (1, complete_graph),
        "complete_bipartite": (2, complete_bipartite_graph),
        "lowerbound": (1, lowerbound_graph),
    }
    if kind not in builders:
        raise BadParameter(f"unknown family {kind!r}")
    arity, fn = builders[kind]
    if len(params) != arity:
        raise BadParameter(f"family {kind!r} takes {arity} parameter(s), got {len(params)}")
    return fn(*params)


def lowerbound_graph(m: int) -> Graph:
    """Layered graph on m vertices whose induced paths from v0 double per layer.

    Vertices v0 and then u_i, v_i per layer i (plus a final v_{k+1} when m is
    even); every pair of vertices in consecutive layers is joined, and no pair
    within a layer is.
    """
    if m < 3:
        raise BadParameter(f"need m >= 3, got {m}")
    k = (m - 1) // 2
    vertices = ["v0"]
    for i in range(1, k + 1):
        vertices += [f"u{i}", f"v{i}"]
    even = m % 2 == 0
    if even:
        vertices.append(f"v{k + 1}")
    edges = [("v0", "u1"), ("v0", "v1")]
    for i in range(1, k):
        edges += [
            (f"v{i}", f"v{i + 1}"),
            (f"u{i}", f"u{i + 1}"),
            (f"v{i}", f"u{i + 1}"),
            (f"u{i}", f"v{i + 1}"),
        ]
    if even:
        edges += [(f"v{k}", f"v{k + 1}"), (f"u{k}", f"v{k + 1}")]
    return Graph(vertices, edges)


# ---------------------------------------------------------------------------
# total orders


def make_order(g: Graph, sequence: Sequence[str] | None = None) -> tuple[str, ...]:
    """A total order on V(g), given as a permutation of the vertex list.

    Defaults to the graph's own vertex order.
    """
    if sequence is None:
        return g.vertices
    order = tuple(sequence)
    for v in order:
        g.index(v)
    if len(order) != len(g.vertices) or len(set(order)) != len(order):
        raise BadParameter("order must be a permutation of the vertex list")
    return order


def restrict_order(order: Sequence[str], subset: Iterable[str]) -> tuple[str, ...]:
    """Restriction of a total order to a subset, keeping relative positions."""
    keep = set(subset)
    return tuple(v for v in order if v in keep)


def order_rank(order: Sequence[str]) -> dict[str, int]:
    return {v: i for i, v in enumerate(order)}
