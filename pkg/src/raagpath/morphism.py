"""Maps of graphs: adjacency-preserving vertex assignments, the immersion and
covering predicates, restrictions, and the path-onto-cycle winding family."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .errors import (
    BadParameter,
    ImageEscapesCodomain,
    NotAMapOfGraphs,
    UnknownVertex,
)
from .graph import Graph, cycle_graph, is_induced_subgraph, path_graph


@dataclass(frozen=True)
class GraphMap:
    """Vertex assignment sending adjacent vertices to adjacent vertices.

    Edge images are derived: since the codomain has no loops, no edge can
    collapse, so the vertex assignment determines everything.
    """

    domain: Graph
    codomain: Graph
    assignment: tuple[tuple[str, str], ...]  # (vertex, image) in domain order
    _table: dict = field(init=False, repr=False, compare=False, hash=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "_table", dict(self.assignment))

    def __call__(self, v: str) -> str:
        try:
            return self._table[v]
        except KeyError:
            raise UnknownVertex(f"{v!r} is not a domain vertex") from None

    def image_vertices(self) -> frozenset[str]:
        return frozenset(self._table.values())

    def preimage(self, v: str) -> tuple[str, ...]:
        """Fiber over a codomain vertex, in domain vertex order."""
        self.codomain.index(v)
        return tuple(u for u in self.domain.vertices if self._table[u] == v)


def make_map(dom: Graph, cod: Graph, assignment: Mapping[str, str]) -> GraphMap:
    table = {}
    for v in dom.vertices:
        if v not in assignment:
            raise NotAMapOfGraphs(f"no image for vertex {v!r}")
        img = assignment[v]
        cod.index(img)
        table[v] = img
    for u, w in dom.edge_pairs():
        if table[u] == table[w]:
            raise NotAMapOfGraphs(f"edge {{{u}, {w}}} collapses to {table[u]!r}")
        if not cod.has_edge(table[u], table[w]):
            raise NotAMapOfGraphs(
                f"edge {{{u}, {w}}} maps to non-edge {{{table[u]}, {table[w]}}}"
            )
    return GraphMap(dom, cod, tuple((v, table[v]) for v in dom.vertices))


def identity_map(g: Graph) -> GraphMap:
    return GraphMap(g, g, tuple((v, v) for v in g.vertices))


def compose(first: GraphMap, second: GraphMap) -> GraphMap:
    """The composite sending v to second(first(v))."""
    if first.codomain != second.domain:
        raise BadParameter("codomain of first map must equal domain of second")
    return make_map(first.domain, second.codomain, {v: second(first(v)) for v in first.domain.vertices})


def is_immersion(f: GraphMap) -> bool:
    """Locally injective: distinct neighbors of any vertex have distinct images."""
    for v in f.domain.vertices:
        nbrs = f.domain.neighbors(v)
        if len({f(u) for u in nbrs}) != len(nbrs):
            return False
    return True


def is_covering(f: GraphMap) -> bool:
    """Surjective on vertices and bijective on every link."""
    if f.image_vertices() != frozenset(f.codomain.vertices):
        return False
    for v in f.domain.vertices:
        nbrs = f.domain.neighbors(v)
        images = {f(u) for u in nbrs}
        if len(images) != len(nbrs) or images != set(f.codomain.neighbors(f(v))):
            return False
    return True


def is_vertex_surjective(f: GraphMap) -> bool:
    return f.image_vertices() == frozenset(f.codomain.vertices)


def restrict(f: GraphMap, sub_domain: Graph, sub_codomain: Graph) -> GraphMap:
    """Restriction to induced subgraphs on both sides."""
    if not is_induced_subgraph(sub_domain, f.domain):
        raise BadParameter("sub_domain must be an induced subgraph of the domain")
    if not is_induced_subgraph(sub_codomain, f.codomain):
        raise BadParameter("sub_codomain must be an induced subgraph of the codomain")
    for v in sub_domain.vertices:
        if f(v) not in sub_codomain:
            raise ImageEscapesCodomain(f"image {f(v)!r} of {v!r} is outside the codomain")
    return GraphMap(sub_domain, sub_codomain, tuple((v, f(v)) for v in sub_domain.vertices))


def cycle_to_path_map(n: int, m: int, offset: int = 0) -> GraphMap:
    """The immersion winding a path with vertices v0p..v{n-1}p onto a cycle,
    vertex j landing on v_{(j - offset) mod m}.

    offset 0 is the plain index-mod-m map; a positive offset rotates the
    landing pattern, which changes nothing up to an automorphism of the cycle
    but does move the fibers (offset n - m leaves a single vertex over v0
    whenever n < 2m).
    """
    if m < 3:
        raise BadParameter(f"cycle needs m >= 3, got {m}")
    if n < 1:
        raise BadParameter(f"path needs n >= 1, got {n}")
    dom = path_graph(n, suffix="p")
    cod = cycle_graph(m)
    return make_map(dom, cod, {f"v{j}p": f"v{(j - offset) % m}" for j in range(n)})
