"""Injectivity certificates for induced homomorphisms of immersions.

Two one-sided procedures:

* ``certify_injective`` peels the codomain one vertex at a time.  A domain
  vertex whose link maps onto the link of its image can be split off once,
  for some ordering of that link, every stage map satisfies semi-induced path
  lifting for the matching link vertex; injectivity of the peeled map then
  gives injectivity of the whole.  The search tries peel vertices and link
  orderings and returns the first full success as a replayable trace.

* ``certify_noninjective`` embeds a forest-domain immersion into the
  universal cover, enlarges it by the deck transformations meeting a base
  set, and looks for an induced path that fails to lift.  Were the induced
  homomorphism injective, the enlarged piece would lift every such path, so
  a failure is a certificate of non-injectivity, together with the
  conjugate-shaped word whose image provably loses the base vertex.

Both return ``Unknown`` when their search space is exhausted; neither ever
guesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations

from .errors import (
    BadParameter,
    CertificateGap,
    Disconnected,
    EmptyGraph,
    NotForest,
    NotImmersion,
    NotSurjective,
    RootMismatch,
)
from .graph import (
    Graph,
    components,
    induced_subgraph,
    is_connected,
    is_forest,
    make_order,
    remove,
    restrict_order,
)
from .morphism import GraphMap, cycle_to_path_map, is_immersion, is_vertex_surjective, make_map, restrict
from .cover import (
    Deck,
    EnlargedCover,
    Walk,
    embed_forest,
    empty_walk,
    enlarge,
    extend_walk_along,
    graph_from_walks,
    projection_map,
    spanning_tree_lift,
)
from .hom import ipl_witness_word, make_ordered_map, phi_star_word
from .paths import PathSeq, all_induced_paths_from, has_ipl, has_sipl, lift_path, maximal_semi_induced_paths_from, minimal_failing_path
from .words import Letter, Word, is_reduced, is_trivial, support_elem


class Verdict(Enum):
    INJECTIVE = "CertifiedInjective"
    NON_INJECTIVE = "CertifiedNonInjective"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class PeelStep:
    vertex: str                      # peeled domain vertex
    image: str                       # its image, removed from the codomain
    link_order: tuple[str, ...]      # ordering of the image's link that worked
    link_lifts: tuple[str, ...]      # matching link vertices upstairs


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    method: str = ""
    peeling: tuple[PeelStep, ...] = ()
    kernel_word: Word | None = None
    # deck-lift evidence
    base_walks: tuple[Walk, ...] = ()
    anchors: tuple[tuple[str, Walk], ...] = ()
    sigma: tuple[Deck, ...] = ()
    failing_vertex: str | None = None   # vertex name inside the enlarged piece
    failing_path: PathSeq | None = None
    witness_word: Word | None = None
    note: str = ""


# ---------------------------------------------------------------------------
# injective side


def _peel_candidates(f: GraphMap) -> list[str]:
    """Domain vertices whose link maps onto the link of their image, smallest
    fiber first, then domain order."""
    out = []
    for vprime in f.domain.vertices:
        v = f(vprime)
        if {f(u) for u in f.domain.neighbors(vprime)} == set(f.codomain.neighbors(v)):
            out.append(vprime)
    return sorted(out, key=lambda vp: (len(f.preimage(f(vp))), f.domain.index(vp)))


def _stage_map(f: GraphMap, removed_images: set[str]) -> GraphMap:
    dropped = [u for u in f.domain.vertices if f(u) in removed_images]
    return restrict(f, remove(f.domain, dropped), remove(f.codomain, removed_images))


def _permutation_with_sipl(
    f: GraphMap, vprime: str, cutoff: int
) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """First link ordering (lex in codomain vertex order, reversed fallback
    past the cutoff) whose every stage map has semi-induced path lifting for
    the matching lifted link vertex."""
    v = f(vprime)
    link = f.codomain.neighbors(v)
    lift_of = {}
    for u in f.domain.neighbors(vprime):
        lift_of[f(u)] = u
    if len(link) <= cutoff:
        orderings = permutations(link)
    else:
        orderings = (tuple(link), tuple(reversed(link)))
    for perm in orderings:
        ok = True
        for i, x in enumerate(perm):
            removed = {v, *perm[:i]}
            stage = _stage_map(f, removed)
            order_i = restrict_order(f.codomain.vertices, stage.codomain.vertices)
            if not has_sipl(stage, order_i, [lift_of[x]]).holds:
                ok = False
                break
        if ok:
            return tuple(perm), tuple(lift_of[x] for x in perm)
    return None


def certify_injective(f: GraphMap, permutation_cutoff: int = 6) -> Certificate:
    """Search for a peeling trace proving the induced homomorphism injective.

    Exhaustion yields Unknown.  A base case can also land on a definite
    non-injective verdict: a codomain vertex with empty fiber maps to the
    identity, and that kernel generator survives every peel on the way back
    up (fibers of remaining vertices are untouched, reduced words over an
    induced subgraph stay reduced, and the smaller group embeds in the
    larger).
    """
    if not is_immersion(f):
        raise NotImmersion("certification applies to immersions")
    memo: dict = {}

    def go(cur: GraphMap) -> Certificate:
        key = (cur.domain.vertices, cur.codomain.vertices)
        if key in memo:
            return memo[key]
        result = _certify_level(cur, go)
        memo[key] = result
        return result

    def _certify_level(cur: GraphMap, go) -> Certificate:
        gamma = cur.codomain
        if len(gamma) == 0:
            return Certificate(Verdict.INJECTIVE, method="base-empty")
        if len(gamma) == 1:
            v = gamma.vertices[0]
            if cur.preimage(v):
                return Certificate(Verdict.INJECTIVE, method="base-single")
            return Certificate(
                Verdict.NON_INJECTIVE,
                method="base-empty-fiber",
                kernel_word=Word(gamma, (Letter(v, 1),)),
                note="a codomain vertex has no preimage; its generator maps "
                "to the identity (outside the usual surjectivity hypotheses)",
            )
        by_image: dict[str, Certificate] = {}
        for vprime in _peel_candidates(cur):
            v = cur(vprime)
            found = _permutation_with_sipl(cur, vprime, permutation_cutoff)
            if found is None:
                continue
            perm, lifts = found
            sub = by_image.get(v)
            if sub is None:
                sub = go(_stage_map(cur, {v}))
                by_image[v] = sub
            step = PeelStep(vprime, v, perm, lifts)
            if sub.verdict is Verdict.INJECTIVE:
                return Certificate(
                    Verdict.INJECTIVE, method="peeling", peeling=(step,) + sub.peeling
                )
            if sub.verdict is Verdict.NON_INJECTIVE and sub.kernel_word is not None:
                lifted = Word(gamma, sub.kernel_word.letters)
                return Certificate(
                    Verdict.NON_INJECTIVE,
                    method=sub.method,
                    peeling=(step,) + sub.peeling,
                    kernel_word=lifted,
                    note=sub.note,
                )
        return Certificate(Verdict.UNKNOWN, method="peeling-exhausted")

    return go(f)


# ---------------------------------------------------------------------------
# non-injective side


def certify_noninjective(
    f: GraphMap,
    base_walks: tuple[Walk, ...] | None = None,
    anchors: tuple[tuple[str, Walk], ...] | None = None,
) -> Certificate:
    """Deck-enlarge a forest-domain immersion and hunt for an induced path
    that fails to lift from the base set.

    The domain must be a forest, the map vertex-surjective, and the codomain
    connected.  ``base_walks`` defaults to a spanning tree lift; ``anchors``
    pins domain vertices to cover vertices (one per component) and defaults
    to placing each component's first vertex on a base walk over its image.
    """
    if not is_immersion(f):
        raise NotImmersion("certification applies to immersions")
    if not is_forest(f.domain):
        raise NotForest("the deck argument needs a forest domain")
    if not is_vertex_surjective(f):
        raise NotSurjective("the deck argument needs a vertex-surjective map")
    if not is_connected(f.codomain):
        raise Disconnected("the deck argument needs a connected codomain")
    if base_walks is None:
        base = f.codomain.vertices[0]
        base_walks = spanning_tree_lift(f.codomain, base)
    base_walks = tuple(base_walks)
    if anchors is None:
        over: dict[str, Walk] = {}
        for w in base_walks:
            over.setdefault(w.end(), w)
        pairs = []
        for comp in components(f.domain):
            root = comp[0]
            w = over.get(f(root))
            if w is None:
                raise RootMismatch(
                    f"no base walk projects to {f(root)!r}; pass anchors explicitly"
                )
            pairs.append((root, w))
        anchors = tuple(pairs)
    roots = [r for r, _ in anchors]
    root_walks = [w for _, w in anchors]
    embedding = embed_forest(f, roots, root_walks)
    enlarged = enlarge(embedding, base_walks)
    report = has_ipl(enlarged.projection, enlarged.f_names)
    if report.holds:
        return Certificate(
            Verdict.UNKNOWN,
            method="deck-lift",
            base_walks=base_walks,
            anchors=anchors,
            sigma=enlarged.sigma,
            note="every induced path from the base set lifts into the "
            "enlarged piece; no refutation at this base set",
        )
    failure = report.first_failure()
    short = minimal_failing_path(failure)
    return Certificate(
        Verdict.NON_INJECTIVE,
        method="deck-lift",
        base_walks=base_walks,
        anchors=anchors,
        sigma=enlarged.sigma,
        failing_vertex=failure.start,
        failing_path=short,
        witness_word=ipl_witness_word(short),
    )


def _rebuild_enlarged(f: GraphMap, cert: Certificate) -> EnlargedCover:
    roots = [r for r, _ in cert.anchors]
    walks = [w for _, w in cert.anchors]
    return enlarge(embed_forest(f, roots, walks), cert.base_walks)


def validate_certificate(cert: Certificate, f: GraphMap) -> bool:
    """Replay a certificate's evidence against the modules that produced it."""
    if cert.verdict is Verdict.UNKNOWN:
        return True
    if cert.verdict is Verdict.NON_INJECTIVE:
        if cert.kernel_word is not None:
            w = cert.kernel_word
            om = make_ordered_map(f)
            return (
                len(w.letters) > 0
                and is_reduced(Word(f.codomain, w.letters))
                and is_trivial(phi_star_word(om, Word(f.codomain, w.letters)))
            )
        enlarged = _rebuild_enlarged(f, cert)
        if cert.failing_vertex not in enlarged.graph.vertices:
            return False
        if lift_path(enlarged.projection, cert.failing_path, cert.failing_vertex) is not None:
            return False
        om1 = make_ordered_map(enlarged.projection)
        image = phi_star_word(om1, cert.witness_word)
        return cert.failing_vertex not in support_elem(image)
    # injective: replay the peeling
    cur = f
    for step in cert.peeling:
        v = cur(step.vertex)
        if v != step.image:
            return False
        link = set(cur.codomain.neighbors(v))
        lifted_images = {cur(u) for u in cur.domain.neighbors(step.vertex)}
        if lifted_images != link or set(step.link_order) != link:
            return False
        for i, x in enumerate(step.link_order):
            stage = _stage_map(cur, {v, *step.link_order[:i]})
            order_i = restrict_order(cur.codomain.vertices, stage.codomain.vertices)
            if not has_sipl(stage, order_i, [step.link_lifts[i]]).holds:
                return False
        cur = _stage_map(cur, {v})
    if len(cur.codomain) > 1:
        return False
    if len(cur.codomain) == 1 and not cur.preimage(cur.codomain.vertices[0]):
        return False
    return True


# ---------------------------------------------------------------------------
# tree synthesis


@dataclass(frozen=True)
class SynthesizedTree:
    """A tree in the universal cover whose projection lifts every semi-induced
    path from a spanning base set.

    For a disconnected input the component trees are joined pairwise by fresh
    middle vertices; the joined tree carries the size bound while the
    projection (an immersion) lives on the tree minus those bridge vertices,
    matching how the product of the component groups sits inside the group of
    the joined tree.
    """

    tree: Graph
    map: GraphMap                      # domain = tree minus bridge vertices
    base_names: tuple[str, ...]        # spanning base set, inside the domain
    order: tuple[str, ...]
    bridge_names: tuple[str, ...] = ()
    walks: tuple[tuple[str, Walk], ...] = ()

    def size(self) -> int:
        return len(self.tree.vertices)

    def size_bound(self) -> int:
        m = len(self.map.codomain.vertices)
        return m * 2 ** (m - 1)


def _synthesize_connected(g: Graph, order: tuple[str, ...]) -> SynthesizedTree:
    base = g.vertices[0]
    f_walks = spanning_tree_lift(g, base)
    pool: set[Walk] = set(f_walks)
    for f_walk in f_walks:
        for alpha in maximal_semi_induced_paths_from(g, order, f_walk.end()):
            pool.update(extend_walk_along(f_walk, alpha))
    tree_graph, table = graph_from_walks(pool)
    core = projection_map(tree_graph, table, g)
    steps_to_name = {w.steps: name for name, w in table.items()}
    base_names = tuple(steps_to_name[w.steps] for w in f_walks)
    return SynthesizedTree(
        tree=tree_graph,
        map=core,
        base_names=base_names,
        order=order,
        walks=tuple(sorted(table.items(), key=lambda kv: tree_graph.index(kv[0]))),
    )


def _fresh_name(used: set[str], stem: str) -> str:
    name = stem
    while name in used:
        name += "x"
    return name


def synthesize_sipl_tree(g: Graph, order=None) -> SynthesizedTree:
    """Union of the lifts of all maximal semi-induced paths from a spanning
    base set, one component at a time; components join by length-2 paths."""
    if len(g) == 0:
        raise EmptyGraph("cannot synthesize a tree over the empty graph")
    order = make_order(g, order)
    comps = components(g)
    if len(comps) == 1:
        return _synthesize_connected(g, order)
    pieces = [
        _synthesize_connected(induced_subgraph(g, comp), restrict_order(order, comp))
        for comp in comps
    ]
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    assignment: dict[str, str] = {}
    walks: list[tuple[str, Walk]] = []
    base_names: list[str] = []
    for piece in pieces:
        vertices.extend(piece.tree.vertices)
        edges.extend(piece.tree.edge_pairs())
        assignment.update({v: piece.map(v) for v in piece.map.domain.vertices})
        walks.extend(piece.walks)
        base_names.extend(piece.base_names)
    used = set(vertices)
    bridges = []
    attach = pieces[0].tree.vertices[0]
    for piece in pieces[1:]:
        c = _fresh_name(used, f"j{len(bridges)}")
        used.add(c)
        bridges.append(c)
        edges += [(attach, c), (c, piece.tree.vertices[0])]
    full_tree = Graph(vertices + bridges, edges)
    core_domain = Graph(vertices, [e for e in edges if e[0] not in bridges and e[1] not in bridges])
    core = make_map(core_domain, g, assignment)
    return SynthesizedTree(
        tree=full_tree,
        map=core,
        base_names=tuple(base_names),
        order=order,
        bridge_names=tuple(bridges),
        walks=tuple(walks),
    )


# ---------------------------------------------------------------------------
# cycles into paths


@dataclass(frozen=True)
class CdkDecision:
    m: int
    n: int
    verdict: str                      # "Injective" | "NonInjective"
    certified_at_n: int               # the path length the certificate covers
    certificate: Certificate


@lru_cache(maxsize=None)
def _cycle_injective_certificate(m: int) -> Certificate:
    # place the path so a single vertex sits over v0, splitting m-2 / m-1
    f = cycle_to_path_map(2 * m - 2, m, offset=m - 2)
    return certify_injective(f)


@lru_cache(maxsize=None)
def _cycle_noninjective_certificate(m: int) -> Certificate:
    n = 2 * m - 3
    f = cycle_to_path_map(n, m, offset=n - m)
    cycle = f.codomain
    w0 = empty_walk(cycle, "v0")
    anchor_vertex = f"v{n - m}p"      # the unique vertex over v0
    return certify_noninjective(f, base_walks=(w0,), anchors=((anchor_vertex, w0),))


def decide_cycle_into_path(m: int, n: int) -> CdkDecision:
    """Whether winding a path of n vertices onto a cycle of m vertices induces
    an injective homomorphism: yes exactly when n >= 2m - 2.

    Kernels shrink as the path grows (the longer path's homomorphism factors
    through the shorter one's), so one certificate at n = 2m-2 settles all
    larger n and one refutation at n = 2m-3 settles all smaller n.  A
    certifier returning Unknown here is an implementation bug and raises.
    """
    if m < 3:
        raise BadParameter(f"need m >= 3, got {m}")
    if n < 1:
        raise BadParameter(f"need n >= 1, got {n}")
    threshold = 2 * m - 2
    if n >= threshold:
        cert = _cycle_injective_certificate(m)
        if cert.verdict is not Verdict.INJECTIVE:
            raise CertificateGap(f"expected an injectivity certificate for m={m}")
        return CdkDecision(m, n, "Injective", threshold, cert)
    cert = _cycle_noninjective_certificate(m)
    if cert.verdict is not Verdict.NON_INJECTIVE:
        raise CertificateGap(f"expected a non-injectivity certificate for m={m}")
    return CdkDecision(m, n, "NonInjective", threshold - 1, cert)


# ---------------------------------------------------------------------------
# lower-bound counting


@dataclass(frozen=True)
class LowerBoundSummary:
    m: int
    counts_by_length: tuple[int, ...]
    endpoint_count: int
    closed_form: int
    half_power_ok: bool      # endpoint_count >= 2^(m/2)
    quarter_power_ok: bool   # sqrt(endpoint_count) >= 2^(m/4)
    implied_tree_floor: int  # any certifying tree has at least this many vertices


def certificate_to_dict(cert: Certificate) -> dict:
    """JSON-ready view of a certificate with full evidence."""
    from .words import word_to_text

    out: dict = {"verdict": cert.verdict.value, "method": cert.method}
    if cert.note:
        out["note"] = cert.note
    if cert.peeling:
        out["peeling"] = [
            {
                "vertex": s.vertex,
                "image": s.image,
                "link_order": list(s.link_order),
                "link_lifts": list(s.link_lifts),
            }
            for s in cert.peeling
        ]
    if cert.kernel_word is not None:
        out["kernel_word"] = word_to_text(cert.kernel_word)
    if cert.base_walks:
        out["base_walks"] = [list(w.steps) for w in cert.base_walks]
        out["base"] = cert.base_walks[0].base
    if cert.anchors:
        out["anchors"] = [{"vertex": v, "walk": list(w.steps)} for v, w in cert.anchors]
    if cert.sigma:
        out["deck_count"] = len(cert.sigma)
        out["deck_loops"] = [list(d.loop.steps) for d in cert.sigma]
    if cert.failing_vertex is not None:
        out["failing_vertex"] = cert.failing_vertex
    if cert.failing_path is not None:
        out["failing_path"] = list(cert.failing_path.vertices)
    if cert.witness_word is not None:
        out["witness_word"] = word_to_text(cert.witness_word)
    return out


def lowerbound_count(m: int) -> LowerBoundSummary:
    """Count induced paths from v0 in the layered family and their lifted
    endpoints in the cover; the count doubles per layer, forcing any tree
    that certifies an embedding to be exponentially large."""
    from .graph import lowerbound_graph

    g = lowerbound_graph(m)
    start = empty_walk(g, "v0")
    paths = all_induced_paths_from(g, "v0")
    endpoints = {extend_walk_along(start, p)[-1].steps for p in paths}
    max_len = max(len(p.vertices) - 1 for p in paths)
    counts = [0] * (max_len + 1)
    for p in paths:
        counts[len(p.vertices) - 1] += 1
    count = len(endpoints)
    if m % 2 == 1:
        closed = 2 ** ((m + 1) // 2) - 1
    else:
        closed = 3 * 2 ** (m // 2 - 1) - 1
    half_ok = count * count >= 2**m
    root = math.isqrt(count)
    floor = root if root * root == count else root + 1
    return LowerBoundSummary(
        m=m,
        counts_by_length=tuple(counts),
        endpoint_count=count,
        closed_form=closed,
        half_power_ok=half_ok,
        quarter_power_ok=half_ok,
        implied_tree_floor=floor,
    )
