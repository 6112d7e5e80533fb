"""Paths, induced and semi-induced paths, their enumeration, and unique path
lifting along immersions.

A path visits pairwise-distinct, consecutively adjacent vertices.  It is
induced when no chord joins two non-consecutive path vertices, and
semi-induced with respect to a total order when a chord {v_i, v_j} (j >= i+2)
is only allowed if v_j comes at or after v_{i+1} in the order.  Both
conditions are inherited by prefixes, so depth-first extension enumerates
exactly the admissible paths and maximality is a one-vertex-extension test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import BadParameter, NotImmersion, StartMismatch
from .graph import Graph, order_rank
from .morphism import GraphMap, is_immersion


@dataclass(frozen=True)
class PathSeq:
    graph: Graph
    vertices: tuple[str, ...]

    def __len__(self):
        return len(self.vertices)

    def start(self) -> str:
        return self.vertices[0]

    def end(self) -> str:
        return self.vertices[-1]


def make_path(g: Graph, vertices: Sequence[str]) -> PathSeq:
    vs = tuple(vertices)
    if not vs:
        raise BadParameter("a path needs at least one vertex")
    for v in vs:
        g.index(v)
    if len(set(vs)) != len(vs):
        raise BadParameter(f"path repeats a vertex: {vs}")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise BadParameter(f"consecutive vertices {a!r}, {b!r} are not adjacent")
    return PathSeq(g, vs)


def is_induced(p: PathSeq) -> bool:
    g, vs = p.graph, p.vertices
    return not any(
        g.has_edge(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 2, len(vs))
    )


def is_semi_induced(p: PathSeq, order: Sequence[str]) -> bool:
    g, vs = p.graph, p.vertices
    rank = order_rank(order)
    for i in range(len(vs)):
        for j in range(i + 2, len(vs)):
            if g.has_edge(vs[i], vs[j]) and rank[vs[j]] < rank[vs[i + 1]]:
                return False
    return True


# ---------------------------------------------------------------------------
# enumeration

Admissible = Callable[[list[str], str], bool]


def _enumerate(g: Graph, start: str, admissible: Admissible, maximal_only: bool) -> list[PathSeq]:
    g.index(start)
    out: list[PathSeq] = []
    path = [start]
    used = {start}

    def extensions() -> list[str]:
        return [
            u for u in g.neighbors(path[-1]) if u not in used and admissible(path, u)
        ]

    def dfs():
        exts = extensions()
        if not maximal_only or not exts:
            out.append(PathSeq(g, tuple(path)))
        for u in exts:
            path.append(u)
            used.add(u)
            dfs()
            path.pop()
            used.remove(u)

    dfs()
    return out


def _induced_ok(g: Graph):
    def admissible(path: list[str], candidate: str) -> bool:
        return all(not g.has_edge(path[i], candidate) for i in range(len(path) - 1))

    return admissible


def _semi_induced_ok(g: Graph, order: Sequence[str]):
    rank = order_rank(order)

    def admissible(path: list[str], candidate: str) -> bool:
        c = rank[candidate]
        return all(
            not (g.has_edge(path[i], candidate) and c < rank[path[i + 1]])
            for i in range(len(path) - 1)
        )

    return admissible


def maximal_paths_from(g: Graph, v: str) -> list[PathSeq]:
    """All non-extendable paths starting at v, in depth-first order."""
    return _enumerate(g, v, lambda path, u: True, maximal_only=True)


def maximal_induced_paths_from(g: Graph, v: str) -> list[PathSeq]:
    return _enumerate(g, v, _induced_ok(g), maximal_only=True)


def maximal_semi_induced_paths_from(g: Graph, order: Sequence[str], v: str) -> list[PathSeq]:
    return _enumerate(g, v, _semi_induced_ok(g, order), maximal_only=True)


def all_induced_paths_from(g: Graph, v: str) -> list[PathSeq]:
    """Every induced path starting at v, including the one-vertex path."""
    return _enumerate(g, v, _induced_ok(g), maximal_only=False)


def all_semi_induced_paths_from(g: Graph, order: Sequence[str], v: str) -> list[PathSeq]:
    return _enumerate(g, v, _semi_induced_ok(g, order), maximal_only=False)


# ---------------------------------------------------------------------------
# lifting


def lift_path_with_prefix(f: GraphMap, alpha: PathSeq, start: str) -> tuple[PathSeq | None, PathSeq]:
    """Unique lift of alpha from `start`, plus the longest liftable prefix.

    Local injectivity leaves at most one way to take each step, so the lift
    is computed greedily; the first vertex with no admissible neighbor stops
    it.
    """
    if alpha.graph != f.codomain:
        raise BadParameter("path must live in the map's codomain")
    if not is_immersion(f):
        raise NotImmersion("lifting requires an immersion")
    f.domain.index(start)
    if f(start) != alpha.start():
        raise StartMismatch(
            f"start {start!r} lies over {f(start)!r}, path begins at {alpha.start()!r}"
        )
    lifted = [start]
    for target in alpha.vertices[1:]:
        candidates = [u for u in f.domain.neighbors(lifted[-1]) if f(u) == target]
        if not candidates:
            return None, PathSeq(f.domain, tuple(lifted))
        lifted.append(candidates[0])
    return PathSeq(f.domain, tuple(lifted)), PathSeq(f.domain, tuple(lifted))


def lift_path(f: GraphMap, alpha: PathSeq, start: str) -> PathSeq | None:
    return lift_path_with_prefix(f, alpha, start)[0]


@dataclass(frozen=True)
class LiftFailure:
    start: str            # domain vertex from which the lift was attempted
    path: PathSeq         # codomain path that does not lift
    lifted_prefix: PathSeq  # domain path covering the longest liftable prefix


@dataclass(frozen=True)
class LiftReport:
    kind: str             # "path" | "induced" | "semi-induced"
    holds: bool
    failures: tuple[LiftFailure, ...]  # first failure per failing start vertex

    def __bool__(self):
        return self.holds

    def first_failure(self) -> LiftFailure | None:
        return self.failures[0] if self.failures else None


def _lifting_report(f: GraphMap, starts: Iterable[str], kind: str, enumerate_fn) -> LiftReport:
    if not is_immersion(f):
        raise NotImmersion("path lifting properties are defined for immersions")
    failures = []
    ordered = sorted(set(starts), key=f.domain.index)
    for vprime in ordered:
        for alpha in enumerate_fn(f(vprime)):
            lift, prefix = lift_path_with_prefix(f, alpha, vprime)
            if lift is None:
                failures.append(LiftFailure(vprime, alpha, prefix))
                break
    return LiftReport(kind, not failures, tuple(failures))


def has_pl(f: GraphMap, starts: Iterable[str]) -> LiftReport:
    """Every path from the image of each start vertex lifts.

    Checking maximal paths suffices: a lift of a path restricts to lifts of
    all its prefixes, and every path extends to a maximal one.
    """
    return _lifting_report(f, starts, "path", lambda v: maximal_paths_from(f.codomain, v))


def has_ipl(f: GraphMap, starts: Iterable[str]) -> LiftReport:
    """Every induced path from the image of each start vertex lifts."""
    return _lifting_report(
        f, starts, "induced", lambda v: maximal_induced_paths_from(f.codomain, v)
    )


def has_sipl(f: GraphMap, order: Sequence[str], starts: Iterable[str]) -> LiftReport:
    """Every semi-induced path (w.r.t. `order`) from each start's image lifts."""
    return _lifting_report(
        f,
        starts,
        "semi-induced",
        lambda v: maximal_semi_induced_paths_from(f.codomain, order, v),
    )


def minimal_failing_path(failure: LiftFailure) -> PathSeq:
    """The shortest prefix of the failing path that already fails to lift
    (the lifted prefix plus one more vertex)."""
    k = len(failure.lifted_prefix) + 1
    return PathSeq(failure.path.graph, failure.path.vertices[:k])
