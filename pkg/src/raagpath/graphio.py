"""File formats: adjacency text, JSON, DOT export, and map/walk JSON.

Adjacency text holds one line per vertex, ``name: neighbor neighbor ...``;
vertex order is line order and symmetry is validated on load.  The JSON
mirror carries explicit ``vertices`` and ``edges`` arrays.  Map files carry
``domain``/``codomain`` (inline graph objects or file-path strings) plus an
``assignment`` object.
"""

from __future__ import annotations

import json
from pathlib import Path

from .cover import Walk, make_walk
from .errors import ParseError, RaagError
from .graph import Graph, make_graph
from .morphism import GraphMap, make_map


# ---------------------------------------------------------------------------
# graphs


def graph_to_json_dict(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edge_pairs()]}


def graph_from_json_dict(data) -> Graph:
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise ParseError("graph JSON needs 'vertices' and 'edges' arrays")
    edges = []
    for e in data["edges"]:
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise ParseError(f"malformed edge {e!r}: expected a pair")
        edges.append(tuple(e))
    try:
        return make_graph(data["vertices"], edges)
    except RaagError as exc:
        raise ParseError(f"invalid graph: {exc}") from exc


def graph_to_text(g: Graph) -> str:
    lines = [f"{v}: {' '.join(g.neighbors(v))}".rstrip() for v in g.vertices]
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    vertices: list[str] = []
    listed: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ":" not in line:
            raise ParseError("expected 'vertex: neighbor ...'", line=lineno, column=1)
        name, _, rest = line.partition(":")
        name = name.strip()
        if not name:
            raise ParseError("empty vertex name", line=lineno, column=1)
        if name in listed:
            raise ParseError(f"vertex {name!r} listed twice", line=lineno, column=1)
        vertices.append(name)
        listed[name] = rest.split()
    for lineno, v in enumerate(vertices, start=1):
        for u in listed[v]:
            if u not in listed:
                col = text.splitlines()[lineno - 1].find(u) + 1
                raise ParseError(f"neighbor {u!r} is not a listed vertex", line=lineno, column=col)
            if u == v:
                raise ParseError(f"vertex {v!r} lists itself", line=lineno)
            if v not in listed[u]:
                raise ParseError(
                    f"asymmetric adjacency: {v!r} lists {u!r} but not conversely", line=lineno
                )
    edges = {frozenset((v, u)) for v in vertices for u in listed[v]}
    return make_graph(vertices, [tuple(sorted(e)) for e in edges])


def graph_to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, w in g.edge_pairs():
        lines.append(f'  "{u}" -- "{w}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def save_graph(g: Graph, path) -> None:
    path = Path(path)
    if path.suffix == ".json":
        path.write_text(json.dumps(graph_to_json_dict(g), indent=2) + "\n")
    elif path.suffix == ".dot":
        path.write_text(graph_to_dot(g))
    else:
        path.write_text(graph_to_text(g))


def load_graph(path) -> Graph:
    path = Path(path)
    text = path.read_text()
    if path.suffix == ".json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
        return graph_from_json_dict(data)
    return graph_from_text(text)


# ---------------------------------------------------------------------------
# maps


def map_to_json_dict(f: GraphMap) -> dict:
    return {
        "domain": graph_to_json_dict(f.domain),
        "codomain": graph_to_json_dict(f.codomain),
        "assignment": {v: f(v) for v in f.domain.vertices},
    }


def map_from_json_dict(data, base_dir=None) -> GraphMap:
    if not isinstance(data, dict) or "assignment" not in data:
        raise ParseError("map JSON needs 'domain', 'codomain' and 'assignment'")

    def side(key):
        value = data.get(key)
        if isinstance(value, str):
            ref = Path(value)
            if base_dir is not None and not ref.is_absolute():
                ref = Path(base_dir) / ref
            return load_graph(ref)
        return graph_from_json_dict(value)

    dom, cod = side("domain"), side("codomain")
    try:
        return make_map(dom, cod, dict(data["assignment"]))
    except RaagError as exc:
        raise ParseError(f"invalid map: {exc}") from exc


def save_map(f: GraphMap, path) -> None:
    Path(path).write_text(json.dumps(map_to_json_dict(f), indent=2) + "\n")


def load_map(path) -> GraphMap:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from exc
    return map_from_json_dict(data, base_dir=path.parent)


# ---------------------------------------------------------------------------
# walks


def walk_to_json(w: Walk) -> list:
    return list(w.steps)


def walks_to_json_dict(base: str, walks) -> dict:
    return {"base": base, "walks": [walk_to_json(w) for w in walks]}


def walks_from_json_dict(g: Graph, data) -> tuple[Walk, ...]:
    if not isinstance(data, dict) or "base" not in data or "walks" not in data:
        raise ParseError("walks JSON needs 'base' and 'walks'")
    base = data["base"]
    try:
        return tuple(make_walk(g, base, steps) for steps in data["walks"])
    except RaagError as exc:
        raise ParseError(f"invalid walk: {exc}") from exc
