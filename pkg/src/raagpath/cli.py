"""Command line front end.

Subcommands: graph, map, paths, word, hom, survive, kernel, certify, synth,
cdk, lowerbound, bench.  Reports print JSON by default; --table switches to
aligned text, and report commands given --outdir also write CSV and a figure
next to the JSON.  Exit codes: 0 on success/pass, 1 on a failed report or
refuted check, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import certify as certify_mod
from .certify import (
    Verdict,
    certificate_to_dict,
    decide_cycle_into_path,
    lowerbound_count,
    synthesize_sipl_tree,
)
from .errors import RaagError
from .graph import is_connected, is_forest, make_order, standard_graph
from .graphio import (
    graph_to_dot,
    graph_to_json_dict,
    load_graph,
    load_map,
    save_graph,
    save_map,
)
from .hom import (
    kernel_search,
    length_distortion_sample,
    make_ordered_map,
    phi_star_word,
    surviving_violation_search,
)
from .morphism import cycle_to_path_map, is_covering, is_immersion, is_vertex_surjective
from .paths import (
    maximal_induced_paths_from,
    maximal_paths_from,
    maximal_semi_induced_paths_from,
)
from .reports import report_to_table, run_bounds, run_cdk_grid, write_report
from .words import (
    canonical_word,
    is_reduced,
    length_elem,
    parse_word,
    random_reduced_word,
    reduce_word,
    support_elem,
    word_to_text,
)


def _emit(data, args) -> None:
    print(json.dumps(data, indent=2))


def _load_graph_arg(args):
    if getattr(args, "family", None):
        params = [int(p) for p in args.params.split(",")] if args.params else []
        return standard_graph(args.family, *params)
    if getattr(args, "input", None):
        return load_graph(args.input)
    raise RaagError("need --family or --input")


def _order_arg(g, raw):
    return make_order(g, raw.split(",") if raw else None)


# ---------------------------------------------------------------------------
# subcommands


def cmd_graph(args) -> int:
    g = _load_graph_arg(args)
    if args.out:
        save_graph(g, args.out)
    if args.info or not args.out:
        from .graph import components

        info = {
            "vertices": list(g.vertices),
            "edges": [list(e) for e in g.edge_pairs()],
            "components": [list(c) for c in components(g)],
            "connected": is_connected(g),
            "forest": is_forest(g),
        }
        if args.format == "dot":
            print(graph_to_dot(g), end="")
        elif args.format == "text":
            from .graphio import graph_to_text

            print(graph_to_text(g), end="")
        elif args.info:
            _emit(info, args)
        else:
            _emit(graph_to_json_dict(g), args)
    return 0


def _load_map_arg(args):
    if getattr(args, "cycle_path", None):
        n, m = (int(x) for x in args.cycle_path.split(","))
        return cycle_to_path_map(n, m, offset=args.offset)
    if getattr(args, "map", None):
        return load_map(args.map)
    raise RaagError("need --map or --cycle-path")


def cmd_map(args) -> int:
    f = _load_map_arg(args)
    if args.out:
        save_map(f, args.out)
    info = {
        "domain_vertices": len(f.domain.vertices),
        "codomain_vertices": len(f.codomain.vertices),
        "immersion": is_immersion(f),
        "covering": is_covering(f),
        "vertex_surjective": is_vertex_surjective(f),
    }
    if args.info or not args.out:
        _emit(info, args)
    return 0


def cmd_paths(args) -> int:
    g = _load_graph_arg(args)
    order = _order_arg(g, args.order)
    if args.kind == "plain":
        found = maximal_paths_from(g, args.start)
    elif args.kind == "induced":
        found = maximal_induced_paths_from(g, args.start)
    else:
        found = maximal_semi_induced_paths_from(g, order, args.start)
    if args.count_only:
        _emit({"kind": args.kind, "start": args.start, "count": len(found)}, args)
    else:
        _emit([list(p.vertices) for p in found], args)
    return 0


def cmd_word(args) -> int:
    g = _load_graph_arg(args)
    w = parse_word(g, args.word)
    out = {
        "word": word_to_text(w),
        "reduced_form": word_to_text(reduce_word(w)),
        "canonical_form": word_to_text(canonical_word(w)),
        "is_reduced": is_reduced(w),
        "length": length_elem(w),
        "support": sorted(support_elem(w), key=g.index),
    }
    if args.equals is not None:
        from .words import equal_elements

        out["equals"] = equal_elements(w, parse_word(g, args.equals))
    _emit(out, args)
    return 0


def cmd_hom(args) -> int:
    f = _load_map_arg(args)
    om = make_ordered_map(f, args.order.split(",") if args.order else None)
    out = {}
    if args.word is not None:
        w = parse_word(f.codomain, args.word)
        image = phi_star_word(om, w)
        out["word"] = word_to_text(w)
        out["image"] = word_to_text(image)
        out["image_reduced"] = word_to_text(reduce_word(image))
        out["image_length"] = length_elem(image)
    if args.distortion_samples:
        rng = random.Random(args.seed)
        words = [
            random_reduced_word(f.codomain, rng.randint(1, args.distortion_length), rng)
            for _ in range(args.distortion_samples)
        ]
        stats = length_distortion_sample(om, words)
        out["distortion"] = {
            "samples": stats.samples,
            "min_ratio": stats.min_ratio,
            "max_ratio": stats.max_ratio,
            "fiber_bound": stats.fiber_bound,
        }
    if not out:
        raise RaagError("need --word and/or --distortion-samples")
    _emit(out, args)
    return 0


def cmd_survive(args) -> int:
    f = _load_map_arg(args)
    om = make_ordered_map(f)
    witness = surviving_violation_search(om, args.vertex, args.bound)
    if witness is None:
        _emit({"vertex": args.vertex, "bound": args.bound, "witness": None, "status": "unknown"}, args)
        return 0
    _emit(
        {
            "vertex": args.vertex,
            "bound": args.bound,
            "witness": {
                "word": word_to_text(witness.word),
                "span": list(witness.span),
                "vertex": witness.vertex,
            },
            "status": "violated",
        },
        args,
    )
    return 1


def cmd_kernel(args) -> int:
    f = _load_map_arg(args)
    om = make_ordered_map(f)
    word = kernel_search(om, args.bound)
    if word is None:
        _emit({"bound": args.bound, "kernel_word": None, "status": "unknown"}, args)
        return 0
    _emit({"bound": args.bound, "kernel_word": word_to_text(word), "status": "noninjective"}, args)
    return 1


def cmd_certify(args) -> int:
    f = _load_map_arg(args)
    cert = None
    if args.mode in ("auto", "injective"):
        cert = certify_mod.certify_injective(f)
    if args.mode == "noninjective" or (cert is not None and args.mode == "auto" and cert.verdict is Verdict.UNKNOWN):
        try:
            cert = certify_mod.certify_noninjective(f)
        except RaagError:
            if args.mode == "noninjective":
                raise
            # hypotheses for the deck argument fail; keep the Unknown
    if args.mode == "auto" and cert.verdict is Verdict.UNKNOWN and args.bound:
        word = kernel_search(make_ordered_map(f), args.bound)
        if word is not None:
            from .certify import Certificate

            cert = Certificate(
                Verdict.NON_INJECTIVE, method="kernel-search", kernel_word=word
            )
    data = certificate_to_dict(cert)
    if cert.verdict is Verdict.UNKNOWN and args.bound:
        data["bound"] = args.bound
    _emit(data, args)
    return 0


def cmd_synth(args) -> int:
    g = _load_graph_arg(args)
    order = _order_arg(g, args.order)
    st = synthesize_sipl_tree(g, order)
    if args.dot:
        Path(args.dot).write_text(graph_to_dot(st.tree, name="T"))
    if args.out:
        save_graph(st.tree, args.out)
    _emit(
        {
            "tree_size": st.size(),
            "bound": st.size_bound(),
            "base_set": list(st.base_names),
            "bridge_vertices": list(st.bridge_names),
            "order": list(st.order),
        },
        args,
    )
    return 0


def _parse_range(raw):
    if ":" in raw:
        lo, hi = raw.split(":")
        return range(int(lo), int(hi) + 1)
    return [int(raw)]


def cmd_cdk(args) -> int:
    if args.m_range:
        report = run_cdk_grid(
            _parse_range(args.m_range),
            _parse_range(args.n_range) if args.n_range else None,
        )
        if args.outdir:
            write_report(report, args.outdir)
        if args.table:
            print(report_to_table(report), end="")
        else:
            _emit(report.to_json_dict(), args)
        return 0 if report.passed else 1
    if args.m is None or args.n is None:
        raise RaagError("need --m and --n, or --m-range")
    decision = decide_cycle_into_path(args.m, args.n)
    _emit(
        {
            "m": decision.m,
            "n": decision.n,
            "verdict": decision.verdict,
            "certified_at_n": decision.certified_at_n,
            "certificate": certificate_to_dict(decision.certificate),
        },
        args,
    )
    return 0


def cmd_lowerbound(args) -> int:
    summary = lowerbound_count(args.m)
    _emit(
        {
            "m": summary.m,
            "counts_by_length": list(summary.counts_by_length),
            "endpoint_count": summary.endpoint_count,
            "closed_form": summary.closed_form,
            "half_power_ok": summary.half_power_ok,
            "quarter_power_ok": summary.quarter_power_ok,
            "implied_tree_floor": summary.implied_tree_floor,
        },
        args,
    )
    return 0 if summary.endpoint_count == summary.closed_form else 1


def cmd_bench(args) -> int:
    report = run_bounds()
    if args.outdir:
        write_report(report, args.outdir)
    if args.table:
        print(report_to_table(report), end="")
    else:
        _emit(report.to_json_dict(), args)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# wiring


def _add_graph_source(p):
    p.add_argument("--family", help="standard family: cycle, path, complete, complete_bipartite, lowerbound")
    p.add_argument("--params", help="comma-separated family parameters, e.g. '2,3'")
    p.add_argument("--graph", "--input", dest="input", help="graph file (.json or adjacency text)")


def _add_map_source(p):
    p.add_argument("--map", help="map file (.json)")
    p.add_argument("--cycle-path", help="'n,m': wind a path of n vertices onto an m-cycle")
    p.add_argument("--offset", type=int, default=0, help="rotation offset for --cycle-path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="raagpath", description=__doc__)
    parser.add_argument("--seed", type=int, default=0, help="seed for sampling commands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build, inspect and convert graphs")
    _add_graph_source(p)
    p.add_argument("--out", help="write the graph to a file (.json/.txt/.dot)")
    p.add_argument("--format", choices=["json", "text", "dot"], default="json")
    p.add_argument("--info", action="store_true", help="print summary instead of the graph")
    p.set_defaults(fn=cmd_graph)

    p = sub.add_parser("map", help="build and check maps of graphs")
    _add_map_source(p)
    p.add_argument("--out", help="write the map to a .json file")
    p.add_argument("--info", action="store_true")
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("paths", help="enumerate maximal (semi-)induced paths")
    _add_graph_source(p)
    p.add_argument("--start", required=True, help="start vertex")
    p.add_argument("--kind", choices=["plain", "induced", "semi"], default="induced")
    p.add_argument("--order", help="comma-separated total order for --kind semi")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=cmd_paths)

    p = sub.add_parser("word", help="reduce words and compare elements")
    _add_graph_source(p)
    p.add_argument("--word", required=True, help="word text, e.g. 'v1 v2 v1^-1'")
    p.add_argument("--equals", help="second word to compare against")
    p.set_defaults(fn=cmd_word)

    p = sub.add_parser("hom", help="apply the induced homomorphism")
    _add_map_source(p)
    p.add_argument("--order", help="comma-separated domain order for fiber products")
    p.add_argument("--word", help="word over the codomain")
    p.add_argument("--distortion-samples", type=int, default=0)
    p.add_argument("--distortion-length", type=int, default=6)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("survive", help="bounded search for survival violations")
    _add_map_source(p)
    p.add_argument("--vertex", required=True, help="domain vertex to test")
    p.add_argument("--bound", type=int, default=6)
    p.set_defaults(fn=cmd_survive)

    p = sub.add_parser("kernel", help="bounded kernel search")
    _add_map_source(p)
    p.add_argument("--bound", type=int, default=6)
    p.set_defaults(fn=cmd_kernel)

    p = sub.add_parser("certify", help="injectivity / non-injectivity certificates")
    _add_map_source(p)
    p.add_argument("--mode", choices=["auto", "injective", "noninjective"], default="auto")
    p.add_argument("--bound", type=int, default=6, help="kernel-search fallback bound in auto mode")
    p.set_defaults(fn=cmd_certify)

    p = sub.add_parser("synth", help="synthesize a path-lifting tree over a graph")
    _add_graph_source(p)
    p.add_argument("--order", help="comma-separated total order")
    p.add_argument("--dot", help="write the tree as DOT")
    p.add_argument("--out", help="write the tree as a graph file")
    p.set_defaults(fn=cmd_synth)

    p = sub.add_parser("cdk", help="cycle-into-path decision / verdict grid")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--m-range", help="e.g. 3:8 for the grid")
    p.add_argument("--n-range", help="optional fixed n range; default m..2m+2 per m")
    p.add_argument("--outdir", help="write JSON + CSV + figure here")
    p.add_argument("--table", action="store_true")
    p.set_defaults(fn=cmd_cdk)

    p = sub.add_parser("lowerbound", help="lifted induced-path endpoint counts")
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(fn=cmd_lowerbound)

    p = sub.add_parser("bench", help="tree-size bound sweep over standard graphs")
    p.add_argument("--outdir", help="write JSON + CSV + figure here")
    p.add_argument("--table", action="store_true")
    p.set_defaults(fn=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except RaagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
