"""Experiment runner: the cycle-into-path verdict grid and the tree-size
bound sweep, reported as JSON/CSV rows with matplotlib figures rendered
alongside.

Row contents are deterministic given the parameters; per-row runtimes are
included for information but take no part in pass/fail or comparisons.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from .certify import decide_cycle_into_path, lowerbound_count, synthesize_sipl_tree
from .errors import BadParameter
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    is_tree,
    lowerbound_graph,
    make_graph,
    path_graph,
)
from .morphism import is_immersion, is_vertex_surjective
from .paths import has_sipl


@dataclass
class ExperimentReport:
    experiment: str
    parameters: dict
    rows: list[dict]
    passed: bool

    def to_json_dict(self) -> dict:
        return {
            "experiment": self.experiment,
            "parameters": self.parameters,
            "rows": self.rows,
            "passed": self.passed,
        }


def _pool_size() -> int:
    raw = os.environ.get("RAAGPATH_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# cycle-into-path grid


def run_cdk_grid(
    m_values: Iterable[int], n_values: Iterable[int] | None = None
) -> ExperimentReport:
    """Verdict grid: pass iff the decision reads Injective exactly when
    n >= 2m - 2.  With no explicit n range each m sweeps m..2m+2."""
    m_values = sorted(set(m_values))
    if not m_values:
        raise BadParameter("need at least one m value")
    cells = []
    for m in m_values:
        ns = sorted(set(n_values)) if n_values is not None else range(m, 2 * m + 3)
        cells.extend((m, n) for n in ns)

    def cell(mn):
        m, n = mn
        t0 = time.perf_counter()
        decision = decide_cycle_into_path(m, n)
        expected = "Injective" if n >= 2 * m - 2 else "NonInjective"
        row = {
            "m": m,
            "n": n,
            "verdict": decision.verdict,
            "expected": expected,
            "certified_at_n": decision.certified_at_n,
            "ok": decision.verdict == expected,
            "runtime_s": round(time.perf_counter() - t0, 6),
        }
        if decision.certificate.failing_path is not None:
            row["failing_path"] = list(decision.certificate.failing_path.vertices)
        return row

    with ThreadPoolExecutor(max_workers=_pool_size()) as pool:
        rows = list(pool.map(cell, cells))
    return ExperimentReport(
        experiment="cdk-grid",
        parameters={"m_values": list(m_values), "n_values": list(n_values) if n_values else None},
        rows=rows,
        passed=all(r["ok"] for r in rows),
    )


# ---------------------------------------------------------------------------
# bound sweep


def default_bound_graphs() -> list[tuple[str, Graph]]:
    graphs: list[tuple[str, Graph]] = []
    graphs += [(f"C{m}", cycle_graph(m)) for m in range(3, 8)]
    graphs += [(f"K{n}", complete_graph(n)) for n in range(3, 6)]
    graphs.append(("K2_3", complete_bipartite_graph(2, 3)))
    graphs.append(("Gamma9", lowerbound_graph(9)))
    graphs.append(("P5", path_graph(5)))
    graphs.append(("2xK1", make_graph(["a", "b"], [])))
    two_comp = make_graph(
        ["v0", "v1", "v2", "w0", "w1"],
        [("v0", "v1"), ("v1", "v2"), ("v2", "v0"), ("w0", "w1")],
    )
    graphs.append(("C3+P2", two_comp))
    return graphs


def run_bounds(
    graphs: Sequence[tuple[str, Graph]] | None = None,
    lowerbound_ms: Sequence[int] = (9, 10),
) -> ExperimentReport:
    """Synthesized tree sizes against m * 2^(m-1), plus lifted-endpoint counts
    for the layered family against its closed forms."""
    if graphs is None:
        graphs = default_bound_graphs()
    rows = []
    for name, g in graphs:
        t0 = time.perf_counter()
        st = synthesize_sipl_tree(g)
        sipl = has_sipl(st.map, st.order, st.base_names)
        row = {
            "kind": "synth",
            "graph": name,
            "m": len(g.vertices),
            "tree_size": st.size(),
            "bound": st.size_bound(),
            "is_tree": is_tree(st.tree),
            "immersion": is_immersion(st.map),
            "covers_vertices": is_vertex_surjective(st.map),
            "sipl": sipl.holds,
        }
        row["ok"] = (
            row["is_tree"]
            and row["immersion"]
            and row["covers_vertices"]
            and row["sipl"]
            and row["tree_size"] <= row["bound"]
        )
        row["runtime_s"] = round(time.perf_counter() - t0, 6)
        rows.append(row)
    for m in lowerbound_ms:
        t0 = time.perf_counter()
        summary = lowerbound_count(m)
        rows.append(
            {
                "kind": "lowerbound",
                "graph": f"Gamma{m}",
                "m": m,
                "endpoint_count": summary.endpoint_count,
                "closed_form": summary.closed_form,
                "implied_tree_floor": summary.implied_tree_floor,
                "ok": summary.endpoint_count == summary.closed_form and summary.half_power_ok,
                "runtime_s": round(time.perf_counter() - t0, 6),
            }
        )
    return ExperimentReport(
        experiment="bounds",
        parameters={"graphs": [name for name, _ in graphs], "lowerbound_ms": list(lowerbound_ms)},
        rows=rows,
        passed=all(r["ok"] for r in rows),
    )


def verify_report(report: ExperimentReport) -> bool:
    """Replay each row's underlying call and compare the recorded verdicts."""
    if report.experiment == "cdk-grid":
        for row in report.rows:
            decision = decide_cycle_into_path(row["m"], row["n"])
            if decision.verdict != row["verdict"]:
                return False
        return True
    if report.experiment == "bounds":
        for row in report.rows:
            if row["kind"] == "lowerbound":
                summary = lowerbound_count(row["m"])
                if summary.endpoint_count != row["endpoint_count"]:
                    return False
        return True
    return False


# ---------------------------------------------------------------------------
# serialisation


def report_to_csv(report: ExperimentReport) -> str:
    columns: list[str] = []
    for row in report.rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns)
    writer.writeheader()
    for row in report.rows:
        writer.writerow({k: row.get(k, "") for k in columns})
    return buf.getvalue()


def report_to_table(report: ExperimentReport) -> str:
    columns: list[str] = []
    for row in report.rows:
        for key in row:
            if key not in columns:
                columns.append(key)
    grid = [columns] + [[str(row.get(c, "")) for c in columns] for row in report.rows]
    widths = [max(len(line[i]) for line in grid) for i in range(len(columns))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip() for line in grid]
    status = "PASS" if report.passed else "FAIL"
    return "\n".join([f"# {report.experiment}: {status}"] + lines) + "\n"


# ---------------------------------------------------------------------------
# figures


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def render_cdk_figure(report: ExperimentReport, path) -> None:
    plt = _pyplot()
    ms = sorted({r["m"] for r in report.rows})
    ns = sorted({r["n"] for r in report.rows})
    m_at = {m: i for i, m in enumerate(ms)}
    n_at = {n: j for j, n in enumerate(ns)}
    grid = [[float("nan")] * len(ns) for _ in ms]
    for r in report.rows:
        grid[m_at[r["m"]]][n_at[r["n"]]] = 1.0 if r["verdict"] == "Injective" else 0.0
    fig, ax = plt.subplots(figsize=(1.0 + 0.6 * len(ns), 1.0 + 0.6 * len(ms)))
    ax.imshow(grid, cmap="RdYlGn", vmin=0, vmax=1, aspect="equal")
    for r in report.rows:
        ax.text(
            n_at[r["n"]],
            m_at[r["m"]],
            "I" if r["verdict"] == "Injective" else "N",
            ha="center",
            va="center",
            fontsize=8,
        )
    ax.set_xticks(range(len(ns)), [str(n) for n in ns])
    ax.set_yticks(range(len(ms)), [str(m) for m in ms])
    ax.set_xlabel("n (path vertices)")
    ax.set_ylabel("m (cycle vertices)")
    ax.set_title("Injectivity of the winding map (threshold n = 2m-2)")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def render_bounds_figure(report: ExperimentReport, path) -> None:
    plt = _pyplot()
    synth = [r for r in report.rows if r["kind"] == "synth"]
    fig, ax = plt.subplots(figsize=(max(6.0, 0.8 * len(synth)), 4.0))
    xs = range(len(synth))
    ax.bar([x - 0.2 for x in xs], [r["tree_size"] for r in synth], width=0.4, label="tree size")
    ax.bar([x + 0.2 for x in xs], [r["bound"] for r in synth], width=0.4, label="m·2^(m-1)")
    ax.set_yscale("log", base=2)
    ax.set_xticks(list(xs), [r["graph"] for r in synth], rotation=45, ha="right")
    ax.set_ylabel("vertices (log2)")
    ax.set_title("Synthesized tree sizes against the exponential bound")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(report: ExperimentReport, outdir) -> list[Path]:
    """Write report.json, report.csv and the report's figure into a directory."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    stem = report.experiment.replace("-", "_")
    written = []
    json_path = outdir / f"{stem}.json"
    json_path.write_text(json.dumps(report.to_json_dict(), indent=2) + "\n")
    written.append(json_path)
    csv_path = outdir / f"{stem}.csv"
    csv_path.write_text(report_to_csv(report))
    written.append(csv_path)
    fig_path = outdir / f"{stem}.png"
    if report.experiment == "cdk-grid":
        render_cdk_figure(report, fig_path)
        written.append(fig_path)
    elif report.experiment == "bounds":
        render_bounds_figure(report, fig_path)
        written.append(fig_path)
    return written
