"""Command line interface: ``nbseq analyze|recognize|generate|verify``.

Exit codes: 0 success, 1 usage or parse error, 2 counterexample found
(verify) or recognizer disagreement (recognize --method both).
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import generators as gen
from .graph import Graph, GraphError
from .io import FORMATS, ParseError, encode_graph6, iter_graph6_lines, parse_graph
from .sequences import DEFAULT_SOLVER_CAP, SolverCapError, profile
from .uniformity import (
    UniformityReport,
    classify_open_uniform,
    classify_total_uniform,
    is_k_uniform_bruteforce,
    recognize_uniform_structural,
)
from .verify import ENGINES, default_workers, run_verify

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2


@dataclass
class RunConfig:
    input: str | None = None
    graph: str | None = None
    format: str = "graph6"
    cap: int = DEFAULT_SOLVER_CAP
    workers: int = 1
    output: str = "human"
    n: int = 7
    seed: int = 0
    allow_n8: bool = False


def _config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig()
    for name in vars(cfg):
        if hasattr(args, name) and getattr(args, name) is not None:
            setattr(cfg, name, getattr(args, name))
    if getattr(args, "opt_in_n8", False):
        cfg.allow_n8 = True
    if getattr(args, "workers", None) is None:
        cfg.workers = default_workers()
    return cfg


# -- input ------------------------------------------------------------------------

def read_graphs(cfg: RunConfig) -> list[tuple[int, Graph | ParseError]]:
    """``(line number, graph or parse error)`` records for the configured input."""
    if cfg.graph is not None:
        text = cfg.graph if cfg.format == "graph6" else cfg.graph.replace(";", "\n")
        try:
            return [(1, parse_graph(text, cfg.format))]
        except ParseError as exc:
            return [(1, exc)]
    if cfg.input in (None, "-"):
        data = sys.stdin.buffer.read()
    else:
        data = Path(cfg.input).read_bytes()
    if cfg.format == "edgelist":
        try:
            return [(1, parse_graph(data, "edgelist"))]
        except ParseError as exc:
            return [(1, exc)]
    return list(iter_graph6_lines(data.splitlines()))


def _emit(cfg: RunConfig, record: dict, human: str) -> None:
    if cfg.output == "structured":
        print(json.dumps(record, sort_keys=True, separators=(",", ":")))
    else:
        print(human)


def _short(report: UniformityReport | None) -> str:
    if report is None:
        return "-"
    return f"uniform({report.k})" if report.is_uniform else report.status


def _dump(report: UniformityReport | None) -> dict | None:
    return None if report is None else report.to_dict()


# -- analyze ------------------------------------------------------------------------

def analyze_graph(g: Graph, cap: int) -> dict:
    """Profile plus closed/total/open reports for one graph."""
    warnings = []
    prof = None
    if g.n <= cap:
        prof = profile(g, cap).as_dict()
    else:
        warnings.append("solver_cap_exceeded")
    closed = recognize_uniform_structural(g, cap)
    reports = {"closed": closed}
    for kind, fn in (("total", classify_total_uniform), ("open", classify_open_uniform)):
        try:
            reports[kind] = fn(g, cap)
        except SolverCapError:
            reports[kind] = None
            warnings.append(f"{kind}_undecided_solver_cap")
    return {
        "graph6": encode_graph6(g).decode("ascii"),
        "n": g.n,
        "edges": g.edge_count(),
        "profile": prof,
        "closed": _dump(reports["closed"]),
        "total": _dump(reports["total"]),
        "open": _dump(reports["open"]),
        "warnings": warnings,
        "_short": [_short(reports[k]) for k in ("closed", "total", "open")],
    }


def _analyze_task(args: tuple[Graph, int]) -> dict:
    return analyze_graph(*args)


def _map(fn, items, workers: int):
    if workers <= 1 or len(items) < 2:
        return list(map(fn, items))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


PROFILE_COLS = ("gamma", "gamma_gr", "gamma_t", "gamma_gr_t", "min_dom_ons", "max_dom_ons")


def cmd_analyze(cfg: RunConfig) -> int:
    records = read_graphs(cfg)
    graphs = [(g, cfg.cap) for _, g in records if isinstance(g, Graph)]
    results = iter(_map(_analyze_task, graphs, cfg.workers))
    status = EXIT_OK
    if cfg.output == "human":
        print("line  graph6      n   m  " + "  ".join(PROFILE_COLS) + "  closed  total  open")
    for lineno, g in records:
        if isinstance(g, ParseError):
            status = EXIT_USAGE
            _emit(cfg, {"line": lineno, "error": str(g)}, f"{lineno:<5} error: {g}")
            continue
        rec = next(results)
        short = rec.pop("_short")
        rec = {"line": lineno, **rec}
        prof = rec["profile"] or {}
        cells = "  ".join("-" if prof.get(c) is None else str(prof[c]) for c in PROFILE_COLS)
        human = f"{lineno:<5} {rec['graph6']:<10} {rec['n']:>2} {rec['edges']:>3}  {cells}  {'  '.join(short)}"
        if rec["warnings"]:
            human += "  [" + ", ".join(rec["warnings"]) + "]"
        _emit(cfg, rec, human)
    return status


# -- recognize ------------------------------------------------------------------------

def cmd_recognize(cfg: RunConfig, method: str) -> int:
    status = EXIT_OK
    for lineno, g in read_graphs(cfg):
        if isinstance(g, ParseError):
            _emit(cfg, {"line": lineno, "error": str(g)}, f"{lineno}: error: {g}")
            status = max(status, EXIT_USAGE)
            continue
        rec: dict = {"line": lineno, "graph6": encode_graph6(g).decode("ascii"), "n": g.n}
        try:
            if method in ("structural", "both"):
                rec["structural"] = recognize_uniform_structural(g, cfg.cap).to_dict()
            if method in ("brute", "both"):
                rec["brute"] = is_k_uniform_bruteforce(g, cfg.cap).to_dict()
        except SolverCapError as exc:
            _emit(cfg, {"line": lineno, "error": str(exc)}, f"{lineno}: error: {exc}")
            status = max(status, EXIT_USAGE)
            continue
        parts = []
        for key in ("structural", "brute"):
            if key in rec:
                r = rec[key]
                parts.append(f"{key}={'uniform(%d)' % r['k'] if r['status'] == 'uniform' else r['status']}")
        if method == "both":
            s, b = rec["structural"], rec["brute"]
            rec["agree"] = (s["status"], s["k"]) == (b["status"], b["k"])
            parts.append("agree" if rec["agree"] else "DISAGREE")
            if not rec["agree"]:
                status = EXIT_COUNTEREXAMPLE
        _emit(cfg, rec, f"{lineno}: {rec['graph6']} " + " ".join(parts))
    return status


# -- generate -------------------------------------------------------------------------

def _pairs(tokens: list[str]) -> list[tuple[int, int]]:
    out = []
    for tok in tokens:
        p, _, q = tok.partition(",")
        out.append((int(p), int(q)))
    return out


def build_family(family: str, params: list[str], args: argparse.Namespace) -> list[tuple[Graph, int | None, dict | None]]:
    """Graphs for a ``generate`` invocation as ``(graph, claimed k, spec dict)``."""
    ints = lambda: [int(x) for x in params]  # noqa: E731
    if family == "complete":
        return [(gen.gen_complete(*ints()), 1, None)]
    if family == "path":
        return [(gen.gen_path(*ints()), None, None)]
    if family == "cycle":
        return [(gen.gen_cycle(*ints()), None, None)]
    if family == "multipartite":
        return [(gen.gen_complete_multipartite(ints()), None, None)]
    if family == "two-uniform":
        return [(gen.gen_two_uniform(_pairs(params)), 2, None)]
    if family == "friendship-complement":
        return [(gen.gen_friendship_complement(*ints()), 3, None)]
    if family == "k-uniform":
        if args.spec:
            text = Path(args.spec[1:]).read_text() if args.spec.startswith("@") else args.spec
            specs = [gen.GenSpec.from_json(text)]
        else:
            specs = [gen.random_genspec(args.seed + i, args.n) for i in range(args.count)]
        out = []
        for spec in specs:
            g, k = gen.gen_k_uniform(spec)
            out.append((g, k, spec.to_dict()))
        return out
    raise ValueError(f"unknown family {family!r}")


def cmd_generate(cfg: RunConfig, args: argparse.Namespace) -> int:
    try:
        items = build_family(args.family, args.params, args)
    except (ValueError, TypeError, GraphError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sidecar = []
    for g, k, spec in items:
        line = encode_graph6(g).decode("ascii")
        rec = {"graph6": line, "n": g.n, "k": k, "family": args.family, "spec": spec}
        sidecar.append(rec)
        _emit(cfg, rec, line)
    if args.sidecar:
        Path(args.sidecar).write_text(
            "".join(json.dumps(r, sort_keys=True, separators=(",", ":")) + "\n" for r in sidecar)
        )
    return EXIT_OK


# -- verify ---------------------------------------------------------------------------

def cmd_verify(cfg: RunConfig, engine: str) -> int:
    if cfg.n > 8 or cfg.n < 1 or (cfg.n == 8 and not cfg.allow_n8):
        print("error: --n must be in 1..7 (8 with --opt-in-n8)", file=sys.stderr)
        return EXIT_USAGE
    started = time.perf_counter()
    summary = run_verify(cfg.n, engine=engine, workers=cfg.workers, allow_n8=cfg.allow_n8)
    if cfg.output == "structured":
        print(json.dumps(summary.to_dict(), sort_keys=True, separators=(",", ":")))
    else:
        checked, failures = summary.totals()
        print(f"verified {summary.graphs} labeled graphs, n = 1..{cfg.n} ({engine} engine)")
        for s in summary.sizes:
            print(f"  n={s.n}: {s.graphs} graphs, {s.failure_count} counterexamples")
        for name in checked:
            print(f"  {name:<30} checked {checked[name]:>9}  failures {failures[name]}")
        for s in summary.sizes:
            for check, g6 in s.examples:
                print(f"  counterexample n={s.n} {check}: {g6}")
        print(f"{'OK' if summary.ok else 'FAILED'} in {time.perf_counter() - started:.1f}s")
    return EXIT_OK if summary.ok else EXIT_COUNTEREXAMPLE


# -- entry point ----------------------------------------------------------------------

def _common(p: argparse.ArgumentParser, graph_input: bool = True) -> None:
    if graph_input:
        p.add_argument("input", nargs="?", help="input file ('-' or omitted for stdin)")
        p.add_argument("--graph", help="inline graph (graph6, or edgelist with ';' line breaks)")
        p.add_argument("--format", choices=FORMATS, default="graph6")
        p.add_argument("--cap", type=int, default=DEFAULT_SOLVER_CAP, help="exact solver vertex cap")
    p.add_argument("--workers", type=int, default=None, help="worker processes")
    p.add_argument("--output", choices=("human", "structured"), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nbseq", description="Dominating neighborhood sequences and uniform graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="domination profile and uniformity reports")
    _common(p)

    p = sub.add_parser("recognize", help="closed k-uniformity recognition")
    _common(p)
    p.add_argument("--method", choices=("structural", "brute", "both"), default="structural")

    p = sub.add_parser("generate", help="emit graph6 lines for a graph family")
    p.add_argument(
        "family",
        choices=("complete", "path", "cycle", "multipartite", "two-uniform", "friendship-complement", "k-uniform"),
    )
    p.add_argument("params", nargs="*", help="family parameters, e.g. '6' or '1,1 2,2'")
    p.add_argument("--spec", help="GenSpec JSON (or @file) for k-uniform")
    p.add_argument("--n", type=int, default=20, help="vertex budget for random k-uniform specs")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--sidecar", help="write claimed k and GenSpec records (JSON lines) here")
    p.add_argument("--output", choices=("human", "structured"), default="human")

    p = sub.add_parser("verify", help="exhaustive check over all labeled graphs")
    p.add_argument("--n", type=int, default=7, help="largest vertex count to sweep")
    p.add_argument("--opt-in-n8", action="store_true", help="allow the n = 8 sweep")
    p.add_argument("--engine", choices=ENGINES, default="compiled")
    p.add_argument("--seed", type=int, default=0, help="accepted for symmetry; the sweep is deterministic")
    _common(p, graph_input=False)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = _config(args)
    if args.command != "generate" and cfg.cap > DEFAULT_SOLVER_CAP:
        print(f"note: solver cap raised to {cfg.cap}", file=sys.stderr)
    try:
        if args.command == "analyze":
            return cmd_analyze(cfg)
        if args.command == "recognize":
            return cmd_recognize(cfg, args.method)
        if args.command == "generate":
            return cmd_generate(cfg, args)
        return cmd_verify(cfg, args.engine)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
