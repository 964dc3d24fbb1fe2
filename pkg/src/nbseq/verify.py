"""Exhaustive verification of the uniformity characterizations on labeled graphs.

Every labeled graph of each size up to ``max_n`` is solved exactly and
checked against the structural claims:

``closed_agreement``
    the structural recognizer and the exact length set agree on status and k.
``total_no_k1_k3`` / ``open_no_k1_k3``
    no total (open) 1-uniform or 3-uniform graph exists.
``total_2_iff_multipartite``
    total 2-uniform exactly for complete multipartite graphs.
``open_2_iff_multipartite_ge2``
    open 2-uniform exactly for complete multipartite graphs with parts >= 2.
``max_dom_ons_eq_grundy_total``
    the longest dominating ONS is as long as the longest total dominating ONS.
``min_dom_ons_le_gamma_t``
    the shortest dominating ONS is no longer than the total domination number.
``open_implies_total``
    every open k-uniform graph is total k-uniform.

The ONS checks only apply to graphs without isolated vertices.
"""
from __future__ import annotations

import os
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .generators import MAX_ENUMERATION_N, graph_count, graph_from_edge_mask
from .io import encode_graph6
from .sequences import CnsSolution, OnsSolution
from .uniformity import _anticlique_parts, structural_k

CHECKS = (
    "closed_agreement",
    "total_no_k1_k3",
    "open_no_k1_k3",
    "total_2_iff_multipartite",
    "open_2_iff_multipartite_ge2",
    "max_dom_ons_eq_grundy_total",
    "min_dom_ons_le_gamma_t",
    "open_implies_total",
)
ENGINES = ("compiled", "python")
CHUNK = 1 << 16
MAX_EXAMPLES = 5
WORKERS_ENV = "NBSEQ_WORKERS"


def default_workers() -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class SizeResult:
    """Tallies for one vertex count."""

    n: int
    graphs: int = 0
    checked: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    failures: dict[str, int] = field(default_factory=lambda: dict.fromkeys(CHECKS, 0))
    examples: list[tuple[str, str]] = field(default_factory=list)
    closed_uniform: dict[int, int] = field(default_factory=dict)
    total_uniform: dict[int, int] = field(default_factory=dict)
    open_uniform: dict[int, int] = field(default_factory=dict)

    def merge(self, other: SizeResult) -> None:
        self.graphs += other.graphs
        for name in CHECKS:
            self.checked[name] += other.checked[name]
            self.failures[name] += other.failures[name]
        self.examples.extend(other.examples[: MAX_EXAMPLES - len(self.examples)])
        for mine, theirs in (
            (self.closed_uniform, other.closed_uniform),
            (self.total_uniform, other.total_uniform),
            (self.open_uniform, other.open_uniform),
        ):
            for k, c in theirs.items():
                mine[k] = mine.get(k, 0) + c

    @property
    def failure_count(self) -> int:
        return sum(self.failures.values())

    def to_dict(self) -> dict:
        def keyed(d):
            return {str(k): v for k, v in sorted(d.items())}

        return {
            "n": self.n,
            "graphs": self.graphs,
            "checked": dict(self.checked),
            "failures": dict(self.failures),
            "counterexamples": [{"check": c, "graph6": g} for c, g in self.examples],
            "closed_uniform_by_k": keyed(self.closed_uniform),
            "total_uniform_by_k": keyed(self.total_uniform),
            "open_uniform_by_k": keyed(self.open_uniform),
        }


@dataclass
class VerifySummary:
    sizes: list[SizeResult]
    engine: str

    @property
    def graphs(self) -> int:
        return sum(s.graphs for s in self.sizes)

    @property
    def failure_count(self) -> int:
        return sum(s.failure_count for s in self.sizes)

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def totals(self) -> tuple[dict[str, int], dict[str, int]]:
        checked = dict.fromkeys(CHECKS, 0)
        failures = dict.fromkeys(CHECKS, 0)
        for s in self.sizes:
            for name in CHECKS:
                checked[name] += s.checked[name]
                failures[name] += s.failures[name]
        return checked, failures

    def to_dict(self) -> dict:
        checked, failures = self.totals()
        return {
            "engine": self.engine,
            "graphs": self.graphs,
            "ok": self.ok,
            "checked": checked,
            "failures": failures,
            "sizes": [s.to_dict() for s in self.sizes],
        }


def _lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _single(mask: int) -> int | None:
    return mask.bit_length() - 1 if mask and not mask & (mask - 1) else None


def check_graph(res: SizeResult, g, cns: int, total: int, dom: int) -> None:
    """Run every check on one graph given its three length-set masks."""
    res.graphs += 1
    fails = []
    k = structural_k(g)
    brute = _single(cns)
    res.checked["closed_agreement"] += 1
    if k != brute:
        fails.append("closed_agreement")
    if brute is not None:
        res.closed_uniform[brute] = res.closed_uniform.get(brute, 0) + 1

    if g.n and not g.has_isolated_vertex():
        kt, ko = _single(total), _single(dom)
        parts = _anticlique_parts(g, g.full_mask)
        multipartite = parts is not None and len(parts) >= 2
        parts_ge2 = multipartite and min(p.bit_count() for p in parts) >= 2
        if kt is not None:
            res.total_uniform[kt] = res.total_uniform.get(kt, 0) + 1
        if ko is not None:
            res.open_uniform[ko] = res.open_uniform.get(ko, 0) + 1
        outcomes = {
            "total_no_k1_k3": kt not in (1, 3),
            "open_no_k1_k3": ko not in (1, 3),
            "total_2_iff_multipartite": (kt == 2) == multipartite,
            "open_2_iff_multipartite_ge2": (ko == 2) == parts_ge2,
            "max_dom_ons_eq_grundy_total": total != 0 and dom.bit_length() == total.bit_length(),
            "min_dom_ons_le_gamma_t": total != 0 and dom != 0 and _lowest(dom) <= _lowest(total),
            "open_implies_total": ko is None or kt == ko,
        }
        for name, passed in outcomes.items():
            res.checked[name] += 1
            if not passed:
                fails.append(name)
    for name in fails:
        res.failures[name] += 1
        if len(res.examples) < MAX_EXAMPLES:
            res.examples.append((name, encode_graph6(g).decode("ascii")))


def _python_masks(n: int, start: int, stop: int):
    for mask in range(start, stop):
        g = graph_from_edge_mask(n, mask)
        cns = CnsSolution(g, cap=MAX_ENUMERATION_N)
        ons = OnsSolution(g, cap=MAX_ENUMERATION_N)
        yield g, cns.length_mask, ons.total_mask, ons.dominating_mask


def _compiled_masks(n: int, start: int, stop: int):
    from ._kernels import sweep_length_masks

    cns, total, dom = sweep_length_masks(n, start, stop)
    for i, mask in enumerate(range(start, stop)):
        yield graph_from_edge_mask(n, mask), int(cns[i]), int(total[i]), int(dom[i])


def sweep_range(n: int, start: int, stop: int, engine: str = "compiled") -> SizeResult:
    """Check the graphs on ``n`` vertices with edge masks in ``[start, stop)``."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    res = SizeResult(n)
    if n == 0:
        source: Iterable = _python_masks(0, start, stop)
    elif engine == "compiled":
        source = _compiled_masks(n, start, stop)
    else:
        source = _python_masks(n, start, stop)
    for g, cns, total, dom in source:
        check_graph(res, g, cns, total, dom)
    return res


def _sweep_task(args: tuple[int, int, int, str]) -> SizeResult:
    return sweep_range(*args)


def run_verify(
    max_n: int,
    *,
    min_n: int = 1,
    engine: str = "compiled",
    workers: int | None = None,
    allow_n8: bool = False,
    progress: Callable[[int, int, int], None] | None = None,
) -> VerifySummary:
    """Sweep every labeled graph with ``min_n <= n <= max_n`` vertices.

    Work is split into fixed edge-mask chunks and merged in chunk order, so
    the summary does not depend on ``workers``.  ``n = 8`` (268M graphs)
    requires ``allow_n8``.
    """
    if max_n > MAX_ENUMERATION_N or (max_n == 8 and not allow_n8):
        raise ValueError("n = 8 sweeps need allow_n8; n > 8 is unsupported")
    if min_n < 0 or max_n < min_n:
        raise ValueError("need 0 <= min_n <= max_n")
    workers = default_workers() if workers is None else max(1, workers)
    tasks = []
    for n in range(min_n, max_n + 1):
        total = graph_count(n)
        tasks.extend((n, lo, min(lo + CHUNK, total), engine) for lo in range(0, total, CHUNK))
    sizes = {n: SizeResult(n) for n in range(min_n, max_n + 1)}
    if workers == 1:
        results = map(_sweep_task, tasks)
        pool = None
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(_sweep_task, tasks)
    try:
        for task, part in zip(tasks, results):
            sizes[task[0]].merge(part)
            if progress is not None:
                progress(task[0], task[2], graph_count(task[0]))
    finally:
        if pool is not None:
            pool.shutdown()
    return VerifySummary([sizes[n] for n in sorted(sizes)], engine)
