"""Named graph families, certified k-uniform instances, labeled-graph streams."""
from __future__ import annotations

import json
import random
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from typing import Union

from .graph import MAX_VERTICES, Graph, GraphError, add_true_twin, complement, disjoint_union, join


def gen_complete(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    if n > MAX_VERTICES:
        raise GraphError(f"at most {MAX_VERTICES} vertices supported")
    full = (1 << n) - 1
    return Graph._trusted(n, tuple(full & ~(1 << v) for v in range(n)))


def gen_empty(n: int) -> Graph:
    return Graph(n)


def gen_path(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete_multipartite(parts: Sequence[int]) -> Graph:
    """K_{p1,...,pt}; part i occupies a contiguous block of ids."""
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise ValueError("need at least two parts, each of size >= 1")
    return join(*(gen_empty(p) for p in parts))


def gen_complete_bipartite(p: int, q: int) -> Graph:
    return gen_complete_multipartite([p, q])


def gen_two_uniform(pieces: Sequence[tuple[int, int]]) -> Graph:
    """Complement of the disjoint union of K_{p,q} over ``pieces``."""
    if not pieces or any(p < 1 or q < 1 for p, q in pieces):
        raise ValueError("need at least one piece with both sides >= 1")
    return complement(disjoint_union(*(gen_complete_bipartite(p, q) for p, q in pieces)))


def gen_friendship_complement(t: int) -> Graph:
    """Complement of the friendship graph K_1 joined with t disjoint edges."""
    if t < 1:
        raise ValueError("friendship graph needs t >= 1")
    triangles = disjoint_union(*(gen_complete(2) for _ in range(t)))
    return complement(join(gen_complete(1), triangles))


# -- certified k-uniform instances --------------------------------------------

@dataclass(frozen=True)
class Complete:
    size: int

    def build(self) -> Graph:
        return gen_complete(self.size)

    @property
    def k(self) -> int:
        return 1


@dataclass(frozen=True)
class TwoUniform:
    """Complement of a union of K_{p,q}; one piece gives the disconnected K_p + K_q."""

    pieces: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple((int(p), int(q)) for p, q in self.pieces))

    def build(self) -> Graph:
        return gen_two_uniform(self.pieces)

    @property
    def k(self) -> int:
        return 2


Recipe = Union[Complete, TwoUniform]


@dataclass(frozen=True)
class GenSpec:
    components: tuple[Recipe, ...]
    twin_inflation: dict[int, int] = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not self.components:
            raise ValueError("GenSpec needs at least one component")
        for c in self.components:
            if isinstance(c, Complete):
                if c.size < 1:
                    raise ValueError("Complete size must be >= 1")
            elif isinstance(c, TwoUniform):
                if not c.pieces or any(p < 1 or q < 1 for p, q in c.pieces):
                    raise ValueError("TwoUniform pieces must be nonempty with sides >= 1")
            else:
                raise TypeError(f"unknown recipe {c!r}")
        if any(count < 0 for count in self.twin_inflation.values()):
            raise ValueError("twin inflation counts must be >= 0")

    @property
    def k(self) -> int:
        return sum(c.k for c in self.components)

    @property
    def base_vertices(self) -> int:
        return sum(c.size if isinstance(c, Complete) else sum(p + q for p, q in c.pieces) for c in self.components)

    @property
    def vertex_count(self) -> int:
        return self.base_vertices + sum(self.twin_inflation.values())

    def to_dict(self) -> dict:
        comps = []
        for c in self.components:
            if isinstance(c, Complete):
                comps.append({"complete": c.size})
            else:
                comps.append({"two_uniform": [list(p) for p in c.pieces]})
        return {
            "components": comps,
            "twin_inflation": {str(v): n for v, n in sorted(self.twin_inflation.items())},
            "seed": self.seed,
            "k": self.k,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, d: dict) -> GenSpec:
        comps: list[Recipe] = []
        for c in d["components"]:
            if "complete" in c:
                comps.append(Complete(int(c["complete"])))
            else:
                comps.append(TwoUniform(tuple(tuple(p) for p in c["two_uniform"])))
        inflation = {int(v): int(n) for v, n in d.get("twin_inflation", {}).items()}
        return cls(tuple(comps), inflation, d.get("seed"))

    @classmethod
    def from_json(cls, text: str) -> GenSpec:
        return cls.from_dict(json.loads(text))


def gen_k_uniform(spec: GenSpec) -> tuple[Graph, int]:
    """Build the graph described by ``spec``; returns ``(graph, k)``.

    Components are laid out in recipe order; the true twins requested by
    ``twin_inflation`` (keyed by base vertex id) are appended afterwards.
    """
    if spec.vertex_count > MAX_VERTICES:
        raise GraphError(f"spec needs {spec.vertex_count} vertices, budget is {MAX_VERTICES}")
    g = disjoint_union(*(c.build() for c in spec.components))
    for v, count in sorted(spec.twin_inflation.items()):
        if not 0 <= v < spec.base_vertices:
            raise GraphError(f"inflated vertex {v} out of range")
        for _ in range(count):
            g = add_true_twin(g, v)
    return g, spec.k


def random_genspec(seed: int, max_vertices: int = 20, max_twins: int | None = None) -> GenSpec:
    """Draw a GenSpec whose graph has between 1 and ``max_vertices`` vertices.

    Sizes are uniform over what still fits in the remaining budget; a fresh
    component is added with probability 2/3 while budget remains.
    """
    if not 1 <= max_vertices <= MAX_VERTICES:
        raise ValueError(f"max_vertices must be in 1..{MAX_VERTICES}")
    rng = random.Random(seed)
    part_cap = max(3, max_vertices // 8)
    twin_budget = rng.randint(0, max_vertices // 4) if max_twins is None else min(max_twins, max_vertices - 1)
    budget = max_vertices - twin_budget
    comps: list[Recipe] = []
    while budget >= 1 and (not comps or rng.random() < 2 / 3):
        if budget >= 2 and rng.random() < 0.6:
            pieces = []
            npieces = rng.randint(1, max(1, min(4, budget // 2)))
            for _ in range(npieces):
                if budget < 2:
                    break
                p = rng.randint(1, min(part_cap, budget - 1))
                q = rng.randint(1, min(part_cap, budget - p))
                pieces.append((p, q))
                budget -= p + q
            comps.append(TwoUniform(tuple(pieces)))
        else:
            size = rng.randint(1, min(part_cap + 1, budget))
            comps.append(Complete(size))
            budget -= size
    spec = GenSpec(tuple(comps))
    base = spec.base_vertices
    twins_left = max_vertices - base if max_twins is None else min(max_twins, max_vertices - base)
    inflation: dict[int, int] = {}
    while twins_left > 0 and rng.random() < 0.7:
        v = rng.randrange(base)
        extra = rng.randint(1, twins_left)
        inflation[v] = inflation.get(v, 0) + extra
        twins_left -= extra
    return GenSpec(spec.components, inflation, seed)


# -- exhaustive streams ---------------------------------------------------------

MAX_ENUMERATION_N = 8


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Upper-triangle pairs in graph6 column order; bit i of an edge mask is slot i."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if mask >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph._trusted(n, tuple(adj))


def all_labeled_graphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices in increasing edge-mask order.

    ``start``/``stop`` select a half-open range of edge masks so a sweep can
    be resumed or split across workers.
    """
    if not 0 <= n <= MAX_ENUMERATION_N:
        raise ValueError(f"enumeration supports 0 <= n <= {MAX_ENUMERATION_N}")
    total = graph_count(n)
    stop = total if stop is None else min(stop, total)
    for mask in range(start, stop):
        yield graph_from_edge_mask(n, mask)
