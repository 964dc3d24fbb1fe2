"""Immutable simple graphs on contiguous vertex ids, backed by bitmasks.

Vertex ``v`` of a graph with ``n`` vertices is the integer ``v`` in
``range(n)``; vertex sets are stored internally as ``int`` bitmasks where
bit ``v`` marks membership.  The public helpers return ``frozenset``
objects, the ``*_mask`` variants return the raw masks.
"""
from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_VERTICES = 64

VertexSet = frozenset


def bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class GraphError(ValueError):
    """Raised for malformed graphs or invalid vertex ids."""


class Graph:
    """A finite simple undirected graph with vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbors of ``v``.  Instances are
    immutable and hashable.
    """

    __slots__ = ("n", "adj", "_closed")

    def __init__(self, n: int, adj: Iterable[int] = ()):
        adj = tuple(adj)
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        if not adj and n:
            adj = (0,) * n
        if len(adj) != n:
            raise GraphError(f"expected {n} adjacency masks, got {len(adj)}")
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m < 0 or m & ~full:
                raise GraphError(f"neighbor of {v} out of range")
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in bits(m):
                if not adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._init(n, adj)

    def _init(self, n: int, adj: tuple[int, ...]) -> None:
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(
            self, "_closed", tuple(m | (1 << v) for v, m in enumerate(adj))
        )

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> Graph:
        # internal constructor, skips validation
        g = cls.__new__(cls)
        g._init(n, adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from an edge iterable.  Duplicate edges are merged."""
        if n < 0 or n > MAX_VERTICES:
            raise GraphError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls._trusted(n, tuple(adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __reduce__(self):
        return (Graph._trusted, (self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __len__(self) -> int:
        return self.n

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def closed(self) -> tuple[int, ...]:
        """Closed-neighborhood bitmasks, indexed by vertex."""
        return self._closed

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check(v)
        return self.adj[v].bit_count()

    def _check(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def isolated_vertices(self) -> list[int]:
        return [v for v, m in enumerate(self.adj) if not m]

    def has_isolated_vertex(self) -> bool:
        return 0 in self.adj


def closed_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return frozenset(bits(g.closed[v]))


def open_neighborhood(g: Graph, v: int) -> frozenset[int]:
    g._check(v)
    return frozenset(bits(g.adj[v]))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph._trusted(g.n, tuple(full & ~c for c in g.closed))


def induced_subgraph(g: Graph, keep: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``keep`` (a mask or iterable of ids).

    Returns the relabeled graph and the map old id -> new id.  New ids follow
    the order of old ids.
    """
    if not isinstance(keep, int):
        keep = mask_of(keep)
    if keep & ~g.full_mask:
        raise GraphError("induced subgraph vertex out of range")
    old = list(bits(keep))
    relabel = {u: i for i, u in enumerate(old)}
    adj = []
    for u in old:
        m = 0
        for w in bits(g.adj[u] & keep):
            m |= 1 << relabel[w]
        adj.append(m)
    return Graph._trusted(len(old), tuple(adj)), relabel


def delete_vertices(g: Graph, remove: int | Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G \\ S``: the subgraph induced by the vertices outside ``remove``."""
    if not isinstance(remove, int):
        remove = mask_of(remove)
    return induced_subgraph(g, g.full_mask & ~remove)


def delete_closed_neighborhood(g: Graph, v: int) -> tuple[Graph, dict[int, int]]:
    g._check(v)
    return delete_vertices(g, g.closed[v])


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components as bitmasks, ordered by minimum vertex id.

    With ``within``, components of the subgraph induced by that mask.
    """
    comps = []
    unseen = g.full_mask if within is None else within
    adj = g.adj
    while unseen:
        frontier = unseen & -unseen
        comp = frontier
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= adj[v]
            frontier = nxt & unseen & ~comp
            comp |= frontier
        comps.append(comp)
        unseen &= ~comp
    return comps


def connected_components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def true_twin_class_masks(g: Graph) -> list[int]:
    """Classes of vertices sharing a closed neighborhood, ordered by minimum id."""
    classes: dict[int, int] = {}
    for v, c in enumerate(g.closed):
        classes[c] = classes.get(c, 0) | (1 << v)
    return list(classes.values())


def true_twin_classes(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in true_twin_class_masks(g)]


def has_true_twins(g: Graph) -> bool:
    return len(set(g.closed)) < g.n


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union; vertices of later graphs are shifted past earlier ones."""
    adj: list[int] = []
    offset = 0
    for h in graphs:
        adj.extend(m << offset for m in h.adj)
        offset += h.n
    return Graph(offset, adj) if offset > MAX_VERTICES else Graph._trusted(offset, tuple(adj))


def join(*graphs: Graph) -> Graph:
    """Join: disjoint union plus every edge between different operands."""
    u = disjoint_union(*graphs)
    adj = list(u.adj)
    offset = 0
    full = u.full_mask
    for h in graphs:
        own = ((1 << h.n) - 1) << offset
        for v in range(offset, offset + h.n):
            adj[v] |= full & ~own
        offset += h.n
    return Graph._trusted(u.n, tuple(adj))


def add_true_twin(g: Graph, v: int) -> Graph:
    """Append a new vertex ``n`` whose closed neighborhood equals that of ``v``."""
    g._check(v)
    new = g.n
    if new + 1 > MAX_VERTICES:
        raise GraphError(f"graph would exceed {MAX_VERTICES} vertices")
    adj = list(g.adj)
    for u in bits(g.closed[v]):
        adj[u] |= 1 << new
    adj.append(g.closed[v])
    return Graph._trusted(new + 1, tuple(adj))
