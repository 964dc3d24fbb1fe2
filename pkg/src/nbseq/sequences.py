"""Closed and open neighborhood sequences: validity, extension, exact lengths.

A closed neighborhood sequence (CNS) is a sequence of distinct vertices in
which every vertex's closed neighborhood contains a vertex not covered by
the closed neighborhoods of its predecessors.  An open neighborhood
sequence (ONS) is the same with open neighborhoods, and its first vertex
must not be isolated.

The exact solvers search over *covered sets*: the union of the
neighborhoods chosen so far.  A vertex already in the sequence adds nothing
to the covered set, so it can never be appended again; the covered set
alone therefore determines which continuations are legal, and the memo
table has at most ``2**n`` entries.  Length sets are stored as integer
bitmasks (bit ``k`` set means length ``k`` is achievable).

Domination by an ONS depends on the chosen vertices as well as on their
open neighborhoods, so the dominating-ONS search keys its memo on the pair
(open cover, closed cover).
"""
from __future__ import annotations

import sys
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

from .graph import Graph, GraphError, bits, mask_of

DEFAULT_SOLVER_CAP = 20

# recursion depth of the solvers is at most n + 1
if sys.getrecursionlimit() < 1000:
    sys.setrecursionlimit(1000)


class SolverCapError(ValueError):
    """The graph is larger than the exact solver's vertex cap."""


def _check_cap(g: Graph, cap: int | None) -> None:
    cap = DEFAULT_SOLVER_CAP if cap is None else cap
    if g.n > cap:
        raise SolverCapError(f"graph has {g.n} vertices, solver cap is {cap}")


def _set_mask(g: Graph, s: Iterable[int] | int) -> int:
    m = s if isinstance(s, int) else mask_of(s)
    if m & ~g.full_mask or m < 0:
        raise GraphError("vertex set out of range")
    return m


def _check_sequence(g: Graph, seq: Sequence[int]) -> None:
    seen = 0
    for v in seq:
        g._check(v)
        if seen >> v & 1:
            raise ValueError(f"vertex {v} repeated in sequence")
        seen |= 1 << v


def _lengths(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


# -- predicates ---------------------------------------------------------------

def is_dominating(g: Graph, s: Iterable[int] | int) -> bool:
    m = _set_mask(g, s)
    covered = m
    for v in bits(m):
        covered |= g.adj[v]
    return covered == g.full_mask


def is_total_dominating(g: Graph, s: Iterable[int] | int) -> bool:
    covered = 0
    for v in bits(_set_mask(g, s)):
        covered |= g.adj[v]
    return covered == g.full_mask


def is_cns(g: Graph, seq: Sequence[int]) -> bool:
    _check_sequence(g, seq)
    covered = 0
    for v in seq:
        if not g.closed[v] & ~covered:
            return False
        covered |= g.closed[v]
    return True


def is_ons(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a nonempty open neighborhood sequence."""
    _check_sequence(g, seq)
    if not seq:
        return False
    covered = 0
    for v in seq:
        if not g.adj[v] & ~covered:
            return False
        covered |= g.adj[v]
    return True


def extend_to_dominating_cns(g: Graph, seq: Sequence[int] = ()) -> tuple[int, ...]:
    """Greedily extend a CNS to a dominating one.

    Repeatedly appends the smallest vertex whose closed neighborhood covers
    a vertex not yet covered.
    """
    if not is_cns(g, seq):
        raise ValueError(f"{tuple(seq)} is not a closed neighborhood sequence")
    out = list(seq)
    covered = 0
    for v in out:
        covered |= g.closed[v]
    full = g.full_mask
    while covered != full:
        v = next(u for u in range(g.n) if g.closed[u] & ~covered)
        out.append(v)
        covered |= g.closed[v]
    return tuple(out)


# -- exact solvers ------------------------------------------------------------

def _cover_table(moves: Sequence[int], full: int) -> dict[int, int]:
    """Completion-length masks for every reachable covered set.

    ``table[c]`` has bit ``k`` set iff ``k`` more moves, each covering some
    new element, reach ``full`` from ``c``.
    """
    table = {full: 1}
    get = table.get

    def solve(c: int) -> int:
        r = get(c)
        if r is not None:
            return r
        acc = 0
        for m in moves:
            if m & ~c:
                nc = c | m
                r = get(nc)
                acc |= solve(nc) if r is None else r
        acc <<= 1
        table[c] = acc
        return acc

    solve(0)
    return table


def _trace(table: dict[int, int], masks: Sequence[int], start: int, length: int) -> tuple[int, ...]:
    # smallest-id reconstruction of a sequence realizing ``length``
    seq = []
    c = start
    for remaining in range(length, 0, -1):
        for v, m in enumerate(masks):
            if m & ~c and table.get(c | m, 0) >> (remaining - 1) & 1:
                seq.append(v)
                c |= m
                break
        else:  # pragma: no cover - table inconsistency
            raise AssertionError("length not realizable from table")
    return tuple(seq)


class CnsSolution:
    """Exact dominating-CNS lengths of a graph, with witness recovery."""

    def __init__(self, g: Graph, cap: int | None = None):
        _check_cap(g, cap)
        self.graph = g
        self._table = _cover_table(list(dict.fromkeys(g.closed)), g.full_mask)
        self.length_mask = self._table[0]

    @cached_property
    def lengths(self) -> frozenset[int]:
        return _lengths(self.length_mask)

    def witness(self, length: int) -> tuple[int, ...]:
        """A dominating CNS of exactly ``length`` vertices."""
        if not self.length_mask >> length & 1:
            raise ValueError(f"no dominating CNS of length {length}")
        return _trace(self._table, self.graph.closed, 0, length)


class OnsSolution:
    """Exact dominating-ONS and total-dominating-ONS lengths of a graph."""

    def __init__(self, g: Graph, cap: int | None = None):
        _check_cap(g, cap)
        self.graph = g
        n = g.n
        full = g.full_mask
        opens = [m for m in dict.fromkeys(g.adj) if m]
        self._total = _cover_table(opens, full)
        self.total_mask = 0 if n == 0 else self._total[0]

        moves = list(dict.fromkeys((m, m | 1 << v) for v, m in enumerate(g.adj) if m))
        longest: dict[int, int] = {}

        def reach(o: int) -> int:
            # mask 0..L where L is the longest ONS continuation from open cover o
            r = longest.get(o)
            if r is not None:
                return r
            acc = 0
            for m in opens:
                if m & ~o:
                    acc |= reach(o | m)
            acc = acc << 1 | 1
            longest[o] = acc
            return acc

        table: dict[int, int] = {}
        get = table.get

        def solve(o: int, c: int) -> int:
            # once dominating, every continuation stays dominating
            if c == full:
                return reach(o)
            key = o | c << n
            r = get(key)
            if r is not None:
                return r
            acc = 0
            for mo, mc in moves:
                if mo & ~o:
                    acc |= solve(o | mo, c | mc)
            acc <<= 1
            table[key] = acc
            return acc

        # the empty sequence is not an ONS
        self.dominating_mask = solve(0, 0) & ~1
        self._dom = table
        self._reach = reach

    def _dom_mask(self, o: int, c: int) -> int:
        if c == self.graph.full_mask:
            return self._reach(o)
        return self._dom.get(o | c << self.graph.n, 0)

    @cached_property
    def total_lengths(self) -> frozenset[int]:
        return _lengths(self.total_mask)

    @cached_property
    def dominating_lengths(self) -> frozenset[int]:
        return _lengths(self.dominating_mask)

    def total_witness(self, length: int) -> tuple[int, ...]:
        """A total dominating ONS of exactly ``length`` vertices."""
        if not self.total_mask >> length & 1:
            raise ValueError(f"no total dominating ONS of length {length}")
        return _trace(self._total, self.graph.adj, 0, length)

    def dominating_witness(self, length: int) -> tuple[int, ...]:
        """A dominating ONS of exactly ``length`` vertices."""
        if length == 0 or not self.dominating_mask >> length & 1:
            raise ValueError(f"no dominating ONS of length {length}")
        g = self.graph
        n = g.n
        seq = []
        o = c = 0
        for remaining in range(length, 0, -1):
            for v in range(n):
                mo = g.adj[v]
                if mo & ~o:
                    no, nc = o | mo, c | g.closed[v]
                    if self._dom_mask(no, nc) >> (remaining - 1) & 1:
                        seq.append(v)
                        o, c = no, nc
                        break
            else:  # pragma: no cover
                raise AssertionError("length not realizable from table")
        return tuple(seq)


def cns_length_set(g: Graph, cap: int | None = None) -> frozenset[int]:
    """All lengths of dominating closed neighborhood sequences of ``g``."""
    return CnsSolution(g, cap).lengths


def ons_length_sets(g: Graph, cap: int | None = None) -> tuple[frozenset[int], frozenset[int]]:
    """``(dominating ONS lengths, total dominating ONS lengths)``.

    Both are empty when ``g`` has an isolated vertex or no vertices.
    """
    sol = OnsSolution(g, cap)
    return sol.dominating_lengths, sol.total_lengths


@dataclass(frozen=True)
class DominationProfile:
    """The four sequence-length parameters plus dominating-ONS extremes.

    ONS-based fields are ``None`` when undefined (isolated vertex or empty
    graph).
    """

    gamma: int
    gamma_gr: int
    gamma_t: int | None
    gamma_gr_t: int | None
    min_dom_ons: int | None
    max_dom_ons: int | None

    def as_dict(self) -> dict[str, int | None]:
        return {
            "gamma": self.gamma,
            "gamma_gr": self.gamma_gr,
            "gamma_t": self.gamma_t,
            "gamma_gr_t": self.gamma_gr_t,
            "min_dom_ons": self.min_dom_ons,
            "max_dom_ons": self.max_dom_ons,
        }


def _extremes(lengths: frozenset[int]) -> tuple[int | None, int | None]:
    return (min(lengths), max(lengths)) if lengths else (None, None)


def profile(g: Graph, cap: int | None = None) -> DominationProfile:
    cns = cns_length_set(g, cap)
    dom, total = ons_length_sets(g, cap)
    return DominationProfile(min(cns), max(cns), *_extremes(total), *_extremes(dom))


def domination_number(g: Graph, cap: int | None = None) -> int:
    return min(cns_length_set(g, cap))


def grundy_domination_number(g: Graph, cap: int | None = None) -> int:
    return max(cns_length_set(g, cap))
