"""Independent brute-force oracles built from plain Python sets.

They enumerate every sequence of distinct vertices straight from the
definitions, with no memoization and no reliance on the covered-set
argument used by the library solvers.
"""
from __future__ import annotations

from itertools import combinations


def neighborhoods(n: int, edges) -> tuple[list[set[int]], list[set[int]]]:
    opened = [set() for _ in range(n)]
    for u, v in edges:
        opened[u].add(v)
        opened[v].add(u)
    closed = [opened[v] | {v} for v in range(n)]
    return opened, closed


def cns_lengths(n: int, edges) -> set[int]:
    _, closed = neighborhoods(n, edges)
    everything = set(range(n))
    found = set()

    def walk(seq: list[int], covered: set[int]) -> None:
        if covered == everything:
            found.add(len(seq))
        for v in range(n):
            if v not in seq and closed[v] - covered:
                walk(seq + [v], covered | closed[v])

    walk([], set())
    return found


def ons_lengths(n: int, edges) -> tuple[set[int], set[int]]:
    """(dominating ONS lengths, total dominating ONS lengths)."""
    opened, _ = neighborhoods(n, edges)
    everything = set(range(n))
    dominating, total = set(), set()

    def walk(seq: list[int], covered: set[int]) -> None:
        if seq:
            if covered | set(seq) == everything:
                dominating.add(len(seq))
            if covered == everything:
                total.add(len(seq))
        for v in range(n):
            if v not in seq and opened[v] - covered:
                walk(seq + [v], covered | opened[v])

    walk([], set())
    return dominating, total


def is_complete_multipartite_naive(n: int, edges) -> list[set[int]] | None:
    """Parts via non-adjacency classes, checked pair by pair."""
    adj = {frozenset(e) for e in edges}
    parts: list[set[int]] = []
    for v in range(n):
        for p in parts:
            if all(frozenset((v, u)) not in adj for u in p):
                p.add(v)
                break
        else:
            parts.append({v})
    if len(parts) < 2:
        return None
    for a, b in combinations(range(n), 2):
        same = any(a in p and b in p for p in parts)
        if same == (frozenset((a, b)) in adj):
            return None
    return parts
