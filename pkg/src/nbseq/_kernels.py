"""Compiled batch solvers for exhaustive sweeps over small labeled graphs.

Same covered-set recursions as :mod:`nbseq.sequences`, evaluated bottom-up
over dense tables and run for a whole range of edge masks per call.  Masks
are int64; only used for n <= 8.
"""
from __future__ import annotations

import numpy as np
from numba import njit

KERNEL_MAX_N = 8


@njit(cache=True)
def _adjacency(n, edge_mask, adj):
    for v in range(n):
        adj[v] = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (edge_mask >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1


@njit(cache=True)
def _cover_lengths(moves, n, full, table):
    table[full] = 1
    for c in range(full - 1, -1, -1):
        acc = 0
        for i in range(n):
            m = moves[i]
            if m & ~c:
                acc |= table[c | m]
        table[c] = acc << 1
    return table[0]


@njit(cache=True)
def _reach(opens, n, full, table):
    # table[o]: bits 0..L, L the longest ONS continuation from open cover o
    for o in range(full, -1, -1):
        acc = 0
        for i in range(n):
            m = opens[i]
            if m & ~o:
                acc |= table[o | m]
        table[o] = (acc << 1) | 1


# not cached: numba segfaults when loading cached self-recursive functions
@njit
def _dominating(o, c, n, full, opens, closeds, reach, memo, stamp, gen):
    if c == full:
        return reach[o]
    key = o | (c << n)
    if stamp[key] == gen:
        return memo[key]
    acc = 0
    for i in range(n):
        m = opens[i]
        if m & ~o:
            acc |= _dominating(o | m, c | closeds[i], n, full, opens, closeds, reach, memo, stamp, gen)
    acc = acc << 1
    memo[key] = acc
    stamp[key] = gen
    return acc


@njit
def _sweep(n, start, stop, cns_out, total_out, dom_out):
    full = (1 << n) - 1
    adj = np.zeros(n, np.int64)
    closed = np.zeros(n, np.int64)
    cover = np.zeros(full + 1, np.int64)
    reach = np.zeros(full + 1, np.int64)
    memo = np.zeros(1 << (2 * n), np.int64)
    stamp = np.zeros(1 << (2 * n), np.int64)
    for idx in range(stop - start):
        _adjacency(n, start + idx, adj)
        for v in range(n):
            closed[v] = adj[v] | (1 << v)
        cns_out[idx] = _cover_lengths(closed, n, full, cover)
        total_out[idx] = _cover_lengths(adj, n, full, cover)
        _reach(adj, n, full, reach)
        dom_out[idx] = _dominating(0, 0, n, full, adj, closed, reach, memo, stamp, idx + 1) & ~1


def sweep_length_masks(n: int, start: int, stop: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Length-set bitmasks for every graph with edge mask in ``[start, stop)``.

    Returns arrays ``(dominating CNS, total dominating ONS, dominating ONS)``
    with bit ``k`` set iff length ``k`` occurs.  Edge masks use the same slot
    order as :func:`nbseq.generators.all_labeled_graphs`.
    """
    if not 1 <= n <= KERNEL_MAX_N:
        raise ValueError(f"kernel supports 1 <= n <= {KERNEL_MAX_N}")
    count = max(0, stop - start)
    cns = np.zeros(count, np.int64)
    total = np.zeros(count, np.int64)
    dom = np.zeros(count, np.int64)
    if count:
        _sweep(n, start, stop, cns, total, dom)
    return cns, total, dom
