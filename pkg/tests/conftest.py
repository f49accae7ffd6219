"""Shared oracles and fixtures.

The oracles here deliberately avoid the package's algorithms so they can
arbitrate them: the census walks every edge subset of the complete graph
(Gray code, one edge toggled per step) and tallies positional degree
vectors, and the split oracle tries all 2^n clique/independent partitions.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import pytest

from degseq import LabeledGraph, RealizationCounter


@lru_cache(maxsize=None)
def degree_census(n: int) -> dict[tuple[int, ...], int]:
    """Positional degree vector -> number of labeled graphs, for all graphs on n vertices."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    deg = [0] * n
    out = {tuple(deg): 1}
    prev = 0
    for k in range(1, 1 << m):
        code = k ^ (k >> 1)
        bit = (code ^ prev).bit_length() - 1
        prev = code
        i, j = pairs[bit]
        delta = 1 if code >> bit & 1 else -1
        deg[i] += delta
        deg[j] += delta
        key = tuple(deg)
        out[key] = out.get(key, 0) + 1
    return out


def brute_force_count(degrees) -> int:
    """Per-sequence oracle: test every edge subset of K_n directly."""
    degrees = tuple(degrees)
    n = len(degrees)
    assert n <= 6, "direct subset enumeration is for n <= 6"
    pairs = list(itertools.combinations(range(n), 2))
    hits = 0
    for size in range(len(pairs) + 1):
        for subset in itertools.combinations(pairs, size):
            deg = [0] * n
            for u, v in subset:
                deg[u] += 1
                deg[v] += 1
            if tuple(deg) == degrees:
                hits += 1
    return hits


def all_sorted_sequences(n: int):
    """Every non-increasing length-n sequence with entries in [0, n-1]."""
    return itertools.combinations_with_replacement(range(n - 1, -1, -1), n)


def has_split_partition(graph: LabeledGraph) -> bool:
    """Whether some vertex subset is a clique with independent complement."""
    n = graph.n
    adj = graph.adj
    full = (1 << n) - 1
    for s in range(1 << n):
        ok = True
        rem = s
        while rem:
            u = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            if s & ~(adj[u] | (1 << u)):
                ok = False
                break
        if not ok:
            continue
        comp = full & ~s
        rem = comp
        while rem:
            u = (rem & -rem).bit_length() - 1
            rem &= rem - 1
            if adj[u] & comp:
                ok = False
                break
        if ok:
            return True
    return False


@pytest.fixture(scope="session")
def counter() -> RealizationCounter:
    """One shared memoized counter for the whole run."""
    return RealizationCounter()
