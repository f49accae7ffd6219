"""Switch Markov chain over the realizations of a graphic degree sequence.

One step draws an ordered pair of distinct edges (a,b), (c,d), each in a
random orientation, and replaces them with (a,c), (b,d) when all four
endpoints are distinct and both replacements are non-edges; otherwise the
chain stays put.  The proposal is symmetric, every step preserves the degree
sequence exactly, and the stationary distribution is uniform over the
labeled realizations.

The starting state is built greedily (Havel-Hakimi): repeatedly satisfy the
vertex of largest residual degree from the next-largest residuals.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .core import DegreeSequence, LabeledGraph, edges_to_text
from .enumeration import enumerate_realizations
from .errors import InvalidInput, NotGraphic

RNG_ALGORITHM = "pcg64"


def make_rng(seed: int) -> np.random.Generator:
    """The chain's generator; the algorithm name is part of the contract."""
    return np.random.Generator(np.random.PCG64(seed))


@dataclass(frozen=True)
class ChainConfig:
    seed: int
    steps: int
    burn_in: int = 0
    report_every: int = 0

    def __post_init__(self):
        if self.steps < 0 or self.burn_in < 0:
            raise InvalidInput("steps and burn_in must be >= 0")


def havel_hakimi_graph(seq: DegreeSequence) -> LabeledGraph:
    """A deterministic realization with vertex i carrying degree d_i."""
    n = seq.n
    if seq.degrees[0] > n - 1:
        raise NotGraphic(f"{seq} has an entry above n - 1")
    residual = [(d, v) for v, d in enumerate(seq.degrees)]
    adj = [0] * n
    while True:
        residual.sort(key=lambda t: (-t[0], t[1]))
        d, v = residual[0]
        if d == 0:
            break
        if d > len(residual) - 1:
            raise NotGraphic(f"{seq} is not graphic")
        residual[0] = (0, v)
        for idx in range(1, d + 1):
            r, u = residual[idx]
            if r == 0:
                raise NotGraphic(f"{seq} is not graphic")
            residual[idx] = (r - 1, u)
            adj[v] |= 1 << u
            adj[u] |= 1 << v
    return LabeledGraph(n, tuple(adj))


def _propose(edges: list[tuple[int, int]], adj: list[int], rng) -> tuple | None:
    """Draw one switch proposal; None means the chain stays put."""
    m = len(edges)
    i = int(rng.integers(m))
    j = int(rng.integers(m - 1))
    if j >= i:
        j += 1
    a, b = edges[i]
    c, d = edges[j]
    if int(rng.integers(2)):
        a, b = b, a
    if int(rng.integers(2)):
        c, d = d, c
    if a == c or a == d or b == c or b == d:
        return None
    if adj[a] >> c & 1 or adj[b] >> d & 1:
        return None
    return i, j, (a, c), (b, d)


def _apply_switch(edges: list, adj: list[int], move) -> None:
    i, j, (a, c), (b, d) = move
    old_ab, old_cd = edges[i], edges[j]
    for u, v in (old_ab, old_cd):
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
    for u, v in ((a, c), (b, d)):
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    edges[i] = (min(a, c), max(a, c))
    edges[j] = (min(b, d), max(b, d))
    edges.sort()


def switch_step(graph: LabeledGraph, rng: np.random.Generator) -> LabeledGraph:
    """One chain step.  Returns the input graph unchanged on a lazy step or
    when fewer than two edges exist (the chain is then trivially stationary)."""
    edges = list(graph.edges())
    if len(edges) < 2:
        return graph
    adj = list(graph.adj)
    move = _propose(edges, adj, rng)
    if move is None:
        return graph
    _apply_switch(edges, adj, move)
    return LabeledGraph(graph.n, tuple(adj))


@dataclass
class SampleResult:
    final: LabeledGraph
    histogram: Counter
    metadata: dict = field(default_factory=dict)


def sample(seq: DegreeSequence, config: ChainConfig) -> SampleResult:
    """Run the chain from the greedy start and histogram the visited states.

    States are keyed by the canonical (sorted) edge list of the labeled
    graph.  Only the ``steps`` states after burn-in are recorded, one per
    step, so the histogram total equals ``config.steps``.
    """
    start = havel_hakimi_graph(seq)
    rng = make_rng(config.seed)
    edges = list(start.edges())
    adj = list(start.adj)
    histogram: Counter = Counter()
    accepted = 0
    trivial = len(edges) < 2
    for step in range(config.burn_in + config.steps):
        if not trivial:
            move = _propose(edges, adj, rng)
            if move is not None:
                _apply_switch(edges, adj, move)
                accepted += 1
        if step >= config.burn_in:
            histogram[tuple(edges)] += 1
    metadata = {
        "rng": RNG_ALGORITHM,
        "seed": config.seed,
        "steps": config.steps,
        "burn_in": config.burn_in,
        "accepted": accepted,
        "start": edges_to_text(start.edges()),
    }
    return SampleResult(
        final=LabeledGraph(seq.n, tuple(adj)), histogram=histogram, metadata=metadata
    )


# ---------------------------------------------------------------------------
# State-space structure at desk scale
# ---------------------------------------------------------------------------

def _switch_targets(adj: tuple[int, ...], edges) -> Iterator[tuple[int, ...]]:
    """All graphs one valid switch away, as adjacency tuples."""
    m = len(edges)
    for x in range(m):
        a, b = edges[x]
        for y in range(x + 1, m):
            c, d = edges[y]
            if a in (c, d) or b in (c, d):
                continue
            for (p, q), (r, s) in (((a, c), (b, d)), ((a, d), (b, c))):
                if adj[p] >> q & 1 or adj[r] >> s & 1:
                    continue
                new = list(adj)
                for u, v in ((a, b), (c, d)):
                    new[u] &= ~(1 << v)
                    new[v] &= ~(1 << u)
                for u, v in ((p, q), (r, s)):
                    new[u] |= 1 << v
                    new[v] |= 1 << u
                yield tuple(new)


def switch_connected(seq: DegreeSequence, max_n: int | None = None) -> bool:
    """Whether the switch graph on all realizations of ``seq`` is connected.

    Explicit check: enumerate the realizations, then BFS along valid
    switches.  Raises NotGraphic when there are no realizations.
    """
    states = {g.adj: g.edges() for g in enumerate_realizations(seq, max_n=max_n)}
    if not states:
        raise NotGraphic(f"{seq} has no realization")
    start = next(iter(states))
    seen = {start}
    frontier = [start]
    while frontier:
        current = frontier.pop()
        for nxt in _switch_targets(current, states[current]):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return len(seen) == len(states)


def tv_distance_to_uniform(
    histogram: Counter, states: list[tuple], total: int
) -> float:
    """Total variation distance between the empirical visit distribution and
    the uniform distribution on ``states``."""
    if total <= 0 or not states:
        raise InvalidInput("need a positive sample size and a non-empty state space")
    uniform = 1.0 / len(states)
    state_set = set(states)
    dist = sum(abs(histogram.get(s, 0) / total - uniform) for s in state_set)
    dist += sum(v / total for s, v in histogram.items() if s not in state_set)
    return 0.5 * dist
