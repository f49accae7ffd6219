"""Core domain types: degree sequences, parameter regions, labeled graphs,
and single-entry perturbations.

All types here are immutable after construction and safe to share between
threads.  Degree sequences are kept sorted non-increasing; a region is a pair
of degree bounds (c1, c2) on sequences of length n, optionally pinned to a
fixed even degree sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Union

from .errors import (
    ExceedsMax,
    InvalidInput,
    InvalidRegion,
    NegativeDegree,
)


@dataclass(frozen=True, order=True)
class DegreeSequence:
    """A non-increasing vector of vertex degrees.

    Raw input is normalised by sorting.  Entries must be non-negative
    integers; with ``bounded=True`` the constructor also rejects entries
    above n - 1 (the ceiling for a simple graph on n vertices), which is
    what a graphic candidate must satisfy.  Ordering compares entry tuples
    lexicographically.
    """

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int], *, bounded: bool = False):
        degs = tuple(sorted((int(d) for d in degrees), reverse=True))
        if not degs:
            raise InvalidInput("degree sequence must be non-empty")
        if degs[-1] < 0:
            raise NegativeDegree(f"negative entry in {degs}")
        if bounded and degs[0] > len(degs) - 1:
            raise ExceedsMax(f"entry {degs[0]} exceeds n - 1 = {len(degs) - 1}")
        object.__setattr__(self, "degrees", degs)

    @classmethod
    def parse(cls, text: str, *, bounded: bool = False) -> "DegreeSequence":
        """Parse the canonical comma-separated form, e.g. ``4,4,3,1,1,1,1,1``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise InvalidInput(f"cannot parse degree sequence from {text!r}")
        try:
            values = [int(p) for p in parts]
        except ValueError as exc:
            raise InvalidInput(f"cannot parse degree sequence from {text!r}") from exc
        return cls(values, bounded=bounded)

    @property
    def n(self) -> int:
        return len(self.degrees)

    @property
    def sigma(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __getitem__(self, idx):
        return self.degrees[idx]

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degrees)


@dataclass(frozen=True)
class VerySimpleRegion:
    """All non-increasing length-n sequences with entries in [c2, c1] and even sum."""

    n: int
    c1: int
    c2: int

    def __post_init__(self):
        if not (self.n > self.c1 >= self.c2 >= 0):
            raise InvalidRegion(
                f"need n > c1 >= c2 >= 0, got n={self.n}, c1={self.c1}, c2={self.c2}"
            )

    def sigma_values(self) -> Iterator[int]:
        """Admissible even degree sums, ascending."""
        lo = self.n * self.c2
        lo += lo % 2
        return iter(range(lo, self.n * self.c1 + 1, 2))

    def __str__(self) -> str:
        return f"n={self.n},c1={self.c1},c2={self.c2}"


@dataclass(frozen=True)
class SimpleRegion:
    """The slice of a very simple region with a fixed even degree sum."""

    n: int
    sigma: int
    c1: int
    c2: int

    def __post_init__(self):
        if not (self.n > self.c1 >= self.c2 >= 0):
            raise InvalidRegion(
                f"need n > c1 >= c2 >= 0, got n={self.n}, c1={self.c1}, c2={self.c2}"
            )
        if not (self.n * self.c1 >= self.sigma >= self.n * self.c2):
            raise InvalidRegion(
                f"need n*c1 >= sigma >= n*c2, got sigma={self.sigma} for {self}"
            )
        if self.sigma % 2:
            raise InvalidRegion(f"sigma must be even, got {self.sigma}")

    @property
    def very_simple(self) -> VerySimpleRegion:
        return VerySimpleRegion(self.n, self.c1, self.c2)

    def __str__(self) -> str:
        return f"n={self.n},sigma={self.sigma},c1={self.c1},c2={self.c2}"


Region = Union[SimpleRegion, VerySimpleRegion]


def parse_region(text: str) -> Region:
    """Parse ``n=8,sigma=16,c1=4,c2=1`` (sigma optional) into a region."""
    fields: dict[str, int] = {}
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "=" not in part:
            raise InvalidInput(f"cannot parse region field {part!r}")
        key, _, value = part.partition("=")
        try:
            fields[key.strip()] = int(value)
        except ValueError as exc:
            raise InvalidInput(f"cannot parse region field {part!r}") from exc
    unknown = set(fields) - {"n", "sigma", "c1", "c2"}
    if unknown or not {"n", "c1", "c2"} <= set(fields):
        raise InvalidInput(f"region needs n, c1, c2 and optional sigma: {text!r}")
    if "sigma" in fields:
        return SimpleRegion(fields["n"], fields["sigma"], fields["c1"], fields["c2"])
    return VerySimpleRegion(fields["n"], fields["c1"], fields["c2"])


def membership(seq: DegreeSequence, region: Region) -> bool:
    """Whether ``seq`` belongs to ``region``.  Total: never raises."""
    degs = seq.degrees
    if len(degs) != region.n:
        return False
    if degs[0] > region.c1 or degs[-1] < region.c2:
        return False
    total = seq.sigma
    if total % 2:
        return False
    if isinstance(region, SimpleRegion) and total != region.sigma:
        return False
    return True


def _bounded_partitions(n: int, total: int, hi: int, lo: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing length-n tuples with entries in [lo, hi] summing to total."""
    if total < n * lo or total > n * hi:
        return
    if n == 1:
        yield (total,)
        return
    first_lo = max(lo, -(-total // n))  # ceil(total / n), first entry is the max
    for first in range(min(hi, total - (n - 1) * lo), first_lo - 1, -1):
        for rest in _bounded_partitions(n - 1, total - first, first, lo):
            yield (first,) + rest


def iter_region(region: Region) -> Iterator[DegreeSequence]:
    """Enumerate every member of the region.

    Members of each fixed sum come out lexicographically descending; for a
    very simple region the admissible sums are visited in ascending order.
    """
    if isinstance(region, SimpleRegion):
        sigmas: Iterable[int] = (region.sigma,)
    else:
        sigmas = region.sigma_values()
    for sigma in sigmas:
        for degs in _bounded_partitions(region.n, sigma, region.c1, region.c2):
            yield DegreeSequence(degs)


class PerturbationKind(Enum):
    """The five single-step degree perturbations."""

    MINUS_MINUS = "--"  # subtract 1 at two distinct positions
    PLUS_PLUS = "++"    # add 1 at two distinct positions
    PLUS_MINUS = "+-"   # add 1 at i, subtract 1 at j
    MINUS_TWO = "-2"    # subtract 2 at one position
    PLUS_TWO = "+2"     # add 2 at one position

    @property
    def pairwise(self) -> bool:
        return self in (
            PerturbationKind.MINUS_MINUS,
            PerturbationKind.PLUS_PLUS,
            PerturbationKind.PLUS_MINUS,
        )

    @property
    def sigma_delta(self) -> int:
        return {
            PerturbationKind.MINUS_MINUS: -2,
            PerturbationKind.PLUS_PLUS: 2,
            PerturbationKind.PLUS_MINUS: 0,
            PerturbationKind.MINUS_TWO: -2,
            PerturbationKind.PLUS_TWO: 2,
        }[self]


@dataclass(frozen=True)
class Perturbation:
    """A perturbation applied at 1-based positions of a sorted sequence.

    ``j`` is unused for the single-position kinds.  The doubled kinds model
    the i = j case of the pairwise operations, so the pairwise kinds always
    require i != j.
    """

    kind: PerturbationKind
    i: int
    j: int | None = None

    def __post_init__(self):
        if self.i < 1:
            raise InvalidInput(f"position i must be >= 1, got {self.i}")
        if self.kind.pairwise:
            if self.j is None or self.j < 1:
                raise InvalidInput(f"{self.kind.value} needs a position j >= 1")
            if self.i == self.j:
                raise InvalidInput(
                    f"{self.kind.value} needs i != j; use the doubled kinds for i = j"
                )
        elif self.j is not None:
            raise InvalidInput(f"{self.kind.value} takes a single position")

    @property
    def sigma_delta(self) -> int:
        return self.kind.sigma_delta


def apply_perturbation(
    seq: DegreeSequence, pert: Perturbation, *, permissive: bool = False
) -> DegreeSequence:
    """Apply ``pert`` to ``seq`` and return the re-sorted result.

    Raises NegativeDegree if an entry would drop below zero and ExceedsMax if
    an entry would exceed n - 1.  ``permissive=True`` suppresses ExceedsMax
    (such sequences simply have zero realizations); entries below zero remain
    an error because a DegreeSequence cannot represent them.
    """
    n = seq.n
    if pert.i > n or (pert.j is not None and pert.j > n):
        raise InvalidInput(f"positions out of range for length {n}")
    values = list(seq.degrees)
    kind = pert.kind
    if kind is PerturbationKind.MINUS_MINUS:
        values[pert.i - 1] -= 1
        values[pert.j - 1] -= 1
    elif kind is PerturbationKind.PLUS_PLUS:
        values[pert.i - 1] += 1
        values[pert.j - 1] += 1
    elif kind is PerturbationKind.PLUS_MINUS:
        values[pert.i - 1] += 1
        values[pert.j - 1] -= 1
    elif kind is PerturbationKind.MINUS_TWO:
        values[pert.i - 1] -= 2
    else:
        values[pert.i - 1] += 2
    if min(values) < 0:
        raise NegativeDegree(f"{pert.kind.value} at {pert.i},{pert.j} drops below zero")
    if not permissive and max(values) > n - 1:
        raise ExceedsMax(f"{pert.kind.value} at {pert.i},{pert.j} exceeds n - 1 = {n - 1}")
    return DegreeSequence(values)


@dataclass(frozen=True)
class LabeledGraph:
    """A simple graph on labeled vertices 0 .. n-1.

    Adjacency is stored as one neighbour bitset per vertex: bit j of
    ``adj[i]`` is set iff {i, j} is an edge.  Instances are immutable.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise InvalidInput("adjacency length must equal n")
        for i, bits in enumerate(self.adj):
            if bits >> self.n:
                raise InvalidInput(f"vertex {i} has neighbours outside 0..{self.n - 1}")
            if bits >> i & 1:
                raise InvalidInput(f"self-loop at vertex {i}")
            for j in range(self.n):
                if (bits >> j & 1) != (self.adj[j] >> i & 1):
                    raise InvalidInput(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def empty(cls, n: int) -> "LabeledGraph":
        return cls(n, (0,) * n)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "LabeledGraph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidInput(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InvalidInput(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise InvalidInput(f"duplicate edge ({u}, {v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        bits = self.adj[u]
        return tuple(v for v in range(self.n) if bits >> v & 1)

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def degrees(self) -> tuple[int, ...]:
        """Positional degree vector, indexed by vertex label."""
        return tuple(bits.bit_count() for bits in self.adj)

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(self.degrees())

    @property
    def edge_count(self) -> int:
        return sum(bits.bit_count() for bits in self.adj) // 2

    def edges(self) -> tuple[tuple[int, int], ...]:
        """Sorted edge list; also the canonical form of the labeled graph."""
        out = []
        for u in range(self.n):
            bits = self.adj[u] >> (u + 1) << (u + 1)
            while bits:
                v = (bits & -bits).bit_length() - 1
                out.append((u, v))
                bits &= bits - 1
        return tuple(out)

    def canonical_key(self) -> tuple[tuple[int, int], ...]:
        return self.edges()

    def __str__(self) -> str:
        return edges_to_text(self.edges())


def edges_to_text(edges: Iterable[tuple[int, int]]) -> str:
    """Render an edge list with 1-based labels, e.g. ``1-2,3-4``."""
    return ",".join(f"{u + 1}-{v + 1}" for u, v in edges)
