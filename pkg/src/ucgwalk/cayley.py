"""Unitary Cayley graphs and symmetric circulant graphs over Z_n.

Vertices are labeled 0..n-1 and all vertex arithmetic is mod n. Adjacency is
stored dense; the target scale (a few thousand vertices) does not justify
sparse machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .numtheory import factorize, units_mod


@dataclass(frozen=True, eq=False)
class CirculantGraph:
    """Circulant graph on Z_n: u ~ v iff (v - u) mod n is in the connection set.

    Used for oracle cross-checks against arbitrary symmetric connection sets.
    """

    n: int
    connection_set: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("n must be >= 2")
        seen = set(self.connection_set)
        for s in self.connection_set:
            if not 1 <= s <= self.n - 1:
                raise ValueError("connection set elements must lie in [1, n-1]")
            if (self.n - s) % self.n not in seen:
                raise ValueError("connection set must be closed under s -> n - s")

    def adjacency(self) -> np.ndarray:
        row = np.zeros(self.n, dtype=np.int64)
        row[list(self.connection_set)] = 1
        return np.stack([np.roll(row, r) for r in range(self.n)])


@dataclass(frozen=True, eq=False)
class UnitaryCayleyGraph:
    """Graph on Z_n with u ~ v exactly when gcd(u - v, n) == 1."""

    n: int
    connection_set: tuple[int, ...]
    adjacency: np.ndarray = field(repr=False)

    @property
    def degree(self) -> int:
        return len(self.connection_set)


def build_unitary_cayley_graph(n: int) -> UnitaryCayleyGraph:
    """Construct the unitary Cayley graph on n >= 2 vertices.

    The connection set is the units mod n, so every row of the circulant
    adjacency matrix is row 0 shifted, and the graph is euler_phi(n)-regular.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    units = units_mod(n)
    row = np.zeros(n, dtype=np.int64)
    row[list(units)] = 1
    adjacency = np.stack([np.roll(row, r) for r in range(n)])
    return UnitaryCayleyGraph(n=n, connection_set=units, adjacency=adjacency)


def is_complete_multipartite_for_prime_power(graph: UnitaryCayleyGraph) -> bool:
    """For n = p^k, check the graph is complete p-partite by residue mod p.

    Edges must run exactly between distinct residue classes mod p. Rejects
    vertex counts that are not prime powers.
    """
    factors = factorize(graph.n).factors
    if len(factors) != 1:
        raise ValueError(f"n={graph.n} is not a prime power")
    p = factors[0][0]
    residues = np.arange(graph.n) % p
    expected = (residues[:, None] != residues[None, :]).astype(np.int64)
    return bool(np.array_equal(graph.adjacency, expected))


def degree_sequence(graph: UnitaryCayleyGraph) -> list[int]:
    """Per-vertex degrees; all equal euler_phi(n) by regularity."""
    return [int(x) for x in graph.adjacency.sum(axis=1)]


def graph_to_dict(graph: UnitaryCayleyGraph) -> dict:
    """JSON-ready form: {"n", "connection_set", "adjacency_rows"}."""
    return {
        "n": graph.n,
        "connection_set": [int(s) for s in graph.connection_set],
        "adjacency_rows": [[int(x) for x in row] for row in graph.adjacency],
    }


def _connected(adjacency: np.ndarray) -> bool:
    n = adjacency.shape[0]
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for v in np.flatnonzero(adjacency[u]):
            if int(v) not in seen:
                seen.add(int(v))
                frontier.append(int(v))
    return len(seen) == n


def is_connected(graph: UnitaryCayleyGraph) -> bool:
    """Breadth-first reachability of every vertex from vertex 0."""
    return _connected(graph.adjacency)


__all__ = [
    "CirculantGraph",
    "UnitaryCayleyGraph",
    "build_unitary_cayley_graph",
    "degree_sequence",
    "graph_to_dict",
    "is_complete_multipartite_for_prime_power",
    "is_connected",
]
