"""Directed and undirected graph value types and structural queries.

Vertices are dense integer indices 0..n-1.  Both types are immutable
after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import ContractError

Colouring = tuple[int, ...]
Assignment = tuple[bool, ...]


@dataclass(frozen=True)
class Digraph:
    """A digraph with loops allowed and no parallel arcs (set semantics)."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ContractError(f"vertex count must be nonnegative, got {n}")
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"arc ({u}, {v}) out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcset)

    @cached_property
    def sorted_arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.arcs))

    @cached_property
    def _out_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            adj[u].append(v)
        return tuple(tuple(a) for a in adj)

    @cached_property
    def _in_adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_arcs:
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ContractError(f"vertex {v} out of range for n={self.n}")

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbours(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._out_adj[v]

    def in_neighbours(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._in_adj[v]

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._in_adj[v])

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self._out_adj[v])

    def max_in_degree(self) -> int:
        """Maximum in-degree over all vertices; loops count, 0 if arcless."""
        if self.n == 0:
            return 0
        return max(len(self._in_adj[v]) for v in range(self.n))

    def is_irreflexive(self) -> bool:
        """True iff the digraph has no loop."""
        return all((v, v) not in self.arcs for v in range(self.n))

    def weak_components(self) -> tuple[tuple[int, ...], ...]:
        """Connected components of the underlying undirected graph.

        Components are ordered by their smallest vertex; vertices within a
        component are sorted.
        """
        seen = [False] * self.n
        components: list[tuple[int, ...]] = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            block = [start]
            stack = [start]
            while stack:
                v = stack.pop()
                for w in self._out_adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        block.append(w)
                        stack.append(w)
                for w in self._in_adj[v]:
                    if not seen[w]:
                        seen[w] = True
                        block.append(w)
                        stack.append(w)
            components.append(tuple(sorted(block)))
        return tuple(components)


@dataclass(frozen=True)
class UGraph:
    """A simple undirected graph: no loops, no parallel edges."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ContractError(f"vertex count must be nonnegative, got {n}")
        normalized = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ContractError(f"loop at vertex {u} not allowed in a simple graph")
            if not (0 <= u < n and 0 <= v < n):
                raise ContractError(f"edge ({u}, {v}) out of range for n={n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(normalized))

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _adj(self) -> tuple[tuple[int, ...], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def neighbours(self, v: int) -> tuple[int, ...]:
        if not (0 <= v < self.n):
            raise ContractError(f"vertex {v} out of range for n={self.n}")
        return self._adj[v]
