"""Indicator graph of a target digraph, plus bipartiteness utilities.

The indicator of H is the simple graph on V(H) joining u and v exactly
when u != v, u and v share an out-neighbour in H, and each of u, v has
an out-neighbour whose in-degree equals the maximum in-degree of H.
Its edges are the colour pairs the hardness gadgets can force.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .digraph import Digraph, UGraph


@dataclass(frozen=True)
class IndicatorResult:
    graph: UGraph
    delta_minus: int  # the max in-degree used by the construction


def indicator_graph(H: Digraph) -> IndicatorResult:
    """Build the indicator graph of H by direct enumeration of vertex pairs.

    A loop makes a vertex its own out-neighbour and contributes one in-arc,
    so it can serve both as a common out-neighbour and as the max-in-degree
    witness.  With no arcs the result is edgeless.
    """
    delta = H.max_in_degree()
    out_sets = [frozenset(H.out_neighbours(v)) for v in range(H.n)]
    has_witness = [
        any(H.in_degree(w) == delta for w in out_sets[u]) if delta > 0 else False
        for u in range(H.n)
    ]
    edges = set()
    for u in range(H.n):
        if not has_witness[u]:
            continue
        for v in range(u + 1, H.n):
            if has_witness[v] and out_sets[u] & out_sets[v]:
                edges.add((u, v))
    return IndicatorResult(UGraph(H.n, edges), delta)


@dataclass(frozen=True)
class TwoColouringResult:
    """Either a proper 2-colouring or an odd-cycle certificate."""

    colours: Optional[tuple[int, ...]]  # vertex -> 0/1 when bipartite
    odd_cycle: Optional[tuple[int, ...]]  # odd closed cycle otherwise

    @property
    def bipartite(self) -> bool:
        return self.colours is not None


def two_colouring(G: UGraph) -> TwoColouringResult:
    """Proper 2-colouring of G if bipartite, else an odd cycle witness.

    BFS layering per component; the first monochromatic edge closes an odd
    cycle through the two endpoints' tree paths.
    """
    colour: list[int] = [-1] * G.n
    parent: list[int] = [-1] * G.n
    for start in range(G.n):
        if colour[start] != -1:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in G.neighbours(v):
                if colour[w] == -1:
                    colour[w] = 1 - colour[v]
                    parent[w] = v
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return TwoColouringResult(None, _close_odd_cycle(v, w, parent))
    return TwoColouringResult(tuple(colour), None)


def _close_odd_cycle(v: int, w: int, parent: list[int]) -> tuple[int, ...]:
    """Cycle through edge vw and the BFS-tree paths to their meeting point."""
    ancestors_v = [v]
    cur = v
    while parent[cur] != -1:
        cur = parent[cur]
        ancestors_v.append(cur)
    index_of = {u: i for i, u in enumerate(ancestors_v)}
    path_w = [w]
    cur = w
    while cur not in index_of:
        cur = parent[cur]
        path_w.append(cur)
    meet = index_of[path_w[-1]]
    # v .. meet along v's tree path, then back down to w
    cycle = ancestors_v[: meet + 1] + list(reversed(path_w[:-1]))
    return tuple(cycle)
