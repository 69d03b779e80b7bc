"""Polynomial-time decision for targets of maximum in-degree 1.

Such a target decomposes into weak components that are either
out-arborescences or a unique directed cycle with out-arborescences
hanging off it (each vertex has at most one in-arc, so walking backwards
is deterministic).  Its core is a loop if any component has one, else a
disjoint union of directed cycles whose lengths are minimal under
divisibility, else a longest directed path.  Against such a core,
homomorphism existence reduces to integer or modular levelings, and the
frugality condition degenerates to an in-degree bound on the instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .digraph import Colouring, Digraph
from .errors import CertificateError, ContractError
from .solver import is_homomorphism, is_t_frugal


@dataclass(frozen=True)
class CoreShape:
    """Core of a max-in-degree-1 digraph plus a retraction onto it.

    kind is "loop", "path", or "cycles"; path_order is the vertex count
    of a path core; lengths are the cycle lengths of a cycle-union core,
    pairwise non-dividing.  retraction maps every vertex of H to a core
    vertex and fixes the core pointwise.
    """

    kind: str
    core_vertices: tuple[int, ...]
    retraction: tuple[int, ...]
    path_order: int = 0
    lengths: tuple[int, ...] = ()


@dataclass(frozen=True)
class _Component:
    vertices: tuple[int, ...]
    cycle: tuple[int, ...]  # in arc order, rotated to start at min vertex; () if none
    root: int  # in-degree-0 vertex when acyclic, else -1
    depth: dict[int, int]  # acyclic: distance from root; cyclic: backward distance to cycle
    cycle_pos: dict[int, int]  # nearest cycle vertex's position, cyclic components only
    height: int


def _analyse_component(H: Digraph, vertices: tuple[int, ...]) -> _Component:
    vs = set(vertices)
    arc_count = sum(1 for u, v in H.arcs if v in vs)
    pred = {v: (H.in_neighbours(v)[0] if H.in_neighbours(v) else None) for v in vertices}
    if arc_count == len(vertices):
        # every vertex has exactly one in-arc: walk backwards to the cycle
        seen: dict[int, int] = {}
        walk = []
        cur = vertices[0]
        while cur not in seen:
            seen[cur] = len(walk)
            walk.append(cur)
            cur = pred[cur]
        backward = walk[seen[cur]:]  # cycle in backward-walk order
        cycle = tuple(reversed(backward))  # arc order: cycle[i] -> cycle[i+1]
        start = cycle.index(min(cycle))
        cycle = cycle[start:] + cycle[:start]
        on_cycle = set(cycle)
        pos = {v: i for i, v in enumerate(cycle)}
        depth = {v: 0 for v in on_cycle}
        cycle_pos = dict(pos)
        order = list(cycle)
        i = 0
        while i < len(order):
            v = order[i]
            i += 1
            for w in H.out_neighbours(v):
                if w in vs and w not in depth:
                    depth[w] = depth[v] + 1
                    cycle_pos[w] = cycle_pos[v]
                    order.append(w)
        return _Component(vertices, cycle, -1, depth, cycle_pos, max(depth.values()))
    # out-arborescence: unique root of in-degree 0, arcs point away from it
    root = next(v for v in vertices if pred[v] is None)
    depth = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        v = order[i]
        i += 1
        for w in H.out_neighbours(v):
            if w not in depth:
                depth[w] = depth[v] + 1
                order.append(w)
    return _Component(vertices, (), root, depth, {}, max(depth.values()))


def _longest_path(H: Digraph, comp: _Component) -> list[int]:
    """Root-to-deepest-leaf path of an arborescence component, choosing the
    deepest (then smallest-index) child at every step."""
    subtree_height: dict[int, int] = {}
    for v in sorted(comp.vertices, key=lambda v: -comp.depth[v]):
        children = [w for w in H.out_neighbours(v) if comp.depth.get(w) == comp.depth[v] + 1]
        subtree_height[v] = 1 + max((subtree_height[w] for w in children), default=-1)
    path = [comp.root]
    while True:
        v = path[-1]
        children = [w for w in H.out_neighbours(v) if comp.depth.get(w) == comp.depth[v] + 1]
        if not children:
            return path
        path.append(max(children, key=lambda w: (subtree_height[w], -w)))


def compute_core_delta1(H: Digraph) -> CoreShape:
    """Core of a max-in-degree-1 digraph, with an explicit retraction."""
    if H.max_in_degree() > 1:
        raise ContractError("core computation requires max in-degree at most 1")
    if H.n == 0:
        return CoreShape("path", (), (), path_order=0)
    comps = [_analyse_component(H, vs) for vs in H.weak_components()]
    retraction = [-1] * H.n

    loops = [c for c in comps if len(c.cycle) == 1]
    if loops:
        loop_vertex = min(c.cycle[0] for c in loops)
        return CoreShape("loop", (loop_vertex,), tuple([loop_vertex] * H.n))

    cyclic = [c for c in comps if c.cycle]
    if cyclic:
        lengths = {len(c.cycle) for c in cyclic}
        kept = sorted(k for k in lengths if not any(j != k and k % j == 0 for j in lengths))
        representative: dict[int, _Component] = {}
        for k in kept:
            representative[k] = min(
                (c for c in cyclic if len(c.cycle) == k), key=lambda c: c.cycle[0]
            )
        for comp in comps:
            if comp.cycle:
                m = len(comp.cycle)
                k = next(k for k in kept if m % k == 0)
            else:
                k = kept[0]
            target = representative[k].cycle
            if comp.cycle:
                for v in comp.vertices:
                    retraction[v] = target[(comp.cycle_pos[v] + comp.depth[v]) % k]
            else:
                for v in comp.vertices:
                    retraction[v] = target[comp.depth[v] % k]
        core = tuple(sorted(v for k in kept for v in representative[k].cycle))
        return CoreShape("cycles", core, tuple(retraction), lengths=tuple(kept))

    height = max(c.height for c in comps)
    chosen = min((c for c in comps if c.height == height), key=lambda c: c.vertices[0])
    path = _longest_path(H, chosen)
    for comp in comps:
        for v in comp.vertices:
            retraction[v] = path[comp.depth[v]]
    return CoreShape("path", tuple(sorted(path)), tuple(retraction), path_order=height + 1)


def _component_levelings(G: Digraph) -> list[tuple[int, int]]:
    """Per weak component: (span of the spanning-tree leveling, gcd of all
    leveling discrepancies).  A zero gcd means a consistent integer
    leveling exists; the component maps to a k-cycle iff k divides the gcd.
    """
    level = [0] * G.n
    results = []
    for comp in G.weak_components():
        seen = {comp[0]}
        level[comp[0]] = 0
        queue = [comp[0]]
        disc = 0
        while queue:
            v = queue.pop()
            for w in G.out_neighbours(v):
                if w not in seen:
                    seen.add(w)
                    level[w] = level[v] + 1
                    queue.append(w)
                else:
                    disc = gcd(disc, level[v] + 1 - level[w])
            for u in G.in_neighbours(v):
                if u not in seen:
                    seen.add(u)
                    level[u] = level[v] - 1
                    queue.append(u)
                else:
                    disc = gcd(disc, level[u] + 1 - level[v])
        span = max(level[v] for v in comp) - min(level[v] for v in comp)
        results.append((span, disc))
    return results


def homs_to_path(G: Digraph, p: int) -> bool:
    """Does G map homomorphically to the directed path on p vertices?

    True iff every weak component has a consistent integer leveling of
    span at most p - 1.
    """
    if p < 1:
        raise ContractError(f"path order must be >= 1, got {p}")
    return all(disc == 0 and span <= p - 1 for span, disc in _component_levelings(G))


def homs_to_cycle(G: Digraph, k: int) -> bool:
    """Does G map homomorphically to the directed cycle of length k?

    k = 1 is the loop and accepts everything; otherwise every weak
    component needs a leveling modulo k.
    """
    if k < 1:
        raise ContractError(f"cycle length must be >= 1, got {k}")
    if k == 1:
        return True
    return all(disc % k == 0 for _, disc in _component_levelings(G))


def homs_to_cycle_union(G: Digraph, lengths: Sequence[int]) -> bool:
    """Does G map to a disjoint union of directed cycles of these lengths?

    Each weak component must map into a single cycle, so this is a
    per-component disjunction.
    """
    if not lengths:
        raise ContractError("cycle union must be nonempty")
    if any(k < 1 for k in lengths):
        raise ContractError("cycle lengths must be >= 1")
    if any(k == 1 for k in lengths):
        return True
    return all(
        any(disc % k == 0 for k in lengths) for _, disc in _component_levelings(G)
    )


def decide_t_frugal_delta1(G: Digraph, H: Digraph, t: int) -> bool:
    """Polynomial-time decision of t-frugal H-colouring for max-in-degree-1
    targets: an instance in-degree bound, then a homomorphism test against
    the core.

    Once the instance's max in-degree is at most t, every homomorphism is
    t-frugal, because all in-neighbours of a vertex share their image.
    """
    if t < 1:
        raise ContractError(f"frugality budget must be >= 1, got {t}")
    if H.max_in_degree() > 1:
        raise ContractError("polynomial decision requires target max in-degree at most 1")
    if not G.is_irreflexive():
        raise ContractError("instance digraph must be irreflexive")
    if G.max_in_degree() > t:
        return False
    if H.n == 0:
        return G.n == 0
    shape = compute_core_delta1(H)
    if shape.kind == "loop":
        return True
    if shape.kind == "path":
        return homs_to_path(G, shape.path_order)
    return homs_to_cycle_union(G, shape.lengths)


def compose_retraction(
    G: Digraph, H: Digraph, shape: CoreShape, f: Colouring, t: int
) -> Colouring:
    """Compose a t-frugal H-colouring with the retraction onto the core.

    The result is a t-frugal colouring into the core subgraph.
    """
    if H.max_in_degree() > 1:
        raise ContractError("retraction composition requires target max in-degree at most 1")
    if not (is_homomorphism(G, H, f) and is_t_frugal(G, H, f, t)):
        raise CertificateError("colouring is not a valid t-frugal homomorphism")
    return tuple(shape.retraction[h] for h in f)
