"""Certificate verification and exact search for (frugal) homomorphisms.

The searches are complete backtracking over instance vertices in index
order, trying target vertices in index order, so results are
deterministic.  Candidate sets are kept as bitmasks over V(H) and pruned
by arc consistency against already-assigned neighbours; frugal searches
additionally keep a per-(vertex, colour) counter of coloured
in-neighbours and prune a colour from the remaining in-neighbours of a
vertex as soon as the counter saturates.  Pruning only removes values
that cannot appear in any completion, so the search stays exhaustive.

Witness searches additionally decompose: two unassigned vertices
interact only through an arc between them or through a common
out-neighbour's frugality counter, so once the earlier vertices are
assigned the rest of the instance often falls apart into independent
blocks (one per gadget in reduction outputs).  The decomposition depends only
on the fixed vertex order, so it is computed once up front; per-block
lexicographically-first solutions combine into the global
lexicographically-first witness, keeping results identical to the plain
search while avoiding the product-of-blocks blowup on unsatisfiable
instances.
"""

from __future__ import annotations

from typing import Iterator, Optional

from .digraph import Colouring, Digraph, UGraph
from .errors import BudgetExceededError, ContractError


def _check_t(t: int) -> None:
    if t < 1:
        raise ContractError(f"frugality budget must be >= 1, got {t}")


def _check_colouring(G, H, f) -> None:
    if len(f) != G.n:
        raise ContractError(f"colouring has length {len(f)}, expected {G.n}")
    for g, h in enumerate(f):
        if not (0 <= h < H.n):
            raise ContractError(f"image {h} of vertex {g} out of range for target n={H.n}")


def is_homomorphism(G: Digraph, H: Digraph, f: Colouring) -> bool:
    """True iff every arc of G maps to an arc of H under f."""
    _check_colouring(G, H, f)
    return all((f[u], f[v]) in H.arcs for u, v in G.arcs)


def is_t_frugal(G: Digraph, H: Digraph, f: Colouring, t: int) -> bool:
    """True iff no vertex of G has more than t in-neighbours sharing an image.

    Checks the frugality condition only; combine with is_homomorphism for
    full certificate validity.
    """
    _check_colouring(G, H, f)
    _check_t(t)
    for v in range(G.n):
        counts: dict[int, int] = {}
        for u in G.in_neighbours(v):
            c = counts.get(f[u], 0) + 1
            if c > t:
                return False
            counts[f[u]] = c
    return True


def is_valid_t_frugal(G: Digraph, H: Digraph, f: Colouring, t: int) -> bool:
    """Both conditions at once: homomorphism and t-frugality."""
    return is_homomorphism(G, H, f) and is_t_frugal(G, H, f, t)


def is_graph_homomorphism(G: UGraph, H: UGraph, f: Colouring) -> bool:
    """True iff every edge of G maps to an edge of H under f."""
    _check_colouring(G, H, f)
    return all(f[u] != f[v] and H.has_edge(f[u], f[v]) for u, v in G.edges)


def _search_digraph(
    G: Digraph,
    H: Digraph,
    t: Optional[int],
    budget: Optional[int] = None,
) -> Iterator[Colouring]:
    """Yield every homomorphism G -> H (t-frugal when t is given), in
    lexicographic order of the image tuple."""
    n, hn = G.n, H.n
    if n == 0:
        yield ()
        return
    if hn == 0:
        return

    out_mask = [0] * hn
    in_mask = [0] * hn
    for u, v in H.arcs:
        out_mask[u] |= 1 << v
        in_mask[v] |= 1 << u
    gout = [G.out_neighbours(v) for v in range(n)]
    gin = [G.in_neighbours(v) for v in range(n)]

    full = (1 << hn) - 1
    loop_mask = 0
    for h in range(hn):
        if (h, h) in H.arcs:
            loop_mask |= 1 << h

    dom = [full] * n
    for v in range(n):
        if (v, v) in G.arcs:
            dom[v] &= loop_mask
        if t is not None and gin[v]:
            need = len(gin[v])
            feasible = 0
            for h in range(hn):
                if t * in_mask[h].bit_count() >= need:
                    feasible |= 1 << h
            dom[v] &= feasible
        if dom[v] == 0:
            return

    counts = [[0] * hn for _ in range(n)] if t is not None else None
    assignment = [-1] * n
    nodes = 0

    def extend(v: int) -> Iterator[Colouring]:
        nonlocal nodes
        if v == n:
            yield tuple(assignment)
            return
        remaining = dom[v]
        while remaining:
            bit = remaining & -remaining
            remaining ^= bit
            h = bit.bit_length() - 1
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(f"search exceeded budget of {budget} nodes")
            if counts is not None:
                if any(counts[w][h] >= t for w in gout[v]):
                    continue
            assignment[v] = h
            if counts is not None:
                for w in gout[v]:
                    counts[w][h] += 1
            undo: list[tuple[int, int]] = []
            ok = True
            for w in gout[v]:
                if w > v:
                    nd = dom[w] & out_mask[h]
                    if nd != dom[w]:
                        undo.append((w, dom[w]))
                        dom[w] = nd
                        if nd == 0:
                            ok = False
                            break
            if ok:
                for u in gin[v]:
                    if u > v:
                        nd = dom[u] & in_mask[h]
                        if nd != dom[u]:
                            undo.append((u, dom[u]))
                            dom[u] = nd
                            if nd == 0:
                                ok = False
                                break
            if ok and counts is not None:
                for w in gout[v]:
                    if counts[w][h] == t:
                        for u in gin[w]:
                            if u > v:
                                nd = dom[u] & ~bit
                                if nd != dom[u]:
                                    undo.append((u, dom[u]))
                                    dom[u] = nd
                                    if nd == 0:
                                        ok = False
                                        break
                        if not ok:
                            break
            if ok:
                yield from extend(v + 1)
            for w, old in reversed(undo):
                dom[w] = old
            if counts is not None:
                for w in gout[v]:
                    counts[w][h] -= 1
            assignment[v] = -1

    yield from extend(0)


class _UnionFind:
    def __init__(self, members):
        self.parent = {v: v for v in members}
        self.count = len(self.parent)

    def find(self, a):
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb
            self.count -= 1


def _coupled_components(vertex_list, gout, frugal: bool) -> list[list[int]]:
    """Components of the coupling relation restricted to vertex_list: an
    arc between two members, or two members feeding a common
    out-neighbour's frugality counter (the out-neighbour itself may lie
    outside the set)."""
    uf = _UnionFind(vertex_list)
    members = uf.parent
    seen: dict[int, int] = {}
    for v in vertex_list:
        for x in gout[v]:
            if x in members:
                uf.union(v, x)
            if frugal:
                if x in seen:
                    uf.union(v, seen[x])
                else:
                    seen[x] = v
    blocks: dict[int, list[int]] = {}
    for v in vertex_list:
        blocks.setdefault(uf.find(v), []).append(v)
    return sorted(blocks.values(), key=lambda b: b[0])


def _layout(vertices: tuple[int, ...], gout, gin, frugal: bool):
    """Static solve plan for a vertex set: assign a prefix in index order,
    then recurse into the independent blocks the remainder splits into.

    Couplings to vertices before the set are already settled by the time
    the set is reached, so they do not bind.  Returns (prefix, subplans).
    """
    m = len(vertices)
    if m == 0:
        return (), ()
    # reverse-incremental union-find: counts_after[i] = number of coupling
    # components of vertices[i:]
    uf = _UnionFind(())
    rep: dict[int, int] = {}
    counts_after = [0] * m
    for i in range(m - 1, -1, -1):
        v = vertices[i]
        uf.parent[v] = v
        uf.count += 1
        for w in gout[v]:
            if w in uf.parent:
                uf.union(v, w)
            if frugal:
                if w in rep:
                    uf.union(v, rep[w])
                rep[w] = v
        for u in gin[v]:
            if u in uf.parent:
                uf.union(v, u)
        counts_after[i] = uf.count
    split_at = next((i for i in range(m) if counts_after[i] >= 2), None)
    if split_at is None:
        return vertices, ()
    blocks = _coupled_components(list(vertices[split_at:]), gout, frugal)
    subplans = tuple(_layout(tuple(b), gout, gin, frugal) for b in blocks)
    return vertices[:split_at], subplans


class _WitnessSearch:
    """Trail-based backtracking for the first (lexicographic) witness."""

    def __init__(self, G: Digraph, H: Digraph, t: Optional[int], budget: Optional[int]):
        self.t = t
        self.budget = budget
        self.nodes = 0
        hn = H.n
        self.out_mask = [0] * hn
        self.in_mask = [0] * hn
        for u, v in H.arcs:
            self.out_mask[u] |= 1 << v
            self.in_mask[v] |= 1 << u
        self.gout = [G.out_neighbours(v) for v in range(G.n)]
        self.gin = [G.in_neighbours(v) for v in range(G.n)]
        full = (1 << hn) - 1
        loop_mask = 0
        for h in range(hn):
            if (h, h) in H.arcs:
                loop_mask |= 1 << h
        self.dom = [full] * G.n
        self.feasible = True
        for v in range(G.n):
            if (v, v) in G.arcs:
                self.dom[v] &= loop_mask
            if t is not None and self.gin[v]:
                need = len(self.gin[v])
                allowed = 0
                for h in range(hn):
                    if t * self.in_mask[h].bit_count() >= need:
                        allowed |= 1 << h
                self.dom[v] &= allowed
            if self.dom[v] == 0:
                self.feasible = False
        self.counts = [[0] * hn for _ in range(G.n)] if t is not None else None
        self.assignment = [-1] * G.n
        self.trail: list[tuple] = []

    def rollback(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            kind, a, b = trail.pop()
            if kind == 0:
                self.dom[a] = b
            elif kind == 1:
                self.assignment[a] = -1
            else:
                self.counts[a][b] -= 1

    def try_assign(self, v: int, h: int) -> bool:
        """Assign v -> h, push all mutations on the trail; False means a
        contradiction was reached (caller rolls back)."""
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(f"search exceeded budget of {self.budget} nodes")
        t, counts = self.t, self.counts
        gout_v = self.gout[v]
        if counts is not None:
            for w in gout_v:
                if counts[w][h] >= t:
                    return False
        trail, dom, assignment = self.trail, self.dom, self.assignment
        assignment[v] = h
        trail.append((1, v, 0))
        if counts is not None:
            for w in gout_v:
                counts[w][h] += 1
                trail.append((2, w, h))
        bit = 1 << h
        out_mask_h = self.out_mask[h]
        for w in gout_v:
            if assignment[w] < 0:
                nd = dom[w] & out_mask_h
                if nd != dom[w]:
                    trail.append((0, w, dom[w]))
                    dom[w] = nd
                    if nd == 0:
                        return False
        in_mask_h = self.in_mask[h]
        for u in self.gin[v]:
            if assignment[u] < 0:
                nd = dom[u] & in_mask_h
                if nd != dom[u]:
                    trail.append((0, u, dom[u]))
                    dom[u] = nd
                    if nd == 0:
                        return False
        if counts is not None:
            for w in gout_v:
                if counts[w][h] == t:
                    for u in self.gin[w]:
                        if assignment[u] < 0:
                            nd = dom[u] & ~bit
                            if nd != dom[u]:
                                trail.append((0, u, dom[u]))
                                dom[u] = nd
                                if nd == 0:
                                    return False
        return True

    def run(self, plan) -> bool:
        """True iff the plan's vertices admit an extension; on success the
        lexicographically first one stays in self.assignment.  On failure
        all trail state is restored."""
        prefix, subplans = plan
        return self._run_prefix(prefix, 0, subplans)

    def _run_prefix(self, prefix, idx: int, subplans) -> bool:
        if idx == len(prefix):
            mark = len(self.trail)
            for sub in subplans:
                if not self.run(sub):
                    self.rollback(mark)
                    return False
            return True
        v = prefix[idx]
        remaining = self.dom[v]
        while remaining:
            bit = remaining & -remaining
            remaining ^= bit
            h = bit.bit_length() - 1
            mark = len(self.trail)
            if self.try_assign(v, h) and self._run_prefix(prefix, idx + 1, subplans):
                return True
            self.rollback(mark)
        return False


def _find_witness(
    G: Digraph, H: Digraph, t: Optional[int], budget: Optional[int]
) -> Optional[Colouring]:
    if G.n == 0:
        return ()
    if H.n == 0:
        return None
    search = _WitnessSearch(G, H, t, budget)
    if not search.feasible:
        return None
    plan = _layout(tuple(range(G.n)), search.gout, search.gin, t is not None)
    if search.run(plan):
        return tuple(search.assignment)
    return None


def find_homomorphism(G: Digraph, H: Digraph, budget: Optional[int] = None) -> Optional[Colouring]:
    """First homomorphism G -> H in lexicographic order, or None."""
    return _find_witness(G, H, None, budget)


def find_t_frugal(
    G: Digraph, H: Digraph, t: int, budget: Optional[int] = None
) -> Optional[Colouring]:
    """First t-frugal homomorphism G -> H, or None if none exists.

    G must be irreflexive (problem-statement boundary); H is arbitrary.
    """
    _check_t(t)
    if not G.is_irreflexive():
        raise ContractError("instance digraph must be irreflexive")
    return _find_witness(G, H, t, budget)


def enumerate_t_frugal(G: Digraph, H: Digraph, t: int) -> Iterator[Colouring]:
    """Every t-frugal homomorphism G -> H, lexicographic, each exactly once.

    Intended for instances small enough to enumerate; the caller bounds size.
    """
    _check_t(t)
    return _search_digraph(G, H, t)


def enumerate_homomorphisms(G: Digraph, H: Digraph) -> Iterator[Colouring]:
    """Every homomorphism G -> H, lexicographic, each exactly once."""
    return _search_digraph(G, H, None)


def _search_ugraph(G: UGraph, H: UGraph, budget: Optional[int] = None) -> Iterator[Colouring]:
    n, hn = G.n, H.n
    if n == 0:
        yield ()
        return
    if hn == 0:
        return
    adj_mask = [0] * hn
    for u, v in H.edges:
        adj_mask[u] |= 1 << v
        adj_mask[v] |= 1 << u
    gadj = [G.neighbours(v) for v in range(n)]
    full = (1 << hn) - 1
    dom = [full] * n
    assignment = [-1] * n
    nodes = 0

    def extend(v: int) -> Iterator[Colouring]:
        nonlocal nodes
        if v == n:
            yield tuple(assignment)
            return
        remaining = dom[v]
        while remaining:
            bit = remaining & -remaining
            remaining ^= bit
            h = bit.bit_length() - 1
            nodes += 1
            if budget is not None and nodes > budget:
                raise BudgetExceededError(f"search exceeded budget of {budget} nodes")
            assignment[v] = h
            undo: list[tuple[int, int]] = []
            ok = True
            for w in gadj[v]:
                if w > v:
                    nd = dom[w] & adj_mask[h]
                    if nd != dom[w]:
                        undo.append((w, dom[w]))
                        dom[w] = nd
                        if nd == 0:
                            ok = False
                            break
            if ok:
                yield from extend(v + 1)
            for w, old in reversed(undo):
                dom[w] = old
            assignment[v] = -1

    yield from extend(0)


def find_graph_homomorphism(
    G: UGraph, H: UGraph, budget: Optional[int] = None
) -> Optional[Colouring]:
    """First homomorphism between undirected graphs, or None."""
    return next(_search_ugraph(G, H, budget), None)


def enumerate_graph_homomorphisms(G: UGraph, H: UGraph) -> Iterator[Colouring]:
    """Every homomorphism between undirected graphs, lexicographic."""
    return _search_ugraph(G, H)
