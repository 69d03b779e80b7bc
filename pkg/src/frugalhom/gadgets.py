"""Frugality-forcing gadgets and the edge-replacement hardness reduction.

The basic gadget f0 pins two designated vertices w and z to equal
colours in every t-frugal colouring: its middle vertices x and y have
in-degree t*delta, which saturates every colour class of any valid
image's in-neighbourhood except one slot, and that slot must absorb both
w and z.  Chaining t-2 copies of f0 (gadget f1) yields t-1 markers that
are pairwise forced equal; gadget f adds a fresh f0 copy and a collector
vertex q of in-degree t+1, so the two endpoint markers of f can never
share a colour.  Replacing every edge of an undirected instance with a
copy of f gives the reduction from indicator-graph colouring to t-frugal
colouring, with certificate translators in both directions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import Colouring, Digraph, UGraph
from .errors import CertificateError, ConsistencyError, ContractError
from .indicator import indicator_graph


@dataclass(frozen=True)
class F0Placement:
    """Vertex ids of one f0 copy embedded in a larger digraph."""

    w: int
    x: int
    y: int
    z: int
    commons: tuple[int, ...]


@dataclass(frozen=True)
class GadgetF0:
    graph: Digraph
    w: int
    x: int
    y: int
    z: int
    commons: tuple[int, ...]


@dataclass(frozen=True)
class GadgetF1:
    graph: Digraph
    markers: tuple[int, ...]  # u_1..u_{t-1}, forced to equal colours
    copies: tuple[F0Placement, ...]


@dataclass(frozen=True)
class GadgetF:
    graph: Digraph
    markers: tuple[int, ...]  # u_1..u_{t-1}
    v1: int
    v2: int
    q: int
    chain_copies: tuple[F0Placement, ...]
    tail_copy: F0Placement

    @property
    def u1(self) -> int:
        return self.markers[0]


@dataclass(frozen=True)
class EdgeGadget:
    """One f copy of a star graph, with all marker ids remapped."""

    edge: tuple[int, int]  # original edge (u, v), u < v; u plays u_1
    markers: tuple[int, ...]
    v1: int
    v2: int
    q: int
    chain_copies: tuple[F0Placement, ...]
    tail_copy: F0Placement


@dataclass(frozen=True)
class StarG:
    """The digraph obtained by replacing every edge with an f copy."""

    graph: Digraph
    origin_map: tuple[int, ...]  # original vertex -> star vertex
    gadgets: tuple[EdgeGadget, ...]
    t: int
    delta: int


def _check_params(t: int, delta: int) -> None:
    if t < 2:
        raise ContractError(f"gadgets require t >= 2, got {t}")
    if delta < 1:
        raise ContractError(f"gadgets require delta >= 1, got {delta}")


def build_f0(t: int, delta: int) -> GadgetF0:
    """The two-endpoint equalizer: 4 + (t*delta - 1) vertices."""
    _check_params(t, delta)
    commons = tuple(range(4, 4 + t * delta - 1))
    arcs = [(0, 1), (3, 2)]
    for c in commons:
        arcs.append((c, 1))
        arcs.append((c, 2))
    return GadgetF0(Digraph(3 + t * delta, arcs), 0, 1, 2, 3, commons)


def build_f1(t: int, delta: int) -> GadgetF1:
    """A chain of t-2 f0 copies sharing endpoints: t-1 equalized markers.

    For t = 2 the chain degenerates to a single marker vertex with no arcs.
    """
    _check_params(t, delta)
    block = t * delta + 2  # fresh vertices per chained copy: x, y, commons, z
    n = 1 + (t - 2) * block
    arcs: list[tuple[int, int]] = []
    markers = [0]
    copies = []
    for i in range(t - 2):
        w = markers[-1]
        base = 1 + i * block
        x, y = base, base + 1
        commons = tuple(range(base + 2, base + 1 + t * delta))
        z = base + t * delta + 1
        arcs.append((w, x))
        arcs.append((z, y))
        for c in commons:
            arcs.append((c, x))
            arcs.append((c, y))
        markers.append(z)
        copies.append(F0Placement(w, x, y, z, commons))
    return GadgetF1(Digraph(n, arcs), tuple(markers), tuple(copies))


def build_f(t: int, delta: int) -> GadgetF:
    """The edge-replacement gadget: f1, one fresh f0 copy, and a collector q.

    q receives an arc from every marker and from both endpoints v2, v1 of
    the fresh copy, so its in-degree is t + 1.
    """
    _check_params(t, delta)
    f1 = build_f1(t, delta)
    base = f1.graph.n
    w, x, y, z = base, base + 1, base + 2, base + 3
    commons = tuple(range(base + 4, base + 3 + t * delta))
    q = base + t * delta + 3
    arcs = list(f1.graph.sorted_arcs)
    arcs.append((w, x))
    arcs.append((z, y))
    for c in commons:
        arcs.append((c, x))
        arcs.append((c, y))
    for u in f1.markers:
        arcs.append((u, q))
    arcs.append((w, q))  # v2
    arcs.append((z, q))  # v1
    tail = F0Placement(w, x, y, z, commons)
    return GadgetF(Digraph(q + 1, arcs), f1.markers, z, w, q, f1.copies, tail)


def build_star_g(G: UGraph, t: int, delta: int) -> StarG:
    """Replace every edge uv of G with a copy of f, identifying the lower
    endpoint with u_1 and the higher with v_1.

    The gadget is not symmetric but the reduction does not depend on the
    orientation; taking the lower-indexed endpoint as u_1 keeps the output
    deterministic.  Fresh vertices are numbered gadget by gadget after the
    origin block 0..n-1, so origin vertices keep their indices and have no
    in-arcs in the result.
    """
    _check_params(t, delta)
    template = build_f(t, delta)
    tn = template.graph.n
    arcs: list[tuple[int, int]] = []
    gadgets = []
    next_fresh = G.n
    for u, v in G.sorted_edges:
        remap = [0] * tn
        fresh = next_fresh
        for tv in range(tn):
            if tv == template.u1:
                remap[tv] = u
            elif tv == template.v1:
                remap[tv] = v
            else:
                remap[tv] = fresh
                fresh += 1
        next_fresh = fresh
        arcs.extend((remap[a], remap[b]) for a, b in template.graph.sorted_arcs)
        gadgets.append(
            EdgeGadget(
                (u, v),
                tuple(remap[m] for m in template.markers),
                remap[template.v1],
                remap[template.v2],
                remap[template.q],
                tuple(
                    F0Placement(
                        remap[p.w], remap[p.x], remap[p.y], remap[p.z],
                        tuple(remap[c] for c in p.commons),
                    )
                    for p in template.chain_copies
                ),
                F0Placement(
                    remap[template.tail_copy.w],
                    remap[template.tail_copy.x],
                    remap[template.tail_copy.y],
                    remap[template.tail_copy.z],
                    tuple(remap[c] for c in template.tail_copy.commons),
                ),
            )
        )
    return StarG(Digraph(next_fresh, arcs), tuple(range(G.n)), tuple(gadgets), t, delta)


def _colour_witnesses(H: Digraph, colour: int, delta: int) -> int:
    """Smallest out-neighbour of colour whose in-degree is delta."""
    for w in H.out_neighbours(colour):
        if H.in_degree(w) == delta:
            return w
    raise ConsistencyError(
        f"vertex {colour} has no out-neighbour of in-degree {delta}; "
        "contradicts the indicator edge it came from"
    )


def _fill_commons(H: Digraph, sink: int, forced: int, t: int) -> list[int]:
    """Colours for the t*delta - 1 shared in-neighbours of an f0 copy.

    Uses the in-neighbours of the copy's sink image, the forced marker
    colour exactly t-1 times and every other in-neighbour t times.
    """
    fill = [forced] * (t - 1)
    for h in H.in_neighbours(sink):
        if h != forced:
            fill.extend([h] * t)
    if len(fill) != t * H.in_degree(sink) - 1:
        raise ConsistencyError(f"forced colour {forced} is not an in-neighbour of {sink}")
    return fill


def lift_colouring(star: StarG, H: Digraph, c: Colouring, t: int) -> Colouring:
    """Extend an indicator-graph colouring of G to a t-frugal H-colouring
    of the star graph, following the constructive recipe: markers take the
    origin colours, the saturated middle vertices take max-in-degree
    out-neighbours d/e of those colours, shared in-neighbours are filled
    from the in-neighbourhoods of d/e, and q takes a common out-neighbour.
    """
    if t != star.t:
        raise ContractError(f"star graph was built for t={star.t}, got t={t}")
    delta = H.max_in_degree()
    if delta < 1:
        raise ContractError("target must have at least one arc")
    if delta != star.delta:
        raise ContractError(
            f"star graph was built for delta={star.delta}, but target has max in-degree {delta}"
        )
    n_orig = len(star.origin_map)
    if len(c) != n_orig:
        raise CertificateError(f"colouring has length {len(c)}, expected {n_orig}")
    if any(not 0 <= h < H.n for h in c):
        raise CertificateError("colouring image out of range")
    ind = indicator_graph(H).graph
    images = [-1] * star.graph.n
    for g, sv in enumerate(star.origin_map):
        images[sv] = c[g]
    for gadget in star.gadgets:
        u, v = gadget.edge
        a, b = c[u], c[v]
        if not ind.has_edge(a, b):
            raise CertificateError(
                f"colour pair ({a}, {b}) of edge {gadget.edge} is not an indicator edge"
            )
        d = _colour_witnesses(H, a, delta)
        e = _colour_witnesses(H, b, delta)
        common = [w for w in H.out_neighbours(a) if H.has_arc(b, w)]
        if not common:
            raise ConsistencyError(f"colours {a} and {b} have no common out-neighbour")
        for m in gadget.markers:
            images[m] = a
        images[gadget.v2] = b
        for copy, sink, forced in [(p, d, a) for p in gadget.chain_copies] + [
            (gadget.tail_copy, e, b)
        ]:
            images[copy.x] = sink
            images[copy.y] = sink
            fill = _fill_commons(H, sink, forced, t)
            for slot, colour in zip(copy.commons, fill):
                images[slot] = colour
        images[gadget.q] = common[0]
    return tuple(images)


def project_colouring(star: StarG, f: Colouring) -> Colouring:
    """Restrict a colouring of the star graph to the origin vertices."""
    if len(f) != star.graph.n:
        raise ContractError(f"colouring has length {len(f)}, expected {star.graph.n}")
    return tuple(f[sv] for sv in star.origin_map)
