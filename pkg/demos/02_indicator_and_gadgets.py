#!/usr/bin/env python3
"""Walkthrough: the indicator graph and the edge-replacement reduction.

The indicator graph of a target H joins two distinct vertices when they
share an out-neighbour and each has an out-neighbour of maximum
in-degree.  Those pairs are exactly the colours the forcing gadgets can
pin onto adjacent instance vertices, which is why colouring with the
indicator graph reduces to t-frugal colouring with H.
"""

from frugalhom import (
    Digraph,
    UGraph,
    build_f0,
    build_star_g,
    enumerate_t_frugal,
    find_graph_homomorphism,
    find_t_frugal,
    indicator_graph,
    is_t_frugal,
    is_homomorphism,
    lift_colouring,
    project_colouring,
)

# Two sources pointing at one sink: the classic NP-complete target.
h = Digraph(3, [(0, 2), (1, 2)])
ind = indicator_graph(h)
print("target arcs:     ", sorted(h.arcs))
print("indicator edges: ", sorted(ind.graph.edges), " (max in-degree", ind.delta_minus, ")")

# The basic gadget forces its two endpoints w and z to share a colour in
# every 2-frugal colouring: enumerate and see.
f0 = build_f0(t=2, delta=2)
sols = list(enumerate_t_frugal(f0.graph, h, 2))
print(f"f0 has {len(sols)} 2-frugal colourings; endpoints always equal:",
      all(s[f0.w] == s[f0.z] for s in sols))

# Replace each edge of an instance by the full gadget and the two
# problems become equivalent.
g = UGraph(3, [(0, 1), (1, 2)])
star = build_star_g(g, t=2, delta=ind.delta_minus)
print(f"instance: path on 3 vertices -> star graph on {star.graph.n} vertices")

c = find_graph_homomorphism(g, ind.graph)
print("indicator colouring of the path:", c)

lifted = lift_colouring(star, h, c, t=2)
print("lifted colouring is a valid 2-frugal homomorphism:",
      is_homomorphism(star.graph, h, lifted) and is_t_frugal(star.graph, h, lifted, 2))
print("projecting back recovers the original colouring:",
      project_colouring(star, lifted) == c)

# A triangle has no indicator colouring here (single edge cannot host
# three pairwise-adjacent colours), and the reduction mirrors that.
triangle = UGraph(3, [(0, 1), (1, 2), (0, 2)])
star_t = build_star_g(triangle, t=2, delta=ind.delta_minus)
print("triangle -> indicator graph:", find_graph_homomorphism(triangle, ind.graph))
print("star(triangle) -> target:   ", find_t_frugal(star_t.graph, h, 2))
