#!/usr/bin/env python3
"""Walkthrough: the polynomial-time side of the dichotomy.

When every vertex of the target has at most one in-arc, all
in-neighbours of an instance vertex share their image, so frugality
collapses to an in-degree bound and the rest is a plain homomorphism
test against the target's core: a loop, a longest path, or a union of
cycles with pairwise non-dividing lengths.
"""

from frugalhom import (
    Digraph,
    compute_core_delta1,
    decide_t_frugal_delta1,
    find_t_frugal,
    homs_to_cycle,
    homs_to_path,
)


def cycle(k):
    return Digraph(k, [(i, (i + 1) % k) for i in range(k)])


# A 2-cycle, a 4-cycle, and a 3-cycle: the 4-cycle folds onto the 2-cycle.
h = Digraph(9, [(0, 1), (1, 0),
                (2, 3), (3, 4), (4, 5), (5, 2),
                (6, 7), (7, 8), (8, 6)])
shape = compute_core_delta1(h)
print("core shape:", shape.kind, shape.lengths)
print("core vertices:", shape.core_vertices)
print("retraction:", shape.retraction)

# Levelings decide homomorphisms to paths and cycles in linear time.
p3 = Digraph(3, [(0, 1), (1, 2)])
print("path-3 into path of 3 vertices:", homs_to_path(p3, 3))
print("path-3 into path of 2 vertices:", homs_to_path(p3, 2))
print("6-cycle into 3-cycle:", homs_to_cycle(cycle(6), 3))
print("4-cycle into 3-cycle:", homs_to_cycle(cycle(4), 3))

# The decider always agrees with exhaustive search.
for g, t in [(cycle(4), 2), (cycle(3), 2), (cycle(6), 1)]:
    fast = decide_t_frugal_delta1(g, cycle(2), t)
    slow = find_t_frugal(g, cycle(2), t) is not None
    print(f"decide C{g.n} -> C2 at t={t}: {fast} (oracle agrees: {fast == slow})")

# Frugality bites only through the instance's in-degrees here.
loop = Digraph(1, [(0, 0)])
spiky = Digraph(4, [(0, 3), (1, 3), (2, 3)])
print("in-degree-3 instance vs loop, t=2:", decide_t_frugal_delta1(spiky, loop, 2))
print("in-degree-3 instance vs loop, t=3:", decide_t_frugal_delta1(spiky, loop, 3))
