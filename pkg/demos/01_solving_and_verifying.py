#!/usr/bin/env python3
"""Walkthrough: exact search for frugal homomorphisms and certificate checks.

A homomorphism maps arcs to arcs; it is t-frugal when no vertex of the
instance has more than t in-neighbours sharing an image.  The solvers
here are complete backtracking searches, so "None" really means "no
such colouring exists".
"""

from frugalhom import (
    Digraph,
    enumerate_t_frugal,
    find_homomorphism,
    find_t_frugal,
    is_homomorphism,
    is_t_frugal,
)

# The directed four-cycle wraps around the directed two-cycle.
c4 = Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
c2 = Digraph(2, [(0, 1), (1, 0)])

witness = find_t_frugal(c4, c2, t=2)
print("2-frugal colouring of C4 into C2:", witness)
print("  arcs preserved:", is_homomorphism(c4, c2, witness))
print("  2-frugal:      ", is_t_frugal(c4, c2, witness, 2))

# An odd cycle cannot wrap around an even one.
c3 = Digraph(3, [(0, 1), (1, 2), (2, 0)])
print("C3 into C2:", find_homomorphism(c3, c2))

# Frugality can block colourings that plain homomorphism allows: three
# arcs into one vertex force three equal images when the target is a loop.
loop = Digraph(1, [(0, 0)])
spiky = Digraph(4, [(0, 3), (1, 3), (2, 3)])
print("spiky into loop, unconstrained:", find_homomorphism(spiky, loop))
print("spiky into loop, t=2:          ", find_t_frugal(spiky, loop, 2))
print("spiky into loop, t=3:          ", find_t_frugal(spiky, loop, 3))

# Enumeration yields every certificate in lexicographic order.
arc = Digraph(2, [(0, 1)])
print("all 1-frugal colourings of one arc into C2:",
      list(enumerate_t_frugal(arc, c2, 1)))
