#!/usr/bin/env python3
"""Walkthrough: monotone exact-count SAT and its transformation chain.

Monotone ell-in-k SAT asks for an assignment making exactly ell
variables true in every width-k clause.  Satisfiability at ell and at
k - ell coincide (negate everything), widening adds one to the width at
the same ell, and lifting trades count ell-1 of width 2ell-1 for ell of
width 2ell.  Composed from the width-3 base, these reach every
1 <= ell < k, and every step translates certificates both ways.
"""

from frugalhom import (
    MonotoneSatInstance,
    chain_from_1in3,
    check_exactly,
    forward_witness,
    pull_back,
    solve_sat,
    switch_assignment,
)

base = MonotoneSatInstance(4, 3, [(0, 1, 2), (1, 2, 3)])
print("base clauses:", base.clauses)

a = solve_sat(base, 1)
print("1-in-3 witness:", a)
print("negation satisfies 2-in-3:", check_exactly(base, switch_assignment(a), 2))

# Climb to exact count 2 of width 5.
wide, record = chain_from_1in3(base, target_ell=2, target_k=5)
print("transformed instance: n =", wide.n, " k =", wide.k,
      " steps =", [r.kind for r in record.steps])

up = forward_witness(record, a)
print("forward witness satisfies the transformed instance:",
      check_exactly(wide, up, 2))

found = solve_sat(wide, 2)
down = pull_back(record, found)
print("a fresh transformed witness pulls back to the base:",
      check_exactly(base, down, 1))

# Targets above half the width ride on the negation symmetry.
high, record_high = chain_from_1in3(base, target_ell=3, target_k=4)
print("3-in-4 route is the switched 1-in-4 route:", record_high.switched)
w = solve_sat(high, 3)
print("its witnesses still pull back:", check_exactly(base, pull_back(record_high, w), 1))
