import random

import pytest
from hypothesis import given, settings, strategies as st

from frugalhom import (
    CertificateError,
    ContractError,
    Digraph,
    MonotoneSatInstance,
    chain_from_1in3,
    check_exactly,
    decode_sat_witness,
    encode_sat_witness,
    find_t_frugal,
    forward_witness,
    indicator_graph,
    is_homomorphism,
    is_t_frugal,
    lift_half,
    pull_back,
    sat_to_digraph,
    solve_sat,
    switch_assignment,
    two_colouring,
    widen,
)

from genutil import random_sat
from oracles import naive_solve_sat

TWO_IN = Digraph(3, [(0, 2), (1, 2)])


def test_instance_validation():
    with pytest.raises(ContractError):
        MonotoneSatInstance(3, 3, [(0, 0, 1)])
    with pytest.raises(ContractError):
        MonotoneSatInstance(3, 3, [(0, 1)])
    with pytest.raises(ContractError):
        MonotoneSatInstance(3, 3, [(0, 1, 5)])


def test_check_exactly_basic():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    assert check_exactly(S, (True, False, False), 1)
    assert not check_exactly(S, (True, True, False), 1)
    empty = MonotoneSatInstance(3, 3, [])
    assert check_exactly(empty, (True, True, True), 1)


def test_solve_returns_lexicographically_first():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    assert solve_sat(S, 1) == (False, False, True)
    forced = MonotoneSatInstance(2, 2, [(0, 1)])
    assert solve_sat(forced, 2) == (True, True)


def test_solve_equal_variable_forcing():
    S = MonotoneSatInstance(4, 3, [(0, 1, 2), (0, 1, 3)])
    witness = solve_sat(S, 1)
    assert witness is not None and witness[2] == witness[3]


def test_solve_matches_naive():
    rng = random.Random(50)
    for _ in range(80):
        n = rng.randrange(3, 8)
        k = rng.randrange(2, min(n, 5) + 1)
        S = random_sat(rng, n, k, rng.randrange(0, 5))
        ell = rng.randrange(1, k + 1)
        assert solve_sat(S, ell) == naive_solve_sat(S, ell)


def test_switch_assignment():
    assert switch_assignment((True, False)) == (False, True)
    a = (True, False, True)
    assert switch_assignment(switch_assignment(a)) == a


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_switch_trades_ell_for_k_minus_ell(data):
    n = data.draw(st.integers(2, 7))
    k = data.draw(st.integers(1, n))
    n_clauses = data.draw(st.integers(0, 4))
    clauses = [
        data.draw(st.permutations(range(n)).map(lambda p: tuple(p[:k])))
        for _ in range(n_clauses)
    ]
    S = MonotoneSatInstance(n, k, clauses)
    a = tuple(data.draw(st.booleans()) for _ in range(n))
    for ell in range(1, k):
        assert check_exactly(S, a, ell) == check_exactly(
            S, switch_assignment(a), k - ell
        )


def test_widen_shape():
    S = MonotoneSatInstance(4, 3, [(0, 1, 2), (1, 2, 3)])
    S2, record = widen(S, 1)
    assert S2.k == 4
    assert len(S2.clauses) == 2 * 2 + 1
    assert S2.n == S.n + 2 + 2
    assert record.x_vars == (4, 5) and record.y_vars == (6, 7)


def test_widen_requires_small_ell():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    with pytest.raises(ContractError):
        widen(S, 2)


def test_widen_preserves_satisfiability():
    rng = random.Random(51)
    for _ in range(30):
        n = rng.randrange(2, 7)
        k = rng.randrange(2, min(n, 4) + 1)
        S = random_sat(rng, n, k, rng.randrange(0, 4))
        for ell in range(1, k // 2 + 1):
            S2, record = widen(S, ell)
            left = naive_solve_sat(S, ell) is not None
            right = naive_solve_sat(S2, ell) is not None
            assert left == right
            if right:
                a2 = naive_solve_sat(S2, ell)
                assert check_exactly(S, pull_back(record, a2), ell)
            if left:
                fw = forward_witness(record, naive_solve_sat(S, ell))
                assert check_exactly(S2, fw, ell)


def test_lift_half_shape():
    S = MonotoneSatInstance(4, 3, [(0, 1, 2), (1, 2, 3)])
    S2, record = lift_half(S, 2)
    assert S2.k == 4 and S2.n == 5
    assert all(clause[-1] == 4 for clause in S2.clauses)
    with pytest.raises(ContractError):
        lift_half(S2, 2)  # width mismatch


def test_lift_half_preserves_satisfiability():
    rng = random.Random(52)
    for _ in range(30):
        ell = rng.choice((2, 3))
        k = 2 * ell - 1
        n = rng.randrange(k, k + 4)
        S = random_sat(rng, n, k, rng.randrange(0, 4))
        S2, record = lift_half(S, ell)
        left = naive_solve_sat(S, ell - 1) is not None
        right = naive_solve_sat(S2, ell) is not None
        assert left == right
        if right:
            a2 = naive_solve_sat(S2, ell)
            assert check_exactly(S, pull_back(record, a2), ell - 1)
        if left:
            fw = forward_witness(record, naive_solve_sat(S, ell - 1))
            assert check_exactly(S2, fw, ell)


def test_pull_back_lift_with_false_fresh_variable():
    # a concrete certificate of the lifted instance that leaves the fresh
    # variable false must pull back through the switch
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    S2, record = lift_half(S, 2)
    a2 = (False, True, True, False)  # exactly 2 true, fresh variable false
    assert check_exactly(S2, a2, 2)
    back = pull_back(record, a2)
    assert back == (True, False, False)
    assert check_exactly(S, back, 1)


def test_pull_back_rejects_bad_certificate():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    S2, record = widen(S, 1)
    with pytest.raises(CertificateError):
        pull_back(record, (True,) * S2.n)


def test_chain_identity():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    out, record = chain_from_1in3(S, 1, 3)
    assert out == S
    assert record.steps == () and not record.switched


def test_chain_2_in_4_is_one_lift():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    out, record = chain_from_1in3(S, 2, 4)
    assert [r.kind for r in record.steps] == ["lift"]
    assert out.k == 4


def test_chain_1_in_5_is_two_widens():
    S = MonotoneSatInstance(3, 3, [(0, 1, 2)])
    out, record = chain_from_1in3(S, 1, 5)
    assert [r.kind for r in record.steps] == ["widen", "widen"]
    assert out.k == 5


def test_chain_switched_target():
    S = MonotoneSatInstance(4, 3, [(0, 1, 2), (1, 2, 3)])
    out, record = chain_from_1in3(S, 2, 3)
    assert record.switched and record.steps == ()
    a = solve_sat(out, 2)
    assert a is not None
    assert check_exactly(S, pull_back(record, a), 1)


def test_chain_equivalence_brute_force():
    rng = random.Random(53)
    for target_ell, target_k in [(2, 4), (1, 4), (3, 4), (2, 5), (3, 5)]:
        for _ in range(6):
            S = random_sat(rng, rng.randrange(3, 6), 3, rng.randrange(0, 3))
            out, record = chain_from_1in3(S, target_ell, target_k)
            left = naive_solve_sat(S, 1) is not None
            right = naive_solve_sat(out, target_ell) is not None
            assert left == right
            if right:
                a = naive_solve_sat(out, target_ell)
                assert check_exactly(S, pull_back(record, a), 1)
            if left:
                fw = forward_witness(record, naive_solve_sat(S, 1))
                assert check_exactly(out, fw, target_ell)


def test_sat_to_digraph_shape():
    S = MonotoneSatInstance(4, 4, [(0, 1, 2, 3)])
    G, legend = sat_to_digraph(S, 2)
    assert G.n == 5 and len(G.arcs) == 4
    assert G.is_irreflexive()
    assert G.in_degree(legend.clause_vertices[0]) == 4
    with pytest.raises(ContractError):
        sat_to_digraph(S, 3)


def test_sat_to_digraph_variable_out_degree():
    S = MonotoneSatInstance(5, 4, [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 4)])
    G, legend = sat_to_digraph(S, 2)
    assert G.out_degree(legend.variable_vertices[0]) == 3


def test_encode_decode_round_trip():
    S = MonotoneSatInstance(5, 4, [(0, 1, 2, 3), (1, 2, 3, 4)])
    G, legend = sat_to_digraph(S, 2)
    a = solve_sat(S, 2)
    f = encode_sat_witness(legend, TWO_IN, a)
    assert is_homomorphism(G, TWO_IN, f) and is_t_frugal(G, TWO_IN, f, 2)
    colours = two_colouring(indicator_graph(TWO_IN).graph).colours
    decoded = decode_sat_witness(f, TWO_IN, colours, legend)
    assert check_exactly(S, decoded, 2)


def test_decode_rejects_invalid_certificates():
    S = MonotoneSatInstance(4, 4, [(0, 1, 2, 3)])
    G, legend = sat_to_digraph(S, 2)
    colours = two_colouring(indicator_graph(TWO_IN).graph).colours
    with pytest.raises(CertificateError):
        decode_sat_witness((0,) * G.n, TWO_IN, colours, legend)  # not a homomorphism
    f = encode_sat_witness(legend, TWO_IN, solve_sat(S, 2))
    with pytest.raises(CertificateError):
        decode_sat_witness(f, TWO_IN, (0, 0, 0), legend)  # improper two-colouring


def test_unsatisfiable_instance_has_uncolourable_incidence_graph():
    S = MonotoneSatInstance(
        5, 4, [(0, 1, 2, 3), (0, 1, 2, 4), (0, 1, 3, 4), (0, 2, 3, 4), (1, 2, 3, 4)]
    )
    assert solve_sat(S, 2) is None
    G, _ = sat_to_digraph(S, 2)
    assert find_t_frugal(G, TWO_IN, 2) is None
