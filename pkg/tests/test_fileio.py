import random

import pytest
from hypothesis import given, strategies as st

from frugalhom import Digraph, MonotoneSatInstance, ParseError, UGraph
from frugalhom.fileio import (
    parse_assignment,
    parse_colouring,
    parse_digraph,
    parse_sat_instance,
    parse_ugraph,
    serialize_assignment,
    serialize_colouring,
    serialize_digraph,
    serialize_sat_instance,
    serialize_ugraph,
)

from genutil import random_digraph


def test_parse_digraph_basic():
    assert parse_digraph("digraph 2 1\n0 1\n") == Digraph(2, [(0, 1)])


def test_parse_digraph_comments_and_blanks():
    text = "# a comment\ndigraph 2 1\n\n# another\n0 1\n"
    assert parse_digraph(text) == Digraph(2, [(0, 1)])


def test_parse_digraph_duplicate_arc_reports_line():
    with pytest.raises(ParseError) as err:
        parse_digraph("digraph 2 2\n0 1\n0 1\n")
    assert err.value.line == 3


def test_parse_digraph_out_of_range_reports_line():
    with pytest.raises(ParseError) as err:
        parse_digraph("digraph 2 1\n0 5\n")
    assert err.value.line == 2


def test_parse_digraph_bad_header():
    with pytest.raises(ParseError):
        parse_digraph("graph 2 1\n0 1\n")
    with pytest.raises(ParseError):
        parse_digraph("digraph two 1\n0 1\n")
    with pytest.raises(ParseError):
        parse_digraph("")


def test_parse_digraph_missing_and_trailing_rows():
    with pytest.raises(ParseError):
        parse_digraph("digraph 3 2\n0 1\n")
    with pytest.raises(ParseError) as err:
        parse_digraph("digraph 3 1\n0 1\n1 2\n")
    assert err.value.line == 3


def test_parse_ugraph_path():
    G = parse_ugraph("graph 3 2\n0 1\n1 2\n")
    assert G == UGraph(3, [(0, 1), (1, 2)])


def test_parse_ugraph_rejects_loop_and_duplicate():
    with pytest.raises(ParseError):
        parse_ugraph("graph 2 1\n1 1\n")
    # same edge in either orientation is a duplicate
    with pytest.raises(ParseError) as err:
        parse_ugraph("graph 2 2\n0 1\n1 0\n")
    assert err.value.line == 3


def test_digraph_roundtrip_is_canonical():
    rng = random.Random(3)
    for _ in range(25):
        G = random_digraph(rng, rng.randrange(8), 0.4, allow_loops=True)
        text = serialize_digraph(G)
        assert parse_digraph(text) == G
        assert serialize_digraph(parse_digraph(text)) == text
        lines = text.splitlines()[1:]
        assert lines == sorted(lines, key=lambda s: tuple(map(int, s.split())))


@given(st.integers(0, 6), st.data())
def test_digraph_roundtrip_property(n, data):
    possible = [(u, v) for u in range(n) for v in range(n)]
    arcs = data.draw(st.lists(st.sampled_from(possible), unique=True) if possible else st.just([]))
    G = Digraph(n, arcs)
    assert parse_digraph(serialize_digraph(G)) == G


def test_ugraph_roundtrip_emits_sorted_pairs():
    G = UGraph(4, [(3, 1), (2, 0)])
    assert serialize_ugraph(G) == "graph 4 2\n0 2\n1 3\n"
    assert parse_ugraph(serialize_ugraph(G)) == G


def test_colouring_roundtrip():
    f = (2, 0, 1)
    text = serialize_colouring(f)
    assert text == "map 3\n0 2\n1 0\n2 1\n"
    assert parse_colouring(text) == f


def test_colouring_errors():
    with pytest.raises(ParseError):
        parse_colouring("map 2\n0 1\n0 2\n")  # duplicate vertex
    with pytest.raises(ParseError):
        parse_colouring("map 2\n0 1\n5 2\n")  # out of range


def test_assignment_roundtrip_and_errors():
    a = (True, False, True)
    assert serialize_assignment(a) == "101\n"
    assert parse_assignment("101\n") == a
    assert parse_assignment(serialize_assignment(())) == ()
    with pytest.raises(ParseError):
        parse_assignment("10x\n")
    with pytest.raises(ParseError):
        parse_assignment("101\n010\n")


def test_sat_roundtrip():
    S = MonotoneSatInstance(4, 3, [(2, 1, 0), (1, 2, 3)])
    text = serialize_sat_instance(S)
    assert text == "mksat 4 3 2\n0 1 2\n1 2 3\n"
    assert parse_sat_instance(text) == S


def test_sat_parse_errors():
    with pytest.raises(ParseError):
        parse_sat_instance("mksat 3 3 1\n0 0 1\n")  # repeated variable
    with pytest.raises(ParseError):
        parse_sat_instance("mksat 3 3 1\n0 1 5\n")  # out of range
    with pytest.raises(ParseError):
        parse_sat_instance("mksat 3 3 1\n0 1\n")  # wrong width


@given(st.text(alphabet="digraph mksat\n#0123456789 -", max_size=80))
def test_parsers_never_crash(text):
    # arbitrary input either parses or raises ParseError, nothing else
    for parser in (parse_digraph, parse_ugraph, parse_colouring,
                   parse_assignment, parse_sat_instance):
        try:
            parser(text)
        except ParseError:
            pass
