import pytest
from hypothesis import given

from conftest import digraphs
from idsdigraph.digraph import Digraph, UGraph
from idsdigraph.edgelist import format_edge_list, parse_edge_list
from idsdigraph.errors import ParseError


def test_parse_digraph_with_comments():
    text = """
    # directed C4
    digraph 4
    0 1   # first arc
    1 2

    2 3
    3 0
    """
    assert parse_edge_list(text) == Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def test_parse_graph():
    assert parse_edge_list("graph 3\n1 0\n2 1\n") == UGraph(3, [(0, 1), (1, 2)])


@pytest.mark.parametrize(
    "text, line",
    [
        ("digraph 3\n0 1\n1 1\n", 3),
        ("digraph 3\n0 1\n0 1\n", 3),
        ("digraph 3\n0 5\n", 2),
        ("digraph 3\n0 x\n", 2),
        ("digraph 3\n0 1 2\n", 2),
        ("graph 3\n0 1\n1 0\n", 3),
        ("# c\nedges 3\n", 2),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("# only a comment\n")


@given(digraphs(digons=True))
def test_round_trip(D):
    assert parse_edge_list(format_edge_list(D)) == D
