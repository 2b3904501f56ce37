import pytest
from hypothesis import given, settings

from ordex.formats import GraphTextError, parse_graph, serialize_graph
from ordex.graphs import bipartite_graph, cyclic_graph, ordered_graph

from strategies import bipartite_graphs_, cyclic_graphs, ordered_graphs


def test_parse_bipartite():
    g = parse_graph("bipartite 2 2\n1 1\n2 2\n")
    assert g == bipartite_graph(2, 2, [(1, 1), (2, 2)])


def test_matrix_equivalence():
    assert parse_graph("matrix 2 2\n10\n01\n") == \
        parse_graph("bipartite 2 2\n1 1\n2 2\n")


def test_comments_and_blank_lines():
    text = "# a matching\n\nordered 4  # header\n1 3\n\n2 4 # tail edge\n"
    assert parse_graph(text) == ordered_graph(4, [(1, 3), (2, 4)])


def test_cyclic_and_edge_normalization():
    g = parse_graph("cyclic 5\n4 1\n2 5\n")
    assert g == cyclic_graph(5, [(1, 4), (2, 5)])


def test_out_of_range_diagnostic():
    with pytest.raises(GraphTextError) as err:
        parse_graph("ordered 3\n1 4\n")
    assert "vertex index 4 out of range" in str(err.value)
    assert err.value.line == 2 and err.value.column == 3


def test_duplicate_edge_diagnostic():
    with pytest.raises(GraphTextError) as err:
        parse_graph("ordered 3\n1 2\n2 1\n")
    assert "duplicate edge" in err.value.reason
    assert err.value.line == 3


def test_loop_diagnostic():
    with pytest.raises(GraphTextError) as err:
        parse_graph("cyclic 3\n2 2\n")
    assert "loop" in err.value.reason


def test_header_diagnostics():
    with pytest.raises(GraphTextError) as err:
        parse_graph("trellis 3\n")
    assert "malformed header" in err.value.reason
    with pytest.raises(GraphTextError):
        parse_graph("bipartite 2\n")
    with pytest.raises(GraphTextError):
        parse_graph("ordered x\n")
    with pytest.raises(GraphTextError):
        parse_graph("")


def test_matrix_diagnostics():
    with pytest.raises(GraphTextError) as err:
        parse_graph("matrix 2 2\n10\n")
    assert "expected 2 matrix rows" in err.value.reason
    with pytest.raises(GraphTextError) as err:
        parse_graph("matrix 1 3\n102\n")
    assert "0 or 1" in err.value.reason
    assert err.value.column == 3
    with pytest.raises(GraphTextError):
        parse_graph("matrix 1 3\n10\n")


def test_bad_edge_line():
    with pytest.raises(GraphTextError) as err:
        parse_graph("ordered 3\n1 2 3\n")
    assert "two vertex indices" in err.value.reason


@given(ordered_graphs(max_n=10))
@settings(max_examples=80, deadline=None)
def test_round_trip_ordered(g):
    assert parse_graph(serialize_graph(g)) == g


@given(bipartite_graphs_(max_n=7, max_m=7))
@settings(max_examples=80, deadline=None)
def test_round_trip_bipartite(g):
    assert parse_graph(serialize_graph(g)) == g


@given(cyclic_graphs(max_n=9))
@settings(max_examples=60, deadline=None)
def test_round_trip_cyclic(g):
    assert parse_graph(serialize_graph(g)) == g


def test_serialization_is_canonical():
    a = ordered_graph(4, [(2, 4), (1, 3)])
    b = ordered_graph(4, [(1, 3), (2, 4)])
    assert serialize_graph(a) == serialize_graph(b)
