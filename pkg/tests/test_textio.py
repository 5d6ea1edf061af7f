from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, orientations, three_graphs
from h3g.errors import H3GSyntaxError, SemanticError
from h3g.families import gen_table3
from h3g.textio import document_from, fixture_names, load_fixture, parse_h3g, render_h3g
from h3g.trees import count_spanning_trees

SAMPLE = """\
# two triples sharing vertex 3
vertices 5
label 1 a
triple 3 2 1 -
triple 3 4 5   # trailing comment
edge 5 4
"""


def test_parse_sample():
    doc = parse_h3g(SAMPLE)
    assert doc.n == 5
    assert doc.triples == ((1, 2, 3), (3, 4, 5))
    assert doc.signs == (-1, 1)
    assert doc.labels == {1: "a"} and doc.edges == ((4, 5),)
    assert doc.orientation().sign((1, 2, 3)) == -1
    assert doc.multigraph().simple_edges() == [(4, 5)]
    assert count_spanning_trees(doc.graph()) == 1


def test_triple_names():
    doc = document_from(gen_table3().graph, labels=gen_table3().labels)
    assert doc.triple_name((1, 2, 9)) == "01c"
    assert parse_h3g("vertices 3\ntriple 1 2 3\n").triple_name((1, 2, 3)) == "1-2-3"


@pytest.mark.parametrize(
    ("text", "line"),
    [
        ("vertices 3\ntriple 1 2\n", 2),
        ("vertices x\n", 1),
        ("vertices 3\nfoo 1\n", 2),
        ("vertices 3\nedge 1\n", 2),
        ("vertices 3\ntriple 1 2 3 *\n", 2),
    ],
)
def test_syntax_errors(text, line):
    with pytest.raises(H3GSyntaxError) as info:
        parse_h3g(text)
    assert info.value.line == line


@pytest.mark.parametrize(
    "text",
    [
        "triple 1 2 3\n",
        "vertices 3\nvertices 3\n",
        "vertices 0\n",
        "vertices 3\ntriple 1 1 2\n",
        "vertices 3\ntriple 1 2 3\ntriple 3 2 1\n",
        "vertices 3\ntriple 1 2 4\n",
        "vertices 3\nedge 2 2\n",
        "vertices 3\nlabel 1 a\nlabel 1 b\n",
    ],
)
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse_h3g(text)


@given(st.data())
def test_render_parse_round_trip(data):
    H = data.draw(three_graphs())
    om = data.draw(orientations(H))
    G = data.draw(graphs(min_n=H.n, max_n=H.n))
    doc = document_from(H, om, {1: "x"}, G)
    back = parse_h3g(render_h3g(doc))
    assert back == doc
    assert back.orientation() == om.restrict(H)


@pytest.mark.parametrize("name", fixture_names())
def test_bundled_fixtures_parse(name):
    doc = load_fixture(name)
    assert doc.n >= 1 and (doc.triples or doc.edges)
    assert parse_h3g(render_h3g(doc)) == doc


def test_expected_fixtures_present():
    assert {"complete7", "fano", "table3", "psts-k33", "k33"} <= set(fixture_names())
