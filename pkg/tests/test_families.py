from __future__ import annotations

import pytest

from h3g.core import is_isomorphic, pair_multiplicity, vertex_degree
from h3g.decision import Certificate, decide_3pfaffian
from h3g.errors import BadIndex, BadParameters, EvenOrder, UnsupportedOrder
from h3g.families import (
    gen_complete,
    gen_fig3,
    gen_interlaced,
    gen_prop63,
    gen_sts,
    gen_table1,
    gen_table2,
    gen_table3,
    gen_twin,
    independent_cyclic_sets,
    interlaced_labels,
    interlaced_tree_signs,
    lucas,
)
from h3g.signs import tree_cycle, tree_sign
from h3g.trees import count_spanning_trees, enumerate_spanning_trees

TABLES = {
    "t1-1": lambda: gen_table1(1),
    "t1-2": lambda: gen_table1(2),
    "t1-3": lambda: gen_table1(3),
    "t2-1": lambda: gen_table2(1),
    "t2-2": lambda: gen_table2(2),
    "t3": gen_table3,
}


@pytest.mark.parametrize("name", sorted(TABLES))
def test_table_rows_are_all_trees_with_their_signs(name):
    f = TABLES[name]()
    H, om = f.graph, f.orientation
    assert {tuple(sorted(r.tree)) for r in f.rows} == set(enumerate_spanning_trees(H))
    assert len(f.rows) == count_spanning_trees(H)
    for r in f.rows:
        assert tree_sign(r.tree, om, n=H.n) == r.sign
        assert tree_cycle(r.tree, om, order=range(len(r.tree)), n=H.n) == r.cycle


@pytest.mark.parametrize("i", [1, 3])
def test_table1_alternating_signs(i):
    assert [r.sign for r in gen_table1(i).rows] == [1, -1, 1, -1, 1, -1]


@pytest.mark.parametrize("i", [1, 2, 3])
def test_table1_entries_are_not_pfaffian(i):
    f = gen_table1(i)
    assert isinstance(decide_3pfaffian(f.graph, base=f.orientation), Certificate)


def test_table_index_errors():
    with pytest.raises(BadIndex):
        gen_table1(4)
    with pytest.raises(BadIndex):
        gen_table2(0)


def test_labels_round_trip():
    f = gen_table3()
    for t in f.graph.triples:
        assert f.parse(f.name(t)) == t


@pytest.mark.parametrize(("n", "triples"), [(3, 1), (5, 10), (7, 35)])
def test_complete(n, triples):
    assert len(gen_complete(n).triples) == triples


def test_complete_rejects_even():
    with pytest.raises(EvenOrder):
        gen_complete(6)


def test_twin_is_treeless():
    H = gen_twin()
    assert count_spanning_trees(H) == 0 and pair_multiplicity(H, 1, 2) == 3


@pytest.mark.parametrize(("order", "deg", "blocks"), [(7, 3, 7), (9, 4, 12)])
def test_steiner_systems(order, deg, blocks):
    H = gen_sts(order)
    assert len(H.triples) == blocks
    assert all(vertex_degree(H, v) == deg for v in H.vertices)
    assert all(pair_multiplicity(H, a, b) == 1 for a in H.vertices for b in H.vertices if a < b)


def test_sts_unsupported():
    with pytest.raises(UnsupportedOrder):
        gen_sts(13)


def test_lucas_numbers():
    assert [lucas(k) for k in range(1, 9)] == [1, 3, 4, 7, 11, 18, 29, 47]


@pytest.mark.parametrize("k", range(3, 8))
def test_interlaced_counts_and_signs(k):
    H = gen_interlaced(k)
    predicted = interlaced_tree_signs(k)
    assert set(enumerate_spanning_trees(H)) == set(predicted)
    assert len(predicted) == lucas(k) == 1 + len(independent_cyclic_sets(k))
    for T, s in predicted.items():
        assert tree_sign(T, n=H.n) == s


def test_interlaced_matches_tables():
    assert is_isomorphic(gen_interlaced(3), gen_table2(1).graph)
    assert is_isomorphic(gen_interlaced(4), gen_table2(2).graph)
    assert is_isomorphic(gen_interlaced(5), gen_table3().graph)
    assert interlaced_labels(3)[1] == "0" and len(interlaced_labels(3)) == 7


def test_interlaced_rejects_small_k():
    with pytest.raises(BadParameters):
        gen_interlaced(2)


def test_prop63_pairings_match_table1():
    assert is_isomorphic(gen_prop63("two_edges", 4, (1, 3, 2, 4)), gen_table1(2).graph)
    assert is_isomorphic(gen_prop63("two_edges", 4, (1, 2, 3, 4)), gen_table1(3).graph)
    assert is_isomorphic(gen_prop63("triangle", 3, (1, 2, 3)), gen_table1(1).graph)


@pytest.mark.parametrize(
    ("variant", "k", "params"), [("two_edges", 6, (1, 2, 3, 4)), ("triangle", 6, (1, 3, 5)), ("two_edges", 5, (1, 4, 2, 5))]
)
def test_prop63_larger_members_not_pfaffian(variant, k, params):
    H = gen_prop63(variant, k, params)
    assert count_spanning_trees(H) > 0
    assert isinstance(decide_3pfaffian(H), Certificate)


def test_prop63_parameter_errors():
    with pytest.raises(BadParameters):
        gen_prop63("two_edges", 4, (1, 1, 2, 3))
    with pytest.raises(BadParameters):
        gen_prop63("square", 4, (1, 2, 3, 4))


@pytest.mark.parametrize("side", ["left", "right"])
def test_fig3_graphs_are_treeless(side):
    H = gen_fig3(side)
    assert H.n % 2 == 1 and count_spanning_trees(H) == 0
