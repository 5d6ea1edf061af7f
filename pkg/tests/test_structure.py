from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, three_graphs
from h3g.core import ThreeGraph, build_multigraph, underlying_graph
from h3g.decision import Witness, decide_3pfaffian, decide_graph_pfaffian, verify_witness
from h3g.errors import EvenVertexCount, NotASuspension, NotHamiltonianCycle, TooLarge
from h3g.families import gen_complete, gen_fig3, gen_sts, gen_twin
from h3g.structure import (
    blocks,
    components_after_removal,
    edges_from_1susp_orientation,
    even_block_obstruction,
    find_hamiltonian_cycle,
    hamiltonian_q_bound,
    is_connected,
    multiplicity_condition,
    transfer_orientation_1susp,
    tutte_like_check,
)
from h3g.suspensions import suspend
from h3g.trees import count_spanning_trees, enumerate_spanning_trees


def test_connectivity():
    assert is_connected(gen_twin())
    assert not is_connected(ThreeGraph(6, ((1, 2, 3), (4, 5, 6))))
    assert is_connected(gen_complete(5))


def test_components_after_removal():
    r = components_after_removal(gen_twin(), {1, 2})
    assert r.components == (frozenset({3}), frozenset({4}), frozenset({5})) and r.odd_count == 3


def test_tutte_examples():
    v = tutte_like_check(gen_twin())
    assert not v.passes and v.S == (1, 2) and v.q == 3
    T = ThreeGraph(7, ((1, 2, 3), (3, 4, 5), (5, 6, 7)))
    assert tutte_like_check(T).passes
    with pytest.raises(TooLarge):
        tutte_like_check(gen_complete(7), max_n=5)


@pytest.mark.parametrize("side", ["left", "right"])
def test_treeless_graphs_pass_tutte(side):
    H = gen_fig3(side)
    assert count_spanning_trees(H) == 0
    assert is_connected(H) and H.n % 2 == 1
    assert tutte_like_check(H).passes
    assert find_hamiltonian_cycle(H) is not None
    assert even_block_obstruction(H) is None


def test_even_blocks():
    assert even_block_obstruction(ThreeGraph(3, ((1, 2, 3),))) is None
    assert even_block_obstruction(ThreeGraph(5, ((1, 2, 3), (3, 4, 5)))) is None
    assert even_block_obstruction(ThreeGraph(5, ((1, 2, 3), (1, 2, 4)))) == frozenset({1, 2, 3, 4})
    assert [len(b) for b in blocks(ThreeGraph(5, ((1, 2, 3), (3, 4, 5))))] == [3, 3]


def test_multiplicity_condition():
    assert multiplicity_condition(gen_sts(7))
    assert multiplicity_condition(gen_complete(5))
    assert not multiplicity_condition(gen_twin())


def test_hamiltonian_bound():
    C5 = build_multigraph(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])
    assert hamiltonian_q_bound(C5, [1, 2, 3, 4, 5])
    assert hamiltonian_q_bound(underlying_graph(gen_complete(7)), list(range(1, 8)))
    with pytest.raises(NotHamiltonianCycle):
        hamiltonian_q_bound(C5, [1, 3, 2, 4, 5])
    with pytest.raises(EvenVertexCount):
        hamiltonian_q_bound(build_multigraph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]), [1, 2, 3, 4])


def test_transfer_round_trip():
    G = build_multigraph(4, [(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
    omega = transfer_orientation_1susp(G, [(1, 3)])
    assert omega.flipped == frozenset({(1, 3, 5)})
    G2, rev = edges_from_1susp_orientation(suspend(G, 1), omega)
    assert G2 == G and rev == ((1, 3),)
    with pytest.raises(NotASuspension):
        transfer_orientation_1susp(G, [(2, 4)])
    with pytest.raises(NotASuspension):
        edges_from_1susp_orientation(gen_twin(), omega)


@given(three_graphs(odd=True, max_n=11, max_triples=16))
def test_tutte_never_flags_a_graph_with_a_tree(H: ThreeGraph):
    if next(iter(enumerate_spanning_trees(H)), None) is not None:
        assert tutte_like_check(H).passes


@given(three_graphs(odd=True, max_n=11, max_triples=12))
def test_even_block_means_no_tree(H: ThreeGraph):
    if even_block_obstruction(H) is not None:
        assert count_spanning_trees(H) == 0


@given(st.integers(1, 5), st.data())
def test_covering_graphs_have_trees(half, data):
    import random

    from h3g.acceptance import random_covering_3graph

    rng = random.Random(data.draw(st.integers(0, 10**6)))
    H = random_covering_3graph(rng, 2 * half + 1, extra=rng.randint(0, 4))
    assert multiplicity_condition(H)
    assert next(iter(enumerate_spanning_trees(H)), None) is not None


@given(graphs(max_n=8))
def test_transferred_witness_verifies(G):
    out = decide_graph_pfaffian(G)
    if isinstance(out, Witness):
        omega = transfer_orientation_1susp(G, out.flips)
        assert verify_witness(suspend(G, 1), omega.flipped)
        assert isinstance(decide_3pfaffian(suspend(G, 1)), Witness)
