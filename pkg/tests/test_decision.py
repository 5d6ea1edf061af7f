from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from conftest import graphs, three_graphs
from h3g.core import ThreeGraph, build_multigraph, contract_triple, delete_triple
from h3g.decision import (
    Certificate,
    Gf2System,
    Witness,
    decide_3pfaffian,
    decide_graph_pfaffian,
    gf2_rank,
    in_row_span,
    minimality_check,
    tree_rows,
    verify_certificate,
    verify_graph_certificate,
    verify_graph_witness,
    verify_witness,
)
from h3g.errors import IndexOutOfRange, NotNonPfaffian
from h3g.families import gen_interlaced, gen_prop63, gen_table1, gen_table3, gen_twin
from h3g.signs import TripleOrientation, tree_sign
from h3g.suspensions import suspend
from h3g.trees import enumerate_spanning_trees


def _brute_force_pfaffian(H: ThreeGraph) -> bool:
    trees = list(enumerate_spanning_trees(H))
    for r in range(len(H) + 1):
        for flips in combinations(H.triples, r):
            w = TripleOrientation().flip(flips)
            if len({tree_sign(T, w, n=H.n) for T in trees}) <= 1:
                return True
    return False


def test_gf2_system_detects_conflict():
    s = Gf2System()
    s.add(0b011, False)
    s.add(0b110, False)
    s.add(0b101, True)  # sum of the first two rows with the opposite parity
    assert s.rank == 2
    assert s.infeasible(0) and not s.infeasible(1)
    assert s.conflicts[0] == 0b111


def test_table1_certificate():
    f = gen_table1(1)
    signs = [tree_sign(T, f.orientation, n=f.graph.n) for T in enumerate_spanning_trees(f.graph)]
    assert sorted(signs) == [-1, -1, -1, 1, 1, 1]
    out = decide_3pfaffian(f.graph)
    assert isinstance(out, Certificate) and verify_certificate(f.graph, out)
    assert minimality_check(f.graph).minimal


def test_table3_witness_and_corruption():
    f = gen_table3()
    out = decide_3pfaffian(f.graph, f.orientation)
    assert isinstance(out, Witness) and out.sign == 1
    assert verify_witness(f.graph, out.flips, f.orientation)
    assert verify_witness(f.graph, f.expected_flips, f.orientation)
    extra = next(t for t in f.graph.triples if t not in f.expected_flips)
    assert not verify_witness(f.graph, (*f.expected_flips, extra), f.orientation)


def test_single_tree_gives_witness():
    H = ThreeGraph(5, ((1, 2, 3), (3, 4, 5)))
    out = decide_3pfaffian(H)
    assert isinstance(out, Witness) and out.flips == ()
    vac = decide_3pfaffian(gen_twin())
    assert isinstance(vac, Witness) and vac.vacuous


def test_graph_pfaffian_examples():
    K4 = build_multigraph(4, combinations(range(1, 5), 2))
    out = decide_graph_pfaffian(K4)
    assert isinstance(out, Witness) and verify_graph_witness(K4, out.flips)
    K33 = build_multigraph(6, [(a, b) for a in (1, 2, 3) for b in (4, 5, 6)])
    cert = decide_graph_pfaffian(K33)
    assert isinstance(cert, Certificate) and verify_graph_certificate(K33, cert)
    P2 = build_multigraph(2, [(1, 2)])
    assert isinstance(decide_graph_pfaffian(P2), Witness)


def test_certificate_verification_rejects_tampering():
    f = gen_table1(2)
    cert = decide_3pfaffian(f.graph)
    assert isinstance(cert, Certificate)
    bad = Certificate(cert.positive[:-1], cert.negative)
    assert not verify_certificate(f.graph, bad)
    with pytest.raises(IndexOutOfRange):
        verify_certificate(f.graph, Certificate((0, 99), (0, 99)))


def test_minimality():
    assert minimality_check(gen_interlaced(4)).minimal
    r = minimality_check(gen_prop63("two_edges", 5, (1, 2, 3, 4)))
    assert not r.minimal and r.op in ("delete", "contract")
    with pytest.raises(NotNonPfaffian):
        minimality_check(gen_interlaced(3))


def test_rank_helpers():
    rows = [0b011, 0b110, 0b101]
    assert gf2_rank(rows) == 2
    assert in_row_span(rows, 0b101) and not in_row_span(rows, 0b111)


@given(three_graphs(odd=True, max_n=7, max_triples=10))
def test_decision_matches_brute_force(H: ThreeGraph):
    out = decide_3pfaffian(H)
    assert isinstance(out, Witness) == _brute_force_pfaffian(H)
    if isinstance(out, Witness):
        assert verify_witness(H, out.flips)
    else:
        assert verify_certificate(H, out)
        rank = gf2_rank(r for r, _ in tree_rows(H))
        assert len(out.positive) <= rank + 1 and len(out.negative) <= rank + 1


@given(three_graphs(odd=True, max_n=9), st.data())
def test_delete_contract_identity(H: ThreeGraph, data):
    t = data.draw(st.sampled_from(H.triples))
    trees = list(enumerate_spanning_trees(H))
    inside = sum(1 for T in trees if t in T)
    verdict = isinstance(decide_3pfaffian(H), Witness)
    if inside == 0:
        assert verdict == isinstance(decide_3pfaffian(delete_triple(H, t)), Witness)
    elif inside == len(trees):
        assert verdict == isinstance(decide_3pfaffian(contract_triple(H, t)[0]), Witness)


@given(graphs(max_n=8))
def test_graph_decision_matches_one_suspension(G):
    g = decide_graph_pfaffian(G)
    h = decide_3pfaffian(suspend(G, 1))
    assert isinstance(g, Witness) == isinstance(h, Witness)
    if isinstance(g, Witness):
        assert verify_graph_witness(G, g.flips)
    else:
        assert verify_graph_certificate(G, g)
