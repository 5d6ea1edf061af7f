from __future__ import annotations

import pytest

from h3g.core import ThreeGraph, build_three_graph
from h3g.decision import Certificate, Witness, verify_witness
from h3g.errors import CyclesPresent, NotPSTS, OutOfRange
from h3g.families import gen_complete, gen_interlaced, gen_psts_k33, gen_sts, interlaced_t
from h3g.steiner import (
    cyclify_black_triangles,
    decide_psts_via_graph,
    is_partial_sts,
    link_graph,
    matching_alternates,
    psts_bijection_report,
    third_vertex,
    transfer_graph_orientation,
)
from h3g.trees import count_spanning_trees

RING = build_three_graph(7, [(1, 2, 3), (3, 4, 5), (1, 5, 6), (2, 4, 7)])


def test_partial_sts_recognition():
    assert is_partial_sts(gen_sts(7))
    assert is_partial_sts(gen_sts(9))
    assert not is_partial_sts(gen_complete(5))
    assert all(is_partial_sts(gen_interlaced(k)) for k in range(3, 8))
    assert not is_partial_sts(build_three_graph(4, [(1, 2, 3), (1, 2, 4)]))


def test_third_vertex_on_fano():
    third = third_vertex(gen_sts(7))
    assert len(third) == 21
    for (a, b), c in third.items():
        assert tuple(sorted((a, b, c))) in gen_sts(7).triples


def test_matching_alternates_finds_ring():
    cyc = matching_alternates(RING, 7, [(1, 2), (3, 4), (5, 6)])
    assert cyc is not None
    assert len(cyc.vertices) == 6 and len(cyc.triples) == 3
    assert set(cyc.triples) == {(1, 2, 3), (3, 4, 5), (1, 5, 6)}


def test_matching_without_cycle():
    assert matching_alternates(RING, 7, [(1, 3), (2, 4), (5, 6)]) is None


@pytest.mark.parametrize(("H", "trees", "matchings"), [(gen_sts(7), 7, 15), (gen_sts(9), 45, 105)], ids=["fano", "sts9"])
def test_bijection_every_vertex(H, trees, matchings):
    for v in H.vertices:
        r = psts_bijection_report(H, v)
        assert (r.trees, r.matchings, r.non_alternating) == (trees, matchings, trees)
        assert r.bijective


def test_bijection_interlaced_k3():
    H = gen_interlaced(3)
    r = psts_bijection_report(H, 1)
    assert r.bijective and r.trees == count_spanning_trees(H) == r.non_alternating


def test_cyclify_is_idempotent_on_cyclic_input():
    H, v = gen_psts_k33()
    Gv_rev, _ = cyclify_black_triangles(H, v, [])
    again, flipped = cyclify_black_triangles(H, v, Gv_rev)
    assert flipped == () and again == Gv_rev


def test_transfer_yields_witness_for_interlaced_minus_one():
    H = gen_interlaced(5)
    H = ThreeGraph(H.n, tuple(t for t in H.triples if t != interlaced_t(5, 1)))
    verdict = decide_psts_via_graph(H, 1)
    assert verdict.pfaffian and verdict.agrees
    assert verify_witness(H, verdict.orientation.flipped)


def test_psts_k33_is_not_pfaffian():
    H, v = gen_psts_k33()
    assert count_spanning_trees(H) == 8
    verdict = decide_psts_via_graph(H, v)
    assert not verdict.pfaffian and isinstance(verdict.graph_outcome, Certificate) and verdict.agrees


def test_transfer_from_any_cyclic_orientation_matches_sign():
    H, v = gen_psts_k33()
    Gv, relabel = link_graph(H, v)
    assert Gv.n == H.n - 1
    rev, _ = cyclify_black_triangles(H, v, [])
    omega = transfer_graph_orientation(H, v, rev)
    assert set(omega.flipped) <= set(H.triples)


def test_errors():
    with pytest.raises(NotPSTS):
        psts_bijection_report(gen_complete(5), 1)
    with pytest.raises(OutOfRange):
        psts_bijection_report(gen_sts(7), 9)
    with pytest.raises(CyclesPresent):
        decide_psts_via_graph(gen_sts(7), 1)


def test_outcome_types():
    H = gen_interlaced(5)
    H = ThreeGraph(H.n, tuple(t for t in H.triples if t != interlaced_t(5, 1)))
    assert isinstance(decide_psts_via_graph(H, 1).graph_outcome, Witness)
