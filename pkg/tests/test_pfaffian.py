from __future__ import annotations

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import orientations, three_graphs
from h3g.core import ThreeGraph
from h3g.errors import EvenVertexCount, NonPrimeModulus, NotAntisymmetric, OddDimension, TooManyTriples
from h3g.families import gen_complete, gen_twin
from h3g.pfaffian import (
    SkewMatrix,
    crossings,
    determinant_exact,
    epsilon,
    field_size,
    hr_expansion,
    lambda_entry_bound_holds,
    lambda_matrix,
    matching_sign,
    pfaffian_exact,
    pfaffian_matching_sum,
    pfaffian_mod,
    randomized_existence_test,
    signed_count_via_pfaffian,
    variance_identity_check,
)
from h3g.signs import TripleOrientation, permutation_sign, signed_tree_census
from h3g.trees import count_spanning_trees


@st.composite
def skew_matrices(draw, max_half: int = 5, bound: int = 6):
    m = 2 * draw(st.integers(1, max_half))
    A = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            x = draw(st.integers(-bound, bound))
            A[i][j], A[j][i] = x, -x
    return A


def test_epsilon():
    assert epsilon(1, 2, 3) == 1
    assert epsilon(2, 1, 3) == -1
    assert epsilon(1, 1, 3) == 0


def test_lambda_matrix_small():
    L = lambda_matrix(gen_complete(3)).entries
    assert (L[0][1], L[0][2], L[1][2]) == (1, -1, 1)
    assert lambda_matrix(ThreeGraph(4, ())).entries == ((0,) * 4,) * 4


def test_lambda_flip_negates_contributions():
    H = gen_complete(5)
    t = (1, 2, 3)
    A = lambda_matrix(H).entries
    B = lambda_matrix(H, TripleOrientation().flip([t])).entries
    alone = lambda_matrix(ThreeGraph(5, (t,))).entries
    for i in range(5):
        for j in range(5):
            assert B[i][j] == A[i][j] - 2 * alone[i][j]


def test_small_pfaffians():
    assert pfaffian_exact([[0, 7], [-7, 0]]) == 7
    A = [[0, 2, 0, 0], [-2, 0, 0, 0], [0, 0, 0, 5], [0, 0, -5, 0]]
    assert pfaffian_exact(A) == 10
    assert pfaffian_mod([[0, 3], [-3, 0]], 5) == 3
    assert pfaffian_mod([[0] * 4 for _ in range(4)], 7) == 0


def test_pfaffian_errors():
    with pytest.raises(OddDimension):
        pfaffian_exact([[0]])
    with pytest.raises(NotAntisymmetric):
        pfaffian_exact([[0, 1], [1, 0]])
    with pytest.raises(NonPrimeModulus):
        pfaffian_mod([[0, 1], [-1, 0]], 8)
    with pytest.raises(OddDimension):
        pfaffian_mod([[0]], 5)


def test_matching_signs():
    assert crossings([(1, 3), (2, 4)]) == 1 and matching_sign([(1, 3), (2, 4)]) == -1
    assert matching_sign([(1, 2), (3, 4)]) == 1


@given(skew_matrices())
def test_pfaffian_squared_is_determinant(A):
    pf = pfaffian_exact(A)
    assert pf * pf == determinant_exact(A)
    assert pf == pfaffian_matching_sum(A)


@given(skew_matrices(), st.sampled_from([5, 7, 11, 101]))
def test_modular_matches_exact(A, q):
    assert pfaffian_mod(SkewMatrix(tuple(map(tuple, A)), q)) == pfaffian_exact(A) % q


@given(skew_matrices(max_half=3), st.data())
def test_pfaffian_under_permutation(A, data):
    m = len(A)
    p = data.draw(st.permutations(range(m)))
    B = [[A[p[i]][p[j]] for j in range(m)] for i in range(m)]
    assert pfaffian_exact(B) == permutation_sign([x + 1 for x in p]) * pfaffian_exact(A)


def test_signed_counts_examples():
    assert signed_count_via_pfaffian(gen_complete(3), k=3) == 1
    for k in range(1, 6):
        assert signed_count_via_pfaffian(gen_complete(5), k=k) == 5
    assert hr_expansion(gen_complete(5)) == 5
    with pytest.raises(EvenVertexCount):
        signed_count_via_pfaffian(ThreeGraph(4, ((1, 2, 3),)))


@given(three_graphs(odd=True, max_n=9), st.data())
def test_three_signed_counts_agree(H: ThreeGraph, data):
    omega = data.draw(orientations(H))
    p, m = signed_tree_census(H, omega)
    assert hr_expansion(H, omega) == p - m
    for k in range(1, H.n + 1):
        assert signed_count_via_pfaffian(H, omega, k) == p - m


def test_variance_examples():
    assert variance_identity_check(gen_twin()) == (0, 0)
    assert variance_identity_check(gen_complete(5)) == (0, 15)
    assert variance_identity_check(ThreeGraph(3, ((1, 2, 3),))) == (0, 1)
    with pytest.raises(TooManyTriples):
        variance_identity_check(gen_complete(7))


@given(three_graphs(odd=True, max_n=9, max_triples=12), st.data())
def test_variance_identity(H: ThreeGraph, data):
    omega = data.draw(orientations(H))
    assert variance_identity_check(H, omega) == (Fraction(0), Fraction(count_spanning_trees(H)))


def test_existence_on_twin_and_complete():
    for trials in (1, 3, 10):
        v = randomized_existence_test(gen_twin(), trials, seed=1)
        assert v.kind == "ProbablyNone" and v.bound == Fraction(2, field_size(5)) ** trials
    wins = sum(randomized_existence_test(gen_complete(5), 1, seed=s).exists for s in range(1000))
    assert wins >= 600
    assert field_size(5) >= 4 * 2


def test_existence_is_deterministic():
    H = gen_complete(7)
    a = randomized_existence_test(H, 2, seed=9)
    b = randomized_existence_test(H, 2, seed=9)
    assert a == b


@given(three_graphs(odd=True, max_n=9), st.data())
def test_lambda_entry_bound(H: ThreeGraph, data):
    omega = data.draw(orientations(H))
    y = {t: data.draw(st.sampled_from((1, -1))) for t in H.triples}
    assert lambda_entry_bound_holds(H, omega, y)


def test_large_random_kernel_sample():
    rng = random.Random(3)
    for m in (10, 12):
        A = [[0] * m for _ in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                x = rng.randint(-20, 20)
                A[i][j], A[j][i] = x, -x
        pf = pfaffian_exact(A)
        assert pf == pfaffian_matching_sum(A) and pf * pf == determinant_exact(A)
