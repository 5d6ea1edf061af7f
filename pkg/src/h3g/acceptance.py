"""Acceptance drivers: one function per criterion, shared by the CLI and the test suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable, Iterator

from .core import Multigraph, ThreeGraph, build_multigraph, build_three_graph, delete_triple, is_isomorphic
from .decision import (
    Certificate,
    Witness,
    decide_3pfaffian,
    decide_graph_pfaffian,
    gf2_rank,
    in_row_span,
    minimality_check,
    verify_certificate,
    verify_witness,
)
from .families import (
    gen_complete,
    gen_fig3,
    gen_interlaced,
    gen_prop63,
    gen_psts_k33,
    gen_sts,
    gen_table1,
    gen_table2,
    gen_table3,
    gen_twin,
    interlaced_s,
    interlaced_t,
    interlaced_tree_signs,
    lucas,
)
from .pfaffian import (
    determinant_exact,
    hr_expansion,
    lambda_entry_bound_holds,
    pfaffian_exact,
    pfaffian_matching_sum,
    randomized_existence_test,
    signed_count_via_pfaffian,
    variance_identity_check,
)
from .signs import TripleOrientation, signed_tree_census, tree_sign
from .steiner import decide_psts_via_graph, link_graph, psts_bijection_report
from .structure import even_block_obstruction, tutte_like_check
from .suspensions import decide_2susp, k_susp_impossibility, suspend
from .trees import (
    PruferCode,
    count_spanning_trees,
    enumerate_perfect_matchings,
    enumerate_spanning_trees,
    enumerate_tree_indices,
    forest_check,
    prufer_decode,
    prufer_encode,
)

__all__ = [
    "CriterionResult",
    "CRITERIA",
    "run_criterion",
    "run_all",
    "graph_pool",
    "random_graph",
    "random_covering_3graph",
    "random_3graph",
    "random_tree",
    "fixture_pool",
    "psts_fixtures",
]

SEED = 2024


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        return f"[{mark}] {self.number:2d} {self.title}: {self.detail}"


# --- pools ----------------------------------------------------------------------


def graph_pool(max_n: int = 7) -> list[Multigraph]:
    """Every simple graph on 1..max_n vertices (max_n <= 7), up to isomorphism."""
    import networkx as nx

    out = []
    for g in nx.graph_atlas_g()[1:]:
        if g.number_of_nodes() <= max_n:
            out.append(build_multigraph(g.number_of_nodes(), [(a + 1, b + 1) for a, b in g.edges()]))
    return out


def random_graph(rng: random.Random, n: int, p: float) -> Multigraph:
    edges = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if rng.random() < p]
    return build_multigraph(n, edges)


def random_covering_3graph(rng: random.Random, n: int, extra: int = 0) -> ThreeGraph:
    """Random 3-graph in which every pair of vertices lies in some triple."""
    tri: set[tuple[int, ...]] = set()
    covered: set[tuple[int, int]] = set()
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    rng.shuffle(pairs)
    for a, b in pairs:
        if (a, b) in covered:
            continue
        c = rng.choice([x for x in range(1, n + 1) if x not in (a, b)])
        t = tuple(sorted((a, b, c)))
        tri.add(t)
        covered |= {(t[0], t[1]), (t[0], t[2]), (t[1], t[2])}
    for _ in range(extra):
        tri.add(tuple(sorted(rng.sample(range(1, n + 1), 3))))
    return build_three_graph(n, sorted(tri))


def random_3graph(rng: random.Random, n: int, m: int) -> ThreeGraph:
    tri = {tuple(sorted(rng.sample(range(1, n + 1), 3))) for _ in range(m)}
    return build_three_graph(n, sorted(tri))


def random_tree(rng: random.Random, n: int) -> tuple[tuple[int, ...], ...]:
    """Random spanning tree of the complete 3-graph on 2n+1 vertices, grown leaf by leaf."""
    order = list(range(1, 2 * n + 2))
    rng.shuffle(order)
    placed = [order[0]]
    T = []
    for i in range(n):
        a, b = order[2 * i + 1], order[2 * i + 2]
        T.append(tuple(sorted((rng.choice(placed), a, b))))
        placed += [a, b]
    return tuple(sorted(T))


def fixture_pool() -> list[tuple[str, ThreeGraph, TripleOrientation]]:
    """Named fixtures with the orientation they are usually read under."""
    out: list[tuple[str, ThreeGraph, TripleOrientation]] = []
    for i in (1, 2, 3):
        f = gen_table1(i)
        out.append((f"table1-{i}", f.graph, f.orientation))
    for i in (1, 2):
        f = gen_table2(i)
        out.append((f"table2-{i}", f.graph, f.orientation))
    f = gen_table3()
    out.append(("table3", f.graph, f.orientation))
    canon = TripleOrientation()
    out += [(f"complete-{n}", gen_complete(n), canon) for n in (3, 5)]
    out += [("twin", gen_twin(), canon), ("fano", gen_sts(7), canon)]
    out += [(f"interlaced-{k}", gen_interlaced(k), canon) for k in range(3, 9)]
    out += [("fig3-left", gen_fig3("left"), canon), ("fig3-right", gen_fig3("right"), canon)]
    out += [("prop63-triangle-3", gen_prop63("triangle", 3, (1, 2, 3)), canon)]
    out += [("prop63-two-edges-4", gen_prop63("two_edges", 4, (1, 2, 3, 4)), canon)]
    out += [("psts-k33", gen_psts_k33()[0], canon)]
    return out


def psts_fixtures() -> list[tuple[str, ThreeGraph, int]]:
    """Partial Steiner systems whose triples avoiding v form a forest."""
    H, v = gen_psts_k33()
    out = [("psts-k33", H, v)]
    for k in range(3, 8):
        G = gen_interlaced(k)
        for i in range(1, k + 1):
            for t in (interlaced_t(k, i), interlaced_s(k, i)):
                H1 = delete_triple(G, t)
                if forest_check([x for x in H1.triples if 1 not in x]):
                    out.append((f"interlaced-{k}-minus-{''.join(map(str, t))}", H1, 1))
    return out


# --- criteria -------------------------------------------------------------------

Check = Callable[[], tuple[bool, str]]


def _complete_counts() -> tuple[bool, str]:
    want = [1, 15, 735, 76545]
    got = []
    t0 = time.perf_counter()
    for n in range(1, 5):
        got.append(count_spanning_trees(gen_complete(2 * n + 1)))
    secs = time.perf_counter() - t0
    formula = [_double_factorial(2 * n - 1) * (2 * n + 1) ** (n - 1) for n in range(1, 5)]
    return got == want == formula and secs <= 60, f"counts {got}"


def _double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def _all_codes(n: int) -> Iterator[PruferCode]:
    from .pfaffian import complete_matchings

    size = 2 * n + 1

    def seqs(length: int) -> Iterator[tuple[int, ...]]:
        if length == 0:
            yield ()
            return
        for head in range(1, size + 1):
            for tail in seqs(length - 1):
                yield (head, *tail)

    matchings = [tuple(sorted(tuple(sorted(e)) for e in M)) for M in complete_matchings(list(range(1, 2 * n + 1)))]
    for g in seqs(n - 1):
        for M in matchings:
            yield PruferCode(g, M)


def _prufer() -> tuple[bool, str]:
    ok = True
    checked = 0
    for n in (1, 2, 3):
        for T in enumerate_spanning_trees(gen_complete(2 * n + 1)):
            ok &= prufer_decode(prufer_encode(T, n), n) == T
            checked += 1
    rng = random.Random(SEED)
    for _ in range(100):
        T = random_tree(rng, 4)
        ok &= prufer_decode(prufer_encode(T, 4), 4) == T
    trees2 = {prufer_decode(c, 2) for c in _all_codes(2)}
    codes2 = sum(1 for _ in _all_codes(2))
    ok &= codes2 == len(trees2) == count_spanning_trees(gen_complete(5))
    return ok, f"{checked} exhaustive + 100 random round trips; {codes2} codes onto {len(trees2)} trees at n=2"


def _signed_counts() -> tuple[bool, str]:
    ok = True
    diffs = []
    for n in (1, 2, 3):
        H = gen_complete(2 * n + 1)
        p, m = signed_tree_census(H)
        diffs.append(p - m)
        ok &= p - m == (2 * n + 1) ** (n - 1)
    checked = 0
    for _, H, omega in fixture_pool():
        if H.n % 2 == 0 or H.n > 13:
            continue
        p, m = signed_tree_census(H, omega)
        hr = hr_expansion(H, omega)
        ok &= hr == p - m
        for k in range(1, H.n + 1):
            ok &= signed_count_via_pfaffian(H, omega, k) == p - m
        checked += 1
    return ok, f"complete differences {diffs}; Pfaffian minors and expansion agree on {checked} fixtures"


def _example_signs() -> tuple[bool, str]:
    a = tree_sign([(1, 2, 4), (2, 6, 7), (3, 5, 6)], TripleOrientation.from_cyclic([(1, 2, 4), (2, 7, 6), (3, 6, 5)]), n=7)
    b = tree_sign([(1, 2, 4), (3, 4, 7), (4, 5, 6)], TripleOrientation.from_cyclic([(1, 2, 4), (3, 7, 4), (4, 6, 5)]), n=7)
    return (a, b) == (-1, 1), f"signs {a:+d} {b:+d}"


def _twin() -> tuple[bool, str]:
    H = gen_twin()
    trees = count_spanning_trees(H)
    v = tutte_like_check(H)
    verdicts = {randomized_existence_test(H, t, SEED).kind for t in (1, 2, 5, 20)}
    ok = trees == 0 and not v.passes and len(v.S) == 2 and verdicts == {"ProbablyNone"}
    return ok, f"{trees} trees, violating set {v.S} with {v.q} odd components, verdicts {sorted(verdicts)}"


def _table_rows_match(f) -> bool:
    trees = set(enumerate_spanning_trees(f.graph))
    listed = [tuple(sorted(r.tree)) for r in f.rows]
    if trees != set(listed) or len(listed) != len(trees):
        return False
    return all(tree_sign(r.tree, f.orientation, n=f.graph.n) == r.sign for r in f.rows)


def _table1() -> tuple[bool, str]:
    t0 = time.perf_counter()
    ok = True
    for i in (1, 2, 3):
        f = gen_table1(i)
        ok &= len(f.rows) == 6 and _table_rows_match(f)
        out = decide_3pfaffian(f.graph)
        ok &= isinstance(out, Certificate) and verify_certificate(f.graph, out)
        ok &= minimality_check(f.graph).minimal
    secs = time.perf_counter() - t0
    return ok and secs <= 5, "3 fixtures, 6 signed trees each, certified and minimal"


def _tree_triple_rows(f) -> list[int]:
    """One bit vector per triple, bit j set when the j-th listed tree contains it."""
    rows = []
    for t in f.graph.triples:
        rows.append(sum(1 << j for j, r in enumerate(f.rows) if t in {tuple(sorted(x)) for x in r.tree}))
    return rows


def _bits(word: str) -> int:
    return sum(1 << j for j, c in enumerate(word) if c == "1")


def _table2() -> tuple[bool, str]:
    f1, f2 = gen_table2(1), gen_table2(2)
    ok = len(f1.rows) == 4 and _table_rows_match(f1) and all(r.sign == -1 for r in f1.rows)
    w = decide_3pfaffian(f1.graph, f1.orientation)
    ok &= isinstance(w, Witness) and verify_witness(f1.graph, w.flips, f1.orientation)
    signs = tuple(r.sign for r in f2.rows)
    ok &= len(f2.rows) == 7 and _table_rows_match(f2) and signs == (1, 1, 1, 1, -1, -1, 1)
    c = decide_3pfaffian(f2.graph, f2.orientation)
    ok &= isinstance(c, Certificate) and verify_certificate(f2.graph, c, f2.orientation)
    rows = _tree_triple_rows(f2)
    rank = gf2_rank(rows)
    all_negative, all_positive = _bits("1111001"), _bits("0000110")
    outside = not in_row_span(rows, all_negative) and not in_row_span(rows, all_positive)
    ok &= rank == 5 and outside
    return ok, f"entry 1 witness flips {len(w.flips) if isinstance(w, Witness) else '-'}; entry 2 rank {rank}, targets outside span: {outside}"


def _table3() -> tuple[bool, str]:
    f = gen_table3()
    ok = len(f.rows) == 11 and _table_rows_match(f)
    out = decide_3pfaffian(f.graph, f.orientation)
    ok &= isinstance(out, Witness) and verify_witness(f.graph, out.flips, f.orientation)
    ok &= verify_witness(f.graph, f.expected_flips, f.orientation)
    names = " ".join(f.name(t) for t in out.flips) if isinstance(out, Witness) else "-"
    return ok, f"11 signed trees; witness {names}, listed set also verifies"


def _interlaced() -> tuple[bool, str]:
    t0 = time.perf_counter()
    ok = True
    counts = []
    for k in range(3, 9):
        H = gen_interlaced(k)
        trees = list(enumerate_spanning_trees(H))
        counts.append(len(trees))
        ok &= len(trees) == lucas(k)
        ok &= isinstance(decide_3pfaffian(H), Witness) == (k % 2 == 1)
        if k <= 6:
            want = interlaced_tree_signs(k)
            ok &= set(want) == set(trees) and all(tree_sign(T, n=H.n) == s for T, s in want.items())
    for k in (4, 6):
        ok &= minimality_check(gen_interlaced(k)).minimal
    ok &= is_isomorphic(gen_interlaced(3), gen_table2(1).graph) and is_isomorphic(gen_interlaced(5), gen_table3().graph)
    secs = time.perf_counter() - t0
    return ok and secs <= 30, f"counts {counts}"


def _same_kind(a, b) -> bool:
    return isinstance(a, Certificate) == isinstance(b, Certificate)


def _suspensions() -> tuple[bool, str]:
    rng = random.Random(SEED)
    ok = True
    one = graph_pool(7) + [random_graph(rng, 8, p) for p in (0.3, 0.45, 0.6) for _ in range(30)]
    for G in one:
        ok &= _same_kind(decide_3pfaffian(suspend(G, 1)), decide_graph_pfaffian(G))
    many = 0
    for k, sizes in ((3, (2, 4)), (4, (1, 3, 5))):
        for G in graph_pool(5):
            if G.n not in sizes:
                continue
            verdict = k_susp_impossibility(G, k)
            if verdict.has_tree:
                many += 1
                ok &= isinstance(verdict.outcome, Certificate)
    two = graph_pool(7) + [random_graph(rng, rng.randint(5, 9), rng.uniform(0.2, 0.7)) for _ in range(50)]
    for G in two:
        ok &= decide_2susp(G).pfaffian == isinstance(decide_3pfaffian(suspend(G, 2)), Witness)
    return ok, f"{len(one)} graphs for k=1, {many} tree-bearing k=3,4 suspensions, {len(two)} graphs for k=2"


def _psts() -> tuple[bool, str]:
    ok = True
    fixtures = psts_fixtures()
    for _, H, v in fixtures:
        Gv, _ = link_graph(H, v)
        ok &= count_spanning_trees(H) == sum(1 for _ in enumerate_perfect_matchings(Gv))
        d = decide_psts_via_graph(H, v)
        ok &= d.agrees and d.pfaffian == isinstance(decide_3pfaffian(H), Witness)
        if d.pfaffian:
            ok &= d.orientation is not None and verify_witness(H, d.orientation.flipped)
    reports = []
    for order, trees, matchings in ((7, 7, 15), (9, 45, 105)):
        S = gen_sts(order)
        for v in S.vertices:
            r = psts_bijection_report(S, v)
            ok &= r.bijective and (r.trees, r.matchings) == (trees, matchings)
        reports.append(f"STS({order}) {trees}/{matchings}")
    return ok, f"{len(fixtures)} acyclic fixtures; " + ", ".join(reports)


def _variance() -> tuple[bool, str]:
    ok = True
    checked = 0
    for _, H, omega in fixture_pool():
        if len(H) > 16:
            continue
        mean, second = variance_identity_check(H, omega)
        ok &= mean == 0 and second == count_spanning_trees(H)
        checked += 1
    return ok, f"{checked} fixtures give (0, |T(H)|)"


def _existence() -> tuple[bool, str]:
    rng = random.Random(SEED)
    ok = True
    tutte_checked = 0
    for _ in range(200):
        n = rng.choice((3, 5, 7, 9, 11))
        H = random_covering_3graph(rng, n, extra=rng.randint(0, n))
        has_tree = next(enumerate_tree_indices(H), None) is not None
        ok &= has_tree
        if has_tree:
            ok &= tutte_like_check(H).passes
            tutte_checked += 1
    obstructed = 0
    attempts = 0
    while obstructed < 100 and attempts < 100000:
        attempts += 1
        n = rng.choice((5, 7, 9, 11))
        H = random_3graph(rng, n, rng.randint(2, 2 * n))
        if even_block_obstruction(H) is None:
            if next(enumerate_tree_indices(H), None) is not None:
                ok &= tutte_like_check(H).passes
                tutte_checked += 1
            continue
        obstructed += 1
        ok &= count_spanning_trees(H) == 0
    ok &= obstructed == 100
    return ok, f"200 covering instances with trees, {obstructed} obstructed treeless, Tutte-like silent on {tutte_checked}"


def _random_skew(rng: random.Random, m: int, bound: int = 9) -> list[list[int]]:
    A = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            x = rng.randint(-bound, bound)
            A[i][j], A[j][i] = x, -x
    return A


def _kernel() -> tuple[bool, str]:
    rng = random.Random(SEED)
    ok = True
    for i in range(500):
        m = 2 * (i % 6) + 2
        A = _random_skew(rng, m)
        pf = pfaffian_exact(A)
        ok &= pf * pf == determinant_exact(A)
        if m <= 10 or i % 10 == 0:
            ok &= pf == pfaffian_matching_sum(A)
    bound_checked = 0
    for _, H, omega in fixture_pool():
        for y in (None, {t: rng.choice((1, -1)) for t in H.triples}):
            ok &= lambda_entry_bound_holds(H, omega, y)
            bound_checked += 1
    return ok, f"500 matrices; entry bound on {bound_checked} evaluations"


CRITERIA: tuple[tuple[int, str, Check], ...] = (
    (1, "complete-graph tree counts", _complete_counts),
    (2, "Pruefer bijection", _prufer),
    (3, "signed counts", _signed_counts),
    (4, "two example tree signs", _example_signs),
    (5, "twin graph", _twin),
    (6, "minimal non-3-Pfaffian table", _table1),
    (7, "interlaced table k=3,4 and rank-5 span", _table2),
    (8, "interlaced table k=5 witness", _table3),
    (9, "interlaced family", _interlaced),
    (10, "suspension verdicts", _suspensions),
    (11, "partial Steiner reduction", _psts),
    (12, "variance identity", _variance),
    (13, "existence properties", _existence),
    (14, "Pfaffian kernel", _kernel),
)


def run_criterion(number: int) -> CriterionResult:
    for num, title, fn in CRITERIA:
        if num == number:
            t0 = time.perf_counter()
            try:
                ok, detail = fn()
            except Exception as exc:  # a crash is a failure, reported with its cause
                ok, detail = False, f"{type(exc).__name__}: {exc}"
            return CriterionResult(num, title, bool(ok), detail, time.perf_counter() - t0)
    raise KeyError(number)


def run_all() -> list[CriterionResult]:
    return [run_criterion(num) for num, _, _ in CRITERIA]
