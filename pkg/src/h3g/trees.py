"""Forests, spanning-tree enumeration, matchings and the Prufer-style tree code."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import Multigraph, Pair, ThreeGraph, Triple, underlying_graph
from .errors import MalformedCode, NotASpanningTree, TripleAbsent

SpanningTree = tuple[Triple, ...]
PerfectMatching = tuple[Pair, ...]

__all__ = [
    "SpanningTree",
    "PerfectMatching",
    "QuasiPerfectMatching",
    "PruferCode",
    "CorrespondenceReport",
    "is_forest",
    "forest_check",
    "is_spanning_tree",
    "enumerate_tree_indices",
    "enumerate_spanning_trees",
    "count_spanning_trees",
    "prufer_encode",
    "prufer_decode",
    "perfect_matchings_on",
    "enumerate_perfect_matchings",
    "enumerate_quasi_perfect_matchings",
    "tree_to_matching",
    "matching_to_tree",
    "tree_matching_correspondence",
]


def forest_check(triples: Iterable[Sequence[int]]) -> bool:
    """True iff the triples contain no cycle (2-cycles included)."""
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c in triples:
        ra, rb, rc = find(a), find(b), find(c)
        if ra == rb or rb == rc or ra == rc:
            return False
        parent[rb] = ra
        parent[rc] = ra
    return True


def is_forest(H: ThreeGraph, T: Iterable[Sequence[int]]) -> bool:
    T = [tuple(sorted(t)) for t in T]
    for t in T:
        if t not in H:
            raise TripleAbsent(f"triple {t} not in the 3-graph")
    if len(set(T)) != len(T):
        return False
    return forest_check(T)


def is_spanning_tree(n: int, T: Iterable[Sequence[int]]) -> bool:
    T = [tuple(sorted(t)) for t in T]
    if n % 2 == 0 or len(T) != (n - 1) // 2 or len(set(T)) != len(T):
        return False
    if n == 1:
        return True
    covered = {x for t in T for x in t}
    return covered == set(range(1, n + 1)) and forest_check(T)


def enumerate_tree_indices(H: ThreeGraph) -> Iterator[tuple[int, ...]]:
    """Spanning trees as sorted tuples of triple indices, in lexicographic order.

    A single vertex is spanned by the empty tree; even orders have no trees.
    """
    n = H.n
    if n % 2 == 0:
        return
    k = (n - 1) // 2
    if k == 0:
        yield ()
        return
    tr = H.triples
    m = len(tr)
    masks = [H.mask(t) for t in tr]
    full = ((1 << (n + 1)) - 1) & ~1
    suffix = [0] * (m + 1)
    for i in range(m - 1, -1, -1):
        suffix[i] = suffix[i + 1] | masks[i]
    chosen: list[int] = []

    def rec(start: int, covered: int, comp: list[int]) -> Iterator[tuple[int, ...]]:
        need = k - len(chosen)
        uncovered = full & ~covered
        for i in range(start, m - need + 1):
            if uncovered & ~suffix[i]:
                return
            a, b, c = tr[i]
            ra, rb, rc = comp[a], comp[b], comp[c]
            if ra == rb or rb == rc or ra == rc:
                continue
            if need == 1:
                if covered | masks[i] == full:
                    yield (*chosen, i)
                continue
            new = [ra if (y == rb or y == rc) else y for y in comp]
            chosen.append(i)
            yield from rec(i + 1, covered | masks[i], new)
            chosen.pop()

    yield from rec(0, 0, list(range(n + 1)))


def enumerate_spanning_trees(H: ThreeGraph) -> Iterator[SpanningTree]:
    tr = H.triples
    for idx in enumerate_tree_indices(H):
        yield tuple(tr[i] for i in idx)


def count_spanning_trees(H: ThreeGraph) -> int:
    return sum(1 for _ in enumerate_tree_indices(H))


@dataclass(frozen=True)
class PruferCode:
    """Code of a spanning tree of the complete 3-graph on 2n+1 vertices."""

    gamma: tuple[int, ...]
    matching: tuple[Pair, ...]


def prufer_encode(T: Iterable[Sequence[int]], n: int) -> PruferCode:
    """Encode a spanning tree on [2n+1] by leaf pruning rooted at 2n+1."""
    tree = [tuple(sorted(t)) for t in T]
    size = 2 * n + 1
    if n < 1 or not is_spanning_tree(size, tree):
        raise NotASpanningTree(f"not a spanning tree of [{size}]")
    root = size
    live = set(tree)
    deg = Counter(x for t in tree for x in t)
    gamma: list[int] = []
    pairs: list[Pair] = []
    for _ in range(n - 1):
        best = None
        for t in live:
            ones = [x for x in t if deg[x] == 1]
            if len(ones) != 2 or root in ones:
                continue
            if best is None or min(ones) < best[0]:
                attach = next(x for x in t if deg[x] > 1)
                best = (min(ones), (ones[0], ones[1]), attach, t)
        assert best is not None, "a tree with two or more triples has a usable leaf"
        _, pair, attach, t = best
        gamma.append(attach)
        pairs.append(pair)
        live.remove(t)
        for x in t:
            deg[x] -= 1
    (last,) = live
    if root not in last:
        raise NotASpanningTree("final triple misses the root")
    pairs.append(tuple(x for x in last if x != root))  # type: ignore[arg-type]
    return PruferCode(tuple(gamma), tuple(sorted(pairs)))


def _check_code(code: PruferCode, n: int) -> None:
    size = 2 * n + 1
    if n < 1 or len(code.gamma) != n - 1:
        raise MalformedCode(f"sequence must have length {n - 1}")
    if any(not 1 <= c <= size for c in code.gamma):
        raise MalformedCode(f"sequence entries must lie in 1..{size}")
    flat = [x for p in code.matching for x in p]
    if any(len(p) != 2 for p in code.matching) or sorted(flat) != list(range(1, 2 * n + 1)):
        raise MalformedCode(f"matching must be a perfect matching of 1..{2 * n}")


def prufer_decode(code: PruferCode, n: int) -> SpanningTree:
    """Inverse of :func:`prufer_encode`.

    At step i the removed pair is the one whose endpoints both avoid the
    remaining sequence c_i..c_{n-1}, taking the pair with the smallest vertex.
    """
    _check_code(code, n)
    root = 2 * n + 1
    left = [tuple(sorted(p)) for p in code.matching]
    triples: list[Triple] = []
    for i in range(n - 1):
        future = set(code.gamma[i:])
        free = [p for p in left if p[0] not in future and p[1] not in future]
        pair = min(free)
        left.remove(pair)
        triples.append(tuple(sorted((*pair, code.gamma[i]))))  # type: ignore[arg-type]
    (pair,) = left
    triples.append(tuple(sorted((*pair, root))))  # type: ignore[arg-type]
    return tuple(sorted(triples))


def perfect_matchings_on(adj: dict[int, set[int]], vertices: Iterable[int]) -> Iterator[PerfectMatching]:
    """Perfect matchings of the subgraph induced on ``vertices``.

    The empty vertex set has exactly one (empty) perfect matching.
    """
    verts = sorted(vertices)
    if len(verts) % 2:
        return

    def rec(rest: frozenset[int]) -> Iterator[list[Pair]]:
        if not rest:
            yield []
            return
        a = min(rest)
        for b in sorted(adj[a] & rest):
            for tail in rec(rest - {a, b}):
                yield [(a, b), *tail]

    for m in rec(frozenset(verts)):
        yield tuple(m)


def enumerate_perfect_matchings(G: Multigraph) -> Iterator[PerfectMatching]:
    """Perfect matchings of the simple graph underlying ``G``."""
    yield from perfect_matchings_on(G.adjacency(), range(1, G.n + 1))


@dataclass(frozen=True)
class QuasiPerfectMatching:
    """A 2-edge path through ``center`` plus a perfect matching of the rest."""

    center: int
    path: tuple[Pair, Pair]
    rest: tuple[Pair, ...]

    @property
    def edges(self) -> tuple[Pair, ...]:
        return tuple(sorted((*self.path, *self.rest)))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)


def quasi_perfect_matchings_on(
    adj: dict[int, set[int]], vertices: Iterable[int]
) -> Iterator[QuasiPerfectMatching]:
    verts = frozenset(vertices)
    if len(verts) % 2 == 0 or len(verts) < 3:
        return
    for y in sorted(verts):
        nbrs = sorted(adj[y] & verts)
        for i, x in enumerate(nbrs):
            for z in nbrs[i + 1 :]:
                rest = verts - {x, y, z}
                for m in perfect_matchings_on(adj, rest):
                    e1 = (min(x, y), max(x, y))
                    e2 = (min(y, z), max(y, z))
                    yield QuasiPerfectMatching(y, (e1, e2), m)


def enumerate_quasi_perfect_matchings(G: Multigraph) -> Iterator[QuasiPerfectMatching]:
    yield from quasi_perfect_matchings_on(G.adjacency(), range(1, G.n + 1))


def tree_to_matching(T: Iterable[Sequence[int]], v: int) -> tuple[PerfectMatching, dict[Pair, int]]:
    """The matching of the non-root vertices and apex map determined by a tree.

    Leaves are pruned towards the root ``v``; each pruned triple contributes its
    two degree-one vertices as a matching edge and its third vertex as apex.
    """
    live = {tuple(sorted(t)) for t in T}
    deg = Counter(x for t in live for x in t)
    apex: dict[Pair, int] = {}
    while live:
        if len(live) == 1:
            (t,) = live
            if v not in t:
                raise NotASpanningTree("root is not covered")
            pair = tuple(x for x in t if x != v)
            apex[pair] = v  # type: ignore[index]
            live.clear()
            break
        pick = None
        for t in sorted(live):
            ones = [x for x in t if deg[x] == 1 and x != v]
            if len(ones) == 2:
                pick = t, ones
                break
        if pick is None:
            raise NotASpanningTree("no prunable leaf")
        t, ones = pick
        third = next(x for x in t if x not in ones)
        apex[(ones[0], ones[1])] = third
        live.remove(t)
        for x in t:
            deg[x] -= 1
    return tuple(sorted(apex)), apex


def _has_apex_cycle(apex: dict[Pair, int]) -> bool:
    owner = {x: e for e in apex for x in e}
    state: dict[Pair, int] = {}
    for start in apex:
        path = []
        e: Pair | None = start
        while e is not None and e not in state:
            state[e] = 1
            path.append(e)
            e = owner.get(apex[e])
        if e is not None and state.get(e) == 1:
            return True
        for p in path:
            state[p] = 2
    return False


def matching_to_tree(H: ThreeGraph, apex: dict[Pair, int]) -> SpanningTree | None:
    """Triples {i, j, apex(ij)} if they lie in H and the apex map has no cycle."""
    triples = []
    for (i, j), k in apex.items():
        t = tuple(sorted((i, j, k)))
        if k in (i, j) or t not in H:
            return None
        triples.append(t)
    if _has_apex_cycle(apex):
        return None
    return tuple(sorted(triples))  # type: ignore[return-value]


@dataclass(frozen=True)
class CorrespondenceReport:
    trees: int
    pairs: int
    bijective: bool
    mapping: tuple[tuple[SpanningTree, PerfectMatching, tuple[tuple[Pair, int], ...]], ...]


def tree_matching_correspondence(H: ThreeGraph, v: int) -> CorrespondenceReport:
    """Check both directions of the tree / (matching, apex map) correspondence."""
    trees = list(enumerate_spanning_trees(H))
    forward = {}
    ok = True
    for T in trees:
        M, apex = tree_to_matching(T, v)
        back = matching_to_tree(H, apex)
        ok &= back == T
        forward[T] = (M, tuple(sorted(apex.items())))
    G = underlying_graph(H)
    adj = G.adjacency()
    third: dict[Pair, list[int]] = {}
    for t in H.triples:
        for x in t:
            e = tuple(y for y in t if y != x)
            third.setdefault(e, []).append(x)  # type: ignore[arg-type]
    rebuilt = set()
    pairs = 0
    rest = [x for x in H.vertices if x != v]
    for M in perfect_matchings_on(adj, rest):
        for choice in product(*(third.get(e, []) for e in M)):
            apex = dict(zip(M, choice))
            T = matching_to_tree(H, apex)
            if T is None:
                continue
            pairs += 1
            ok &= is_spanning_tree(H.n, T) and T in forward
            ok &= forward.get(T, (None,))[0] == M
            rebuilt.add(T)
    ok &= pairs == len(trees) and len(rebuilt) == len(trees)
    mapping = tuple((T, forward[T][0], forward[T][1]) for T in trees)
    return CorrespondenceReport(len(trees), pairs, bool(ok), mapping)
