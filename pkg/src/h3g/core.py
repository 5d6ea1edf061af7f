"""3-uniform hypergraphs, their underlying multigraphs, and triple deletion/contraction."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import DegenerateTriple, OutOfRange, TripleAbsent

Triple = tuple[int, int, int]
Pair = tuple[int, int]

__all__ = [
    "Triple",
    "Pair",
    "ThreeGraph",
    "Multigraph",
    "MixedHypergraph",
    "build_three_graph",
    "build_multigraph",
    "delete_triple",
    "contract_triple",
    "underlying_graph",
    "remove_vertices",
    "pair_multiplicity",
    "vertex_degree",
    "induced_subgraph",
    "is_isomorphic",
]


def _sorted_triple(t: Iterable[int], n: int) -> Triple:
    a, b, c = sorted(int(x) for x in t)
    for x in (a, b, c):
        if not 1 <= x <= n:
            raise OutOfRange(f"vertex {x} outside 1..{n}")
    if a == b or b == c:
        raise DegenerateTriple(f"triple {tuple(t)} repeats a vertex")
    return (a, b, c)


@dataclass(frozen=True)
class ThreeGraph:
    """Vertex set 1..n together with a set of unordered triples.

    Triples are stored sorted ascending and the tuple of triples is sorted
    lexicographically, so equal hypergraphs compare equal.
    """

    n: int
    triples: tuple[Triple, ...]
    _index: Mapping[Triple, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise OutOfRange("a 3-graph needs at least one vertex")
        canon = sorted({_sorted_triple(t, self.n) for t in self.triples})
        object.__setattr__(self, "triples", tuple(canon))
        object.__setattr__(self, "_index", {t: i for i, t in enumerate(canon)})

    def __contains__(self, t: object) -> bool:
        try:
            return tuple(sorted(t)) in self._index  # type: ignore[arg-type]
        except TypeError:
            return False

    def __len__(self) -> int:
        return len(self.triples)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def index(self, t: Iterable[int]) -> int:
        key = tuple(sorted(t))
        try:
            return self._index[key]  # type: ignore[index]
        except KeyError:
            raise TripleAbsent(f"triple {key} not in the 3-graph") from None

    def mask(self, t: Triple) -> int:
        """Vertex bitmask of a triple (bit v set for vertex v)."""
        return (1 << t[0]) | (1 << t[1]) | (1 << t[2])


def build_three_graph(n: int, triples: Iterable[Iterable[int]]) -> ThreeGraph:
    return ThreeGraph(n, tuple(tuple(t) for t in triples))  # type: ignore[arg-type]


@dataclass(frozen=True)
class Multigraph:
    """Graph on 1..n whose edges carry multiplicities."""

    n: int
    edges: tuple[tuple[Pair, int], ...]

    def __post_init__(self) -> None:
        merged: Counter[Pair] = Counter()
        for (a, b), m in self.edges:
            a, b = int(a), int(b)
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise OutOfRange(f"edge {a}{b} outside 1..{self.n}")
            if a == b:
                raise DegenerateTriple(f"loop at {a}")
            if m > 0:
                merged[(min(a, b), max(a, b))] += int(m)
        object.__setattr__(self, "edges", tuple(sorted(merged.items())))

    def multiplicity(self, a: int, b: int) -> int:
        key = (min(a, b), max(a, b))
        for e, m in self.edges:
            if e == key:
                return m
        return 0

    def simple_edges(self) -> list[Pair]:
        return [e for e, _ in self.edges]

    def adjacency(self) -> dict[int, set[int]]:
        adj: dict[int, set[int]] = {v: set() for v in range(1, self.n + 1)}
        for a, b in self.simple_edges():
            adj[a].add(b)
            adj[b].add(a)
        return adj


def build_multigraph(n: int, edges: Iterable[Iterable[int]]) -> Multigraph:
    """Simple-graph convenience constructor; repeated pairs add multiplicity."""
    counts: Counter[Pair] = Counter()
    for e in edges:
        a, b = e
        counts[(min(a, b), max(a, b))] += 1
    return Multigraph(n, tuple(counts.items()))


@dataclass(frozen=True)
class MixedHypergraph:
    """Result of deleting vertices: hyperedges of size 1, 2 or 3, labels kept."""

    n: int
    removed: frozenset[int]
    edges: frozenset[frozenset[int]]

    @property
    def vertices(self) -> list[int]:
        return [v for v in range(1, self.n + 1) if v not in self.removed]

    def triples(self) -> list[Triple]:
        return sorted(tuple(sorted(e)) for e in self.edges if len(e) == 3)  # type: ignore[misc]


def delete_triple(H: ThreeGraph, t: Iterable[int]) -> ThreeGraph:
    i = H.index(t)
    return ThreeGraph(H.n, H.triples[:i] + H.triples[i + 1 :])


def contract_triple(H: ThreeGraph, t: Iterable[int]) -> tuple[ThreeGraph, dict[int, int]]:
    """Contract a triple to its smallest vertex and compact the labels.

    Returns the contracted 3-graph and the map from surviving old labels to
    new labels (the two other vertices of the triple are absent from it).
    """
    abc = H.triples[H.index(t)]
    keep = abc[0]
    gone = set(abc[1:])
    old = [v for v in H.vertices if v not in gone]
    relabel = {v: i + 1 for i, v in enumerate(old)}
    new: set[Triple] = set()
    for s in H.triples:
        meet = len(set(s) & set(abc))
        if meet == 0:
            image = s
        elif meet == 1:
            image = tuple(keep if x in abc else x for x in s)  # type: ignore[assignment]
        else:
            continue
        new.add(tuple(sorted(relabel[x] for x in image)))  # type: ignore[arg-type]
    return ThreeGraph(H.n - 2, tuple(sorted(new))), relabel


def underlying_graph(H: ThreeGraph) -> Multigraph:
    counts: Counter[Pair] = Counter()
    for a, b, c in H.triples:
        counts[(a, b)] += 1
        counts[(a, c)] += 1
        counts[(b, c)] += 1
    return Multigraph(H.n, tuple(counts.items()))


def remove_vertices(H: ThreeGraph, S: Iterable[int]) -> MixedHypergraph:
    gone = frozenset(S)
    for v in gone:
        if not 1 <= v <= H.n:
            raise OutOfRange(f"vertex {v} outside 1..{H.n}")
    edges = set()
    for t in H.triples:
        rest = frozenset(t) - gone
        if rest:
            edges.add(rest)
    return MixedHypergraph(H.n, gone, frozenset(edges))


def _check_vertex(H: ThreeGraph, a: int) -> None:
    if not 1 <= a <= H.n:
        raise OutOfRange(f"vertex {a} outside 1..{H.n}")


def pair_multiplicity(H: ThreeGraph, a: int, b: int) -> int:
    _check_vertex(H, a)
    _check_vertex(H, b)
    if a == b:
        raise DegenerateTriple("pair needs two distinct vertices")
    return sum(1 for t in H.triples if a in t and b in t)


def vertex_degree(H: ThreeGraph, a: int) -> int:
    _check_vertex(H, a)
    return sum(1 for t in H.triples if a in t)


def induced_subgraph(G: Multigraph, keep: Iterable[int]) -> tuple[Multigraph, dict[int, int]]:
    """Subgraph induced on ``keep``, relabelled order-preservingly to 1..k."""
    kept = sorted(set(keep))
    relabel = {v: i + 1 for i, v in enumerate(kept)}
    edges = tuple(
        ((relabel[a], relabel[b]), m) for (a, b), m in G.edges if a in relabel and b in relabel
    )
    return Multigraph(len(kept), edges), relabel


def _incidence_graph(H: ThreeGraph):
    import networkx as nx

    g = nx.Graph()
    g.add_nodes_from((("v", v) for v in H.vertices), kind="v")
    for t in H.triples:
        g.add_node(("t", t), kind="t")
        g.add_edges_from((("t", t), ("v", x)) for x in t)
    return g


def is_isomorphic(H1: ThreeGraph, H2: ThreeGraph) -> bool:
    """Isomorphism of 3-graphs, tested on vertex/triple incidence graphs."""
    import networkx as nx

    if H1.n != H2.n or len(H1) != len(H2):
        return False
    if sorted(vertex_degree(H1, v) for v in H1.vertices) != sorted(
        vertex_degree(H2, v) for v in H2.vertices
    ):
        return False
    return nx.is_isomorphic(
        _incidence_graph(H1),
        _incidence_graph(H2),
        node_match=lambda x, y: x["kind"] == y["kind"],
    )


def all_triples(n: int) -> list[Triple]:
    return list(combinations(range(1, n + 1), 3))  # type: ignore[arg-type]
