"""Existence-side structure: components after vertex removal, blocks, Hamiltonicity, 1-suspensions."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .core import Multigraph, Pair, ThreeGraph, underlying_graph
from .errors import EvenVertexCount, NotASuspension, NotHamiltonianCycle, TooLarge
from .signs import TripleOrientation

__all__ = [
    "ComponentReport",
    "TutteVerdict",
    "components_after_removal",
    "is_connected",
    "tutte_like_check",
    "graph_tutte_check",
    "blocks",
    "even_block_obstruction",
    "multiplicity_condition",
    "hamiltonian_q_bound",
    "find_hamiltonian_cycle",
    "transfer_orientation_1susp",
    "edges_from_1susp_orientation",
]

DEFAULT_CAP = 15


def _neighbour_masks(G: Multigraph) -> list[int]:
    nbr = [0] * (G.n + 1)
    for a, b in G.simple_edges():
        nbr[a] |= 1 << b
        nbr[b] |= 1 << a
    return nbr


def _components(nbr: list[int], alive: int) -> list[int]:
    comps = []
    while alive:
        seed = alive & -alive
        comp = frontier = seed
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = nbr[v] & alive & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        alive &= ~comp
    return comps


def _members(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[frozenset[int], ...]
    odd_count: int


def _graph_of(H: ThreeGraph | Multigraph) -> Multigraph:
    return underlying_graph(H) if isinstance(H, ThreeGraph) else H


def components_after_removal(H: ThreeGraph | Multigraph, S: Iterable[int]) -> ComponentReport:
    """Components of H - S; the remnants of a cut triple still join what is left of it."""
    G = _graph_of(H)
    alive = sum(1 << v for v in range(1, G.n + 1))
    for v in S:
        alive &= ~(1 << v)
    comps = _components(_neighbour_masks(G), alive)
    members = tuple(sorted((_members(c) for c in comps), key=min))
    return ComponentReport(members, sum(1 for c in members if len(c) % 2))


def is_connected(H: ThreeGraph | Multigraph) -> bool:
    G = _graph_of(H)
    full = sum(1 << v for v in range(1, G.n + 1))
    return len(_components(_neighbour_masks(G), full)) <= 1


@dataclass(frozen=True)
class TutteVerdict:
    passes: bool
    S: tuple[int, ...] = ()
    q: int = 0


def _subsets(n: int) -> Iterator[tuple[int, ...]]:
    # by size, then lexicographic
    for r in range(1, n + 1):
        yield from combinations(range(1, n + 1), r)


def _scan(G: Multigraph, cap: int) -> TutteVerdict:
    if G.n > cap:
        raise TooLarge(f"{G.n} vertices exceeds the subset-scan cap {cap}")
    nbr = _neighbour_masks(G)
    full = sum(1 << v for v in range(1, G.n + 1))
    for S in _subsets(G.n):
        alive = full
        for v in S:
            alive &= ~(1 << v)
        q = sum(1 for c in _components(nbr, alive) if bin(c).count("1") % 2)
        if q > len(S) - 1:
            return TutteVerdict(False, S, q)
    return TutteVerdict(True)


def tutte_like_check(H: ThreeGraph, max_n: int = DEFAULT_CAP) -> TutteVerdict:
    """First S (by size, then lexicographic) with q(H - S) > |S| - 1, if any."""
    return _scan(underlying_graph(H), max_n)


def graph_tutte_check(G: Multigraph, max_n: int = DEFAULT_CAP) -> TutteVerdict:
    return _scan(G, max_n)


def blocks(H: ThreeGraph | Multigraph) -> list[frozenset[int]]:
    """Vertex sets of the blocks of the underlying graph, smallest member first."""
    import networkx as nx

    G = _graph_of(H)
    g = nx.Graph()
    g.add_nodes_from(range(1, G.n + 1))
    g.add_edges_from(G.simple_edges())
    found = [frozenset(b) for b in nx.biconnected_components(g)]
    return sorted(found, key=lambda b: sorted(b))


def even_block_obstruction(H: ThreeGraph) -> frozenset[int] | None:
    """A block with an even number of vertices; its presence rules out spanning trees."""
    for b in blocks(H):
        if len(b) % 2 == 0:
            return b
    return None


def multiplicity_condition(H: ThreeGraph) -> bool:
    """Odd order and every pair of vertices covered by some triple."""
    if H.n % 2 == 0:
        return False
    covered = {p for a, b, c in H.triples for p in ((a, b), (a, c), (b, c))}
    return len(covered) == H.n * (H.n - 1) // 2


def _check_cycle(G: Multigraph, cycle: Sequence[int]) -> None:
    if sorted(cycle) != list(range(1, G.n + 1)):
        raise NotHamiltonianCycle("cycle must visit every vertex exactly once")
    adj = G.adjacency()
    for i, v in enumerate(cycle):
        w = cycle[(i + 1) % len(cycle)]
        if len(cycle) > 1 and w not in adj[v]:
            raise NotHamiltonianCycle(f"{v} and {w} are not adjacent")


def hamiltonian_q_bound(G: Multigraph, cycle: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    """Check q(G - S) <= |S| - 1 for all S on a graph with a given Hamiltonian cycle."""
    if G.n % 2 == 0:
        raise EvenVertexCount("the bound concerns odd orders")
    _check_cycle(G, cycle)
    return _scan(G, cap).passes


def find_hamiltonian_cycle(G: ThreeGraph | Multigraph) -> tuple[int, ...] | None:
    """Backtracking search for a Hamiltonian cycle starting at vertex 1."""
    G = _graph_of(G)
    if G.n < 3:
        return None
    adj = {v: sorted(ns) for v, ns in G.adjacency().items()}
    path = [1]
    used = {1}

    def extend() -> bool:
        if len(path) == G.n:
            return 1 in adj[path[-1]]
        for w in adj[path[-1]]:
            if w not in used:
                path.append(w)
                used.add(w)
                if extend():
                    return True
                used.discard(path.pop())
        return False

    return tuple(path) if extend() else None


def transfer_orientation_1susp(G: Multigraph, reversed_edges: Iterable[Pair]) -> TripleOrientation:
    """Edge i -> j becomes the cyclic triple (i j a) with the apex a = n + 1 last.

    Orientations of G are given by the edges reversed from ascending i -> j.
    """
    a = G.n + 1
    edges = set(G.simple_edges())
    flipped = set()
    for e in reversed_edges:
        i, j = sorted(e)
        if (i, j) not in edges:
            raise NotASuspension(f"{i}{j} is not an edge")
        flipped.add((i, j, a))
    return TripleOrientation(frozenset(flipped))


def edges_from_1susp_orientation(
    H: ThreeGraph, omega: TripleOrientation
) -> tuple[Multigraph, tuple[Pair, ...]]:
    """Inverse transfer: the base graph (apex n) and its reversed edges."""
    a = H.n
    if any(a not in t for t in H.triples):
        raise NotASuspension(f"not every triple contains the apex {a}")
    G = Multigraph(a - 1, tuple(((t[0], t[1]), 1) for t in H.triples))
    rev = tuple((t[0], t[1]) for t in H.triples if omega.sign(t) == -1)
    return G, rev
