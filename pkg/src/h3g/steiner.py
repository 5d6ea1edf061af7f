"""Partial Steiner triple systems: switching cycles, the tree/matching bijection, Pfaffian transfer."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import Multigraph, Pair, ThreeGraph, Triple, induced_subgraph, underlying_graph
from .decision import Certificate, DecisionOutcome, decide_3pfaffian, decide_graph_pfaffian, verify_witness
from .errors import BlackCyclesPresent, CyclesPresent, NotPSTS, OutOfRange
from .signs import TripleOrientation, cyclic_sign
from .trees import forest_check, matching_to_tree, perfect_matchings_on, tree_to_matching

__all__ = [
    "is_partial_sts",
    "third_vertex",
    "link_graph",
    "SwitchingCycle",
    "matching_alternates",
    "PstsBijectionReport",
    "psts_bijection_report",
    "black_triangles",
    "cyclify_black_triangles",
    "transfer_graph_orientation",
    "PstsVerdict",
    "decide_psts_via_graph",
]


def is_partial_sts(H: ThreeGraph) -> bool:
    """Every pair of vertices lies in at most one triple."""
    seen: set[Pair] = set()
    for a, b, c in H.triples:
        for p in ((a, b), (a, c), (b, c)):
            if p in seen:
                return False
            seen.add(p)
    return True


def _require_psts(H: ThreeGraph, v: int) -> None:
    if not 1 <= v <= H.n:
        raise OutOfRange(f"vertex {v} outside 1..{H.n}")
    if not is_partial_sts(H):
        raise NotPSTS("some pair lies in two triples")


def third_vertex(H: ThreeGraph) -> dict[Pair, int]:
    """The unique k with ijk a triple, for every covered pair ij (i < j)."""
    out: dict[Pair, int] = {}
    for a, b, c in H.triples:
        out[(a, b)] = c
        out[(a, c)] = b
        out[(b, c)] = a
    return out


def link_graph(H: ThreeGraph, v: int) -> tuple[Multigraph, dict[int, int]]:
    """The underlying graph with v removed, compacted to 1..n-1 (order kept)."""
    return induced_subgraph(underlying_graph(H), [x for x in H.vertices if x != v])


def _rest_triples(H: ThreeGraph, v: int) -> list[Triple]:
    return [t for t in H.triples if v not in t]


@dataclass(frozen=True)
class SwitchingCycle:
    vertices: tuple[int, ...]  # a1 b1 a2 b2 ... ; a_i b_i are matching edges
    triples: tuple[Triple, ...]  # t_i = {a_i, b_i, a_{i+1}}


def matching_alternates(H: ThreeGraph, v: int, M: Iterable[Pair]) -> SwitchingCycle | None:
    """A switching cycle M alternates around, read off the triples {i, j, n(ij)}."""
    _require_psts(H, v)
    M = [tuple(sorted(e)) for e in M]
    third = third_vertex(H)
    owner = {x: e for e in M for x in e}
    apex = {e: third[e] for e in M}  # type: ignore[index]
    done: set = set()
    for start in M:
        if start in done:
            continue
        order: list = []
        pos: dict = {}
        e = start
        while e is not None and e not in done and e not in pos:
            pos[e] = len(order)
            order.append(e)
            e = owner.get(apex[e])
        if e is not None and e in pos:
            loop = order[pos[e] :]
            verts = []
            tris = []
            for i, f in enumerate(loop):
                prev_apex = apex[loop[i - 1]]
                a = prev_apex
                b = f[0] if f[1] == a else f[1]
                verts += [a, b]
                tris.append(tuple(sorted((a, b, apex[f]))))
            return SwitchingCycle(tuple(verts), tuple(tris))  # type: ignore[arg-type]
        done.update(order)
    return None


@dataclass(frozen=True)
class PstsBijectionReport:
    trees: int
    matchings: int
    non_alternating: int
    bijective: bool


def psts_bijection_report(H: ThreeGraph, v: int) -> PstsBijectionReport:
    """Trees of H against perfect matchings of G - v that alternate around no switching cycle."""
    from .trees import enumerate_spanning_trees

    _require_psts(H, v)
    third = third_vertex(H)
    adj = underlying_graph(H).adjacency()
    trees = set(enumerate_spanning_trees(H))
    ok = True
    image = set()
    for T in trees:
        M, _ = tree_to_matching(T, v)
        ok &= matching_alternates(H, v, M) is None
        image.add(M)
    ok &= len(image) == len(trees)
    matchings = 0
    good = 0
    rebuilt = set()
    for M in perfect_matchings_on(adj, [x for x in H.vertices if x != v]):
        matchings += 1
        if matching_alternates(H, v, M) is not None:
            ok &= M not in image
            continue
        good += 1
        T = matching_to_tree(H, {e: third[e] for e in M})
        ok &= T in trees
        rebuilt.add(T)
    ok &= good == len(trees) == len(rebuilt)
    return PstsBijectionReport(len(trees), matchings, good, bool(ok))


def black_triangles(H: ThreeGraph, v: int) -> list[Triple]:
    return _rest_triples(H, v)


def _triangle_order(tris: Sequence[Triple]) -> list[Triple]:
    """Breadth-first over the intersection forest, components in lexicographic order."""
    left = sorted(tris)
    out: list[Triple] = []
    while left:
        queue = deque([left.pop(0)])
        while queue:
            t = queue.popleft()
            out.append(t)
            touching = [s for s in left if set(s) & set(t)]
            for s in touching:
                left.remove(s)
                queue.append(s)
    return out


def _directed(rev: set[Pair], a: int, b: int) -> bool:
    """True iff the edge ab points a -> b."""
    e = (min(a, b), max(a, b))
    forward = e not in rev
    return forward if a < b else not forward


def _is_cyclic(rev: set[Pair], t: Triple) -> bool:
    a, b, c = t
    one = _directed(rev, a, b) and _directed(rev, b, c) and _directed(rev, c, a)
    two = _directed(rev, a, c) and _directed(rev, c, b) and _directed(rev, b, a)
    return one or two


def _flip_vertex(rev: set[Pair], adj: dict[int, set[int]], x: int) -> None:
    for y in adj[x]:
        rev ^= {(min(x, y), max(x, y))}


def cyclify_black_triangles(
    H: ThreeGraph, v: int, reversed_edges: Iterable[Pair]
) -> tuple[frozenset[Pair], tuple[int, ...]]:
    """Reverse all edges at chosen vertices of G - v until each black triangle is cyclic.

    Edge orientations are the sets of edges reversed from ascending.  Returns
    the new reversed set and the vertices flipped, in order.
    """
    _require_psts(H, v)
    tris = black_triangles(H, v)
    if not forest_check(tris):
        raise BlackCyclesPresent("the triples avoiding v contain a cycle")
    G = underlying_graph(H)
    full = G.adjacency()
    adj = {x: full[x] - {v} for x in full if x != v}
    rev = {tuple(sorted(e)) for e in reversed_edges}
    done: set[int] = set()
    flipped: list[int] = []
    for t in _triangle_order(tris):
        if not _is_cyclic(rev, t):  # type: ignore[arg-type]
            a, b = [x for x in t if x not in done][:2]
            for choice in ((a,), (b,), (a, b)):
                trial = set(rev)
                for x in choice:
                    _flip_vertex(trial, adj, x)  # type: ignore[arg-type]
                if _is_cyclic(trial, t):  # type: ignore[arg-type]
                    rev = trial
                    flipped.extend(choice)
                    break
        done.update(t)
    return frozenset(rev), tuple(flipped)  # type: ignore[arg-type]


def transfer_graph_orientation(H: ThreeGraph, v: int, reversed_edges: Iterable[Pair]) -> TripleOrientation:
    """Triple orientation from an edge orientation of G - v that is cyclic on black triangles.

    A black triple follows its triangle's cyclic direction; a white edge x -> y
    gives the triple (x y v).
    """
    rev = {tuple(sorted(e)) for e in reversed_edges}
    signs = {}
    for t in H.triples:
        if v in t:
            a, b = (x for x in t if x != v)
            x, y = (a, b) if _directed(rev, a, b) else (b, a)  # type: ignore[arg-type]
            signs[t] = cyclic_sign(x, y, v)
        else:
            a, b, c = t
            signs[t] = 1 if _directed(rev, a, b) else -1  # type: ignore[arg-type]
    return TripleOrientation.from_signs(signs)


@dataclass(frozen=True)
class PstsVerdict:
    pfaffian: bool
    graph_outcome: DecisionOutcome
    orientation: TripleOrientation | None = None
    agrees: bool = True  # direct decision on H gives the same verdict


def decide_psts_via_graph(H: ThreeGraph, v: int) -> PstsVerdict:
    """Decide H through the Pfaffianness of G - v when the triples avoiding v form a forest."""
    _require_psts(H, v)
    if not forest_check(_rest_triples(H, v)):
        raise CyclesPresent("the triples avoiding v contain a cycle")
    Gv, relabel = link_graph(H, v)
    outcome = decide_graph_pfaffian(Gv)
    if isinstance(outcome, Certificate):
        return PstsVerdict(False, outcome, None, isinstance(decide_3pfaffian(H), Certificate))
    back = {new: old for old, new in relabel.items()}
    rev = {tuple(sorted((back[a], back[b]))) for a, b in outcome.flips}
    cyc, _ = cyclify_black_triangles(H, v, rev)  # type: ignore[arg-type]
    omega = transfer_graph_orientation(H, v, cyc)
    return PstsVerdict(True, outcome, omega, verify_witness(H, omega.flipped))
