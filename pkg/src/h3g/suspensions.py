"""Suspensions of graphs: construction, the k >= 3 obstruction, and 2-suspension calculus."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterator, Sequence

from .core import Multigraph, Pair, ThreeGraph, Triple, induced_subgraph
from .decision import Certificate, DecisionOutcome, decide_3pfaffian, decide_graph_pfaffian
from .errors import MismatchedVertexSets, NotATwoSuspension, TooLarge
from .signs import TripleOrientation, arrangement_sign, tree_sign
from .trees import (
    QuasiPerfectMatching,
    enumerate_spanning_trees,
    perfect_matchings_on,
    quasi_perfect_matchings_on,
)

__all__ = [
    "suspend",
    "apexes",
    "KSuspVerdict",
    "k_susp_impossibility",
    "QpmUnionReport",
    "classify_qpm_union",
    "tree_qpm",
    "sign_from_qpm",
    "u_orientation",
    "agreeing",
    "Counterexample",
    "TwoSuspCheck",
    "check_2susp_orientation",
    "ForbiddenSubgraph",
    "find_forbidden_subgraph",
    "TwoSuspVerdict",
    "decide_2susp",
    "K33Subdivision",
    "find_even_k33_subdivision",
]


def _edge(a: int, b: int) -> Pair:
    return (a, b) if a < b else (b, a)


def apexes(G: Multigraph, k: int) -> tuple[int, ...]:
    return tuple(range(G.n + 1, G.n + k + 1))


def suspend(G: Multigraph, k: int) -> ThreeGraph:
    """Add apexes n+1..n+k and the triple {i, j, a} for every edge ij and apex a."""
    if k < 1:
        raise ValueError("k must be positive")
    tr = [(i, j, a) for i, j in G.simple_edges() for a in apexes(G, k)]
    return ThreeGraph(G.n + k, tuple(tr))  # type: ignore[arg-type]


# --- k >= 3 --------------------------------------------------------------------


@dataclass(frozen=True)
class KSuspVerdict:
    has_tree: bool
    outcome: DecisionOutcome
    # six trees obtained by permuting three apexes around one base vertex
    family: tuple[tuple[tuple[Triple, ...], int], ...] = ()

    @property
    def holds(self) -> bool:
        """No tree, or no 3-Pfaffian orientation."""
        return not self.has_tree or isinstance(self.outcome, Certificate)

    @property
    def positives(self) -> int:
        return sum(1 for _, s in self.family if s == 1)


def _permuting_family(G: Multigraph, k: int, T: Sequence[Triple]) -> tuple:
    aps = set(apexes(G, k))
    for x in range(1, G.n + 1):
        through = [t for t in T if x in t]
        by_apex = {}
        for t in through:
            (a,) = set(t) & aps
            by_apex.setdefault(a, t)
        if len(by_apex) < 3:
            continue
        chosen = sorted(by_apex.items())[:3]
        rest = [t for t in T if t not in {t for _, t in chosen}]
        others = [tuple(y for y in t if y not in aps) for _, t in chosen]
        ap = [a for a, _ in chosen]
        fam = []
        for perm in permutations(ap):
            new = [tuple(sorted((*o, p))) for o, p in zip(others, perm)]
            tree = tuple(sorted(rest + new))
            fam.append((tree, tree_sign(tree, n=G.n + k)))
        return tuple(fam)
    return ()


def k_susp_impossibility(G: Multigraph, k: int = 3) -> KSuspVerdict:
    """Decide the k-suspension (k >= 3) and extract a six-tree odd-parity family."""
    if k < 3:
        raise ValueError("k must be at least 3")
    H = suspend(G, k)
    first = next(iter(enumerate_spanning_trees(H)), None)
    outcome = decide_3pfaffian(H)
    if first is None:
        return KSuspVerdict(False, outcome)
    fam: tuple = ()
    for T in enumerate_spanning_trees(H):
        fam = _permuting_family(G, k, T)
        if fam:
            break
    return KSuspVerdict(True, outcome, fam)


# --- unions of quasi-perfect matchings -----------------------------------------


@dataclass(frozen=True)
class QpmUnionReport:
    components: tuple[tuple[frozenset[int], str], ...]

    @property
    def holds(self) -> bool:
        special = [(c, k) for c, k in self.components if k != "C"]
        if len(special) != 1 or len(special[0][0]) % 2 == 0:
            return False
        return all(len(c) % 2 == 0 for c, k in self.components if k == "C")


def _connected(vertices: set[int], edges: list[Pair]) -> bool:
    if not vertices:
        return True
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    start = min(vertices)
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == vertices


def _classify(vertices: frozenset[int], edges: list[Pair]) -> str:
    deg = {v: 0 for v in vertices}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if len(edges) == len(vertices):
        return "C"
    if any(d == 4 for d in deg.values()):
        return "H"
    # two vertices of degree three: a theta has no bridge, a dumbbell does
    for i in range(len(edges)):
        if not _connected(set(vertices), edges[:i] + edges[i + 1 :]):
            return "H"
    return "T"


def classify_qpm_union(Q1: QuasiPerfectMatching, Q2: QuasiPerfectMatching) -> QpmUnionReport:
    """Component types of Q1 + Q2 as a multigraph (a shared edge is a 2-cycle)."""
    if Q1.vertices != Q2.vertices:
        raise MismatchedVertexSets("the two matchings cover different vertex sets")
    edges = list(Q1.edges) + list(Q2.edges)
    parent = {v: v for v in Q1.vertices}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    groups: dict[int, set[int]] = {}
    for v in Q1.vertices:
        groups.setdefault(find(v), set()).add(v)
    out = []
    for comp in sorted(groups.values(), key=min):
        ce = [e for e in edges if e[0] in comp]
        out.append((frozenset(comp), _classify(frozenset(comp), ce)))
    return QpmUnionReport(tuple(out))


# --- 2-suspension orientation calculus ------------------------------------------


def _uv(G: Multigraph) -> tuple[int, int]:
    return G.n + 1, G.n + 2


def u_orientation(G: Multigraph, omega: TripleOrientation, apex: int) -> dict[Pair, Pair]:
    """Edge ij (i < j) points i -> j iff the triple {i, j, apex} is canonical."""
    out = {}
    for i, j in G.simple_edges():
        out[(i, j)] = (i, j) if omega.sign((i, j, apex)) == 1 else (j, i)
    return out


def agreeing(omega: TripleOrientation, e: Pair, u: int, v: int) -> bool:
    i, j = e
    return omega.sign((i, j, u)) == omega.sign((i, j, v))


def tree_qpm(G: Multigraph, T: Sequence[Triple]) -> tuple[list[Pair], list[Pair]]:
    """The u-edges and v-edges of a spanning tree of the 2-suspension."""
    u, v = _uv(G)
    mu = sorted(_edge(t[0], t[1]) for t in T if u in t)
    mv = sorted(_edge(t[0], t[1]) for t in T if v in t)
    return mu, mv


def sign_from_qpm(G: Multigraph, omega: TripleOrientation, T: Sequence[Triple]) -> int:
    """Tree sign from the u/v-orientations of its quasi-perfect matching.

    Sequence: the non-path edges each written along their own orientation,
    then u, x, y, z, v for the 2-path x-y (u-edge), y-z (v-edge); multiplied by
    a sign for each path edge written against its orientation.
    """
    u, v = _uv(G)
    mu, mv = tree_qpm(G, T)
    (y,) = {x for e in mu for x in e} & {x for e in mv for x in e}
    (xy,) = [e for e in mu if y in e]
    (yz,) = [e for e in mv if y in e]
    x = xy[0] if xy[1] == y else xy[1]
    z = yz[0] if yz[1] == y else yz[1]
    ou = u_orientation(G, omega, u)
    ov = u_orientation(G, omega, v)
    seq: list[int] = []
    for e in mu:
        if e != xy:
            seq.extend(ou[e])
    for e in mv:
        if e != yz:
            seq.extend(ov[e])
    seq += [u, x, y, z, v]
    alpha = (ou[xy] != (x, y)) + (ov[yz] != (y, z))
    return arrangement_sign(seq) * (-1) ** alpha


@dataclass(frozen=True)
class Counterexample:
    condition: str  # "a-agree", "a-odd", "b", "c-u", "c-v"
    subgraph: tuple[int, ...]
    trees: tuple[tuple[Triple, ...], tuple[Triple, ...]]
    signs: tuple[int, int]


@dataclass(frozen=True)
class TwoSuspCheck:
    valid: bool
    counterexample: Counterexample | None = None


def _adj(G: Multigraph) -> dict[int, set[int]]:
    return G.adjacency()


def _qpm_tree(Q: QuasiPerfectMatching, u: int, v: int) -> list[Triple]:
    (e1, e2) = Q.path
    out = [tuple(sorted((*e1, u))), tuple(sorted((*e2, v)))]
    out += [tuple(sorted((*e, u))) for e in Q.rest]
    return out  # type: ignore[return-value]


def _m_tree(M: Sequence[Pair], apex: int) -> list[Triple]:
    return [tuple(sorted((*e, apex))) for e in M]  # type: ignore[misc]


def _even_cycles(adj: dict[int, set[int]], n: int) -> Iterator[tuple[int, ...]]:
    """Simple cycles of even length >= 4, each once: least vertex first, second < last."""
    for s in range(1, n + 1):
        path = [s]
        used = {s}

        def rec() -> Iterator[tuple[int, ...]]:
            last = path[-1]
            for w in sorted(adj[last]):
                if w == s and len(path) >= 4 and len(path) % 2 == 0 and path[1] < path[-1]:
                    yield tuple(path)
                if w > s and w not in used:
                    path.append(w)
                    used.add(w)
                    yield from rec()
                    used.discard(path.pop())

        yield from rec()


def _paths(adj: dict[int, set[int]], n: int, edges: int) -> Iterator[tuple[int, ...]]:
    """Simple paths with the given number of edges, each once (first < last)."""
    for s in range(1, n + 1):
        path = [s]
        used = {s}

        def rec() -> Iterator[tuple[int, ...]]:
            if len(path) == edges + 1:
                if path[0] < path[-1]:
                    yield tuple(path)
                return
            for w in sorted(adj[path[-1]]):
                if w not in used:
                    path.append(w)
                    used.add(w)
                    yield from rec()
                    used.discard(path.pop())

        yield from rec()


def check_2susp_orientation(G: Multigraph, omega: TripleOrientation) -> TwoSuspCheck:
    """Test the cycle / 2-path / 4-path conditions for an orientation of G^{u,v}.

    Returns the first failing condition with a pair of spanning trees whose
    signs differ, or Valid.
    """
    u, v = _uv(G)
    host = suspend(G, 2)
    stray = [t for t in omega.flipped if t not in host]
    if stray:
        raise NotATwoSuspension(f"orientation mentions triples outside the 2-suspension: {stray[:3]}")
    adj = _adj(G)
    allv = set(range(1, G.n + 1))
    ou = u_orientation(G, omega, u)
    N = G.n + 2

    def pair(cond: str, sub: Sequence[int], t1: list, t2: list) -> TwoSuspCheck:
        a, b = tuple(sorted(t1)), tuple(sorted(t2))
        return TwoSuspCheck(
            False, Counterexample(cond, tuple(sub), (a, b), (tree_sign(a, omega, n=N), tree_sign(b, omega, n=N)))
        )

    # (a) edges as 2-cycles
    for e in G.simple_edges():
        Q = next(quasi_perfect_matchings_on(adj, allv - set(e)), None)
        if Q is not None and not agreeing(omega, e, u, v):
            base = _qpm_tree(Q, u, v)
            return pair("a-agree", e, base + [(*e, u)], base + [(*e, v)])
    # (a) even cycles of length >= 4
    for C in _even_cycles(adj, G.n):
        Q = next(quasi_perfect_matchings_on(adj, allv - set(C)), None)
        if Q is None:
            continue
        k = len(C)
        cyc = [_edge(C[i], C[(i + 1) % k]) for i in range(k)]
        forward = sum(1 for i in range(k) if ou[cyc[i]] == (C[i], C[(i + 1) % k]))
        if forward % 2 == 0:
            base = _qpm_tree(Q, u, v)
            t1 = base + _m_tree(cyc[0::2], u)
            t2 = base + _m_tree(cyc[1::2], u)
            return pair("a-odd", C, t1, t2)
    # (b) 2-paths
    for x, y, z in _paths(adj, G.n, 2):
        M = next(perfect_matchings_on(adj, allv - {x, y, z}), None)
        if M is None:
            continue
        e1, e2 = _edge(x, y), _edge(y, z)
        if agreeing(omega, e1, u, v) == agreeing(omega, e2, u, v):
            base = _m_tree(M, u)
            return pair(
                "b",
                (x, y, z),
                base + [tuple(sorted((*e1, u))), tuple(sorted((*e2, v)))],
                base + [tuple(sorted((*e1, v))), tuple(sorted((*e2, u)))],
            )
    # (c) 4-paths
    for p in _paths(adj, G.n, 4):
        M = next(perfect_matchings_on(adj, allv - set(p)), None)
        if M is None:
            continue
        x1, x2, x3, x4, x5 = p
        for cond, a, b in (("c-v", u, v), ("c-u", v, u)):
            orient = u_orientation(G, omega, b)
            into23 = orient[_edge(x2, x3)] == (x2, x3)
            into43 = orient[_edge(x4, x3)] == (x4, x3)
            if into23 != into43:
                base = _m_tree(M, a)
                ends = [tuple(sorted((x1, x2, a))), tuple(sorted((x4, x5, a)))]
                return pair(
                    cond,
                    p,
                    base + ends + [tuple(sorted((x2, x3, b)))],
                    base + ends + [tuple(sorted((x3, x4, b)))],
                )
    return TwoSuspCheck(True)


# --- forbidden subgraphs ---------------------------------------------------------


@dataclass(frozen=True)
class ForbiddenSubgraph:
    kind: str  # C3, C5, P6, K23minus
    vertices: tuple[int, ...]
    matching: tuple[Pair, ...]


def _shapes(adj: dict[int, set[int]], n: int) -> Iterator[tuple[str, tuple[int, ...]]]:
    for a, b, c in combinations(range(1, n + 1), 3):
        if b in adj[a] and c in adj[b] and a in adj[c]:
            yield "C3", (a, b, c)
    for p in _paths(adj, n, 4):
        # 5-cycles read from their least vertex, second < last
        if p[0] == min(p) and p[0] in adj[p[4]] and p[1] < p[4]:
            yield "C5", p
    for p in _paths(adj, n, 6):
        yield "P6", p
    # x1 - x2, 4-cycle x2 x3 x4 x5
    for x2 in range(1, n + 1):
        for x3, x5 in combinations(sorted(adj[x2]), 2):
            for x4 in sorted(adj[x3] & adj[x5]):
                if x4 == x2:
                    continue
                for x1 in sorted(adj[x2]):
                    if x1 not in (x3, x4, x5):
                        yield "K23minus", (x1, x2, x3, x4, x5)


def find_forbidden_subgraph(G: Multigraph) -> ForbiddenSubgraph | None:
    """First C3, C5, P6 or K23-minus (in that order) whose complement has a perfect matching."""
    adj = _adj(G)
    allv = frozenset(range(1, G.n + 1))

    @lru_cache(maxsize=None)
    def pm(rest: frozenset[int]):
        return next(perfect_matchings_on(adj, rest), None)

    for kind, verts in _shapes(adj, G.n):
        M = pm(allv - frozenset(verts))
        if M is not None:
            return ForbiddenSubgraph(kind, verts, M)
    return None


@dataclass(frozen=True)
class TwoSuspVerdict:
    pfaffian: bool
    reason: str
    vertex: int | None = None
    forbidden: ForbiddenSubgraph | None = None
    outcomes: dict[int, DecisionOutcome] = field(default_factory=dict, compare=False, repr=False)

    @property
    def vacuous(self) -> bool:
        return self.reason in ("even order", "no quasi-perfect matching")


def decide_2susp(G: Multigraph) -> TwoSuspVerdict:
    """3-Pfaffianness of G^{u,v} from vertex-deleted Pfaffianness and forbidden shapes."""
    if G.n % 2 == 0:
        return TwoSuspVerdict(True, "even order")
    adj = _adj(G)
    if next(quasi_perfect_matchings_on(adj, range(1, G.n + 1)), None) is None:
        return TwoSuspVerdict(True, "no quasi-perfect matching")
    hit = find_forbidden_subgraph(G)
    if hit is not None:
        return TwoSuspVerdict(False, "forbidden subgraph", forbidden=hit)
    outcomes = {}
    for i in range(1, G.n + 1):
        sub, _ = induced_subgraph(G, [x for x in range(1, G.n + 1) if x != i])
        res = decide_graph_pfaffian(sub)
        outcomes[i] = res
        if isinstance(res, Certificate):
            return TwoSuspVerdict(False, "vertex-deleted graph not Pfaffian", vertex=i, outcomes=outcomes)
    return TwoSuspVerdict(True, "conditions hold", outcomes=outcomes)


# --- even subdivisions of K3,3 -------------------------------------------------------


@dataclass(frozen=True)
class K33Subdivision:
    sides: tuple[tuple[int, int, int], tuple[int, int, int]]
    paths: tuple[tuple[int, ...], ...]
    qpm: QuasiPerfectMatching


def _two_colouring(adj: dict[int, set[int]], n: int) -> dict[int, int] | None:
    colour: dict[int, int] = {}
    for s in range(1, n + 1):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            a = stack.pop()
            for b in adj[a]:
                if b not in colour:
                    colour[b] = 1 - colour[a]
                    stack.append(b)
                elif colour[b] == colour[a]:
                    return None
    return colour


def find_even_k33_subdivision(G: Multigraph, max_n: int = 14) -> K33Subdivision | None:
    """An even subdivision of K3,3 whose complement has a quasi-perfect matching."""
    if G.n > max_n:
        raise TooLarge(f"{G.n} vertices exceeds the cap {max_n}")
    adj = _adj(G)
    colour = _two_colouring(adj, G.n)
    if colour is None:
        raise ValueError("graph is not bipartite")
    allv = set(range(1, G.n + 1))
    rich = [x for x in sorted(allv) if len(adj[x]) >= 3]
    for A in combinations(rich, 3):
        if len({colour[a] for a in A}) != 1:
            continue
        for B in combinations([b for b in rich if b > A[0]], 3):
            if set(A) & set(B) or any(colour[b] == colour[A[0]] for b in B):
                continue
            found = _route(adj, A, B, allv)
            if found is not None:
                return found
    return None


def _route(adj, A, B, allv) -> K33Subdivision | None:
    pairs = [(a, b) for a in A for b in B]
    branch = set(A) | set(B)
    used = set(branch)
    chosen: list[tuple[int, ...]] = []

    def paths_between(a: int, b: int) -> Iterator[list[int]]:
        path = [a]

        def rec() -> Iterator[list[int]]:
            for w in sorted(adj[path[-1]]):
                if w == b:
                    yield path + [b]
                elif w not in used and w not in path:
                    path.append(w)
                    yield from rec()
                    path.pop()

        yield from rec()

    def rec(k: int) -> K33Subdivision | None:
        if k == len(pairs):
            rest = allv - used
            Q = next(quasi_perfect_matchings_on(adj, rest), None)
            if Q is None:
                return None
            return K33Subdivision((tuple(A), tuple(B)), tuple(chosen), Q)
        a, b = pairs[k]
        for p in paths_between(a, b):
            inner = p[1:-1]
            used.update(inner)
            chosen.append(tuple(p))
            got = rec(k + 1)
            if got is not None:
                return got
            chosen.pop()
            used.difference_update(inner)
        return None

    return rec(0)
