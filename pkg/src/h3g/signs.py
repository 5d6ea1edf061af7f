"""Triple orientations, tree signs and the tree generating polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .core import ThreeGraph, Triple, contract_triple
from .errors import (
    EvenVertexCount,
    LinkConditionViolated,
    NotASpanningTree,
    NotBijective,
    ProductNotLongCycle,
)
from .trees import enumerate_spanning_trees, forest_check

__all__ = [
    "TripleOrientation",
    "SignedTree",
    "permutation_sign",
    "arrangement_sign",
    "cyclic_sign",
    "tree_sign",
    "tree_cycle",
    "flip_sign_delta",
    "link_condition",
    "swap_involution",
    "signed_tree_census",
    "evaluate_tree_polynomial",
    "induced_contraction",
]


def cyclic_sign(a: int, b: int, c: int) -> int:
    """+1 if (a b c) is a rotation of the ascending order, -1 if reversed, 0 on repeats."""
    if a == b or b == c or a == c:
        return 0
    # a cyclic order is ascending iff it has exactly one descent around the cycle
    descents = (a > b) + (b > c) + (c > a)
    return 1 if descents == 1 else -1


@dataclass(frozen=True)
class TripleOrientation:
    """Sign of each triple's cyclic order relative to the ascending one.

    Only the triples whose orientation opposes the ascending order are stored;
    every other triple is read as +1.
    """

    flipped: frozenset[Triple] = frozenset()

    @classmethod
    def canonical(cls) -> "TripleOrientation":
        return cls()

    @classmethod
    def from_signs(cls, signs: Mapping[Sequence[int], int]) -> "TripleOrientation":
        out = set()
        for t, s in signs.items():
            if s not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {s}")
            if s == -1:
                out.add(tuple(sorted(t)))
        return cls(frozenset(out))  # type: ignore[arg-type]

    @classmethod
    def from_cyclic(cls, orders: Iterable[Sequence[int]]) -> "TripleOrientation":
        """Build from triples written in their cyclic order, e.g. (3, 6, 5)."""
        return cls.from_signs({tuple(o): cyclic_sign(*o) for o in orders})

    def sign(self, t: Sequence[int]) -> int:
        return -1 if tuple(sorted(t)) in self.flipped else 1

    def cyclic(self, t: Sequence[int]) -> Triple:
        a, b, c = sorted(t)
        return (a, b, c) if self.sign(t) == 1 else (a, c, b)

    def flip(self, triples: Iterable[Sequence[int]]) -> "TripleOrientation":
        return TripleOrientation(self.flipped ^ frozenset(tuple(sorted(t)) for t in triples))  # type: ignore[arg-type]

    def restrict(self, H: ThreeGraph) -> "TripleOrientation":
        return TripleOrientation(frozenset(t for t in self.flipped if t in H))


@dataclass(frozen=True)
class SignedTree:
    tree: tuple[Triple, ...]
    sign: int


def permutation_sign(images: Sequence[int] | Mapping[int, int]) -> int:
    """Parity sign of a permutation of 1..n given by its images.

    A sequence lists the images of 1, 2, ..., n in order.
    """
    if isinstance(images, Mapping):
        mapping = dict(images)
    else:
        mapping = {i + 1: x for i, x in enumerate(images)}
    if set(mapping) != set(mapping.values()):
        raise NotBijective("not a bijection")
    seen: set[int] = set()
    parity = 0
    for start in mapping:
        if start in seen:
            continue
        length = 0
        x = start
        while x not in seen:
            seen.add(x)
            x = mapping[x]
            length += 1
        parity ^= (length - 1) & 1
    return -1 if parity else 1


def arrangement_sign(seq: Sequence[int]) -> int:
    """Sign of the arrangement ``seq`` relative to its sorted order."""
    rank = {x: i + 1 for i, x in enumerate(sorted(seq))}
    if len(rank) != len(seq):
        raise NotBijective("repeated entries")
    return permutation_sign([rank[x] for x in seq])


def _compose(cycles: Iterable[Triple], vertices: Sequence[int]) -> dict[int, int]:
    # left-to-right: the first factor acts first
    p = {v: v for v in vertices}
    for a, b, c in cycles:
        step = {a: b, b: c, c: a}
        p = {v: step.get(w, w) for v, w in p.items()}
    return p


def _tree_vertices(T: Sequence[Sequence[int]], n: int | None) -> list[int]:
    verts = sorted({x for t in T for x in t})
    if not T:
        verts = [1] if n in (None, 1) else verts
    if len(verts) % 2 == 0 or (n is not None and n % 2 == 0):
        raise EvenVertexCount("tree signs are defined for odd vertex counts only")
    if n is not None and verts != list(range(1, n + 1)):
        raise NotASpanningTree(f"tree does not span 1..{n}")
    if len(T) != (len(verts) - 1) // 2 or not forest_check(T):
        raise NotASpanningTree("triples do not form a tree on their vertices")
    return verts


def tree_cycle(
    T: Sequence[Sequence[int]],
    omega: TripleOrientation,
    order: Sequence[int] | None = None,
    n: int | None = None,
) -> tuple[int, ...]:
    """The long cycle produced by the oriented triples, read from its least vertex."""
    T = [tuple(sorted(t)) for t in T]
    verts = _tree_vertices(T, n)
    seq = [T[i] for i in order] if order is not None else sorted(T)
    p = _compose((omega.cyclic(t) for t in seq), verts)
    cycle = [verts[0]]
    x = p[verts[0]]
    while x != verts[0]:
        cycle.append(x)
        x = p[x]
    if len(cycle) != len(verts):
        raise ProductNotLongCycle(f"product of the 3-cycles of {T} is not a single cycle")
    return tuple(cycle)


def tree_sign(
    T: Sequence[Sequence[int]],
    omega: TripleOrientation | None = None,
    n: int | None = None,
    check_order: bool = True,
) -> int:
    """Sign of a spanning tree under a triple orientation.

    The oriented 3-cycles are composed in lexicographic order of the triples;
    with ``check_order`` the reverse order is composed as well and the two
    signs must agree.
    """
    omega = omega or TripleOrientation()
    s = arrangement_sign(tree_cycle(T, omega, n=n))
    if check_order and len(T) > 1:
        rev = list(range(len(T)))[::-1]
        if arrangement_sign(tree_cycle(T, omega, order=rev, n=n)) != s:
            raise ProductNotLongCycle("tree sign depends on the factor order")
    return s


def flip_sign_delta(T: Iterable[Sequence[int]], w1: TripleOrientation, w2: TripleOrientation) -> int:
    diff = sum(1 for t in T if w1.sign(t) != w2.sign(t))
    return -1 if diff % 2 else 1


def link_condition(H: ThreeGraph, i: int) -> bool:
    """True iff exchanging the labels i and i+1 maps the triple set onto itself."""
    j = i + 1
    swap = {i: j, j: i}
    image = {tuple(sorted(swap.get(x, x) for x in t)) for t in H.triples}
    return image == set(H.triples)


def swap_involution(H: ThreeGraph, T: Iterable[Sequence[int]], i: int) -> tuple[Triple, ...]:
    if not 1 <= i < H.n or not link_condition(H, i):
        raise LinkConditionViolated(f"labels {i} and {i + 1} are not interchangeable")
    swap = {i: i + 1, i + 1: i}
    return tuple(sorted(tuple(sorted(swap.get(x, x) for x in t)) for t in T))  # type: ignore[misc]


def signed_tree_census(H: ThreeGraph, omega: TripleOrientation | None = None) -> tuple[int, int]:
    omega = omega or TripleOrientation()
    plus = minus = 0
    for T in enumerate_spanning_trees(H):
        if tree_sign(T, omega, n=H.n) == 1:
            plus += 1
        else:
            minus += 1
    return plus, minus


def evaluate_tree_polynomial(
    H: ThreeGraph,
    omega: TripleOrientation | None,
    assignment: Mapping[Triple, int],
    modulus: int | None = None,
) -> int:
    """Sum over spanning trees of (sign) * product of the assigned values.

    Without an orientation the unsigned polynomial is evaluated.  With a
    modulus the result is reduced into 0..modulus-1.
    """
    total = 0
    for T in enumerate_spanning_trees(H):
        term = 1 if omega is None else tree_sign(T, omega, n=H.n, check_order=False)
        for t in T:
            term *= assignment[t]
            if modulus:
                term %= modulus
        total += term
    return total % modulus if modulus else total


def induced_contraction(
    H: ThreeGraph, omega: TripleOrientation, t: Sequence[int]
) -> tuple[ThreeGraph, dict[Triple, tuple[Triple, int]]]:
    """Contract ``t`` and carry each surviving triple's cyclic order along.

    Returns the contracted 3-graph and, for every triple of H meeting ``t`` in
    at most one vertex, its image triple with the sign of the carried order.
    Images of different triples may coincide with different signs; trees
    through ``t`` never contain two such triples.
    """
    H2, relabel = contract_triple(H, t)
    abc = tuple(sorted(t))
    keep = abc[0]
    images: dict[Triple, tuple[Triple, int]] = {}
    for s in H.triples:
        if len(set(s) & set(abc)) > 1:
            continue
        order = omega.cyclic(s)
        moved = tuple(relabel[keep if x in abc else x] for x in order)
        images[s] = (tuple(sorted(moved)), cyclic_sign(*moved))  # type: ignore[assignment]
    return H2, images
