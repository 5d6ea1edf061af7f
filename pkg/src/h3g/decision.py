"""Deciding 3-Pfaffian and Pfaffian orientability through a GF(2) linear system."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .core import Multigraph, ThreeGraph, Triple, contract_triple, delete_triple
from .errors import IndexOutOfRange, NotNonPfaffian
from .pfaffian import matching_sign
from .signs import TripleOrientation, tree_sign
from .trees import enumerate_perfect_matchings, enumerate_tree_indices

__all__ = [
    "Gf2System",
    "Witness",
    "Certificate",
    "DecisionOutcome",
    "decide_3pfaffian",
    "verify_witness",
    "verify_certificate",
    "tree_rows",
    "matching_rows",
    "decide_graph_pfaffian",
    "verify_graph_witness",
    "verify_graph_certificate",
    "Minimality",
    "minimality_check",
    "gf2_rank",
    "in_row_span",
]

# Target 0 asks for every object to become positive, target 1 for negative.
POSITIVE, NEGATIVE = 0, 1


class Gf2System:
    """Incremental reduced row-echelon basis over GF(2) with two target bits.

    Each stored row remembers which input rows were summed to produce it, so
    an inconsistency comes with the list of input rows that proves it.
    """

    def __init__(self) -> None:
        # pivot column -> [row bits, target bits (2-bit int), combination mask]
        self.basis: dict[int, list[int]] = {}
        self.conflicts: list[int | None] = [None, None]
        self.rows_seen = 0

    @property
    def rank(self) -> int:
        return len(self.basis)

    def infeasible(self, target: int) -> bool:
        return self.conflicts[target] is not None

    def add(self, row: int, negative: bool) -> None:
        """Fold in one row whose object is currently negative iff ``negative``."""
        index = self.rows_seen
        self.rows_seen += 1
        bits = 1 if negative else 0
        # bit 0: target "all positive" (parity must equal current negativity)
        # bit 1: target "all negative"
        targets = bits | ((bits ^ 1) << 1)
        combo = 1 << index
        for p, (r, t, c) in self.basis.items():
            if row >> p & 1:
                row ^= r
                targets ^= t
                combo ^= c
        if row:
            p = (row & -row).bit_length() - 1
            for q, entry in self.basis.items():
                if entry[0] >> p & 1:
                    entry[0] ^= row
                    entry[1] ^= targets
                    entry[2] ^= combo
            self.basis[p] = [row, targets, combo]
            return
        for target in (POSITIVE, NEGATIVE):
            if targets >> target & 1 and self.conflicts[target] is None:
                self.conflicts[target] = combo

    def solution(self, target: int) -> int:
        """A solution mask (free variables zero) of a feasible target."""
        x = 0
        for p, (_, t, _) in self.basis.items():
            if t >> target & 1:
                x |= 1 << p
        return x

    def kernel(self, ncols: int) -> list[int]:
        vectors = []
        for f in range(ncols):
            if f in self.basis:
                continue
            v = 1 << f
            for p, (r, _, _) in self.basis.items():
                if r >> f & 1:
                    v |= 1 << p
            vectors.append(v)
        return vectors


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _lightest(x: int, kernel: list[int], limit: int = 16) -> int:
    """Smallest-weight member of x + span(kernel), ties broken by index list."""
    if len(kernel) > limit:
        return x
    best = x
    best_key = (bin(x).count("1"), _bits(x))
    for choice in product((0, 1), repeat=len(kernel)):
        y = x
        for use, v in zip(choice, kernel):
            if use:
                y ^= v
        key = (bin(y).count("1"), _bits(y))
        if key < best_key:
            best, best_key = y, key
    return best


@dataclass(frozen=True)
class Witness:
    """Flip these items (relative to the base orientation) to make all signs ``sign``."""

    flips: tuple
    sign: int
    vacuous: bool = False


@dataclass(frozen=True)
class Certificate:
    """Index combinations refuting the all-positive and the all-negative targets."""

    positive: tuple[int, ...]
    negative: tuple[int, ...]

    @property
    def indices(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.positive) | set(self.negative)))


DecisionOutcome = Witness | Certificate


def _decide(rows: Iterable[tuple[int, bool]], columns: Sequence) -> DecisionOutcome:
    system = Gf2System()
    for row, negative in rows:
        system.add(row, negative)
        if system.infeasible(POSITIVE) and system.infeasible(NEGATIVE):
            pos, neg = system.conflicts
            return Certificate(tuple(_bits(pos)), tuple(_bits(neg)))  # type: ignore[arg-type]
    if system.rows_seen == 0:
        return Witness((), 1, vacuous=True)
    target = POSITIVE if not system.infeasible(POSITIVE) else NEGATIVE
    x = _lightest(system.solution(target), system.kernel(len(columns)))
    return Witness(tuple(columns[i] for i in _bits(x)), 1 if target == POSITIVE else -1)


def tree_rows(H: ThreeGraph, base: TripleOrientation | None = None) -> Iterator[tuple[int, bool]]:
    """Incidence bitmask and negativity of every spanning tree, in enumeration order."""
    base = base or TripleOrientation()
    tr = H.triples
    for idx in enumerate_tree_indices(H):
        T = [tr[i] for i in idx]
        row = 0
        for i in idx:
            row |= 1 << i
        yield row, tree_sign(T, base, n=H.n) == -1


def decide_3pfaffian(H: ThreeGraph, base: TripleOrientation | None = None) -> DecisionOutcome:
    """Witness flip set making every tree the same sign, or a certificate that none exists.

    Flips are relative to ``base`` (the ascending orientation by default).
    """
    return _decide(tree_rows(H, base), H.triples)


def verify_witness(
    H: ThreeGraph, flips: Iterable[Sequence[int]], base: TripleOrientation | None = None
) -> bool:
    omega = (base or TripleOrientation()).flip(flips)
    signs = {tree_sign([H.triples[i] for i in idx], omega, n=H.n) for idx in enumerate_tree_indices(H)}
    return len(signs) <= 1


def _verify_rows(rows: Iterable[tuple[int, bool]], cert: Certificate) -> bool:
    wanted = set(cert.positive) | set(cert.negative)
    if not cert.positive or not cert.negative:
        return False
    found: dict[int, tuple[int, bool]] = {}
    for i, r in enumerate(rows):
        if i in wanted:
            found[i] = r
    missing = wanted - set(found)
    if missing:
        raise IndexOutOfRange(f"indices {sorted(missing)} exceed the enumeration")
    for target, combo in ((POSITIVE, cert.positive), (NEGATIVE, cert.negative)):
        acc = 0
        bit = 0
        for i in combo:
            row, neg = found[i]
            acc ^= row
            bit ^= int(neg) ^ target
        if acc != 0 or bit != 1:
            return False
    return True


def verify_certificate(H: ThreeGraph, cert: Certificate, base: TripleOrientation | None = None) -> bool:
    return _verify_rows(tree_rows(H, base), cert)


def matching_rows(G: Multigraph) -> Iterator[tuple[int, bool]]:
    """Edge-incidence bitmask and sign of each perfect matching under the ascending orientation."""
    col = {e: i for i, e in enumerate(G.simple_edges())}
    for M in enumerate_perfect_matchings(G):
        row = 0
        for e in M:
            row |= 1 << col[e]
        yield row, matching_sign(M) == -1


def decide_graph_pfaffian(G: Multigraph) -> DecisionOutcome:
    """Edges to reverse from the ascending orientation i -> j (i < j), or a certificate."""
    return _decide(matching_rows(G), G.simple_edges())


def verify_graph_witness(G: Multigraph, flips: Iterable[Sequence[int]]) -> bool:
    rev = {tuple(sorted(e)) for e in flips}
    signs = set()
    for M in enumerate_perfect_matchings(G):
        back = sum(1 for e in M if e in rev)
        signs.add(matching_sign(M) * (-1) ** back)
    return len(signs) <= 1


def verify_graph_certificate(G: Multigraph, cert: Certificate) -> bool:
    return _verify_rows(matching_rows(G), cert)


@dataclass(frozen=True)
class Minimality:
    minimal: bool
    triple: Triple | None = None
    op: str | None = None


def minimality_check(H: ThreeGraph) -> Minimality:
    """Minimal iff every single deletion and contraction is 3-Pfaffian."""
    if not isinstance(decide_3pfaffian(H), Certificate):
        raise NotNonPfaffian("the 3-graph already has a 3-Pfaffian orientation")
    for t in H.triples:
        if isinstance(decide_3pfaffian(delete_triple(H, t)), Certificate):
            return Minimality(False, t, "delete")
        if isinstance(decide_3pfaffian(contract_triple(H, t)[0]), Certificate):
            return Minimality(False, t, "contract")
    return Minimality(True)


def gf2_rank(rows: Iterable[int]) -> int:
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    return len(basis)


def in_row_span(rows: Sequence[int], target: int) -> bool:
    return gf2_rank(rows) == gf2_rank([*rows, target])
