"""The Lambda matrix, exact and modular Pfaffians, and identities built on them."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Mapping, Sequence

import numpy as np

from .core import ThreeGraph, Triple
from .errors import EvenVertexCount, NonPrimeModulus, NotAntisymmetric, OddDimension, TooManyTriples
from .signs import TripleOrientation, cyclic_sign, tree_sign
from .trees import enumerate_tree_indices

__all__ = [
    "SkewMatrix",
    "epsilon",
    "lambda_matrix",
    "pfaffian_exact",
    "pfaffian_mod",
    "pfaffian_matching_sum",
    "determinant_exact",
    "complete_matchings",
    "crossings",
    "matching_sign",
    "signed_count_via_pfaffian",
    "hr_expansion",
    "variance_identity_check",
    "ExistenceVerdict",
    "randomized_existence_test",
    "is_prime",
    "next_prime",
    "field_size",
    "lambda_entry_bound_holds",
]


@dataclass(frozen=True)
class SkewMatrix:
    """Antisymmetric square matrix over the integers or over F_q."""

    entries: tuple[tuple[int, ...], ...]
    modulus: int | None = None

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        m = len(rows)
        if any(len(r) != m for r in rows):
            raise NotAntisymmetric("matrix is not square")
        q = self.modulus
        if q is not None:
            if not is_prime(q):
                raise NonPrimeModulus(f"{q} is not prime")
            rows = tuple(tuple(x % q for x in r) for r in rows)
        for i in range(m):
            for j in range(i, m):
                s = rows[i][j] + rows[j][i]
                if (s % q if q else s) != 0:
                    raise NotAntisymmetric(f"entries ({i},{j}) and ({j},{i}) do not cancel")
        object.__setattr__(self, "entries", rows)

    @property
    def dim(self) -> int:
        return len(self.entries)

    def minor(self, k: int) -> "SkewMatrix":
        """Delete row and column ``k`` (1-based)."""
        keep = [i for i in range(self.dim) if i != k - 1]
        return SkewMatrix(tuple(tuple(self.entries[i][j] for j in keep) for i in keep), self.modulus)

    def as_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def is_prime(q: int) -> bool:
    if q < 2:
        return False
    f = 2
    while f * f <= q:
        if q % f == 0:
            return False
        f += 1
    return True


def next_prime(x: int) -> int:
    q = max(2, x)
    while not is_prime(q):
        q += 1
    return q


def epsilon(i: int, j: int, k: int) -> int:
    return cyclic_sign(i, j, k)


def lambda_matrix(
    H: ThreeGraph,
    omega: TripleOrientation | None = None,
    y: Mapping[Triple, int] | None = None,
    modulus: int | None = None,
) -> SkewMatrix:
    """Lambda_ij = sum_k epsilon(i,j,k) * ybar_ijk, with ybar negated on flipped triples."""
    omega = omega or TripleOrientation()
    n = H.n
    L = [[0] * n for _ in range(n)]
    for t in H.triples:
        val = (1 if y is None else y[t]) * omega.sign(t)
        for i, j, k in ((t[0], t[1], t[2]), (t[0], t[2], t[1]), (t[1], t[2], t[0])):
            e = epsilon(i, j, k) * val
            L[i - 1][j - 1] += e
            L[j - 1][i - 1] -= e
    return SkewMatrix(tuple(tuple(r) for r in L), modulus)


def _as_rows(A: SkewMatrix | Sequence[Sequence[int]]) -> tuple[list[list[int]], int | None]:
    if isinstance(A, SkewMatrix):
        return A.as_lists(), A.modulus
    S = SkewMatrix(tuple(tuple(r) for r in A))
    return S.as_lists(), None


def _skew_eliminate(rows: list[list], div) -> object:
    """Shared skew Gaussian elimination; ``div(x, a)`` divides in the ring."""
    m = len(rows)
    if m % 2:
        raise OddDimension(f"dimension {m} is odd")
    A = rows
    pf = 1
    for k in range(0, m, 2):
        piv = next((j for j in range(k + 1, m) if A[k][j] != 0), None)
        if piv is None:
            return 0
        if piv != k + 1:
            A[piv], A[k + 1] = A[k + 1], A[piv]
            for r in A:
                r[piv], r[k + 1] = r[k + 1], r[piv]
            pf = -pf
        a = A[k][k + 1]
        pf = pf * a
        rk, rk1 = A[k], A[k + 1]
        for i in range(k + 2, m):
            ri = A[i]
            alpha = -div(ri[k + 1], a)
            beta = div(ri[k], a)
            if alpha == 0 and beta == 0:
                continue
            for j in range(k + 2, m):
                ri[j] = ri[j] + alpha * rk[j] + beta * rk1[j]
            ri[k] = ri[k + 1] = 0
    return pf


def pfaffian_exact(A: SkewMatrix | Sequence[Sequence[int]]) -> int:
    """Exact Pfaffian of an integer skew matrix by elimination over the rationals."""
    rows, q = _as_rows(A)
    if q is not None:
        raise ValueError("use pfaffian_mod for matrices over a prime field")
    frac = [[Fraction(x) for x in r] for r in rows]
    pf = _skew_eliminate(frac, lambda x, a: x / a)
    pf = Fraction(pf)
    assert pf.denominator == 1
    return int(pf)


def pfaffian_mod(A: SkewMatrix | Sequence[Sequence[int]], q: int | None = None) -> int:
    """Pfaffian over F_q, with a symmetric row/column swap on zero pivots."""
    rows, mod = _as_rows(A)
    q = q if q is not None else mod
    if q is None or not is_prime(q):
        raise NonPrimeModulus(f"{q} is not prime")
    red = [[x % q for x in r] for r in rows]
    m = len(red)
    if m % 2:
        raise OddDimension(f"dimension {m} is odd")
    pf = 1
    for k in range(0, m, 2):
        piv = next((j for j in range(k + 1, m) if red[k][j] % q), None)
        if piv is None:
            return 0
        if piv != k + 1:
            red[piv], red[k + 1] = red[k + 1], red[piv]
            for r in red:
                r[piv], r[k + 1] = r[k + 1], r[piv]
            pf = -pf
        a = red[k][k + 1]
        pf = pf * a % q
        inv = pow(a, -1, q)
        rk, rk1 = red[k], red[k + 1]
        for i in range(k + 2, m):
            ri = red[i]
            alpha = -ri[k + 1] * inv % q
            beta = ri[k] * inv % q
            if alpha == 0 and beta == 0:
                continue
            for j in range(k + 2, m):
                ri[j] = (ri[j] + alpha * rk[j] + beta * rk1[j]) % q
            ri[k] = ri[k + 1] = 0
    return pf % q


def complete_matchings(points: Sequence[int]):
    """All perfect matchings of a point set (as lists of ordered pairs)."""
    pts = list(points)
    if not pts:
        yield []
        return
    a = pts[0]
    for idx in range(1, len(pts)):
        b = pts[idx]
        rest = pts[1:idx] + pts[idx + 1 :]
        for tail in complete_matchings(rest):
            yield [(a, b), *tail]


def crossings(M: Sequence[tuple[int, int]]) -> int:
    """Number of i<j<k<l with {i,k} and {j,l} both in M."""
    edges = [(min(e), max(e)) for e in M]
    count = 0
    for a, b in edges:
        for c, d in edges:
            if a < c < b < d:
                count += 1
    return count


def matching_sign(M: Sequence[tuple[int, int]]) -> int:
    return -1 if crossings(M) % 2 else 1


def pfaffian_matching_sum(A: SkewMatrix | Sequence[Sequence[int]]) -> int:
    """Pfaffian as the signed sum over perfect matchings of the index set."""
    rows, q = _as_rows(A)
    m = len(rows)
    if m % 2:
        raise OddDimension(f"dimension {m} is odd")
    total = 0
    for M in complete_matchings(range(m)):
        term = matching_sign(M)
        for i, j in M:
            term *= rows[i][j]
            if term == 0:
                break
        total += term
    return total % q if q else total


def determinant_exact(rows: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    sign = 1
    prev = 1
    for k in range(m - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, m) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[m - 1][m - 1] if m else 1


def signed_count_via_pfaffian(H: ThreeGraph, omega: TripleOrientation | None = None, k: int = 1) -> int:
    """(-1)^(k-1) * Pf(Lambda with row/column k removed), all y = 1."""
    if H.n % 2 == 0:
        raise EvenVertexCount("signed counts need an odd vertex count")
    if not 1 <= k <= H.n:
        raise ValueError(f"k must lie in 1..{H.n}")
    L = lambda_matrix(H, omega).minor(k)
    return (-1) ** (k - 1) * pfaffian_exact(L)


def hr_expansion(H: ThreeGraph, omega: TripleOrientation | None = None) -> int:
    """Sum over matchings M of [2n] and apex maps f of sgn(M) prod eps * ybar at y = 1."""
    if H.n % 2 == 0:
        raise EvenVertexCount("signed counts need an odd vertex count")
    omega = omega or TripleOrientation()
    apexes: dict[tuple[int, int], list[int]] = {}
    for t in H.triples:
        for k in t:
            i, j = (x for x in t if x != k)
            apexes.setdefault((i, j), []).append(k)
    total = 0
    for M in complete_matchings(range(1, H.n)):
        options = [apexes.get(e, []) for e in M]
        if any(not o for o in options):
            continue
        sgn = matching_sign(M)
        for f in product(*options):
            term = sgn
            for (i, j), k in zip(M, f):
                term *= epsilon(i, j, k) * omega.sign((i, j, k))
            total += term
    return total


def variance_identity_check(H: ThreeGraph, omega: TripleOrientation | None = None) -> tuple[Fraction, Fraction]:
    """Exact mean and second moment of the signed tree polynomial over y in {+1,-1}^triples."""
    m = len(H)
    if m > 20:
        raise TooManyTriples(f"{m} triples exceed the exhaustive limit of 20")
    omega = omega or TripleOrientation()
    masks = np.arange(1 << m, dtype=np.int64)
    values = np.zeros(1 << m, dtype=np.int64)
    tr = H.triples
    for idx in enumerate_tree_indices(H):
        sgn = tree_sign([tr[i] for i in idx], omega, n=H.n, check_order=False)
        tmask = sum(1 << i for i in idx)
        parity = (np.bitwise_count(masks & tmask) & 1).astype(np.int64)
        values += sgn * (1 - 2 * parity)
    size = 1 << m
    return Fraction(int(values.sum()), size), Fraction(int((values * values).sum()), size)


@dataclass(frozen=True)
class ExistenceVerdict:
    """Outcome of the randomized test: ``exists`` with a nonzero evaluation,
    or not, with the failure-probability bound."""

    exists: bool
    modulus: int
    trials: int
    value: int | None = None
    bound: Fraction = Fraction(0)

    @property
    def kind(self) -> str:
        return "TreeExists" if self.exists else "ProbablyNone"


def field_size(n_vertices: int) -> int:
    """Smallest prime with per-trial failure probability at most 1/4."""
    deg = (n_vertices - 1) // 2
    return next_prime(max(4 * deg, n_vertices - 1, 2))


def randomized_existence_test(H: ThreeGraph, trials: int = 1, seed: int = 0) -> ExistenceVerdict:
    """Evaluate Pf(Lambda^(1)) at random points of F_q; nonzero proves a tree exists."""
    if trials < 1:
        raise ValueError("trials must be positive")
    q = field_size(H.n)
    if H.n % 2 == 0:
        return ExistenceVerdict(False, q, 0, None, Fraction(0))
    deg = (H.n - 1) // 2
    rng = random.Random(seed)
    for trial in range(1, trials + 1):
        y = {t: rng.randrange(q) for t in H.triples}
        val = pfaffian_mod(lambda_matrix(H, None, y, q).minor(1), q)
        if val:
            return ExistenceVerdict(True, q, trial, val, Fraction(0))
    return ExistenceVerdict(False, q, trials, 0, Fraction(deg, q) ** trials)


def lambda_entry_bound_holds(H: ThreeGraph, omega: TripleOrientation | None = None, y: Mapping[Triple, int] | None = None) -> bool:
    """All |Lambda_ij| <= |V| - 2 for assignments with values in {+1, -1}."""
    L = lambda_matrix(H, omega, y)
    return all(abs(x) <= H.n - 2 for r in L.entries for x in r)
