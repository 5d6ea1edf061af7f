"""Deterministic generators for the named 3-graphs used throughout the tests."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .core import ThreeGraph, Triple, all_triples, build_three_graph
from .errors import BadIndex, BadParameters, EvenOrder, UnsupportedOrder
from .signs import TripleOrientation

__all__ = [
    "LabeledFixture",
    "TableRow",
    "label_map",
    "gen_complete",
    "gen_twin",
    "gen_interlaced",
    "interlaced_labels",
    "interlaced_s",
    "interlaced_t",
    "independent_cyclic_sets",
    "interlaced_tree_signs",
    "lucas",
    "gen_table1",
    "gen_table2",
    "gen_table3",
    "gen_prop63",
    "gen_sts",
    "gen_fig5_gadget",
    "gen_fig3",
    "gen_psts_k33",
    "FAMILIES",
]


def label_map(names: str) -> dict[str, int]:
    """One-character vertex names mapped to 1..n in the given order."""
    return {c: i + 1 for i, c in enumerate(names)}


@dataclass(frozen=True)
class TableRow:
    tree: tuple[Triple, ...]  # in the order listed, each triple sorted
    ordered: tuple[tuple[int, int, int], ...]  # triples in their written cyclic order
    cycle: tuple[int, ...]
    sign: int


@dataclass(frozen=True)
class LabeledFixture:
    graph: ThreeGraph
    orientation: TripleOrientation
    labels: dict[int, str]
    rows: tuple[TableRow, ...] = ()
    expected_flips: tuple[Triple, ...] = field(default=())

    def name(self, t) -> str:
        return "".join(self.labels[x] for x in sorted(t))

    def parse(self, word: str) -> Triple:
        inv = {v: k for k, v in self.labels.items()}
        return tuple(sorted(inv[c] for c in word))  # type: ignore[return-value]


def _fixture(names: str, oriented: str, rows, flips: str = "") -> LabeledFixture:
    lab = label_map(names)
    cyc = [tuple(lab[c] for c in w) for w in oriented.split()]
    H = build_three_graph(len(names), cyc)
    omega = TripleOrientation.from_cyclic(cyc)
    written = {tuple(sorted(c)): c for c in cyc}
    table = []
    for tree, cycle, sign in rows:
        T = tuple(tuple(sorted(lab[c] for c in w)) for w in tree.split())
        table.append(
            TableRow(T, tuple(written[t] for t in T), tuple(lab[c] for c in cycle), sign)  # type: ignore[misc]
        )
    fx = LabeledFixture(H, omega, {v: k for k, v in lab.items()}, tuple(table))
    if flips:
        fx = LabeledFixture(
            fx.graph, fx.orientation, fx.labels, fx.rows, tuple(sorted(fx.parse(w) for w in flips.split()))
        )
    return fx


_TABLE1 = {
    1: (
        "0123abc",
        "012 023 031 1ab 2bc 3ca",
        [
            ("012 1ab 3ca", "03cab12", 1),
            ("012 2bc 3ca", "01ba3c2", -1),
            ("023 2bc 1ab", "01abc23", 1),
            ("023 3ca 1ab", "02cb1a3", -1),
            ("031 3ca 2bc", "02bca31", 1),
            ("031 1ab 2bc", "03ac2b1", -1),
        ],
    ),
    2: (
        "01234abcd",
        "013 024 1ab 2bc 3cd 4da",
        [
            ("013 1ab 2bc 4da", "04dac2b13", -1),
            ("013 3cd 2bc 4da", "012bca4d3", 1),
            ("024 2bc 1ab 3cd", "01abd3c24", -1),
            ("024 4da 1ab 3cd", "023cdb1a4", 1),
            ("013 024 2bc 4da", "013bc2da4", 1),
            ("013 024 1ab 3cd", "0ab1cd324", -1),
        ],
    ),
    3: (
        "01234abcd",
        "012 034 1ab 2bc 3cd 4da",
        [
            ("012 2bc 3cd 4da", "01ba4d3c2", 1),
            ("012 1ab 4da 3cd", "043cdab12", -1),
            ("034 4da 1ab 2bc", "03dc2b1a4", 1),
            ("034 3cd 2bc 1ab", "021abcd34", -1),
            ("012 1ab 034 3cd", "0ab12cd34", 1),
            ("012 2bc 034 4da", "01bc23da4", -1),
        ],
    ),
}

_TABLE2 = {
    1: (
        "0123abc",
        "01a 02b 03c 1bc 2ca 3ab",
        [
            ("01a 2ca 3ab", "012cb3a", -1),
            ("02b 3ab 1bc", "023ac1b", -1),
            ("03c 1bc 2ca", "031ba2c", -1),
            ("01a 02b 03c", "01a2b3c", -1),
        ],
    ),
    2: (
        "01234abcd",
        "01c 02d 03a 04b 1ab 2bc 3cd 4da",
        [
            ("01c 2bc 3cd 4da", "012ba4d3c", 1),
            ("02d 3cd 4da 1ab", "023cb1a4d", 1),
            ("03a 4da 1ab 2bc", "034dc2b1a", 1),
            ("04b 1ab 2bc 3cd", "041ad3c2b", 1),
            ("01c 03a 2bc 4da", "012bc34da", -1),
            ("02d 04b 3cd 1ab", "023cd41ab", -1),
            ("01c 02d 03a 04b", "01c2d3a4b", 1),
        ],
    ),
}

_TABLE3 = (
    "012345abcde",
    "01c 02d 03e 04a 05b 1ab 2bc 3cd 4de 5ea",
    [
        ("01c 2bc 3cd 4de 5ea", "012ba5e4d3c", 1),
        ("02d 3cd 4de 5ea 1ab", "023cb1a5e4d", 1),
        ("03e 4de 5ea 1ab 2bc", "034dc2b1a5e", 1),
        ("04a 5ea 1ab 2bc 3cd", "045ed3c2b1a", 1),
        ("05b 1ab 2bc 3cd 4de", "051ae4d3c2b", 1),
        ("01c 04a 2bc 3cd 5ea", "012bd3c45ea", -1),
        ("02d 05b 3cd 4de 1ab", "023ce4d51ab", -1),
        ("03e 01c 4de 5ea 2bc", "034da5e12bc", -1),
        ("04a 02d 5ea 1ab 3cd", "045eb1a23cd", -1),
        ("05b 03e 1ab 2bc 4de", "051ac2b34de", -1),
        ("01c 02d 03e 04a 05b", "01c2d3e4a5b", 1),
    ],
    "02d 03e 04a 05b 1ab",
)


def gen_table1(index: int) -> LabeledFixture:
    """Minimal non-3-Pfaffian examples with their oriented triples and signed trees."""
    if index not in _TABLE1:
        raise BadIndex(f"table 1 has entries 1..3, got {index}")
    return _fixture(*_TABLE1[index])


def gen_table2(index: int) -> LabeledFixture:
    """The first two interlaced members (k = 3, 4) in letter labels."""
    if index not in _TABLE2:
        raise BadIndex(f"table 2 has entries 1..2, got {index}")
    return _fixture(*_TABLE2[index])


def gen_table3() -> LabeledFixture:
    """The interlaced member k = 5 in letter labels, with its known switching set."""
    return _fixture(*_TABLE3)


def gen_complete(n_odd: int) -> ThreeGraph:
    if n_odd < 3 or n_odd % 2 == 0:
        raise EvenOrder(f"complete 3-graph needs an odd order >= 3, got {n_odd}")
    return ThreeGraph(n_odd, tuple(all_triples(n_odd)))


def gen_twin() -> ThreeGraph:
    """Three triples u v x through one pair (u, v = 1, 2): connected, odd, treeless."""
    return build_three_graph(5, [(1, 2, 3), (1, 2, 4), (1, 2, 5)])


# Interlaced family: vertices 0, 1', 1, 2', 2, ..., k', k are labelled 1..2k+1.


def _inner(k: int, i: int) -> int:
    return 2 * ((i - 1) % k + 1) + 1


def _outer(k: int, i: int) -> int:
    return 2 * ((i - 1) % k + 1)


def interlaced_s(k: int, i: int) -> Triple:
    return tuple(sorted((1, _outer(k, i), _inner(k, i))))  # type: ignore[return-value]


def interlaced_t(k: int, i: int) -> Triple:
    return tuple(sorted((_inner(k, i - 2), _inner(k, i - 1), _outer(k, i))))  # type: ignore[return-value]


def interlaced_labels(k: int) -> dict[int, str]:
    out = {1: "0"}
    for i in range(1, k + 1):
        out[_outer(k, i)] = f"{i}'"
        out[_inner(k, i)] = f"{i}"
    return out


def gen_interlaced(k: int) -> ThreeGraph:
    """Cycle of k triangles with interlacing chords, suspended from vertex 1."""
    if k < 3:
        raise BadParameters(f"interlaced family needs k >= 3, got {k}")
    tr = [interlaced_s(k, i) for i in range(1, k + 1)]
    tr += [interlaced_t(k, i) for i in range(1, k + 1)]
    return ThreeGraph(2 * k + 1, tuple(tr))


def independent_cyclic_sets(k: int) -> list[frozenset[int]]:
    """Non-empty subsets of 1..k with no two cyclically consecutive elements."""
    out = []
    for r in range(1, k // 2 + 1):
        for I in combinations(range(1, k + 1), r):
            s = set(I)
            if all((i % k) + 1 not in s for i in I):
                out.append(frozenset(I))
    return out


def interlaced_tree_signs(k: int) -> dict[tuple[Triple, ...], int]:
    """Predicted trees of the k-th interlaced 3-graph with their signs.

    The tree S = {s_1..s_k} is positive; for each independent set I the tree
    T_I = {s_i : i in I} + {t_j : j not in I} has sign (-1)^(|I|-1).
    """
    S = tuple(sorted(interlaced_s(k, i) for i in range(1, k + 1)))
    out = {S: 1}
    for I in independent_cyclic_sets(k):
        T = [interlaced_s(k, i) for i in I] + [interlaced_t(k, j) for j in range(1, k + 1) if j not in I]
        out[tuple(sorted(T))] = (-1) ** (len(I) - 1)
    return out


def lucas(k: int) -> int:
    a, b = 1, 3
    if k == 1:
        return a
    for _ in range(k - 2):
        a, b = b, a + b
    return b


def _cycle_triples(k: int) -> list[Triple]:
    # vertices 0..2k shifted by one; apex 0 is label 1
    def v(x: int) -> int:
        return x + 1

    out = [tuple(sorted((v(2 * k), v(1), v(2))))]
    out += [tuple(sorted((v(2 * j), v(2 * j + 1), v(2 * j + 2)))) for j in range(1, k)]
    return out  # type: ignore[return-value]


def gen_prop63(variant: str, k: int, params: tuple[int, ...]) -> ThreeGraph:
    """Cycle of k triangles through 1..2k plus apex triples on odd (outer) vertices.

    ``two_edges`` takes (x, y, z, t) and adds {0, 2x-1, 2y-1}, {0, 2z-1, 2t-1};
    ``triangle`` takes (x, y, z) and adds the three triples of that triangle.
    Labels are the natural ones shifted up by one.
    """
    if k < 2:
        raise BadParameters("k must be at least 2")
    want = {"two_edges": 4, "triangle": 3}.get(variant)
    if want is None:
        raise BadParameters(f"unknown variant {variant!r}")
    if len(params) != want or len(set(params)) != want or not all(1 <= p <= k for p in params):
        raise BadParameters(f"{variant} needs {want} distinct values in 1..{k}")

    def odd(x: int) -> int:
        return 2 * x - 1 + 1

    if variant == "two_edges":
        x, y, z, t = params
        extra = [(1, odd(x), odd(y)), (1, odd(z), odd(t))]
    else:
        x, y, z = params
        extra = [(1, odd(x), odd(y)), (1, odd(y), odd(z)), (1, odd(z), odd(x))]
    return build_three_graph(2 * k + 1, _cycle_triples(k) + extra)


def gen_sts(order: int) -> ThreeGraph:
    """Fano plane (7) or the affine plane over GF(3) (9)."""
    if order == 7:
        return build_three_graph(7, [((i % 7) + 1, ((i + 1) % 7) + 1, ((i + 3) % 7) + 1) for i in range(7)])
    if order == 9:
        pts = [(x, y) for x in range(3) for y in range(3)]
        lines = set()
        for p, q in combinations(pts, 2):
            r = ((-p[0] - q[0]) % 3, (-p[1] - q[1]) % 3)
            lines.add(tuple(sorted(3 * a + b + 1 for a, b in (p, q, r))))
        return build_three_graph(9, sorted(lines))
    raise UnsupportedOrder(f"only orders 7 and 9 are built in, got {order}")


def gen_fig5_gadget() -> tuple[ThreeGraph, tuple[int, int, int]]:
    """Seven-vertex gadget: whites 1, 2, 3 and blacks A..D = 4..7.

    Returns the 3-graph and its three white vertices.
    """
    W1, W2, W3, A, B, C, D = range(1, 8)
    tr = [(W2, B, C), (B, W3, D), (A, B, D), (A, B, C), (W1, C, D)]
    return build_three_graph(7, tr), (W1, W2, W3)


def gen_fig3(side: str) -> ThreeGraph:
    """Odd, connected, treeless 3-graphs that pass the Tutte-like test.

    ``right``: two gadgets glued on their white vertices (11 vertices).
    ``left``: a ring of three double triangles {s, x, y}, {x, y, s'} (9 vertices).
    """
    if side == "right":
        g, whites = gen_fig5_gadget()
        tr = list(g.triples)
        shift = {w: w for w in whites}
        shift.update({b: b + 4 for b in range(4, 8)})
        tr += [tuple(shift[x] for x in t) for t in g.triples]
        return build_three_graph(11, tr)
    if side == "left":
        tr = []
        for i in range(3):
            s, x, y, s2 = 3 * i + 1, 3 * i + 2, 3 * i + 3, (3 * i + 3) % 9 + 1
            tr += [(s, x, y), (x, y, s2)]
        return build_three_graph(9, tr)
    raise BadParameters(f"side must be 'left' or 'right', got {side!r}")


def gen_psts_k33() -> tuple[ThreeGraph, int]:
    """A partial Steiner system whose graph at the apex 11 holds a subdivided K3,3.

    Black triangles 7-9-10, 2-5-7, 2-3-4, 1-6-9 form a forest; the white
    matching 1-4, 2-9, 3-10, 5-8, 6-7 joins them through the apex.  The graph
    left after removing the apex is non-Pfaffian and the 3-graph has 8 trees.
    Found by a seeded random search over black forests plus white matchings.
    """
    black = [(7, 9, 10), (2, 5, 7), (2, 3, 4), (1, 6, 9)]
    white = [(1, 4), (2, 9), (3, 10), (5, 8), (6, 7)]
    return build_three_graph(11, black + [(a, b, 11) for a, b in white]), 11


FAMILIES = {
    "complete": gen_complete,
    "twin": gen_twin,
    "interlaced": gen_interlaced,
    "sts": gen_sts,
}
