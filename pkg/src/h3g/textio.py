"""Line-oriented text format for 3-graphs, orientations and graphs.

    # comment
    vertices 7
    label 1 0
    triple 1 2 3 -
    edge 4 5

A triple's optional sign gives its orientation against the ascending order
(default ``+``).  ``edge`` lines describe a plain graph on the same vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import Multigraph, ThreeGraph, build_multigraph
from .errors import H3GSyntaxError, SemanticError
from .signs import TripleOrientation

__all__ = ["H3gDocument", "parse_h3g", "render_h3g", "document_from", "load", "fixture_names", "load_fixture"]


@dataclass(frozen=True)
class H3gDocument:
    n: int
    triples: tuple[tuple[int, int, int], ...] = ()
    signs: tuple[int, ...] = ()
    labels: dict[int, str] = field(default_factory=dict)
    edges: tuple[tuple[int, int], ...] = ()

    def graph(self) -> ThreeGraph:
        return ThreeGraph(self.n, self.triples)

    def orientation(self) -> TripleOrientation:
        return TripleOrientation.from_signs(dict(zip(self.triples, self.signs)))

    def multigraph(self) -> Multigraph:
        return build_multigraph(self.n, self.edges)

    def name(self, v: int) -> str:
        return self.labels.get(v, str(v))

    def triple_name(self, t) -> str:
        names = [self.name(x) for x in sorted(t)]
        if self.labels and all(len(s) == 1 for s in names):
            return "".join(names)
        return "-".join(names)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise H3GSyntaxError(lineno, f"expected integers, got {' '.join(tokens)!r}") from None


def parse_h3g(text: str) -> H3gDocument:
    n: int | None = None
    triples: list[tuple[int, int, int]] = []
    signs: list[int] = []
    labels: dict[int, str] = {}
    edges: list[tuple[int, int]] = []
    where: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        if head == "vertices":
            if len(rest) != 1:
                raise H3GSyntaxError(lineno, "usage: vertices <n>")
            if n is not None:
                raise SemanticError(f"line {lineno}: vertices given twice")
            (n,) = _ints(rest, lineno)
            if n < 1:
                raise SemanticError(f"line {lineno}: need at least one vertex")
        elif head == "label":
            if len(rest) != 2:
                raise H3GSyntaxError(lineno, "usage: label <vertex> <name>")
            (v,) = _ints(rest[:1], lineno)
            if v in labels:
                raise SemanticError(f"line {lineno}: vertex {v} labelled twice")
            labels[v] = rest[1]
        elif head == "triple":
            sign = 1
            if len(rest) == 4 and rest[3] in "+-":
                sign = 1 if rest[3] == "+" else -1
                rest = rest[:3]
            if len(rest) != 3:
                raise H3GSyntaxError(lineno, "usage: triple <a> <b> <c> [+|-]")
            a, b, c = _ints(rest, lineno)
            key = tuple(sorted((a, b, c)))
            if len(set(key)) < 3:
                raise SemanticError(f"line {lineno}: triple repeats a vertex")
            if key in where:
                raise SemanticError(f"line {lineno}: triple already given on line {where[key]}")
            where[key] = lineno
            triples.append(key)  # type: ignore[arg-type]
            signs.append(sign)
        elif head == "edge":
            if len(rest) != 2:
                raise H3GSyntaxError(lineno, "usage: edge <a> <b>")
            a, b = _ints(rest, lineno)
            if a == b:
                raise SemanticError(f"line {lineno}: loop at {a}")
            edges.append((min(a, b), max(a, b)))
        else:
            raise H3GSyntaxError(lineno, f"unknown directive {head!r}")
    if n is None:
        raise SemanticError("missing 'vertices' line")
    for x in [v for t in triples for v in t] + [v for e in edges for v in e] + list(labels):
        if not 1 <= x <= n:
            raise SemanticError(f"vertex {x} outside 1..{n}")
    order = sorted(range(len(triples)), key=lambda i: triples[i])
    return H3gDocument(
        n,
        tuple(triples[i] for i in order),
        tuple(signs[i] for i in order),
        dict(sorted(labels.items())),
        tuple(edges),
    )


def render_h3g(doc: H3gDocument) -> str:
    lines = [f"vertices {doc.n}"]
    lines += [f"label {v} {name}" for v, name in sorted(doc.labels.items())]
    for t, s in zip(doc.triples, doc.signs):
        lines.append(f"triple {t[0]} {t[1]} {t[2]}" + (" -" if s == -1 else ""))
    lines += [f"edge {a} {b}" for a, b in doc.edges]
    return "\n".join(lines) + "\n"


def document_from(
    H: ThreeGraph | None = None,
    omega: TripleOrientation | None = None,
    labels: dict[int, str] | None = None,
    G: Multigraph | None = None,
) -> H3gDocument:
    omega = omega or TripleOrientation()
    n = H.n if H is not None else G.n if G is not None else 1
    triples = H.triples if H is not None else ()
    edges = tuple(e for e, m in G.edges for _ in range(m)) if G is not None else ()
    return H3gDocument(n, triples, tuple(omega.sign(t) for t in triples), dict(labels or {}), edges)


def load(path: str) -> H3gDocument:
    """Read a file, or standard input for ``-``."""
    import sys

    if path == "-":
        return parse_h3g(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_h3g(fh.read())


def fixture_names() -> list[str]:
    """Names of the bundled fixture files, without the ``.h3g`` suffix."""
    from importlib.resources import files

    return sorted(p.name[:-4] for p in files("h3g").joinpath("fixtures").iterdir() if p.name.endswith(".h3g"))


def load_fixture(name: str) -> H3gDocument:
    from importlib.resources import files

    return parse_h3g(files("h3g").joinpath("fixtures", f"{name}.h3g").read_text(encoding="utf-8"))
