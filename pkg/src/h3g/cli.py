"""Command-line front end: ``h3g <subcommand> [options]``.

Exit status is 0 on success, 1 on a negative verdict (no tree, no
orientation, a violated check) and 2 on bad input.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Callable, Sequence

from .core import Multigraph, ThreeGraph
from .decision import (
    Witness,
    decide_3pfaffian,
    decide_graph_pfaffian,
    minimality_check,
    verify_certificate,
)
from .errors import BadParameters, H3GError, InputError, TripleAbsent
from .families import (
    LabeledFixture,
    gen_complete,
    gen_fig3,
    gen_fig5_gadget,
    gen_interlaced,
    gen_prop63,
    gen_psts_k33,
    gen_sts,
    gen_table1,
    gen_table2,
    gen_table3,
    gen_twin,
    interlaced_labels,
)
from .pfaffian import hr_expansion, randomized_existence_test, signed_count_via_pfaffian
from .signs import TripleOrientation, signed_tree_census, tree_sign
from .steiner import decide_psts_via_graph, psts_bijection_report
from .structure import blocks, graph_tutte_check, tutte_like_check
from .suspensions import decide_2susp, suspend
from .textio import H3gDocument, document_from, load, render_h3g
from .trees import PruferCode, enumerate_perfect_matchings, enumerate_spanning_trees, prufer_decode, prufer_encode

__all__ = ["main", "build_parser"]

OK, NEGATIVE, BAD_INPUT = 0, 1, 2


class _Out:
    def __init__(self) -> None:
        self.color = os.environ.get("H3G_COLOR", "1") != "0" and sys.stdout.isatty()

    def mark(self, passed: bool, text: str) -> str:
        if not self.color:
            return text
        return f"\x1b[{32 if passed else 31}m{text}\x1b[0m"


# --- helpers ---------------------------------------------------------------------


def _triple_word(doc: H3gDocument, word: str) -> tuple[int, int, int]:
    if "," in word or "-" in word:
        parts = word.replace("-", ",").split(",")
        verts = [int(p) for p in parts]
    else:
        inv = {name: v for v, name in doc.labels.items()}
        if all(c in inv for c in word):
            verts = [inv[c] for c in word]
        else:
            verts = [int(c) for c in word]
    if len(verts) != 3:
        raise InputError(f"{word!r} does not name a triple")
    return tuple(sorted(verts))  # type: ignore[return-value]


def _graph_of(doc: H3gDocument) -> Multigraph:
    if not doc.edges:
        raise InputError("this command needs 'edge' lines")
    return doc.multigraph()


def _outcome_3(doc: H3gDocument, H: ThreeGraph, out, base: TripleOrientation) -> int:
    if isinstance(out, Witness):
        names = " ".join(doc.triple_name(t) for t in out.flips)
        print(f"WITNESS flip: {names}".rstrip())
        print(f"sign {out.sign:+d}" + (" (no trees)" if out.vacuous else ""))
        return OK
    trees = list(enumerate_spanning_trees(H))
    print("CERTIFICATE")
    print("positive-target " + " ".join(map(str, out.positive)))
    print("negative-target " + " ".join(map(str, out.negative)))
    for i in out.indices:
        T = trees[i]
        s = tree_sign(T, base, n=H.n)
        print(f"tree {i} {s:+d}: " + " ".join(doc.triple_name(t) for t in T))
    print("verified" if verify_certificate(H, out, base) else "NOT VERIFIED")
    return NEGATIVE


# --- subcommands ---------------------------------------------------------------------


def _gen(args) -> int:
    fam, params = args.family, args.params
    labels: dict[int, str] = {}
    omega = TripleOrientation()
    H: ThreeGraph | None = None

    def ints() -> list[int]:
        return [int(p) for p in params]

    def fixture(f: LabeledFixture) -> ThreeGraph:
        nonlocal labels, omega
        labels, omega = f.labels, f.orientation
        return f.graph

    if fam == "complete":
        H = gen_complete(*ints())
    elif fam == "twin":
        H = gen_twin()
    elif fam == "interlaced":
        (k,) = ints()
        H, labels = gen_interlaced(k), interlaced_labels(k)
    elif fam == "sts":
        H = gen_sts(*ints())
    elif fam == "table1":
        H = fixture(gen_table1(*ints()))
    elif fam == "table2":
        H = fixture(gen_table2(*ints()))
    elif fam == "table3":
        H = fixture(gen_table3())
    elif fam == "prop63":
        variant, k, *rest = params
        H = gen_prop63(variant.replace("-", "_"), int(k), tuple(int(x) for x in rest))
    elif fam == "fig3":
        H = gen_fig3(*params)
    elif fam == "fig5":
        H = gen_fig5_gadget()[0]
    elif fam == "psts-k33":
        H = gen_psts_k33()[0]
    else:
        raise BadParameters(f"unknown family {fam!r}")
    sys.stdout.write(render_h3g(document_from(H, omega, labels)))
    return OK


def _count(args) -> int:
    H = load(args.file).graph()
    from .trees import count_spanning_trees

    c = count_spanning_trees(H)
    print(c)
    return OK if c else NEGATIVE


def _enumerate(args) -> int:
    doc = load(args.file)
    H, omega = doc.graph(), doc.orientation()
    found = False
    for i, T in enumerate(enumerate_spanning_trees(H)):
        found = True
        s = tree_sign(T, omega, n=H.n)
        print(f"{i} {s:+d} " + " ".join(doc.triple_name(t) for t in T))
    return OK if found else NEGATIVE


def _sign(args) -> int:
    doc = load(args.file)
    T = [_triple_word(doc, w) for w in args.triples]
    H = doc.graph()
    for t in T:
        if t not in H:
            raise TripleAbsent(f"{doc.triple_name(t)} is not a triple of the input")
    print(f"{tree_sign(T, doc.orientation(), n=doc.n):+d}")
    return OK


def _census(args) -> int:
    doc = load(args.file)
    p, m = signed_tree_census(doc.graph(), doc.orientation())
    print(f"positive {p}")
    print(f"negative {m}")
    print(f"difference {p - m}")
    return OK


def _pfaffian_count(args) -> int:
    doc = load(args.file)
    print(signed_count_via_pfaffian(doc.graph(), doc.orientation(), args.k))
    return OK


def _hr_count(args) -> int:
    doc = load(args.file)
    print(hr_expansion(doc.graph(), doc.orientation()))
    return OK


def _decide3(args) -> int:
    doc = load(args.file)
    H, base = doc.graph(), doc.orientation()
    return _outcome_3(doc, H, decide_3pfaffian(H, base), base)


def _decide_graph(args) -> int:
    doc = load(args.file)
    G = _graph_of(doc)
    out = decide_graph_pfaffian(G)
    if isinstance(out, Witness):
        print(("WITNESS reverse: " + " ".join(f"{a}-{b}" for a, b in out.flips)).rstrip())
        return OK
    pms = list(enumerate_perfect_matchings(G))
    print("CERTIFICATE")
    print("positive-target " + " ".join(map(str, out.positive)))
    print("negative-target " + " ".join(map(str, out.negative)))
    for i in out.indices:
        print(f"matching {i}: " + " ".join(f"{a}-{b}" for a, b in pms[i]))
    return NEGATIVE


def _exists(args) -> int:
    H = load(args.file).graph()
    v = randomized_existence_test(H, args.trials, args.seed)
    if v.exists:
        print(f"TreeExists (q={v.modulus}, trial {v.trials})")
        return OK
    print(f"ProbablyNone (q={v.modulus}, {v.trials} trials, error <= {v.bound})")
    return NEGATIVE


def _tutte(args) -> int:
    doc = load(args.file)
    v = tutte_like_check(doc.graph(), args.cap) if doc.triples else graph_tutte_check(_graph_of(doc), args.cap)
    if v.passes:
        print("PASS")
        return OK
    print(f"VIOLATION S={' '.join(doc.name(x) for x in v.S)} odd-components={v.q}")
    return NEGATIVE


def _blocks(args) -> int:
    doc = load(args.file)
    src = doc.graph() if doc.triples else _graph_of(doc)
    even = False
    for b in blocks(src):
        tag = "even" if len(b) % 2 == 0 else "odd"
        even |= tag == "even"
        print(f"{tag} " + " ".join(doc.name(x) for x in sorted(b)))
    return NEGATIVE if even else OK


def _suspend(args) -> int:
    doc = load(args.file)
    H = suspend(_graph_of(doc), args.k)
    sys.stdout.write(render_h3g(document_from(H)))
    return OK


def _decide2(args) -> int:
    G = _graph_of(load(args.file))
    v = decide_2susp(G)
    print(("PFAFFIAN" if v.pfaffian else "NOT PFAFFIAN") + f": {v.reason}")
    if v.forbidden is not None:
        f = v.forbidden
        print(f"{f.kind} on {' '.join(map(str, f.vertices))}; rest matched by " + " ".join(f"{a}-{b}" for a, b in f.matching))
    if v.vertex is not None:
        print(f"vertex {v.vertex}")
    return OK if v.pfaffian else NEGATIVE


def _prufer(args) -> int:
    if args.action == "encode":
        doc = load(args.file)
        n = (doc.n - 1) // 2
        code = prufer_encode(doc.triples, n)
        print("gamma " + " ".join(map(str, code.gamma)))
        print("matching " + " ".join(f"{a}-{b}" for a, b in code.matching))
        return OK
    gamma = tuple(int(x) for x in args.gamma.split(",") if x) if args.gamma else ()
    matching = tuple(tuple(sorted(int(x) for x in p.split("-"))) for p in args.matching.split(","))
    T = prufer_decode(PruferCode(gamma, matching), args.n)  # type: ignore[arg-type]
    sys.stdout.write(render_h3g(document_from(ThreeGraph(2 * args.n + 1, T))))
    return OK


def _psts(args) -> int:
    doc = load(args.file)
    H = doc.graph()
    v = args.vertex if args.vertex is not None else H.n
    if args.action == "bijection":
        r = psts_bijection_report(H, v)
        print(f"trees {r.trees}")
        print(f"matchings {r.matchings}")
        print(f"non-alternating {r.non_alternating}")
        print("bijective" if r.bijective else "NOT BIJECTIVE")
        return OK if r.bijective else NEGATIVE
    d = decide_psts_via_graph(H, v)
    if d.pfaffian and d.orientation is not None:
        flips = sorted(d.orientation.flipped)
        print("PFAFFIAN flip: " + " ".join(doc.triple_name(t) for t in flips))
    else:
        print("NOT PFAFFIAN")
    print("agrees with direct decision" if d.agrees else "DISAGREES with direct decision")
    return OK if d.pfaffian else NEGATIVE


def _minimal(args) -> int:
    doc = load(args.file)
    m = minimality_check(doc.graph())
    if m.minimal:
        print("Minimal")
        return OK
    print(f"Reducible: {m.op} {doc.triple_name(m.triple)}")
    return NEGATIVE


def _verify_all(args) -> int:
    from .acceptance import CRITERIA, run_criterion

    out = _Out()
    wanted = set(args.only or [])
    passed = True
    for num, _, _ in CRITERIA:
        if wanted and num not in wanted:
            continue
        r = run_criterion(num)
        passed &= r.passed
        line = r.line()
        print(out.mark(r.passed, line[:6]) + line[6:], flush=True)
    return OK if passed else NEGATIVE


# --- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    common.add_argument("--threads", type=int, default=1, help="worker cap (all work runs on one thread)")

    p = argparse.ArgumentParser(prog="h3g", description="Spanning trees and orientations of 3-graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name: str, fn: Callable, help: str, file: bool = True, **kw) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help, **kw)
        if file:
            sp.add_argument("file", help="input file, or - for standard input")
        sp.set_defaults(func=fn)
        return sp

    g = cmd("gen", _gen, "print a named fixture", file=False)
    g.add_argument("family", help="complete, twin, interlaced, sts, table1, table2, table3, prop63, fig3, fig5, psts-k33")
    g.add_argument("params", nargs="*")
    cmd("count-trees", _count, "number of spanning trees")
    cmd("enumerate-trees", _enumerate, "list spanning trees with their signs")
    s = cmd("sign", _sign, "sign of one tree under the file's orientation")
    s.add_argument("triples", nargs="+", help="triples as 1,2,4 or label words such as 02d")
    cmd("census", _census, "positive and negative tree counts")
    pc = cmd("pfaffian-count", _pfaffian_count, "signed count from the Pfaffian of a principal minor")
    pc.add_argument("--k", type=int, default=1, help="deleted row and column")
    cmd("hr-count", _hr_count, "signed count from the expansion over matchings and apex choices")
    cmd("decide-3pfaffian", _decide3, "witness orientation or certificate")
    cmd("decide-graph-pfaffian", _decide_graph, "Pfaffian orientation of the file's edges")
    e = cmd("exists", _exists, "randomized tree existence test")
    e.add_argument("--trials", type=int, default=10)
    t = cmd("tutte-check", _tutte, "look for S with more than |S|-1 odd components")
    t.add_argument("--cap", type=int, default=15, help="largest vertex count scanned")
    cmd("blocks", _blocks, "blocks of the underlying graph")
    su = cmd("suspend", _suspend, "k-suspension of the file's edges")
    su.add_argument("k", type=int)
    cmd("decide-2susp", _decide2, "3-Pfaffianness of the 2-suspension of the file's edges")
    pr = sub.add_parser("prufer", parents=[common], help="code a tree of the complete 3-graph")
    pr.add_argument("action", choices=["encode", "decode"])
    pr.add_argument("file", nargs="?", help="tree file for encode")
    pr.add_argument("--n", type=int, help="tree on 2n+1 vertices (decode)")
    pr.add_argument("--gamma", default="", help="comma-separated sequence (decode)")
    pr.add_argument("--matching", default="", help="pairs such as 1-2,3-4 (decode)")
    pr.set_defaults(func=_prufer)
    ps = sub.add_parser("psts", parents=[common], help="partial Steiner triple systems")
    ps.add_argument("action", choices=["decide", "bijection"])
    ps.add_argument("file")
    ps.add_argument("--vertex", type=int, default=None, help="distinguished vertex (default: the last)")
    ps.set_defaults(func=_psts)
    cmd("minimal-check", _minimal, "does every deletion and contraction become 3-Pfaffian")
    va = cmd("verify-all", _verify_all, "run the acceptance suite", file=False, aliases=["verify-paper"])
    va.add_argument("--only", type=int, action="append", help="criterion number (repeatable)")
    return p


def _validate(args, parser: argparse.ArgumentParser) -> None:
    if args.command == "prufer":
        if args.action == "encode" and not args.file:
            parser.error("prufer encode needs a file")
        if args.action == "decode" and (args.n is None or not args.matching):
            parser.error("prufer decode needs --n and --matching")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be positive")


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        return args.func(args)
    except (H3GError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
