from __future__ import annotations

from hypothesis import HealthCheck, settings, strategies as st

from h3g.core import Multigraph, ThreeGraph, all_triples, build_multigraph
from h3g.signs import TripleOrientation

settings.register_profile("default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def three_graphs(draw, min_n: int = 3, max_n: int = 7, odd: bool = False, max_triples: int = 14) -> ThreeGraph:
    n = draw(st.integers(min_n, max_n))
    if odd and n % 2 == 0:
        n += 1 if n < max_n else -1
    pool = all_triples(n)
    chosen = draw(st.sets(st.sampled_from(pool), min_size=1, max_size=min(max_triples, len(pool))))
    return ThreeGraph(n, tuple(sorted(chosen)))


@st.composite
def orientations(draw, H: ThreeGraph) -> TripleOrientation:
    flips = draw(st.sets(st.sampled_from(H.triples))) if H.triples else set()
    return TripleOrientation(frozenset(flips))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Multigraph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return build_multigraph(n, sorted(edges))
