# chordal_cactus.py
"""
Maximum spanning cactus of a chordal graph.

Pipeline: triangles of G as a 3-uniform hypergraph -> maximum Berge-acyclic
selection of triangles -> their edges plus the edges D lying in no
triangle (a forest of cacti whose cycles are all triangles) -> join the
components with edges of G until connected.

The Berge-acyclic maximisation is exact branch and bound, limited by
`berge_max_hyperedges`; it sits behind max_berge_acyclic() so another
backend can replace it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from config_validation import limit
from graph_core import (
    BaseGraphError,
    Edge,
    EdgeSet,
    Graph,
    InfeasibleError,
    PreconditionError,
    SizeLimitError,
    SpanningSolution,
    canonical,
    is_connected,
)
from loghandler import get_logger
from oracle import Limits, max_spanning_in_class
from recognizers import cactus_cycles, is_chordal, is_forest_of_cacti

logger = get_logger("chordal")

Triangle = Tuple[int, int, int]
BergeCycle = List[Tuple[Triangle, int]]


class PipelineError(BaseGraphError):
    """A pipeline stage broke an invariant it is supposed to guarantee."""
    pass


@dataclass(frozen=True)
class TriangleHypergraph:
    host: Graph
    hyperedges: Tuple[Triangle, ...]

    def __len__(self) -> int:
        return len(self.hyperedges)


@dataclass(frozen=True)
class BergeSelection:
    hypergraph: TriangleHypergraph
    chosen: Tuple[Triangle, ...]

    def edges(self) -> List[Edge]:
        out = set()
        for a, b, c in self.chosen:
            out.update((canonical(a, b), canonical(b, c), canonical(a, c)))
        return sorted(out)


def _triangle_edges(t: Triangle) -> Tuple[Edge, Edge, Edge]:
    a, b, c = t
    return canonical(a, b), canonical(b, c), canonical(a, c)


# -------------------------
# Hypergraph construction
# -------------------------
def triangle_hypergraph(g: Graph) -> TriangleHypergraph:
    """All triangles, by intersecting the neighbourhoods of each edge's ends."""
    triangles = []
    for u, v in g.sorted_edges:
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                triangles.append((u, v, w))
    return TriangleHypergraph(g, tuple(triangles))


def non_triangle_edges(g: Graph) -> EdgeSet:
    return EdgeSet.of(g, (e for e in g.edges if not g.neighbors(e[0]) & g.neighbors(e[1])))


# -------------------------
# Berge acyclicity
# -------------------------
def _fork(uf: UnionFind) -> UnionFind:
    """Independent copy of uf; the branch and bound mutates one per child."""
    clone = UnionFind()
    for block in uf.to_sets():
        clone.union(*block)
    return clone


def _distinct_roots(uf: UnionFind, t: Triangle) -> int:
    return len({uf[v] for v in t})


def berge_acyclic_by_union_find(triangles: Sequence[Triangle]) -> bool:
    """Each triangle must join three distinct vertex components."""
    uf = UnionFind()
    for t in triangles:
        if _distinct_roots(uf, t) < 3:
            return False
        uf.union(*t)
    return True


def is_berge_acyclic(sel: BergeSelection) -> Tuple[bool, Optional[BergeCycle]]:
    """Forest test on the vertex/hyperedge incidence graph; a cycle there is a Berge-cycle."""
    incidence = nx.Graph()
    for i, t in enumerate(sel.chosen):
        for v in t:
            incidence.add_edge(("e", i), ("v", v))
    try:
        cycle_edges = nx.find_cycle(incidence)
    except nx.NetworkXNoCycle:
        return True, None
    nodes = [a for a, _ in cycle_edges]
    start = next(i for i, node in enumerate(nodes) if node[0] == "e")
    nodes = nodes[start:] + nodes[:start]
    witness: BergeCycle = []
    for i in range(0, len(nodes), 2):
        witness.append((sel.chosen[nodes[i][1]], nodes[i + 1][1]))
    return False, witness


def max_berge_acyclic(h: TriangleHypergraph, limits: Limits = None) -> BergeSelection:
    """Largest Berge-acyclic set of triangles, exact branch and bound.

    Every chosen triangle merges three vertex components into one, so from a
    state with c components at most (c - c_min) // 2 more can be chosen, where
    c_min is what merging every still-viable triangle would leave.
    """
    cap = limit(limits, "berge_max_hyperedges")
    if len(h) > cap:
        raise SizeLimitError("berge_max_hyperedges", cap, len(h))

    triangles = h.hyperedges
    vertices = sorted({v for t in triangles for v in t})
    best: List[Triangle] = []
    chosen: List[Triangle] = []
    nodes = 0

    def bound(uf: UnionFind, i: int) -> int:
        comps = len({uf[v] for v in vertices})
        merged = _fork(uf)
        for t in triangles[i:]:
            if _distinct_roots(uf, t) == 3:
                merged.union(*t)
        floor = len({merged[v] for v in vertices})
        return (comps - floor) // 2

    root_bound = bound(UnionFind(vertices), 0)

    def search(uf: UnionFind, i: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if len(best) == root_bound:
            return
        if len(chosen) + bound(uf, i) <= len(best):
            return
        if i == len(triangles):
            best = list(chosen)
            return
        if _distinct_roots(uf, triangles[i]) == 3:
            nxt = _fork(uf)
            nxt.union(*triangles[i])
            chosen.append(triangles[i])
            search(nxt, i + 1)
            chosen.pop()
        search(uf, i + 1)

    search(UnionFind(vertices), 0)
    logger.debug(f"[CHORDAL] Berge selection: {len(best)} of {len(triangles)} triangles, {nodes} nodes")
    return BergeSelection(h, tuple(best))


# -------------------------
# Realisation and joining
# -------------------------
def realize(g: Graph, sel: BergeSelection, d: EdgeSet) -> Graph:
    """Chosen triangles plus D; must be a forest of cacti whose cycles are triangles."""
    g_prime = g.spanning(set(sel.edges()) | set(d.members))
    cycles, rejection = cactus_cycles(g_prime)
    if rejection is not None:
        raise PipelineError(f"realized subgraph is not a forest of cacti: {rejection.witness}")
    long_cycles = [c for c in cycles if len(c) != 3]
    if long_cycles:
        raise PipelineError(f"realized subgraph has non-triangle cycles: {long_cycles}")
    return g_prime


def join_components(
    g: Graph,
    g_prime: Graph,
    order_seed: Optional[int] = None,
    connected: bool = True,
) -> SpanningSolution:
    """Add edges of g joining two components of g_prime until no such edge is left.

    Candidates are taken in canonical order, or shuffled by order_seed.
    """
    uf = UnionFind(g.vertices())
    for u, v in g_prime.edges:
        uf.union(u, v)
    candidates = sorted(g.edges - g_prime.edges)
    if order_seed is not None:
        random.Random(order_seed).shuffle(candidates)

    kept = set(g_prime.edges)
    joins = 0
    for u, v in candidates:
        if uf[u] != uf[v]:
            uf.union(u, v)
            kept.add((u, v))
            joins += 1

    label = "cactus" if connected else "forest-of-cacti"
    result = g.spanning(kept)
    if connected and not is_connected(result):
        raise PipelineError("no edge of the host joins the remaining components")
    if not is_forest_of_cacti(result):
        raise PipelineError("joined subgraph is not a forest of cacti")
    return SpanningSolution.of(g, kept, label, joins=joins)


def triangularize(g: Graph, sol: SpanningSolution) -> SpanningSolution:
    """Rewrite a spanning cactus of a chordal graph so every cycle is a triangle.

    Each step takes a cycle x1..xk (k > 3) with a chord x1xi of g, deletes
    x1x2 and adds x1xi; the edge count is unchanged.
    """
    chordal = is_chordal(g)
    if not chordal:
        raise PreconditionError(f"host graph is not chordal: hole {chordal.witness['cycle']}")
    if sol.host != g:
        raise PreconditionError("solution is not over this graph")
    kept = set(sol.kept.members)
    swaps = 0
    while True:
        cycles, rejection = cactus_cycles(g.spanning(kept))
        if rejection is not None:
            raise PreconditionError(f"solution is not a cactus: {rejection.witness['name']}")
        long_cycles = [c for c in cycles if len(c) > 3]
        if not long_cycles:
            break
        cycle = long_cycles[0]
        k = len(cycle)
        swap = None
        for p in range(k):
            for step in range(2, k - 1):
                q = (p + step) % k
                if g.has_edge(cycle[p], cycle[q]):
                    swap = (canonical(cycle[p], cycle[(p + 1) % k]), canonical(cycle[p], cycle[q]))
                    break
            if swap:
                break
        if swap is None:
            raise PipelineError(f"cycle {cycle} of a chordal host has no chord")
        kept.discard(swap[0])
        kept.add(swap[1])
        swaps += 1
    label = sol.label if sol.label in ("cactus", "forest-of-cacti") else "cactus"
    return SpanningSolution.of(g, kept, label, **{**sol.meta, "swaps": swaps})


# -------------------------
# Full pipeline
# -------------------------
def max_spanning_cactus_chordal(
    g: Graph,
    limits: Limits = None,
    per_component: bool = False,
    self_check: bool = False,
    order_seed: Optional[int] = None,
) -> SpanningSolution:
    chordal = is_chordal(g)
    if not chordal:
        raise PreconditionError(f"input is not chordal: hole {chordal.witness['cycle']}")
    connected = is_connected(g)
    if not connected and not per_component:
        raise InfeasibleError("input is disconnected; a spanning cactus needs a connected host")

    h = triangle_hypergraph(g)
    sel = max_berge_acyclic(h, limits)
    d = non_triangle_edges(g)
    g_prime = realize(g, sel, d)
    joined = join_components(g, g_prime, order_seed=order_seed, connected=connected)
    label = "cactus" if connected else "forest-of-cacti"
    solution = SpanningSolution(
        g,
        joined.kept,
        label,
        {
            "method": "chordal",
            "triangles": [list(t) for t in sel.chosen],
            "hyperedges": len(h),
            "joins": joined.meta["joins"],
        },
    )
    logger.info(f"[CHORDAL] kept {len(solution.kept)} of {g.m} edges ({len(sel.chosen)} triangles, {joined.meta['joins']} joins)")

    if self_check and g.m <= limit(limits, "cactus_max_edges"):
        best = max_spanning_in_class(g, label, limits)
        if len(best.kept) != len(solution.kept):
            raise PipelineError(f"pipeline kept {len(solution.kept)} edges, oracle optimum is {len(best.kept)}")
    return solution
