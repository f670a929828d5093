# generators.py
"""
Instance generators. Every family is in its class by construction, and all
randomness comes from the random.Random passed in (or built from a seed).
"""

from __future__ import annotations

import random
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Set

import networkx as nx

from graph_core import Edge, Graph, PreconditionError, canonical
from utils import make_rng


def _relabel(n: int, edges: Set[Edge], rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, ((perm[u], perm[v]) for u, v in edges))


def chordal_random(n: int, rng: random.Random) -> Graph:
    """Connected chordal graph: each new vertex attaches to part of an earlier clique.

    The earlier neighbours of every vertex form a clique, so reversed insertion
    order is a perfect elimination ordering.
    """
    if n <= 0:
        return Graph(0)
    cliques: List[List[int]] = [[0]]
    edges: Set[Edge] = set()
    for v in range(1, n):
        base = rng.choice(cliques)
        attach = rng.sample(base, rng.randint(1, len(base)))
        edges.update(canonical(u, v) for u in attach)
        cliques.append(sorted(attach) + [v])
    return _relabel(n, edges, rng)


def interval_random(n: int, rng: random.Random, span: float = 10.0) -> Graph:
    """Intersection graph of n random closed intervals."""
    intervals = []
    for _ in range(n):
        a = rng.uniform(0.0, span)
        intervals.append((a, a + rng.uniform(0.2, span / 3)))
    edges = {
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if intervals[i][0] <= intervals[j][1] and intervals[j][0] <= intervals[i][1]
    }
    return Graph.from_edges(n, edges)


def qt_from_rooted_forest(parent: Sequence[Optional[int]]) -> Graph:
    """Comparability graph of a rooted forest: every vertex joined to all its ancestors."""
    edges: Set[Edge] = set()
    for v in range(len(parent)):
        p = parent[v]
        while p is not None:
            edges.add(canonical(v, p))
            p = parent[p]
    return Graph(len(parent), frozenset(edges))


def qt_random(n: int, rng: random.Random) -> Graph:
    """Connected quasi-threshold graph from a random recursive rooted tree.

    Vertex 0 is the root, i.e. the universal vertex added last in the grammar.
    """
    if n <= 0:
        return Graph(0)
    parent: List[Optional[int]] = [None] + [rng.randrange(v) for v in range(1, n)]
    g = qt_from_rooted_forest(parent)
    return _relabel(n, set(g.edges), rng)


def connected_qt_graphs(n: int) -> Iterator[Graph]:
    """Every connected quasi-threshold graph on n vertices (up to isomorphism, with repeats).

    One per (free tree, root) pair.
    """
    if n <= 0:
        return
    if n == 1:
        yield Graph(1)
        return
    for tree in nx.nonisomorphic_trees(n):
        for root in sorted(tree.nodes()):
            parent: List[Optional[int]] = [None] * n
            for child, par in nx.bfs_predecessors(tree, root):
                parent[child] = par
            yield qt_from_rooted_forest(parent)


def bipartite_subcubic(n: int, rng: random.Random, p: float = 0.6) -> Graph:
    """Random bipartite graph with maximum degree 3, n a multiple of 3."""
    if n % 3 != 0:
        raise PreconditionError(f"bipartite-subcubic needs n divisible by 3, got {n}")
    if n == 0:
        return Graph(0)
    cut = rng.randint(1, max(1, n - 1))
    left, right = range(cut), range(cut, n)
    pairs = [(u, v) for u in left for v in right]
    rng.shuffle(pairs)
    deg = [0] * n
    edges: Set[Edge] = set()
    for u, v in pairs:
        if deg[u] < 3 and deg[v] < 3 and rng.random() < p:
            edges.add((u, v))
            deg[u] += 1
            deg[v] += 1
    return _relabel(n, edges, rng)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Random spanning tree plus independent extra edges."""
    edges: Set[Edge] = {canonical(v, rng.randrange(v)) for v in range(1, n)}
    edges.update((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p)
    return _relabel(n, edges, rng)


def labeled_catalog(n: int) -> List[Graph]:
    """All graphs on n <= 7 vertices, one per isomorphism class."""
    if not 0 <= n <= 7:
        raise PreconditionError(f"the graph catalog covers 0..7 vertices, got {n}")
    return [Graph.from_networkx(G) for G in nx.graph_atlas_g() if G.number_of_nodes() == n]


def catalog_upto(n_max: int, connected: bool = False) -> Iterator[Graph]:
    for n in range(1, min(n_max, 7) + 1):
        for g in labeled_catalog(n):
            if not connected or nx.is_connected(g.to_networkx()):
                yield g


GENERATORS: Dict[str, Dict[str, object]] = {
    "chordal-random": {"build": chordal_random, "certify": "chordal", "description": "random clique-attachment chordal graph"},
    "qt-random": {"build": qt_random, "certify": "quasi-threshold", "description": "random rooted-tree quasi-threshold graph"},
    "bipartite-subcubic": {"build": bipartite_subcubic, "certify": "bipartite", "description": "degree-capped random bipartite graph"},
    "interval-random": {"build": interval_random, "certify": "chordal", "description": "random interval graph"},
    "labeled-catalog": {"build": None, "certify": None, "description": "every graph on n <= 7 vertices (graph6 stream)"},
}


def generate(family: str, n: int, seed: int) -> List[Graph]:
    """Graphs of one family for the CLI; random families give one graph per seed."""
    try:
        entry = GENERATORS[family]
    except KeyError:
        raise PreconditionError(f"unknown generator family {family!r}; known: {', '.join(GENERATORS)}")
    if family == "labeled-catalog":
        return labeled_catalog(n)
    build: Callable[[int, random.Random], Graph] = entry["build"]  # type: ignore[assignment]
    return [build(n, make_rng(seed))]
