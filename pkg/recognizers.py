# recognizers.py
"""
Membership tests, with certificates, for every graph class the toolkit
deletes into or probes with.

Each recognizer takes a Graph and returns a ClassCertificate: an accepting
witness that re-checks in polynomial time, or a rejecting obstruction
embedded in the input. verify_certificate() re-checks either kind.

Tie-breaking is always smallest vertex first, so certificates are
reproducible.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence, Set, Tuple

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from certificates import ClassCertificate, accept, canonical_cycle, reject, with_label
from graph_core import Graph, PreconditionError, SizeLimitError, canonical, connected_components
from loghandler import get_logger

logger = get_logger("recognizers")

DEFAULT_EVEN_HOLE_MAX_N = 16
DEFAULT_PATH_POWER_MAX_N = 10

# Forbidden patterns for proper interval graphs beyond claw and holes.
NET = nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
TENT = nx.Graph([(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (2, 5), (0, 5)])


# -------------------------
# Small helpers
# -------------------------
def _bfs_path(g: Graph, source: int, target: int, blocked: Set[int]) -> Optional[List[int]]:
    """Shortest source-target path avoiding blocked vertices (ties: smallest id)."""
    parent = {source: source}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u == target:
            path = [u]
            while path[-1] != source:
                path.append(parent[path[-1]])
            return path[::-1]
        for w in sorted(g.neighbors(u)):
            if w not in parent and w not in blocked:
                parent[w] = u
                queue.append(w)
    return None


def _find_cycle(g: Graph) -> Optional[List[int]]:
    """Any cycle of g as a vertex list, or None for a forest."""
    try:
        edges = nx.find_cycle(g.to_networkx())
    except nx.NetworkXNoCycle:
        return None
    return canonical_cycle([u for u, _ in edges])


def _chords(g: Graph, cycle: Sequence[int]) -> List[Tuple[int, int]]:
    """Position pairs (i, j), i < j, of cycle vertices joined by a chord."""
    k = len(cycle)
    found = []
    for i in range(k):
        for j in range(i + 2, k):
            if i == 0 and j == k - 1:
                continue
            if g.has_edge(cycle[i], cycle[j]):
                found.append((i, j))
    return found


def _is_cycle_in(g: Graph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    return all(g.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle)))


def _component_of(g: Graph, vertices: Set[int], start: int) -> Set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w in vertices and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _p4_or_c4(g: Graph, vertices: Set[int]) -> Optional[Tuple[str, List[int]]]:
    """Induced P4 (a-b-c-d) or C4 inside g[vertices], scanning middle edges bc."""
    for b, c in g.sorted_edges:
        if b not in vertices or c not in vertices:
            continue
        for x, y in ((b, c), (c, b)):
            left = sorted(a for a in g.neighbors(x) if a in vertices and a != y and not g.has_edge(a, y))
            right = sorted(d for d in g.neighbors(y) if d in vertices and d != x and not g.has_edge(d, x))
            for a in left:
                for d in right:
                    if a == d:
                        continue
                    if g.has_edge(a, d):
                        return "C4", [a, x, y, d]
                    return "P4", [a, x, y, d]
    return None


# -------------------------
# Bipartite
# -------------------------
def _induced_odd_cycle(g: Graph, cycle: List[int]) -> List[int]:
    """Shrink an odd cycle along chords until it is induced."""
    while True:
        chords = _chords(g, cycle)
        if not chords:
            return canonical_cycle(cycle)
        i, j = chords[0]
        inner = cycle[i:j + 1]
        outer = cycle[j:] + cycle[:i + 1]
        cycle = inner if len(inner) % 2 == 1 else outer


def is_bipartite(g: Graph) -> ClassCertificate:
    color = [-1] * g.n
    parent = list(range(g.n))
    depth = [0] * g.n
    for root in g.vertices():
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in sorted(g.neighbors(u)):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)

    for u, w in g.sorted_edges:
        if color[u] != color[w]:
            continue
        left, right = [u], [w]
        while left[-1] != right[-1]:
            if depth[left[-1]] >= depth[right[-1]]:
                left.append(parent[left[-1]])
            else:
                right.append(parent[right[-1]])
        cycle = _induced_odd_cycle(g, left + right[-2::-1])
        return reject("bipartite", "odd-cycle", cycle, cycle=cycle)

    sides = [[v for v in g.vertices() if color[v] == 0], [v for v in g.vertices() if color[v] == 1]]
    return accept("bipartite", "bipartition", sides=sides)


# -------------------------
# Chordal
# -------------------------
def perfect_elimination_order(g: Graph) -> List[int]:
    """Reverse maximum-cardinality-search order (a PEO iff g is chordal)."""
    weight = [0] * g.n
    numbered = [False] * g.n
    visit: List[int] = []
    for _ in range(g.n):
        best = -1
        for v in g.vertices():
            if not numbered[v] and (best == -1 or weight[v] > weight[best]):
                best = v
        numbered[best] = True
        visit.append(best)
        for w in g.neighbors(best):
            if not numbered[w]:
                weight[w] += 1
    return visit[::-1]


def _is_peo(g: Graph, order: Sequence[int]) -> bool:
    if sorted(order) != list(g.vertices()):
        return False
    position = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [w for w in g.neighbors(v) if position[w] > position[v]]
        if any(not g.has_edge(a, b) for a, b in combinations(later, 2)):
            return False
    return True


def find_hole(g: Graph) -> Optional[List[int]]:
    """An induced cycle of length >= 4, or None when g is chordal."""
    for u in g.vertices():
        nbrs = sorted(g.neighbors(u))
        for a, b in combinations(nbrs, 2):
            if g.has_edge(a, b):
                continue
            blocked = ({u} | set(nbrs)) - {a, b}
            path = _bfs_path(g, a, b, blocked)
            if path is not None:
                return canonical_cycle([u] + path)
    return None


def is_chordal(g: Graph) -> ClassCertificate:
    order = perfect_elimination_order(g)
    if _is_peo(g, order):
        return accept("chordal", "peo", order=order)
    hole = find_hole(g)
    if hole is None:
        # MCS and the hole search disagree only on a bug.
        raise RuntimeError("chordality check inconsistent: no PEO and no hole")
    return reject("chordal", "hole", hole, cycle=hole)


# -------------------------
# Quasi-threshold
# -------------------------
def peel_forest(g: Graph, vertices: Optional[Set[int]] = None) -> Tuple[List[Dict[str, Any]], Optional[Set[int]]]:
    """Universal-vertex peeling of g[vertices].

    Returns (forest, None) on success, or ([], residual) where residual is a
    connected vertex set with no universal vertex.
    """
    remaining = set(g.vertices()) if vertices is None else set(vertices)
    forest: List[Dict[str, Any]] = []
    while remaining:
        comp = _component_of(g, remaining, min(remaining))
        remaining -= comp
        residual = set(comp)
        peel: List[int] = []
        while len(residual) > 1:
            universal = [v for v in sorted(residual) if len(g.neighbors(v) & residual) == len(residual) - 1]
            if not universal:
                return [], residual
            peel.append(universal[0])
            residual.discard(universal[0])
            if _component_of(g, residual, min(residual)) != residual:
                break
        children: List[Dict[str, Any]] = []
        if peel:
            children, failed = peel_forest(g, residual)
            if failed is not None:
                return [], failed
        forest.append({"vertices": sorted(comp), "peel": peel, "children": children})
    return forest, None


def is_quasi_threshold(g: Graph) -> ClassCertificate:
    forest, failed = peel_forest(g)
    if failed is None:
        return accept("quasi-threshold", "peel", forest=forest)
    found = _p4_or_c4(g, failed)
    if found is None:
        raise RuntimeError("quasi-threshold check inconsistent: no universal vertex and no P4/C4")
    name, vertices = found
    return reject("quasi-threshold", name, vertices, path=vertices if name == "P4" else None,
                  cycle=vertices if name == "C4" else None)


# -------------------------
# Cactus family
# -------------------------
def _order_cycle_block(edges: Sequence[Tuple[int, int]]) -> List[int]:
    adj: Dict[int, List[int]] = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    cycle = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in adj[cur] if w != prev) if prev is None else next(w for w in adj[cur] if w != prev)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    return canonical_cycle(cycle)


def _shared_edge_witness(block: nx.Graph) -> Tuple[Tuple[int, int], List[int], List[int]]:
    first: Dict[Tuple[int, int], List[int]] = {}
    for cyc in nx.simple_cycles(block):
        if len(cyc) < 3:
            continue
        cyc = canonical_cycle(cyc)
        for i in range(len(cyc)):
            e = canonical(cyc[i], cyc[(i + 1) % len(cyc)])
            if e in first and first[e] != cyc:
                return e, first[e], cyc
            first.setdefault(e, cyc)
    raise RuntimeError("block with more edges than vertices but no shared cycle edge")


def cactus_cycles(g: Graph) -> Tuple[Optional[List[List[int]]], Optional[ClassCertificate]]:
    """Cycles of a forest of cacti, or (None, rejection) when some edge lies on two cycles."""
    G = g.to_networkx()
    cycles: List[List[int]] = []
    for block_edges in nx.biconnected_component_edges(G):
        block_edges = [canonical(u, v) for u, v in block_edges]
        if len(block_edges) == 1:
            continue
        block_vertices = {v for e in block_edges for v in e}
        if len(block_edges) == len(block_vertices):
            cycles.append(_order_cycle_block(block_edges))
            continue
        edge, c1, c2 = _shared_edge_witness(nx.Graph(block_edges))
        return None, reject("forest-of-cacti", "shared-edge", set(c1) | set(c2), induced=False,
                            edge=list(edge), cycles=[c1, c2])
    return sorted(cycles), None


def _cycles_witness(g: Graph, cycles: List[List[int]]) -> Dict[str, Any]:
    on_cycle = {canonical(c[i], c[(i + 1) % len(c)]) for c in cycles for i in range(len(c))}
    counts = [[u, v, 1 if (u, v) in on_cycle else 0] for u, v in g.sorted_edges]
    return {"cycles": cycles, "edge_cycle_count": counts}


def is_forest_of_cacti(g: Graph) -> ClassCertificate:
    cycles, rejection = cactus_cycles(g)
    if rejection is not None:
        return rejection
    return accept("forest-of-cacti", "cycles", **_cycles_witness(g, cycles))


def _disconnected(label: str, g: Graph) -> Optional[ClassCertificate]:
    blocks = connected_components(g)
    if len(blocks) > 1:
        return reject(label, "disconnected", [blocks[0][0], blocks[1][0]], induced=False)
    return None


def is_cactus(g: Graph) -> ClassCertificate:
    split = _disconnected("cactus", g)
    if split is not None:
        return split
    return with_label(is_forest_of_cacti(g), "cactus")


# -------------------------
# Forests: tree, caterpillar, constellation, linear forest
# -------------------------
def _cycle_rejection(label: str, g: Graph) -> Optional[ClassCertificate]:
    cycle = _find_cycle(g)
    if cycle is not None:
        return reject(label, "cycle", cycle, induced=False, cycle=cycle)
    return None


def is_forest(g: Graph) -> ClassCertificate:
    return _cycle_rejection("forest", g) or accept("forest", "none")


def is_tree(g: Graph) -> ClassCertificate:
    if g.n == 0:
        return reject("tree", "empty", [], induced=False)
    return _disconnected("tree", g) or _cycle_rejection("tree", g) or accept("tree", "none")


def _walk_path(g: Graph, vertices: Set[int]) -> List[int]:
    """Order the vertices of a path subgraph from its smaller endpoint."""
    if len(vertices) == 1:
        return sorted(vertices)
    ends = sorted(v for v in vertices if len(g.neighbors(v) & vertices) <= 1)
    path = [ends[0]]
    seen = {ends[0]}
    while len(path) < len(vertices):
        nxt = min(w for w in g.neighbors(path[-1]) if w in vertices and w not in seen)
        path.append(nxt)
        seen.add(nxt)
    return path


def caterpillar_spine(g: Graph) -> Optional[List[int]]:
    """Spine of a tree, or None if removing leaves does not leave a path."""
    if g.n <= 2:
        return [0] if g.n else []
    inner = {v for v in g.vertices() if g.degree(v) >= 2}
    if any(len(g.neighbors(v) & inner) > 2 for v in inner):
        return None
    return _walk_path(g, inner)


def is_caterpillar(g: Graph) -> ClassCertificate:
    not_tree = is_tree(g)
    if not not_tree:
        return with_label(not_tree, "caterpillar")
    spine = caterpillar_spine(g)
    if spine is not None:
        return accept("caterpillar", "spine", spine=spine)
    inner = {v for v in g.vertices() if g.degree(v) >= 2}
    center = min(v for v in inner if len(g.neighbors(v) & inner) > 2)
    legs = []
    for a in sorted(g.neighbors(center) & inner)[:3]:
        b = min(w for w in g.neighbors(a) if w != center)
        legs.append([a, b])
    vertices = [center] + [v for leg in legs for v in leg]
    return reject("caterpillar", "spider", vertices, center=center, legs=legs)


def is_constellation(g: Graph) -> ClassCertificate:
    cyc = _cycle_rejection("constellation", g)
    if cyc is not None:
        return cyc
    centers: List[int] = []
    stars: List[List[int]] = []
    for comp in connected_components(g):
        if len(comp) <= 2:
            center = comp[0]
        else:
            hubs = [v for v in comp if g.degree(v) == len(comp) - 1]
            if not hubs:
                for b, c in g.sorted_edges:
                    if b in comp and g.degree(b) >= 2 and g.degree(c) >= 2:
                        a = min(w for w in g.neighbors(b) if w != c)
                        d = min(w for w in g.neighbors(c) if w != b)
                        return reject("constellation", "P4", [a, b, c, d], path=[a, b, c, d])
                raise RuntimeError("non-star tree component without an inner edge")
            center = hubs[0]
        centers.append(center)
        stars.append([center] + [v for v in comp if v != center])
    return accept("constellation", "stars", centers=centers, stars=stars)


def is_linear_forest(g: Graph) -> ClassCertificate:
    for v in g.vertices():
        if g.degree(v) > 2:
            nbrs = sorted(g.neighbors(v))[:3]
            return reject("linear-forest", "degree", [v] + nbrs, induced=False, center=v, bound=2)
    cyc = _cycle_rejection("linear-forest", g)
    if cyc is not None:
        return cyc
    paths = [_walk_path(g, set(comp)) for comp in connected_components(g)]
    return accept("linear-forest", "paths", paths=paths)


# -------------------------
# Local forbidden-subgraph classes
# -------------------------
def find_claw(g: Graph) -> Optional[List[int]]:
    for v in g.vertices():
        for a, b, c in combinations(sorted(g.neighbors(v)), 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return [v, a, b, c]
    return None


def is_claw_free(g: Graph) -> ClassCertificate:
    claw = find_claw(g)
    if claw is None:
        return accept("claw-free", "none")
    return reject("claw-free", "claw", claw, center=claw[0])


def is_subcubic(g: Graph) -> ClassCertificate:
    for v in g.vertices():
        if g.degree(v) > 3:
            nbrs = sorted(g.neighbors(v))[:4]
            return reject("subcubic", "degree", [v] + nbrs, induced=False, center=v, bound=3)
    return accept("subcubic", "max-degree", value=g.max_degree())


def is_even_hole_free(g: Graph, max_n: int = DEFAULT_EVEN_HOLE_MAX_N) -> ClassCertificate:
    """Exhaustive chordless-cycle enumeration; desk scale only."""
    if g.n > max_n:
        raise SizeLimitError("even_hole_max_n", max_n, g.n)
    for cyc in nx.chordless_cycles(g.to_networkx()):
        if len(cyc) >= 4 and len(cyc) % 2 == 0:
            hole = canonical_cycle(cyc)
            return reject("even-hole-free", "even-hole", hole, cycle=hole)
    return accept("even-hole-free", "none")


def _induced_pattern(g: Graph, pattern: nx.Graph) -> Optional[List[int]]:
    matcher = GraphMatcher(g.to_networkx(), pattern)
    for mapping in matcher.subgraph_isomorphisms_iter():
        return sorted(mapping)
    return None


def is_claw_free_chordal(g: Graph) -> ClassCertificate:
    chordal = is_chordal(g)
    if not chordal:
        return with_label(chordal, "claw-free-chordal")
    claw = is_claw_free(g)
    if not claw:
        return with_label(claw, "claw-free-chordal")
    return with_label(chordal, "claw-free-chordal")


def is_proper_interval(g: Graph) -> ClassCertificate:
    """Chordal, claw-free, net-free and tent-free (desk-scale pattern search)."""
    base = is_claw_free_chordal(g)
    if not base:
        return with_label(base, "proper-interval")
    for name, pattern in (("net", NET), ("tent", TENT)):
        found = _induced_pattern(g, pattern)
        if found is not None:
            return reject("proper-interval", name, found)
    return with_label(base, "proper-interval")


def _power_order(g: Graph, k: int) -> Optional[List[int]]:
    order: List[int] = []
    placed: Set[int] = set()

    def extend() -> bool:
        if len(order) == g.n:
            return True
        i = len(order)
        recent = set(order[max(0, i - k):])
        older = placed - recent
        candidates = sorted(g.neighbors(order[-1]) - placed) if order else list(g.vertices())
        for v in candidates:
            nbrs = g.neighbors(v)
            if recent <= nbrs and not (nbrs & older):
                order.append(v)
                placed.add(v)
                if extend():
                    return True
                order.pop()
                placed.discard(v)
        return False

    return order if extend() else None


def is_path_power(g: Graph, max_n: int = DEFAULT_PATH_POWER_MAX_N) -> ClassCertificate:
    """g is P_n^k for some k >= 1: a vertex order with edges exactly at distance <= k."""
    if g.n > max_n:
        raise SizeLimitError("path_power_max_n", max_n, g.n)
    if g.n <= 1:
        return accept("path-power", "ordering", order=list(g.vertices()), k=1)
    ks = [k for k in range(1, g.n) if k * g.n - k * (k + 1) // 2 == g.m]
    if not ks:
        return reject("path-power", "edge-count", [], induced=False, m=g.m)
    order = _power_order(g, ks[0])
    if order is None:
        return reject("path-power", "no-ordering", [], induced=False, k=ks[0])
    return accept("path-power", "ordering", order=order, k=ks[0])


# -------------------------
# Dispatch
# -------------------------
RECOGNIZERS: Dict[str, Callable[..., ClassCertificate]] = {
    "bipartite": is_bipartite,
    "chordal": is_chordal,
    "quasi-threshold": is_quasi_threshold,
    "cactus": is_cactus,
    "forest-of-cacti": is_forest_of_cacti,
    "tree": is_tree,
    "forest": is_forest,
    "caterpillar": is_caterpillar,
    "constellation": is_constellation,
    "linear-forest": is_linear_forest,
    "claw-free": is_claw_free,
    "even-hole-free": is_even_hole_free,
    "subcubic": is_subcubic,
    "claw-free-chordal": is_claw_free_chordal,
    "proper-interval": is_proper_interval,
    "path-power": is_path_power,
}

# Labels whose recognizer takes a desk-scale size limit, and the limit's name.
SIZE_LIMITED = {"even-hole-free": "even_hole_max_n", "path-power": "path_power_max_n"}


def in_target_class(g: Graph, label: str, limits: Optional[Dict[str, int]] = None) -> ClassCertificate:
    try:
        recognizer = RECOGNIZERS[label]
    except KeyError:
        raise PreconditionError(f"unknown class label {label!r}; known: {', '.join(sorted(RECOGNIZERS))}")
    if label in SIZE_LIMITED and limits and SIZE_LIMITED[label] in limits:
        cert = recognizer(g, max_n=limits[SIZE_LIMITED[label]])
    else:
        cert = recognizer(g)
    logger.debug(f"[RECOGNIZE] {label}: {'accept' if cert.verdict else 'reject'} ({cert.kind})")
    return cert


# -------------------------
# Certificate re-verification
# -------------------------
def _verify_obstruction(g: Graph, w: Dict[str, Any]) -> bool:
    name = w.get("name")
    vs = list(w.get("vertices", []))
    if any(not 0 <= v < g.n for v in vs):
        return False
    if name in ("odd-cycle", "hole", "even-hole", "C4", "cycle"):
        cycle = w.get("cycle") or []
        if not _is_cycle_in(g, cycle) or sorted(cycle) != sorted(vs):
            return False
        if w.get("induced") and _chords(g, cycle):
            return False
        if name == "odd-cycle":
            return len(cycle) % 2 == 1
        if name == "hole":
            return len(cycle) >= 4
        if name in ("even-hole", "C4"):
            return len(cycle) % 2 == 0 and len(cycle) >= 4 and (name != "C4" or len(cycle) == 4)
        return True
    if name == "P4":
        a, b, c, d = w.get("path") or []
        edges = {canonical(x, y) for x, y in combinations((a, b, c, d), 2) if g.has_edge(x, y)}
        return edges == {canonical(a, b), canonical(b, c), canonical(c, d)}
    if name == "claw":
        center = w["center"]
        leaves = [v for v in vs if v != center]
        return (len(leaves) == 3 and all(g.has_edge(center, v) for v in leaves)
                and not any(g.has_edge(a, b) for a, b in combinations(leaves, 2)))
    if name == "spider":
        center = w["center"]
        legs = w["legs"]
        flat = [center] + [v for leg in legs for v in leg]
        if len(legs) != 3 or len(set(flat)) != 7:
            return False
        return all(g.has_edge(center, a) and g.has_edge(a, b) for a, b in legs)
    if name == "shared-edge":
        u, v = w["edge"]
        c1, c2 = w["cycles"]

        def has(cycle: Sequence[int]) -> bool:
            return any(canonical(cycle[i], cycle[(i + 1) % len(cycle)]) == canonical(u, v) for i in range(len(cycle)))

        return canonical_cycle(c1) != canonical_cycle(c2) and _is_cycle_in(g, c1) and _is_cycle_in(g, c2) and has(c1) and has(c2)
    if name == "disconnected":
        a, b = vs
        return b not in _component_of(g, set(g.vertices()), a)
    if name == "degree":
        center = w["center"]
        return g.degree(center) > w["bound"] and all(g.has_edge(center, v) for v in vs if v != center)
    if name in ("net", "tent"):
        sub, _ = g.induced_subgraph(vs)
        return nx.is_isomorphic(sub.to_networkx(), NET if name == "net" else TENT)
    if name == "empty":
        return g.n == 0
    return False


def verify_certificate(g: Graph, cert: ClassCertificate) -> bool:
    """Re-check a certificate against g without trusting its producer."""
    w = cert.witness
    kind = cert.kind
    if not cert.verdict:
        if kind != "obstruction":
            return False
        if w.get("name") in ("edge-count", "no-ordering"):
            return not in_target_class(g, cert.label).verdict
        return _verify_obstruction(g, w)

    if kind == "bipartition":
        x, y = (set(s) for s in w["sides"])
        return not (x & y) and x | y == set(g.vertices()) and not any(
            (u in x) == (v in x) for u, v in g.edges)
    if kind == "peo":
        if not _is_peo(g, w["order"]):
            return False
        return cert.label == "chordal" or in_target_class(g, cert.label).verdict
    if kind == "peel":
        return _verify_peel(g, w["forest"], set(g.vertices()))
    if kind == "cycles":
        cycles = w["cycles"]
        if not all(_is_cycle_in(g, c) for c in cycles):
            return False
        used = [canonical(c[i], c[(i + 1) % len(c)]) for c in cycles for i in range(len(c))]
        if len(used) != len(set(used)):
            return False
        components = len(connected_components(g))
        if len(cycles) != g.m - g.n + components:
            return False
        if cert.label == "cactus" and components > 1:
            return False
        return cactus_cycles(g)[1] is None
    if kind == "spine":
        spine = w["spine"]
        if not is_tree(g).verdict or len(set(spine)) != len(spine):
            return False
        if any(not g.has_edge(a, b) for a, b in zip(spine, spine[1:])):
            return False
        on_spine = set(spine)
        return all(v in on_spine or g.neighbors(v) & on_spine for v in g.vertices())
    if kind == "stars":
        centers = set(w["centers"])
        if any((u in centers) == (v in centers) for u, v in g.edges):
            return False
        return all(v in centers or g.degree(v) == 1 for v in g.vertices())
    if kind == "paths":
        paths = w["paths"]
        flat = [v for p in paths for v in p]
        if sorted(flat) != list(g.vertices()):
            return False
        path_edges = {canonical(a, b) for p in paths for a, b in zip(p, p[1:])}
        return path_edges == set(g.edges)
    if kind == "ordering":
        order, k = w["order"], w["k"]
        if sorted(order) != list(g.vertices()):
            return False
        expected = {canonical(order[i], order[j]) for i in range(len(order)) for j in range(i + 1, min(len(order), i + k + 1))}
        return expected == set(g.edges)
    if kind in ("none", "max-degree"):
        return in_target_class(g, cert.label).verdict
    return False


def _verify_peel(g: Graph, forest: List[Dict[str, Any]], vertices: Set[int]) -> bool:
    covered: Set[int] = set()
    for node in forest:
        comp = set(node["vertices"])
        if _component_of(g, vertices, min(comp)) != comp:
            return False
        residual = set(comp)
        for u in node["peel"]:
            if u not in residual or len(g.neighbors(u) & residual) != len(residual) - 1:
                return False
            residual.discard(u)
        child_vertices = {v for child in node["children"] for v in child["vertices"]}
        if node["children"]:
            if child_vertices != residual or not _verify_peel(g, node["children"], residual):
                return False
        elif len(residual) > 1:
            return False
        covered |= comp
    return covered == vertices
