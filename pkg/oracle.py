# oracle.py
"""
Exact exponential solvers used as ground truth.

Every polynomial algorithm and every reduction in the toolkit is checked
against these at desk scale. Size limits come from the `limits` mapping
(see config_validation.DEFAULT_LIMITS); exceeding one raises
SizeLimitError rather than silently running for hours.

max_matching is the one polynomial routine here (blossom, via networkx).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Callable, Dict, List, Mapping, Optional, Sequence, Set, Tuple, Union

import networkx as nx
from networkx.utils import UnionFind

from config_validation import limit
from graph_core import (
    Edge,
    EdgeSet,
    Graph,
    InfeasibleError,
    SizeLimitError,
    SpanningSolution,
    canonical,
    is_connected,
)
from loghandler import get_logger
from recognizers import in_target_class

logger = get_logger("oracle")

Predicate = Callable[[Graph], bool]
Limits = Optional[Mapping[str, int]]

# Labels whose spanning members must be connected.
CONNECTED_LABELS = frozenset({"cactus", "tree", "caterpillar"})

# Labels closed under edge deletion (after dropping connectivity), searched
# with incremental feasibility pruning.
PRUNED_LABELS = frozenset({
    "cactus", "forest-of-cacti", "tree", "forest", "caterpillar", "constellation", "linear-forest",
})


@dataclass(frozen=True)
class BudgetedAnswer:
    """An optimum value with the witness that achieves it."""
    problem: str
    optimum: Optional[int]
    witness: Any = None
    meta: Dict[str, Any] = field(default_factory=dict, compare=False)

    def to_dict(self) -> Dict[str, Any]:
        data = {"problem": self.problem, "optimum": self.optimum, "witness": self.witness}
        if self.meta:
            data["meta"] = self.meta
        return data


# -------------------------
# Witness checks
# -------------------------
def is_hamiltonian_path(g: Graph, path: Sequence[int]) -> bool:
    if sorted(path) != list(g.vertices()):
        return False
    return all(g.has_edge(a, b) for a, b in zip(path, path[1:]))


def is_dominating_set(g: Graph, d: Sequence[int]) -> bool:
    chosen = set(d)
    if any(not 0 <= v < g.n for v in chosen):
        return False
    return all(v in chosen or g.neighbors(v) & chosen for v in g.vertices())


def undominated(g: Graph, d: Sequence[int]) -> List[int]:
    chosen = set(d)
    return [v for v in g.vertices() if v not in chosen and not g.neighbors(v) & chosen]


def spans_p3(g: Graph, block: Sequence[int], induced: bool = False) -> bool:
    """The three vertices carry a spanning P3 (exactly P3 when induced)."""
    if len(block) != 3 or len(set(block)) != 3:
        return False
    a, b, c = block
    edges = g.has_edge(a, b) + g.has_edge(b, c) + g.has_edge(a, c)
    return edges == 2 if induced else edges >= 2


def is_p3_partition(g: Graph, blocks: Sequence[Sequence[int]], induced: bool = False) -> bool:
    flat = [v for block in blocks for v in block]
    if sorted(flat) != list(g.vertices()):
        return False
    return all(spans_p3(g, block, induced) for block in blocks)


def is_matching(g: Graph, edges: Sequence[Edge]) -> bool:
    ends = [v for e in edges for v in e]
    return len(ends) == len(set(ends)) and all(g.has_edge(u, v) for u, v in edges)


# -------------------------
# Hamiltonian path
# -------------------------
def hamiltonian_path(g: Graph, limits: Limits = None) -> Optional[List[int]]:
    """Bitmask DP over vertex subsets; reach[mask] holds the possible path ends."""
    max_n = limit(limits, "hampath_max_n")
    if g.n > max_n:
        raise SizeLimitError("hampath_max_n", max_n, g.n)
    if g.n == 0:
        return []

    adj = g.adj_mask
    full = (1 << g.n) - 1
    reach = [0] * (1 << g.n)
    for v in g.vertices():
        reach[1 << v] = 1 << v
    for mask in range(1, full + 1):
        ends = reach[mask]
        if not ends:
            continue
        while ends:
            low = ends & -ends
            v = low.bit_length() - 1
            ends ^= low
            ext = adj[v] & ~mask
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                reach[mask | wbit] |= wbit

    if not reach[full]:
        return None

    # Walk back from the smallest possible end.
    ends = reach[full]
    v = (ends & -ends).bit_length() - 1
    path = [v]
    mask = full
    while mask != 1 << v:
        mask ^= 1 << v
        options = reach[mask] & adj[v]
        v = (options & -options).bit_length() - 1
        path.append(v)
    return path


# -------------------------
# Minimum dominating set
# -------------------------
def min_dominating_set(g: Graph, limits: Limits = None) -> List[int]:
    """Branch on the undominated vertex with the fewest dominator choices."""
    max_n = limit(limits, "domset_max_n")
    if g.n > max_n:
        raise SizeLimitError("domset_max_n", max_n, g.n)
    if g.n == 0:
        return []

    closed = [g.adj_mask[v] | (1 << v) for v in g.vertices()]
    full = (1 << g.n) - 1
    span = max(bin(c).count("1") for c in closed)

    best: List[int] = _greedy_dominating_set(g, closed)

    def search(dominated: int, chosen: List[int]) -> None:
        nonlocal best
        if dominated == full:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        missing = bin(full & ~dominated).count("1")
        if len(chosen) + math.ceil(missing / span) >= len(best):
            return
        target = -1
        options = 0
        for u in g.vertices():
            if dominated >> u & 1:
                continue
            cnt = bin(closed[u]).count("1")
            if target == -1 or cnt < options:
                target, options = u, cnt
        cands = [w for w in g.vertices() if closed[target] >> w & 1]
        cands.sort(key=lambda w: (-bin(closed[w] & ~dominated).count("1"), w))
        for w in cands:
            chosen.append(w)
            search(dominated | closed[w], chosen)
            chosen.pop()

    search(0, [])
    return sorted(best)


def _greedy_dominating_set(g: Graph, closed: List[int]) -> List[int]:
    full = (1 << g.n) - 1
    dominated = 0
    chosen = []
    while dominated != full:
        w = max(g.vertices(), key=lambda v: (bin(closed[v] & ~dominated).count("1"), -v))
        chosen.append(w)
        dominated |= closed[w]
    return chosen


# -------------------------
# Partition into P3
# -------------------------
def partition_into_p3(g: Graph, induced: bool = False, limits: Limits = None) -> Optional[List[List[int]]]:
    """Vertex partition into 3-sets each carrying a P3, or None."""
    if g.n % 3 != 0:
        return None
    max_n = limit(limits, "pip3_max_n")
    if g.n > max_n:
        raise SizeLimitError("pip3_max_n", max_n, g.n)

    covered: Set[int] = set()
    blocks: List[List[int]] = []

    def search() -> bool:
        if len(covered) == g.n:
            return True
        u = min(v for v in g.vertices() if v not in covered)
        near = set(g.neighbors(u))
        for w in g.neighbors(u):
            near |= g.neighbors(w)
        near = sorted(v for v in near if v != u and v not in covered)
        for a, b in combinations(near, 2):
            if not spans_p3(g, (u, a, b), induced):
                continue
            covered.update((u, a, b))
            blocks.append([u, a, b])
            if search():
                return True
            blocks.pop()
            covered.difference_update((u, a, b))
        return False

    return blocks if search() else None


# -------------------------
# Maximum spanning subgraph in a class
# -------------------------
def _edge_cap(label: str, n: int, m: int) -> int:
    if n == 0:
        return 0
    if label in ("cactus", "forest-of-cacti"):
        return min(m, n - 1 + (n - 1) // 2)
    if label in PRUNED_LABELS:
        return min(m, n - 1)
    return m


class _PrunedSearch:
    """Include-first branch and bound over edges in canonical order.

    The kept edge set stays inside the label's edge-deletion-closed relaxation
    at every node, so only connectivity remains to check at the leaves.
    """

    def __init__(self, g: Graph, label: str):
        self.g = g
        self.label = label
        self.edges = g.sorted_edges
        self.adj: List[Set[int]] = [set() for _ in range(g.n)]
        self.cycle_edges: Set[Edge] = set()
        self.kept: List[Edge] = []
        self.best: Optional[List[Edge]] = None
        self.cap = _edge_cap(label, g.n, g.m)
        self.connected = label in CONNECTED_LABELS
        self.nodes = 0

    def _component(self, start: int) -> Set[int]:
        seen = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for w in self.adj[x]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def _bridge_path(self, u: int, v: int) -> Optional[List[Edge]]:
        """u-v path over kept edges that lie on no cycle."""
        parent = {u: u}
        queue = deque([u])
        while queue:
            x = queue.popleft()
            if x == v:
                path = []
                while x != u:
                    path.append(canonical(x, parent[x]))
                    x = parent[x]
                return path
            for w in self.adj[x]:
                if w not in parent and canonical(x, w) not in self.cycle_edges:
                    parent[w] = x
                    queue.append(w)
        return None

    def _tree_shape_ok(self, comp: Set[int]) -> bool:
        deg = {x: len(self.adj[x]) for x in comp}
        if self.label == "linear-forest":
            return all(d <= 2 for d in deg.values())
        if self.label == "constellation":
            return sum(1 for d in deg.values() if d >= 2) <= 1
        if self.label == "caterpillar":
            inner = {x for x, d in deg.items() if d >= 2}
            return all(len(self.adj[x] & inner) <= 2 for x in inner)
        return True

    def try_add(self, e: Edge) -> Optional[List[Edge]]:
        """Add e if the relaxation allows it; returns the cycle marks made (for undo)."""
        u, v = e
        same = v in self._component(u)
        if same:
            if self.label not in ("cactus", "forest-of-cacti"):
                return None
            path = self._bridge_path(u, v)
            if path is None:
                return None
            marks = path + [e]
            self.cycle_edges.update(marks)
            self.adj[u].add(v)
            self.adj[v].add(u)
            return marks
        self.adj[u].add(v)
        self.adj[v].add(u)
        if not self._tree_shape_ok(self._component(u)):
            self.adj[u].discard(v)
            self.adj[v].discard(u)
            return None
        return []

    def undo(self, e: Edge, marks: List[Edge]) -> None:
        u, v = e
        self.adj[u].discard(v)
        self.adj[v].discard(u)
        self.cycle_edges.difference_update(marks)

    def _can_still_connect(self, i: int) -> bool:
        uf = UnionFind(range(self.g.n))
        for a, b in list(self.kept) + list(self.edges[i:]):
            uf.union(a, b)
        return len({uf[v] for v in range(self.g.n)}) <= 1

    def run(self, i: int = 0) -> None:
        self.nodes += 1
        best_size = -1 if self.best is None else len(self.best)
        if best_size >= self.cap:
            return
        if min(len(self.kept) + len(self.edges) - i, self.cap) <= best_size:
            return
        if self.connected and not self._can_still_connect(i):
            return
        if i == len(self.edges):
            if self.connected and self.g.n and len(self._component(0)) != self.g.n:
                return
            self.best = list(self.kept)
            return
        e = self.edges[i]
        marks = self.try_add(e)
        if marks is not None:
            self.kept.append(e)
            self.run(i + 1)
            self.kept.pop()
            self.undo(e, marks)
        self.run(i + 1)


def max_spanning_in_class(
    g: Graph,
    label_or_predicate: Union[str, Predicate],
    limits: Limits = None,
) -> SpanningSolution:
    """Spanning subgraph of g in the class with the most edges."""
    if callable(label_or_predicate):
        label, predicate = getattr(label_or_predicate, "__name__", "predicate"), label_or_predicate
    else:
        label = label_or_predicate
        predicate = None

    if label in CONNECTED_LABELS and not is_connected(g):
        raise InfeasibleError(f"label {label!r} needs a connected host; input has several components")
    if g.n == 0 and predicate is None and not in_target_class(g, label, limits):
        raise InfeasibleError(f"the empty graph is not a {label}")

    if predicate is None and label in PRUNED_LABELS:
        max_m = limit(limits, "cactus_max_edges")
        if g.m > max_m:
            raise SizeLimitError("cactus_max_edges", max_m, g.m)
        search = _PrunedSearch(g, label)
        search.run()
        if search.best is None:
            raise InfeasibleError(f"no spanning subgraph of the input is a {label}")
        logger.debug(f"[ORACLE] {label}: {len(search.best)} kept edges after {search.nodes} nodes")
        solution = SpanningSolution.of(g, search.best, label, method="oracle")
        cert = in_target_class(solution.as_graph(), label, limits)
        if not cert:
            raise RuntimeError(f"pruned search produced a non-{label} subgraph: {cert.witness}")
        return solution

    max_m = limit(limits, "subset_max_edges")
    if g.m > max_m:
        raise SizeLimitError("subset_max_edges", max_m, g.m)
    test = predicate or (lambda h: in_target_class(h, label, limits).verdict)
    for size in range(g.m, -1, -1):
        for kept in combinations(g.sorted_edges, size):
            if test(g.spanning(kept)):
                logger.debug(f"[ORACLE] {label}: {size} kept edges by subset enumeration")
                return SpanningSolution.of(g, kept, label, method="oracle")
    raise InfeasibleError(f"no spanning subgraph of the input satisfies {label!r}")


def exists_spanning_with_edges(g: Graph, predicate: Predicate, m: int, limits: Limits = None) -> Optional[EdgeSet]:
    """Some spanning subgraph with exactly m edges satisfying predicate, or None."""
    if m < 0 or m > g.m:
        return None
    total = math.comb(g.m, m)
    max_count = limit(limits, "spanning_combinations_max")
    if total > max_count:
        raise SizeLimitError("spanning_combinations_max", max_count, total)
    for kept in combinations(g.sorted_edges, m):
        if predicate(g.spanning(kept)):
            return EdgeSet.of(g, kept)
    return None


# -------------------------
# Matching
# -------------------------
def max_matching(g: Graph) -> EdgeSet:
    """Maximum-cardinality matching of a general graph (Edmonds' blossom)."""
    matched = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return EdgeSet.of(g, matched)


def max_matching_bruteforce(g: Graph, limits: Limits = None) -> EdgeSet:
    max_m = limit(limits, "subset_max_edges")
    if g.m > max_m:
        raise SizeLimitError("subset_max_edges", max_m, g.m)
    edges = g.sorted_edges
    best: List[Edge] = []

    def search(i: int, used: int, chosen: List[Edge]) -> None:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if len(chosen) + (len(edges) - i) <= len(best) or len(chosen) >= g.n // 2:
            return
        for j in range(i, len(edges)):
            u, v = edges[j]
            if used >> u & 1 or used >> v & 1:
                continue
            chosen.append(edges[j])
            search(j + 1, used | (1 << u) | (1 << v), chosen)
            chosen.pop()

    search(0, 0, [])
    return EdgeSet.of(g, best)
