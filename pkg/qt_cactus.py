# qt_cactus.py
"""
Maximum spanning cactus of a quasi-threshold graph.

A connected quasi-threshold graph has a universal vertex v. Keeping the
star at v plus a maximum matching M of G - v gives (|V| - 1) + |M| edges,
every cycle a triangle through v, and this is optimal.

join_lemma_rewrite() is the normal-form transformation behind that
optimality: any spanning cactus of a join can be rewritten, without losing
edges, so that every cycle is a C3 or C4 meeting both sides.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Optional, Set, Tuple

from certificates import ClassCertificate
from chordal_cactus import PipelineError
from config_validation import limit
from graph_core import Edge, Graph, InfeasibleError, PreconditionError, SpanningSolution, canonical
from loghandler import get_logger
from oracle import Limits, max_matching, max_spanning_in_class
from recognizers import cactus_cycles, in_target_class, is_cactus, is_quasi_threshold

logger = get_logger("qt")


class NotQuasiThresholdError(PreconditionError):
    """Input has an induced P4 or C4; the certificate carries it."""

    def __init__(self, certificate: ClassCertificate):
        self.certificate = certificate
        w = certificate.witness
        super().__init__(f"input is not quasi-threshold: induced {w['name']} on {w['vertices']}")


@dataclass(frozen=True)
class QtNode:
    vertices: Tuple[int, ...]
    peel: Tuple[int, ...]
    children: Tuple["QtNode", ...]

    @property
    def root(self) -> int:
        """First peeled universal vertex (the only vertex of a K1 component)."""
        return self.peel[0] if self.peel else self.vertices[0]


@dataclass(frozen=True)
class QtDecomposition:
    host: Graph
    components: Tuple[QtNode, ...]

    def to_dict(self) -> List[Dict[str, Any]]:
        def node(x: QtNode) -> Dict[str, Any]:
            return {"vertices": list(x.vertices), "peel": list(x.peel), "children": [node(c) for c in x.children]}

        return [node(c) for c in self.components]


def _node(raw: Dict[str, Any]) -> QtNode:
    return QtNode(tuple(raw["vertices"]), tuple(raw["peel"]), tuple(_node(c) for c in raw["children"]))


def qt_decompose(g: Graph) -> QtDecomposition:
    cert = is_quasi_threshold(g)
    if not cert:
        raise NotQuasiThresholdError(cert)
    return QtDecomposition(g, tuple(_node(raw) for raw in cert.witness["forest"]))


def max_spanning_cactus_qt(
    g: Graph,
    per_component: bool = False,
    limits: Limits = None,
    self_check: bool = False,
) -> SpanningSolution:
    decomposition = qt_decompose(g)
    connected = len(decomposition.components) <= 1
    if not connected and not per_component:
        raise InfeasibleError("input is disconnected; a spanning cactus needs a connected host")

    kept: List[Edge] = []
    centers: List[int] = []
    matched = 0
    for comp in decomposition.components:
        v = comp.root
        centers.append(v)
        rest = [u for u in comp.vertices if u != v]
        kept.extend(canonical(v, u) for u in rest)
        g2, back = g.induced_subgraph(rest)
        matching = [canonical(back[a], back[b]) for a, b in max_matching(g2)]
        kept.extend(matching)
        matched += len(matching)

    label = "cactus" if connected else "forest-of-cacti"
    solution = SpanningSolution.of(g, kept, label, method="qt", centers=centers, matching=matched)
    if len(solution.kept) != g.n - len(decomposition.components) + matched:
        raise PipelineError("kept edge count differs from |V| - components + |M|")
    cert = in_target_class(solution.as_graph(), label)
    if not cert:
        raise PipelineError(f"star plus matching is not a {label}: {cert.witness}")
    logger.info(f"[QT] kept {len(solution.kept)} of {g.m} edges (|M|={matched})")

    if self_check and g.m <= limit(limits, "cactus_max_edges"):
        best = max_spanning_in_class(g, label, limits)
        if len(best.kept) != len(solution.kept):
            raise PipelineError(f"qt solver kept {len(solution.kept)} edges, oracle optimum is {len(best.kept)}")
    return solution


# -------------------------
# Join lemma
# -------------------------
def _check_join(g: Graph, side_a: Set[int], side_b: Set[int]) -> None:
    if side_a & side_b or side_a | side_b != set(g.vertices()):
        raise PreconditionError("the two vertex sets must partition the graph's vertices")
    for a in sorted(side_a):
        for b in sorted(side_b):
            if not g.has_edge(a, b):
                raise PreconditionError(f"not a join: {a} and {b} are on opposite sides but not adjacent")


def _nearest_on_cycle(kept: Set[Edge], n: int, source: int, cycle: Iterable[int]) -> int:
    targets = set(cycle)
    adj: List[List[int]] = [[] for _ in range(n)]
    for u, v in sorted(kept):
        adj[u].append(v)
        adj[v].append(u)
    seen = {source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if x in targets:
            return x
        for w in adj[x]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    raise PipelineError(f"vertex {source} cannot reach cycle {sorted(targets)}")


def _shrink_cross_cycle(g: Graph, cycle: List[int], side_a: Set[int]) -> Optional[Tuple[Edge, Edge]]:
    """Chord swap for a cross cycle longer than 4: (edge to delete, chord to add)."""
    k = len(cycle)
    for p in range(k):
        for step in range(2, k - 1):
            q = (p + step) % k
            if (cycle[p] in side_a) != (cycle[q] in side_a) and g.has_edge(cycle[p], cycle[q]):
                return canonical(cycle[p], cycle[(p + 1) % k]), canonical(cycle[p], cycle[q])
    return None


def join_lemma_rewrite(
    g1_vertices: Iterable[int],
    g2_vertices: Iterable[int],
    g: Graph,
    sol: SpanningSolution,
) -> SpanningSolution:
    """Rewrite a spanning cactus of g = G1 join G2 into the C3/C4 cross-cycle normal form.

    Long cross cycles shrink by a chord swap. A cycle inside one side is
    relocated: drop its two edges at the vertex v_i closest to v (the
    smallest vertex of the other side), keep a maximum matching of the
    leftover path, and join every path vertex to v. The edge count changes
    by |M| - 1 >= 0 per relocation.
    """
    side_a, side_b = set(g1_vertices), set(g2_vertices)
    _check_join(g, side_a, side_b)
    if sol.host != g:
        raise PreconditionError("solution is not over this graph")
    cert = is_cactus(sol.as_graph())
    if not cert:
        raise PreconditionError(f"solution is not a spanning cactus: {cert.witness['name']}")
    if not side_a or not side_b:
        return sol

    kept = set(sol.kept.members)
    shrinks = relocations = 0
    while True:
        cycles, _ = cactus_cycles(g.spanning(kept))
        long_cross = [c for c in cycles if len(c) > 4 and any(v in side_a for v in c) and any(v in side_b for v in c)]
        if long_cross:
            swap = _shrink_cross_cycle(g, long_cross[0], side_a)
            if swap is None:
                raise PipelineError(f"cross cycle {long_cross[0]} has no cross chord")
            kept.discard(swap[0])
            kept.add(swap[1])
            shrinks += 1
            continue

        one_sided = [c for c in cycles if all(v in side_a for v in c) or all(v in side_b for v in c)]
        if not one_sided:
            break
        cycle = one_sided[0]
        other = side_b if cycle[0] in side_a else side_a
        v = min(other)
        vi = _nearest_on_cycle(kept, g.n, v, cycle)
        i = cycle.index(vi)
        path = cycle[i + 1:] + cycle[:i]
        kept.discard(canonical(vi, cycle[(i + 1) % len(cycle)]))
        kept.discard(canonical(vi, cycle[i - 1]))
        for j in range(len(path) - 1):
            if j % 2 == 1:
                kept.discard(canonical(path[j], path[j + 1]))
        for w in path:
            kept.add(canonical(v, w))
        relocations += 1

    result = SpanningSolution.of(g, kept, "cactus", **{**sol.meta, "shrinks": shrinks, "relocations": relocations})
    if len(result.kept) < len(sol.kept) or not is_cactus(result.as_graph()):
        raise PipelineError("join rewrite lost edges or broke the cactus property")
    return result
