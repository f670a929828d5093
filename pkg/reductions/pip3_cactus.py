# reductions/pip3_cactus.py
"""
Partition into P3 -> spanning cactus deletion, on subcubic bipartite graphs.

Gadget H: the source graph plus four vertices x, y, x', y' (ids n..n+3);
x is joined to side X, y to side Y, and x-y-y'-x'-x closes the apex C4.
Budget k = |E(H)| - 4n/3 - 4. A source whose order is not a multiple of
three gives a trivially negative instance (budget -1).
"""

from __future__ import annotations

from typing import Dict, List, Sequence

from certificates import canonical_cycle
from graph_core import Edge, Graph, PreconditionError, SpanningSolution, canonical
from loghandler import get_logger
from oracle import is_p3_partition
from recognizers import cactus_cycles, is_bipartite, is_cactus
from reductions.instance import PIP3_TO_CACTUS, ReductionError, ReductionInstance, Role

logger = get_logger("reductions.pip3")


def pip3_to_cactus_instance(g: Graph) -> ReductionInstance:
    bip = is_bipartite(g)
    if not bip:
        cycle = bip.witness["cycle"]
        raise PreconditionError(f"source graph is not bipartite: vertex {cycle[0]} lies on odd cycle {cycle}")
    for v in g.vertices():
        if g.degree(v) > 3:
            raise PreconditionError(f"source graph is not subcubic: vertex {v} has degree {g.degree(v)}")

    side_x, side_y = bip.witness["sides"]
    n = g.n
    x, y, xp, yp = n, n + 1, n + 2, n + 3

    vertex_origin: Dict[int, Role] = {v: ("source", v) for v in g.vertices()}
    vertex_origin.update({x: ("x", None), y: ("y", None), xp: ("x'", None), yp: ("y'", None)})

    edge_origin: Dict[Edge, Role] = {e: ("source", e) for e in g.edges}
    for v in side_x:
        edge_origin[canonical(x, v)] = ("x-join", v)
    for v in side_y:
        edge_origin[canonical(y, v)] = ("y-join", v)
    for e in ((x, y), (x, xp), (xp, yp), (y, yp)):
        edge_origin[canonical(*e)] = ("apex", None)

    gadget = Graph(n + 4, frozenset(edge_origin))
    trivially_negative = n % 3 != 0
    budget = -1 if trivially_negative else gadget.m - 4 * n // 3 - 4
    if trivially_negative:
        logger.info(f"[REDUCE] PIP3 source has {n} vertices (not divisible by 3); instance is trivially negative")
    logger.debug(f"[REDUCE] pip3-to-cactus: gadget n={gadget.n} m={gadget.m} k={budget}")
    return ReductionInstance(
        reduction=PIP3_TO_CACTUS,
        source=g,
        gadget=gadget,
        budget=budget,
        vertex_origin=vertex_origin,
        edge_origin=edge_origin,
        trivially_negative=trivially_negative,
        meta={"sides": [side_x, side_y], "x": x, "y": y, "x'": xp, "y'": yp},
    )


def _middle(g: Graph, block: Sequence[int]) -> int:
    """Vertex of a P3 block adjacent to the other two (smallest if several)."""
    for v in sorted(block):
        if all(g.has_edge(v, w) for w in block if w != v):
            return v
    raise ReductionError(f"block {list(block)} carries no P3")


def pip3_solution_to_cactus(inst: ReductionInstance, partition: Sequence[Sequence[int]]) -> SpanningSolution:
    g = inst.source
    if inst.trivially_negative:
        raise ReductionError("instance is trivially negative: no P3 partition exists")
    if not is_p3_partition(g, partition):
        raise ReductionError(f"not a partition of the source into P3 blocks: {[list(b) for b in partition]}")

    x, y = inst.meta["x"], inst.meta["y"]
    side_x = set(inst.meta["sides"][0])
    kept: List[Edge] = []
    for block in partition:
        mid = _middle(g, block)
        for end in block:
            if end == mid:
                continue
            kept.append(canonical(mid, end))
            kept.append(canonical(x if end in side_x else y, end))
    xp, yp = inst.meta["x'"], inst.meta["y'"]
    kept.extend(canonical(*e) for e in ((x, y), (x, xp), (xp, yp), (y, yp)))
    return SpanningSolution.of(inst.gadget, kept, "cactus", reduction=PIP3_TO_CACTUS)


def _without(cycle: List[int], removed: int) -> List[int]:
    return [v for v in cycle if v != removed]


def cactus_to_pip3_solution(inst: ReductionInstance, sol: SpanningSolution) -> List[List[int]]:
    """Read a P3 partition off a spanning cactus of the gadget within budget."""
    if sol.host != inst.gadget:
        raise ReductionError("solution is not over this instance's gadget")
    if inst.trivially_negative:
        raise ReductionError("instance is trivially negative: no spanning cactus fits the budget")
    if sol.deletions > inst.budget:
        raise ReductionError(f"solution deletes {sol.deletions} edges, budget is {inst.budget}")
    h = sol.as_graph()
    cert = is_cactus(h)
    if not cert:
        raise ReductionError(f"solution is not a cactus: {cert.witness['name']}")

    cycles, _ = cactus_cycles(h)
    if any(len(c) != 4 for c in cycles):
        raise ReductionError(f"solution has a cycle of length other than 4: {cycles}")

    n = inst.source.n
    x, y, xp = inst.meta["x"], inst.meta["y"], inst.meta["x'"]
    cycle_count: Dict[int, int] = {}
    for c in cycles:
        for v in c:
            cycle_count[v] = cycle_count.get(v, 0) + 1

    blocks: List[List[int]] = []
    for c in cycles:
        if xp in c:
            continue
        if x in c or y in c:
            blocks.append(_without(c, x if x in c else y))
            continue
        shared = [v for v in c if cycle_count[v] > 1]
        if len(shared) != 1:
            raise ReductionError(f"cycle {c} inside the source shares {len(shared)} vertices with other cycles")
        blocks.append(_without(c, shared[0]))

    blocks = sorted((sorted(b) for b in blocks), key=lambda b: b[0])
    if any(v >= n for b in blocks for v in b) or not is_p3_partition(inst.source, blocks):
        raise ReductionError(f"extracted blocks do not partition the source: {blocks}")
    return blocks


def cycle_accounting(inst: ReductionInstance, sol: SpanningSolution) -> Dict[str, object]:
    """Cycle count and lengths of a gadget cactus, next to the expected n/3 + 1."""
    cycles, _ = cactus_cycles(sol.as_graph())
    cycles = cycles or []
    return {
        "cycles": [canonical_cycle(c) for c in cycles],
        "count": len(cycles),
        "expected": inst.source.n // 3 + 1,
        "all_length_four": all(len(c) == 4 for c in cycles),
    }
