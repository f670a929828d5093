# reductions/caterpillar.py
"""
Hamiltonian path -> spanning caterpillar deletion.

The gadget subdivides every source edge twice (u, u_e, v_e, v); the budget
is k = |E(H)| - |V(H)| + 1, so the kept edges of any solution form a
spanning tree of H.
"""

from __future__ import annotations

from typing import Dict, List, Sequence

from graph_core import Edge, Graph, SpanningSolution, canonical, subdivide_twice, subdivision_vertices
from loghandler import get_logger
from oracle import is_hamiltonian_path
from recognizers import is_caterpillar
from reductions.instance import HAMPATH_TO_CATERPILLAR, ReductionError, ReductionInstance, Role

logger = get_logger("reductions.caterpillar")


def hampath_to_caterpillar_instance(g: Graph) -> ReductionInstance:
    gadget, origin = subdivide_twice(g)
    vertex_origin: Dict[int, Role] = {v: ("source", v) for v in g.vertices()}
    for e, (ue, ve) in subdivision_vertices(g).items():
        vertex_origin[ue] = ("u_e", e)
        vertex_origin[ve] = ("v_e", e)
    edge_origin: Dict[Edge, Role] = {e: ("subdivision", src) for e, src in origin.items()}
    budget = gadget.m - gadget.n + 1
    logger.debug(f"[REDUCE] hampath-to-caterpillar: gadget n={gadget.n} m={gadget.m} k={budget}")
    return ReductionInstance(
        reduction=HAMPATH_TO_CATERPILLAR,
        source=g,
        gadget=gadget,
        budget=budget,
        vertex_origin=vertex_origin,
        edge_origin=edge_origin,
    )


def hampath_to_caterpillar_solution(inst: ReductionInstance, path: Sequence[int]) -> SpanningSolution:
    """Spine follows the path through u, u_e, v_e, v; other edges keep their two pendant ends."""
    g = inst.source
    if not is_hamiltonian_path(g, path):
        raise ReductionError(f"{list(path)} is not a Hamiltonian path of the source")
    on_path = {canonical(a, b) for a, b in zip(path, path[1:])}
    kept: List[Edge] = []
    for (u, v), (ue, ve) in subdivision_vertices(g).items():
        kept.append(canonical(u, ue))
        kept.append(canonical(ve, v))
        if (u, v) in on_path:
            kept.append(canonical(ue, ve))
    return SpanningSolution.of(inst.gadget, kept, "caterpillar", reduction=HAMPATH_TO_CATERPILLAR)


def caterpillar_to_hampath(inst: ReductionInstance, sol: SpanningSolution) -> List[int]:
    """Source vertices in spine order, after absorbing source leaves at the spine ends."""
    if sol.host != inst.gadget:
        raise ReductionError("solution is not over this instance's gadget")
    if sol.deletions > inst.budget:
        raise ReductionError(f"solution deletes {sol.deletions} edges, budget is {inst.budget}")
    c = sol.as_graph()
    cert = is_caterpillar(c)
    if not cert:
        raise ReductionError(f"solution is not a caterpillar: {cert.witness['name']}")

    n = inst.source.n
    spine = list(cert.witness["spine"])
    if not spine:
        return []
    for at_front in (True, False):
        end = spine[0] if at_front else spine[-1]
        leaves = sorted(w for w in c.neighbors(end) if w < n and c.degree(w) == 1 and w not in spine)
        if leaves:
            if at_front:
                spine.insert(0, leaves[0])
            else:
                spine.append(leaves[0])

    path = [v for v in spine if v < n]
    if not is_hamiltonian_path(inst.source, path):
        raise ReductionError(f"spine {spine} does not carry a Hamiltonian path of the source")
    return path
