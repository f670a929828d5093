# reductions/constellation.py
"""
Dominating set <-> spanning constellation.

A dominating set D of size k gives a spanning constellation with
|V| - k edges (stars centred on D), i.e. |E| - |V| + k deletions, and the
star centres of any spanning constellation dominate the host.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from graph_core import Graph, PreconditionError, SpanningSolution
from loghandler import get_logger
from oracle import Limits, is_dominating_set, min_dominating_set, undominated
from recognizers import is_constellation
from reductions.instance import DOMSET_TO_CONSTELLATION, ReductionError, ReductionInstance

logger = get_logger("reductions.constellation")


def domset_to_constellation(g: Graph, d: Sequence[int]) -> SpanningSolution:
    """Each vertex outside d keeps the edge to its smallest-index dominator."""
    outside = [v for v in d if not 0 <= v < g.n]
    if outside:
        raise PreconditionError(f"vertex {outside[0]} is not a vertex of the graph (n={g.n})")
    missing = undominated(g, d)
    if missing:
        raise PreconditionError(f"set {sorted(set(d))} does not dominate: vertex {missing[0]} undominated")
    centers = set(d)
    kept = [(min(g.neighbors(v) & centers), v) for v in g.vertices() if v not in centers]
    return SpanningSolution.of(g, kept, "constellation", centers=sorted(centers))


def constellation_to_domset(g: Graph, sol: SpanningSolution) -> List[int]:
    """Star centres of a spanning constellation (K2: smaller end; K1: itself)."""
    if sol.host != g:
        raise ReductionError("solution is not over this graph")
    cert = is_constellation(sol.as_graph())
    if not cert:
        raise ReductionError(f"solution is not a constellation: {cert.witness['name']} {cert.witness['vertices']}")
    centers = sorted(cert.witness["centers"])
    if not is_dominating_set(g, centers):
        raise ReductionError(f"star centres {centers} do not dominate the graph")
    return centers


def min_constellation_deletion(g: Graph, limits: Limits = None) -> SpanningSolution:
    """Optimum constellation deletion: |E| - |V| + gamma(g) edges removed."""
    d = min_dominating_set(g, limits)
    sol = domset_to_constellation(g, d)
    logger.debug(f"[REDUCE] constellation: gamma={len(d)} deletions={sol.deletions}")
    return SpanningSolution(sol.host, sol.kept, sol.label, {**sol.meta, "method": "domset", "gamma": len(d)})


def domset_to_constellation_instance(g: Graph, k: Optional[int] = None, limits: Limits = None) -> ReductionInstance:
    """The host is its own gadget; a size-k dominating set means |E| - |V| + k deletions.

    Without k the domination number is used.
    """
    if k is None:
        k = len(min_dominating_set(g, limits))
    return ReductionInstance(
        reduction=DOMSET_TO_CONSTELLATION,
        source=g,
        gadget=g,
        budget=g.m - g.n + k,
        vertex_origin={v: ("source", v) for v in g.vertices()},
        edge_origin={e: ("source", e) for e in g.edges},
        source_budget=k,
    )


def translate_forward(inst: ReductionInstance, d: Sequence[int]) -> SpanningSolution:
    sol = domset_to_constellation(inst.source, d)
    if inst.source_budget is not None and len(set(d)) > inst.source_budget:
        raise ReductionError(f"dominating set has {len(set(d))} vertices, source budget is {inst.source_budget}")
    return sol


def translate_backward(inst: ReductionInstance, sol: SpanningSolution) -> List[int]:
    if sol.deletions > inst.budget:
        raise ReductionError(f"solution deletes {sol.deletions} edges, budget is {inst.budget}")
    return constellation_to_domset(inst.source, sol)

