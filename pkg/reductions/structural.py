# reductions/structural.py
"""
Structural hardness harness for bipartite inputs.

A class P that contains every path and whose members are all claw-free
and even-hole-free makes P-deletion on a bipartite graph G equivalent to
Hamiltonian path: G is traceable iff some spanning P-subgraph keeps
exactly |V(G)| - 1 edges. verify_pi_conditions() probes the three
conditions for a predicate; pi_deletion_equiv_hampath() decides both
sides of the equivalence independently with the oracles and compares.
"""

from __future__ import annotations

import importlib
import random
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, Optional

import networkx as nx

from config_validation import limit
from graph_core import Graph, PreconditionError, SizeLimitError, serialize_graph, GRAPH6
from loghandler import get_logger
from oracle import Limits, exists_spanning_with_edges, hamiltonian_path
from recognizers import RECOGNIZERS, in_target_class, is_bipartite

logger = get_logger("reductions.structural")

AGREE = "AGREE"
DISAGREE = "DISAGREE"

CONDITIONS = ("paths", "claw-free", "even-hole-free")

# Predicates shipped for the harness; any recognizer label also resolves.
BUILTIN_PI = ("linear-forest", "claw-free-chordal", "proper-interval", "path-power")


@dataclass(frozen=True)
class PiPredicate:
    name: str
    test: Callable[[Graph], bool] = field(compare=False)

    def __call__(self, g: Graph) -> bool:
        return bool(self.test(g))


def resolve_pi(name: str, limits: Limits = None) -> PiPredicate:
    """A recognizer label, or a user hook given as 'module:function'."""
    if name in RECOGNIZERS:
        return PiPredicate(name, lambda g: in_target_class(g, name, limits).verdict)
    module_name, sep, func_name = name.partition(":")
    if not sep:
        raise PreconditionError(
            f"unknown predicate {name!r}; use a class label ({', '.join(sorted(RECOGNIZERS))}) or module:function"
        )
    try:
        module = importlib.import_module(module_name)
        func = getattr(module, func_name)
    except (ImportError, AttributeError) as e:
        raise PreconditionError(f"cannot load predicate hook {name!r}: {e}")
    if not callable(func):
        raise PreconditionError(f"predicate hook {name!r} is not callable")
    return PiPredicate(name, func)


@dataclass
class PiConditionReport:
    predicate: str
    n_max: int
    probed: int = 0
    members: int = 0
    skipped: int = 0
    violations: Dict[str, List[Dict[str, Any]]] = field(default_factory=lambda: {c: [] for c in CONDITIONS})

    def holds(self, condition: str) -> bool:
        return not self.violations[condition]

    @property
    def all_hold(self) -> bool:
        return all(self.holds(c) for c in CONDITIONS)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "predicate": self.predicate,
            "n_max": self.n_max,
            "probed": self.probed,
            "members": self.members,
            "skipped": self.skipped,
            "holds": {c: self.holds(c) for c in CONDITIONS},
            "violations": self.violations,
        }


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def _probe_graphs(n_max: int, exhaustive_upto: int, samples: int, seed: int) -> Iterator[Graph]:
    for G in nx.graph_atlas_g():
        if 0 < G.number_of_nodes() <= min(exhaustive_upto, n_max):
            yield Graph.from_networkx(G)
    rng = random.Random(seed)
    low = min(exhaustive_upto, n_max) + 1
    for _ in range(samples if low <= n_max else 0):
        n = rng.randint(low, n_max)
        p = rng.choice((0.15, 0.3, 0.5))
        yield Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def _record(g: Graph, **extra: Any) -> Dict[str, Any]:
    return {"graph6": serialize_graph(g, GRAPH6).decode("ascii").strip(), **extra}


def verify_pi_conditions(
    pi: PiPredicate,
    n_max: int,
    exhaustive_upto: int = 7,
    samples: int = 200,
    seed: int = 0,
    limits: Limits = None,
) -> PiConditionReport:
    """Probe paths, every graph up to exhaustive_upto vertices, and random samples up to n_max."""
    report = PiConditionReport(pi.name, n_max)
    for n in range(1, n_max + 1):
        try:
            on_path = pi(path_graph(n))
        except SizeLimitError:
            report.skipped += 1
            continue
        if not on_path:
            report.violations["paths"].append({"n": n})

    hole_cap = limit(limits, "even_hole_max_n")
    for g in _probe_graphs(n_max, exhaustive_upto, samples, seed):
        report.probed += 1
        try:
            member = pi(g)
        except SizeLimitError:
            report.skipped += 1
            continue
        if not member:
            continue
        report.members += 1
        claw = in_target_class(g, "claw-free")
        if not claw:
            report.violations["claw-free"].append(_record(g, witness=claw.witness["vertices"]))
        if g.n <= hole_cap:
            holes = in_target_class(g, "even-hole-free", limits)
            if not holes:
                report.violations["even-hole-free"].append(_record(g, witness=holes.witness["cycle"]))

    logger.debug(
        f"[REDUCE] {pi.name}: probed {report.probed} graphs, {report.members} members, {report.skipped} over limits, "
        f"violations {[len(report.violations[c]) for c in CONDITIONS]}"
    )
    return report


@dataclass(frozen=True)
class EquivalenceVerdict:
    verdict: str
    hamiltonian: bool
    path: Optional[List[int]]
    pi_subgraph: Optional[List[List[int]]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "verdict": self.verdict,
            "answer": "yes" if self.hamiltonian else "no",
            "path": self.path,
            "pi_subgraph": self.pi_subgraph,
        }


def pi_deletion_equiv_hampath(
    g: Graph,
    pi: PiPredicate,
    limits: Limits = None,
    check_conditions: bool = False,
) -> EquivalenceVerdict:
    """Decide traceability and the |V|-1 edge P-subgraph question separately and compare."""
    if g.n == 0:
        raise PreconditionError("the equivalence needs at least one vertex")
    bip = is_bipartite(g)
    if not bip:
        raise PreconditionError(f"graph is not bipartite: vertex {bip.witness['cycle'][0]} lies on an odd cycle")
    if check_conditions:
        report = verify_pi_conditions(pi, g.n, limits=limits)
        if not report.all_hold:
            failed = [c for c in CONDITIONS if not report.holds(c)]
            raise PreconditionError(f"predicate {pi.name!r} fails conditions {failed} at n={g.n}")

    path = hamiltonian_path(g, limits)
    kept = exists_spanning_with_edges(g, pi, g.n - 1, limits)
    agree = (path is not None) == (kept is not None)
    verdict = EquivalenceVerdict(
        verdict=AGREE if agree else DISAGREE,
        hamiltonian=path is not None,
        path=path,
        pi_subgraph=[list(e) for e in kept] if kept is not None else None,
    )
    if not agree:
        logger.error(f"[REDUCE] {pi.name}: equivalence violated on {serialize_graph(g, GRAPH6).decode().strip()}")
    return verdict
