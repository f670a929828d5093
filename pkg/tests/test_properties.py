"""Full-size property sweeps: every reduction and pipeline against the exact oracle.

All of these are marked slow; `pytest -m "not slow"` skips them.
"""

import networkx as nx
import pytest

from chordal_cactus import (
    max_berge_acyclic,
    max_spanning_cactus_chordal,
    non_triangle_edges,
    realize,
    triangle_hypergraph,
    triangularize,
)
from generators import bipartite_subcubic, chordal_random, connected_qt_graphs, qt_random, random_graph
from graph_core import Graph, SpanningSolution
from oracle import (
    exists_spanning_with_edges,
    hamiltonian_path,
    is_hamiltonian_path,
    is_p3_partition,
    max_matching,
    max_spanning_in_class,
    partition_into_p3,
)
from qt_cactus import max_spanning_cactus_qt
from recognizers import cactus_cycles, is_bipartite, is_cactus, is_caterpillar, is_forest_of_cacti
from reductions.caterpillar import caterpillar_to_hampath, hampath_to_caterpillar_instance, hampath_to_caterpillar_solution
from reductions.pip3_cactus import (
    cactus_to_pip3_solution,
    cycle_accounting,
    pip3_solution_to_cactus,
    pip3_to_cactus_instance,
)
from reductions.structural import AGREE, pi_deletion_equiv_hampath, resolve_pi, verify_pi_conditions
from utils import make_rng

pytestmark = pytest.mark.slow

# K9 has 36 edges; the chordal and quasi-threshold sweeps compare against the oracle up to there.
K9_LIMITS = {"cactus_max_edges": 36}


def random_bipartite(n, p, rng):
    cut = rng.randint(1, max(1, n - 1))
    return Graph.from_edges(n, ((u, v) for u in range(cut) for v in range(cut, n) if rng.random() < p))


def random_spanning_cactus(g, rng):
    """Greedy maximal forest of cacti over a shuffled edge order; spanning cactus when g is connected."""
    edges = list(g.sorted_edges)
    rng.shuffle(edges)
    kept = []
    for e in edges:
        if is_forest_of_cacti(g.spanning(kept + [e])):
            kept.append(e)
    return SpanningSolution.of(g, kept, "cactus")


def check_pip3(g):
    inst = pip3_to_cactus_instance(g)
    blocks = partition_into_p3(g)
    best = max_spanning_in_class(inst.gadget, "cactus")
    assert (best.deletions <= inst.budget) == (blocks is not None)
    if blocks is not None:
        sol = pip3_solution_to_cactus(inst, blocks)
        accounting = cycle_accounting(inst, sol)
        assert accounting["count"] == g.n // 3 + 1
        assert accounting["all_length_four"]
        assert is_p3_partition(g, cactus_to_pip3_solution(inst, sol))


def test_pip3_gadget_on_all_small_subcubic_bipartite_graphs():
    checked = 0
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() not in (3, 6):
            continue
        g = Graph.from_networkx(G)
        if not is_bipartite(g) or g.max_degree() > 3:
            continue
        check_pip3(g)
        checked += 1
    assert checked > 20


def test_pip3_gadget_on_random_nine_vertex_graphs():
    for seed in range(200):
        check_pip3(bipartite_subcubic(9, make_rng(seed)))


def test_caterpillar_gadget_decides_traceability():
    rng = make_rng(6)
    checked = 0
    while checked < 300:
        g = random_graph(rng.randint(2, 7), 0.4, rng)
        # the budget m - n + 1 bounds how many deletions get enumerated
        if g.m - g.n + 1 > 4:
            continue
        inst = hampath_to_caterpillar_instance(g)
        path = hamiltonian_path(g)
        found = exists_spanning_with_edges(inst.gadget, lambda h: is_caterpillar(h).verdict, inst.gadget.n - 1)
        assert (found is not None) == (path is not None)
        if path is not None:
            forward = hampath_to_caterpillar_solution(inst, path)
            assert forward.deletions == inst.budget
            assert is_hamiltonian_path(g, caterpillar_to_hampath(inst, forward))
            back = caterpillar_to_hampath(inst, SpanningSolution(inst.gadget, found, "caterpillar"))
            assert is_hamiltonian_path(g, back)
        checked += 1


def test_chordal_pipeline_matches_oracle():
    for seed in range(500):
        rng = make_rng(seed)
        g = chordal_random(rng.randint(3, 9), rng)
        sol = max_spanning_cactus_chordal(g)
        assert len(sol.kept) == len(max_spanning_in_class(g, "cactus", K9_LIMITS).kept)

        # realize on the maximum selection: a forest of cacti whose cycles are all triangles
        forest = realize(g, max_berge_acyclic(triangle_hypergraph(g)), non_triangle_edges(g))
        cycles, rejection = cactus_cycles(forest)
        assert rejection is None and all(len(c) == 3 for c in cycles)


def test_triangularize_random_cacti():
    for seed in range(200):
        rng = make_rng(seed)
        g = chordal_random(rng.randint(3, 9), rng)
        sol = random_spanning_cactus(g, rng)
        out = triangularize(g, sol)
        assert len(out.kept) == len(sol.kept)
        assert is_cactus(out.as_graph())
        cycles, _ = cactus_cycles(out.as_graph())
        assert all(len(c) == 3 for c in cycles)


def test_qt_solver_on_all_qt_graphs_up_to_eight():
    for n in range(1, 9):
        for g in connected_qt_graphs(n):
            sol = max_spanning_cactus_qt(g)
            assert len(sol.kept) == len(max_spanning_in_class(g, "cactus").kept)


def test_qt_formula_on_random_graphs():
    for seed in range(500):
        rng = make_rng(seed)
        g = qt_random(rng.randint(2, 11), rng)
        sol = max_spanning_cactus_qt(g)
        center = sol.meta["centers"][0]
        rest, _ = g.induced_subgraph([v for v in g.vertices() if v != center])
        assert len(sol.kept) == g.n - 1 + len(max_matching(rest))
        if g.m <= K9_LIMITS["cactus_max_edges"]:
            assert len(sol.kept) == len(max_spanning_in_class(g, "cactus", K9_LIMITS).kept)


@pytest.mark.parametrize("pi", ["linear-forest", "claw-free-chordal"])
def test_structural_equivalence_on_random_bipartite_graphs(pi):
    predicate = resolve_pi(pi)
    report = verify_pi_conditions(predicate, 9, exhaustive_upto=7, samples=200)
    assert report.all_hold
    rng = make_rng(9)
    for _ in range(300):
        g = random_bipartite(rng.randint(2, 9), rng.choice((0.25, 0.35, 0.45)), rng)
        assert pi_deletion_equiv_hampath(g, predicate).verdict == AGREE
