import random
from itertools import combinations, permutations

import networkx as nx
import pytest

from graph_core import Graph, InfeasibleError, SizeLimitError, disjoint_union, is_connected
from oracle import (
    exists_spanning_with_edges,
    hamiltonian_path,
    is_dominating_set,
    is_hamiltonian_path,
    is_matching,
    is_p3_partition,
    max_matching,
    max_matching_bruteforce,
    max_spanning_in_class,
    min_dominating_set,
    partition_into_p3,
)
from recognizers import is_cactus, is_linear_forest


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n):
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves):
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def connected_atlas(n_max):
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= n_max and nx.is_connected(G):
            yield Graph.from_networkx(G)


def brute_traceable(g):
    return any(is_hamiltonian_path(g, p) for p in permutations(range(g.n)))


def brute_domination(g):
    for k in range(g.n + 1):
        if any(is_dominating_set(g, d) for d in combinations(range(g.n), k)):
            return k


# -------------------------
# Hamiltonian path
# -------------------------
def test_hamiltonian_path_examples():
    assert hamiltonian_path(cycle(4)) == [0, 1, 2, 3]
    assert hamiltonian_path(star(3)) is None
    assert hamiltonian_path(Graph(1)) == [0]
    assert hamiltonian_path(Graph(0)) == []


def test_hamiltonian_path_petersen():
    g = Graph.from_networkx(nx.petersen_graph())
    p = hamiltonian_path(g)
    assert p is not None and is_hamiltonian_path(g, p)


def test_hamiltonian_path_size_limit():
    with pytest.raises(SizeLimitError) as info:
        hamiltonian_path(cycle(4), {"hampath_max_n": 3})
    assert info.value.limit_name == "hampath_max_n"


def test_hamiltonian_path_matches_brute_force():
    for G in nx.graph_atlas_g():
        if not 1 <= G.number_of_nodes() <= 6:
            continue
        g = Graph.from_networkx(G)
        p = hamiltonian_path(g)
        assert (p is not None) == brute_traceable(g)
        if p is not None:
            assert is_hamiltonian_path(g, p)


# -------------------------
# Dominating set
# -------------------------
def test_dominating_set_examples():
    assert min_dominating_set(star(5)) == [0]
    assert len(min_dominating_set(cycle(4))) == 2
    d = min_dominating_set(path(5))
    assert len(d) == 2 and is_dominating_set(path(5), d)
    petersen = Graph.from_networkx(nx.petersen_graph())
    assert len(min_dominating_set(petersen)) == 3
    assert min_dominating_set(Graph(0)) == []


def test_dominating_set_matches_brute_force():
    for G in nx.graph_atlas_g():
        if not 1 <= G.number_of_nodes() <= 6:
            continue
        g = Graph.from_networkx(G)
        d = min_dominating_set(g)
        assert is_dominating_set(g, d)
        assert len(d) == brute_domination(g)


# -------------------------
# Partition into P3
# -------------------------
def test_partition_into_p3():
    assert partition_into_p3(path(6)) == [[0, 1, 2], [3, 4, 5]]
    assert partition_into_p3(path(4)) is None
    assert partition_into_p3(Graph.from_edges(3, [(0, 1)])) is None
    assert partition_into_p3(complete(3)) == [[0, 1, 2]]
    assert partition_into_p3(complete(3), induced=True) is None
    blocks = partition_into_p3(cycle(9))
    assert is_p3_partition(cycle(9), blocks)


def test_partition_into_p3_star_fails():
    # K1,5 has six vertices but only one vertex of degree above one
    assert partition_into_p3(star(5)) is None


# -------------------------
# Matching
# -------------------------
def test_matching_examples():
    assert len(max_matching(path(4))) == 2
    assert len(max_matching(complete(5))) == 2
    assert len(max_matching(Graph(3))) == 0


def test_blossom_matches_brute_force():
    for G in nx.graph_atlas_g():
        if not 1 <= G.number_of_nodes() <= 6:
            continue
        g = Graph.from_networkx(G)
        m = max_matching(g)
        assert is_matching(g, list(m))
        assert len(m) == len(max_matching_bruteforce(g))


def test_dominating_set_never_grows_when_edges_are_added():
    rng = random.Random(8)
    for _ in range(150):
        n = rng.randint(2, 10)
        g = Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.25))
        missing = [e for e in combinations(range(n), 2) if e not in g.edges]
        if not missing:
            continue
        denser = Graph.from_edges(n, list(g.edges) + [rng.choice(missing)])
        assert len(min_dominating_set(denser)) <= len(min_dominating_set(g))


def min_vertex_cover_size(g):
    for k in range(g.n + 1):
        for cover in combinations(range(g.n), k):
            chosen = set(cover)
            if all(u in chosen or v in chosen for u, v in g.edges):
                return k


def test_matching_meets_konig_bound_on_bipartite_graphs():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(2, 10)
        cut = rng.randint(1, n - 1)
        g = Graph.from_edges(n, ((u, v) for u in range(cut) for v in range(cut, n) if rng.random() < 0.4))
        assert len(max_matching(g)) == min_vertex_cover_size(g)


# -------------------------
# Maximum spanning subgraph in a class
# -------------------------
@pytest.mark.parametrize(
    "g, label, kept",
    [
        (complete(4), "cactus", 4),
        (complete(5), "cactus", 6),
        (cycle(4), "cactus", 4),
        (star(5), "constellation", 5),
        (complete(3), "caterpillar", 2),
        (star(3), "linear-forest", 2),
        (complete(5), "tree", 4),
        (disjoint_union(complete(3), complete(3)), "forest-of-cacti", 6),
    ],
)
def test_max_spanning_examples(g, label, kept):
    sol = max_spanning_in_class(g, label)
    assert len(sol.kept) == kept
    assert sol.deletions == g.m - kept
    assert sol.label == label


def test_connected_label_on_disconnected_host():
    with pytest.raises(InfeasibleError):
        max_spanning_in_class(disjoint_union(complete(3), complete(3)), "cactus")


def test_cactus_edge_limit():
    with pytest.raises(SizeLimitError):
        max_spanning_in_class(complete(5), "cactus", {"cactus_max_edges": 9})


def test_arbitrary_predicate():
    sol = max_spanning_in_class(cycle(4), lambda h: h.max_degree() <= 1)
    assert len(sol.kept) == 2


def test_pruned_search_matches_subset_enumeration():
    for g in connected_atlas(5):
        pruned = max_spanning_in_class(g, "cactus")
        plain = max_spanning_in_class(g, lambda h: is_cactus(h).verdict)
        assert len(pruned.kept) == len(plain.kept)
        lf = max_spanning_in_class(g, "linear-forest")
        plain_lf = max_spanning_in_class(g, lambda h: is_linear_forest(h).verdict)
        assert len(lf.kept) == len(plain_lf.kept)


def test_constellation_deletion_identity():
    # minimum constellation deletion = |E| - |V| + domination number
    for g in connected_atlas(6):
        sol = max_spanning_in_class(g, "constellation")
        assert sol.deletions == g.m - g.n + len(min_dominating_set(g))


@pytest.mark.slow
def test_constellation_deletion_identity_random():
    rng = random.Random(4)
    checked = 0
    while checked < 500:
        n = rng.choice((7, 8))
        g = Graph.from_edges(n, ((u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.4))
        if not is_connected(g) or g.m > 30:
            continue
        sol = max_spanning_in_class(g, "constellation")
        assert sol.deletions == g.m - g.n + len(min_dominating_set(g))
        checked += 1


def test_exists_spanning_with_edges():
    pred = lambda h: is_linear_forest(h).verdict
    assert exists_spanning_with_edges(cycle(4), pred, 3) is not None
    assert exists_spanning_with_edges(cycle(4), pred, 4) is None
    assert exists_spanning_with_edges(cycle(4), pred, 5) is None
    with pytest.raises(SizeLimitError):
        exists_spanning_with_edges(cycle(4), pred, 2, {"spanning_combinations_max": 1})


def test_traceable_exactly_when_a_spanning_linear_forest_keeps_n_minus_one_edges():
    pred = lambda h: is_linear_forest(h).verdict
    for G in nx.graph_atlas_g():
        if not 1 <= G.number_of_nodes() <= 6:
            continue
        g = Graph.from_networkx(G)
        found = exists_spanning_with_edges(g, pred, g.n - 1)
        assert (found is not None) == (hamiltonian_path(g) is not None)
