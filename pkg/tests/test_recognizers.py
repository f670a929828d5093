from itertools import combinations

import networkx as nx
import pytest
from networkx.algorithms.isomorphism import GraphMatcher

from certificates import ClassCertificate
from graph_core import Graph, PreconditionError, SizeLimitError, disjoint_union
from recognizers import (
    NET,
    RECOGNIZERS,
    cactus_cycles,
    in_target_class,
    is_bipartite,
    is_cactus,
    is_caterpillar,
    is_chordal,
    is_constellation,
    is_even_hole_free,
    is_forest_of_cacti,
    is_linear_forest,
    is_path_power,
    is_proper_interval,
    is_quasi_threshold,
    is_tree,
    verify_certificate,
)


def complete(n):
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n):
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves):
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def atlas(n_max):
    for G in nx.graph_atlas_g():
        if 1 <= G.number_of_nodes() <= n_max:
            yield Graph.from_networkx(G)


def has_induced(g, pattern):
    return any(True for _ in GraphMatcher(g.to_networkx(), pattern).subgraph_isomorphisms_iter())


def test_bipartite_sides_and_odd_cycle():
    cert = is_bipartite(cycle(4))
    assert cert.verdict
    assert cert.witness["sides"] == [[0, 2], [1, 3]]

    odd = is_bipartite(cycle(5))
    assert not odd.verdict
    assert odd.witness["name"] == "odd-cycle"
    assert len(odd.witness["cycle"]) == 5


def test_odd_cycle_witness_is_induced():
    # C5 plus the chord 0-2: the only induced odd cycle is the triangle 0-1-2
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)])
    cert = is_bipartite(g)
    assert sorted(cert.witness["cycle"]) == [0, 1, 2]
    assert verify_certificate(g, cert)


def test_chordal_hole_and_peo():
    hole = is_chordal(cycle(4))
    assert not hole.verdict
    assert hole.witness["cycle"] == [0, 1, 2, 3]

    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    cert = is_chordal(diamond)
    assert cert.verdict and sorted(cert.witness["order"]) == [0, 1, 2, 3]


def test_quasi_threshold_witnesses():
    p4 = is_quasi_threshold(path(4))
    assert not p4.verdict
    assert p4.witness["name"] == "P4" and p4.witness["path"] == [0, 1, 2, 3]

    c4 = is_quasi_threshold(cycle(4))
    assert not c4.verdict and c4.witness["name"] == "C4"

    k4 = is_quasi_threshold(complete(4))
    assert k4.witness["forest"][0]["peel"] == [0, 1, 2]

    claw = is_quasi_threshold(star(3))
    node = claw.witness["forest"][0]
    assert node["peel"] == [0]
    assert [c["vertices"] for c in node["children"]] == [[1], [2], [3]]


def test_cactus_family():
    bowtie = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    cert = is_cactus(bowtie)
    assert cert.verdict
    assert cert.witness["cycles"] == [[0, 1, 2], [0, 3, 4]]

    diamond = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
    shared = is_cactus(diamond)
    assert not shared.verdict and shared.witness["name"] == "shared-edge"
    assert verify_certificate(diamond, shared)

    two = disjoint_union(complete(3), complete(3))
    assert is_forest_of_cacti(two).verdict
    split = is_cactus(two)
    assert not split.verdict and split.witness["name"] == "disconnected"


def test_cactus_cycles_helper():
    cycles, rejection = cactus_cycles(cycle(5))
    assert rejection is None and cycles == [[0, 1, 2, 3, 4]]
    cycles, rejection = cactus_cycles(complete(4))
    assert cycles is None and rejection.witness["name"] == "shared-edge"


def test_tree_edge_cases():
    assert not is_tree(Graph(0)).verdict
    assert is_tree(Graph(1)).verdict
    assert is_tree(star(4)).verdict
    assert is_tree(cycle(3)).witness["name"] == "cycle"


def test_caterpillar_spine_and_spider():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)])
    assert is_caterpillar(g).witness["spine"] == [1, 2]

    spider = Graph.from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])
    cert = is_caterpillar(spider)
    assert not cert.verdict
    assert cert.witness["center"] == 0
    assert cert.witness["legs"] == [[1, 2], [3, 4], [5, 6]]
    assert verify_certificate(spider, cert)


def test_constellation_stars_and_p4():
    g = disjoint_union(star(3), Graph.from_edges(2, [(0, 1)]))
    cert = is_constellation(g)
    assert cert.verdict and cert.witness["centers"] == [0, 4]

    p4 = is_constellation(path(4))
    assert not p4.verdict and p4.witness["path"] == [0, 1, 2, 3]


def test_linear_forest():
    g = disjoint_union(path(3), Graph(1))
    assert is_linear_forest(g).witness["paths"] == [[0, 1, 2], [3]]
    assert is_linear_forest(star(3)).witness["name"] == "degree"
    assert is_linear_forest(cycle(3)).witness["name"] == "cycle"


def test_even_hole_free():
    assert not is_even_hole_free(cycle(4)).verdict
    assert is_even_hole_free(cycle(5)).verdict
    assert not is_even_hole_free(cycle(6)).verdict
    with pytest.raises(SizeLimitError):
        in_target_class(cycle(5), "even-hole-free", {"even_hole_max_n": 4})


def test_path_power():
    square = Graph.from_edges(5, [(i, j) for i in range(5) for j in range(i + 1, min(5, i + 3))])
    cert = is_path_power(square)
    assert cert.verdict and cert.witness["k"] == 2
    assert verify_certificate(square, cert)
    assert is_path_power(cycle(4)).witness["name"] == "edge-count"
    assert is_path_power(star(3)).witness["name"] == "no-ordering"


def test_proper_interval_obstructions():
    assert is_proper_interval(star(3)).witness["name"] == "claw"
    assert is_proper_interval(Graph.from_networkx(NET)).witness["name"] == "net"
    assert is_proper_interval(path(4)).verdict


def test_unknown_label():
    with pytest.raises(PreconditionError):
        in_target_class(path(2), "planar")


def test_agrees_with_networkx():
    for g in atlas(6):
        G = g.to_networkx()
        assert is_bipartite(g).verdict == nx.is_bipartite(G)
        assert is_chordal(g).verdict == nx.is_chordal(G)
        assert in_target_class(g, "forest").verdict == nx.is_forest(G)
        assert is_tree(g).verdict == nx.is_tree(G)


def test_quasi_threshold_is_p4_c4_free():
    p4, c4 = nx.path_graph(4), nx.cycle_graph(4)
    for g in atlas(6):
        expected = not has_induced(g, p4) and not has_induced(g, c4)
        assert is_quasi_threshold(g).verdict == expected


def test_every_certificate_reverifies():
    for g in atlas(5):
        for label in RECOGNIZERS:
            cert = in_target_class(g, label)
            assert verify_certificate(g, cert), (label, sorted(g.edges))


def test_tampered_certificate_fails():
    g = cycle(4)
    forged = ClassCertificate("bipartite", True, {"kind": "bipartition", "sides": [[0, 1], [2, 3]]})
    assert not verify_certificate(g, forged)
    round_trip = ClassCertificate.from_dict(is_bipartite(g).to_dict())
    assert verify_certificate(g, round_trip)
