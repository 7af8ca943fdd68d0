import itertools
import math

import pytest

import arrowing as ar

EXAMPLE = "p 223sat 3 4\n1 2 3 0\n-1 -2 3 0\n1 -2 -3 0\n-1 2 -3 0\n"


def brute_p3_k3(g):
    """Try every colouring: red must be a matching, blue must hold no triangle."""
    edges = g.edges
    triangles = [
        t
        for t in itertools.combinations(range(g.vertex_count), 3)
        if all(tuple(p) in set(edges) for p in itertools.combinations(t, 2))
    ]
    for mask in range(1 << len(edges)):
        red = [e for i, e in enumerate(edges) if mask >> i & 1]
        touched = [v for e in red for v in e]
        if len(touched) != len(set(touched)):
            continue
        red_set = set(red)
        if all(any(p in red_set for p in itertools.combinations(t, 2)) for t in triangles):
            return False
    return True


def test_graph_basics():
    g = ar.Graph(4, [(0, 1), (2, 1), (3, 0)])
    assert g.vertex_count == 4
    assert g.edges == [(0, 1), (0, 3), (1, 2)]
    assert ar.Graph.from_shorthand("k4") == ar.complete_graph(4)
    assert ar.Graph.from_edge_list(ar.cycle_graph(5).to_edge_list()) == ar.cycle_graph(5)
    with pytest.raises(ar.ArrowingError):
        ar.Graph(3, [(0, 0)])
    with pytest.raises(ar.ArrowingError):
        ar.Graph.from_shorthand("nope")


def test_linkage_and_copies():
    assert math.isinf(ar.mepl(ar.star_graph(4)))
    assert math.isinf(ar.mepl(ar.complete_graph(3)))
    assert ar.mepl(ar.cycle_graph(4)) == 2
    assert ar.epl(ar.complete_graph(4), (0, 1), (2, 3)) == 4
    assert ar.count_copies(ar.complete_graph(4), ar.complete_graph(3)) == 4
    c4 = ar.cycle_graph(4)
    assert ar.count_copies(ar.combine_on_edge(c4, (0, 1)), c4) == 2


def test_p3_k3_matches_brute_force():
    for n in range(3, 7):
        for pairs in [list(itertools.combinations(range(n), 2))[::k] for k in (1, 2, 3)]:
            g = ar.Graph(n, pairs)
            d = ar.decide_p3_k3(g)
            assert d["arrows"] == brute_p3_k3(g)
            assert d["matching_weight"] <= d["t"]
            if not d["arrows"]:
                assert ar.is_good(g, d["certificate"], ar.path_graph(3), ar.complete_graph(3))
    k5 = ar.decide_p3_k3(ar.complete_graph(5))
    assert (k5["arrows"], k5["t"], k5["matching_weight"]) == (True, 10, 6)


def test_generic_arrows():
    r = ar.arrows(ar.complete_graph(6), ar.complete_graph(3), ar.complete_graph(3))
    assert r["arrows"] is True and r["certificate"] is None
    r = ar.arrows(ar.complete_graph(5), ar.complete_graph(3), ar.complete_graph(3))
    assert r["arrows"] is False
    assert ar.is_good(ar.complete_graph(5), r["certificate"], ar.complete_graph(3), ar.complete_graph(3))
    assert ar.arrows(ar.complete_graph(6), ar.complete_graph(3), ar.complete_graph(3), budget=1)["arrows"] is None


def test_prune_and_tk():
    tailed = ar.Graph.from_edge_list("5 5\n0 1\n1 2\n2 3\n0 3\n3 4\n")
    pruned, removed = ar.prune_non_h_edges(tailed, ar.cycle_graph(4))
    assert removed == [(3, 4)] and pruned.edge_count == 4
    assert ar.check_tk_equivalence(ar.complete_graph(5))["agreement"] == "agree"


def test_formulas():
    n, clauses = ar.parse_formula(EXAMPLE)
    assert n == 3 and len(clauses) == 4
    a = ar.sat_oracle(EXAMPLE)
    assert a is not None
    assert all(any((lit > 0) == a[abs(lit) - 1] for lit in c) for c in clauses)
    texts = ar.generate_formulas(6, 7, 5)
    assert len(set(texts)) == 5
    with pytest.raises(ar.ArrowingError):
        ar.parse_formula("p 223sat 3 4\n1 2 3 0\n")


def test_gadgets_and_reduction():
    k4 = ar.complete_graph(4)
    suite = ar.forge_p3_suite(k4)
    for part in suite.values():
        assert part["verified"] and part["copies_reconcile"]
    a = ar.sat_oracle(EXAMPLE)
    r = ar.reduce(EXAMPLE, k4, a)
    assert r["vertex_count"] == r["expected_vertex_count"]
    assert r["copies_reconcile"]
    assert r["certificate_good"]
    assert r["decoded"] == a
    with pytest.raises(ar.ArrowingError):
        ar.reduce(EXAMPLE, k4, [False, False, False])
