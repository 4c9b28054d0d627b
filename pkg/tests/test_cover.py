import itertools
import random

import pytest

from hypercover import cover, rgraph
from hypercover.constructions import (
    blowup_sts,
    c5_lower,
    efg_graph,
    k4_lower_linkgraph,
    k4minus_lower,
    tau_lower_interval,
    tau_upper_interval,
)
from hypercover.cover import (
    bipartite_edit_distance,
    book_number,
    book_size,
    clique_degree,
    covers,
    cover_witness,
    independence_number,
    k4,
    k4_minus,
    c5,
    k_t,
    clique,
    parse_motif,
    t_max,
    triangle_count,
    uncovered_vertices,
)
from hypercover.rgraph import HypergraphError
from hypercover.steiner import sts
from fractions import Fraction


def test_motif_patterns():
    assert k4().pattern == rgraph.complete(3, 4)
    assert len(k4_minus().pattern.edges) == 3
    assert c5().pattern.edges == (
        (0, 1, 2), (0, 1, 4), (0, 3, 4), (1, 2, 3), (2, 3, 4),
    )
    assert k_t(6).pattern == rgraph.complete(3, 6)
    assert clique(3).pattern == rgraph.complete(2, 3)


def test_parse_motif_names():
    assert parse_motif("k4").name == "k4"
    assert parse_motif("k4-").name == "k4-"
    assert parse_motif("c5").name == "c5"
    assert parse_motif("k7").pattern == rgraph.complete(3, 7)
    assert parse_motif("clique4").pattern == rgraph.complete(3, 4)
    with pytest.raises(HypergraphError):
        parse_motif("pentagon")


def test_covers_inside_complete():
    H = rgraph.complete(3, 4)
    w = cover_witness(H, k4_minus(), 0)
    assert w is not None and 0 in w
    assert covers(H, k4(), 0)


def test_covers_needs_enough_edges():
    H = rgraph.from_edge_list(3, 5, [(0, 1, 2)])
    for v in range(5):
        assert not covers(H, k4_minus(), v)


def test_covers_star_refuted_in_construction():
    H, man = k4minus_lower(9, 3)
    assert not covers(H, k4_minus(), man.claims["star_vertex"])


def test_covers_uniformity_mismatch():
    with pytest.raises(HypergraphError):
        covers(rgraph.complete(2, 4), k4(), 0)


def test_uncovered_vertices_reports():
    rep = uncovered_vertices(rgraph.complete(3, 4), k4())
    assert rep.uncovered == ()
    assert set(rep.witness_per_vertex) == {0, 1, 2, 3}
    H, _ = k4minus_lower(9, 3)
    rep = uncovered_vertices(H, k4_minus())
    assert rep.uncovered == (8,)
    B, _ = blowup_sts(sts(9).triples, 1)
    rep = uncovered_vertices(B, k_t(6))
    assert 9 in rep.uncovered


def test_witness_partition_invariant():
    H, _ = k4minus_lower(9, 3)
    rep = uncovered_vertices(H, k4_minus())
    for v, w in rep.witness_per_vertex.items():
        assert v in w
        assert v not in rep.uncovered
        sub = [e for e in itertools.combinations(sorted(w), 3) if e in H.edge_set]
        assert len(sub) >= 3  # image carries a copy


def test_clique_degree_examples():
    assert clique_degree(rgraph.complete(2, 4), 0, 3) == 3
    G, _ = k4_lower_linkgraph(54)
    assert clique_degree(G, 0, 3) == 432
    T, _ = tau_lower_interval(40, Fraction(11, 20), 2)
    assert clique_degree(T, 7, 3) == 60
    with pytest.raises(HypergraphError):
        clique_degree(rgraph.complete(3, 4), 0, 3)


def _naive_triangle_degree(G, x):
    adj = [set() for _ in range(G.n)]
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    return sum(
        1
        for y, z in itertools.combinations(sorted(adj[x]), 2)
        if z in adj[y]
    )


def test_clique_degree_matches_naive_scan():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randrange(3, 21)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        G = rgraph.from_edge_list(2, n, edges)
        x = rng.randrange(n)
        assert clique_degree(G, x, 3) == _naive_triangle_degree(G, x)


def test_clique_degree_uniformity_3():
    H = rgraph.complete(3, 5)
    # every 4-set through a vertex is a full clique
    assert clique_degree(H, 2, 4) == 4


def test_t_max_examples():
    bip = rgraph.from_edge_list(2, 6, [(i, j) for i in range(3) for j in range(3, 6)])
    assert t_max(bip) == (0, 0)
    assert t_max(rgraph.complete(2, 4)) == (3, 0)
    U, _ = tau_upper_interval(36, Fraction(2, 3), 2, (1, 2, 0))
    assert t_max(U)[0] == 144
    assert t_max(rgraph.empty(2, 4)) == (0, 0)


def test_triangle_degree_averaging():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randrange(3, 15)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        G = rgraph.from_edge_list(2, n, edges)
        total = sum(clique_degree(G, x, 3) for x in range(n))
        assert total == 3 * triangle_count(G)


def test_book_examples():
    K4 = rgraph.complete(2, 4)
    assert book_size(K4, (0, 1)) == 2
    E, _ = efg_graph([3, 5], 1)
    assert all(book_size(E, e) == 3 for e in E.edges)
    bip = rgraph.from_edge_list(2, 4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    assert book_number(bip) == (0, (0, 2))
    assert book_number(rgraph.empty(2, 4)) == (0, None)
    with pytest.raises(HypergraphError):
        book_size(K4, (0, 5))
    with pytest.raises(HypergraphError):
        book_size(bip, (0, 1))


def test_book_triangle_consistency():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randrange(3, 13)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6]
        G = rgraph.from_edge_list(2, n, edges)
        assert sum(book_size(G, e) for e in G.edges) == 3 * triangle_count(G)


def test_covers_monotone_under_edge_addition():
    rng = random.Random(10)
    for _ in range(25):
        n = rng.randrange(4, 8)
        edges = [e for e in itertools.combinations(range(n), 3) if rng.random() < 0.3]
        H = rgraph.from_edge_list(3, n, edges)
        missing = [e for e in itertools.combinations(range(n), 3) if e not in H.edge_set]
        if not missing:
            continue
        H2 = rgraph.from_edge_list(3, n, list(H.edges) + [rng.choice(missing)])
        for v in range(n):
            if covers(H, k4_minus(), v):
                assert covers(H2, k4_minus(), v)


def _naive_bipartite_distance(G):
    best = len(G.edges)
    for mask in range(1 << (G.n - 1)):
        side = [0] + [mask >> i & 1 for i in range(G.n - 1)]
        best = min(best, sum(1 for u, v in G.edges if side[u] == side[v]))
    return best


def test_bipartite_edit_distance_examples():
    K3 = rgraph.complete(2, 3)
    assert bipartite_edit_distance(K3)[0] == 1
    C5 = rgraph.from_edge_list(2, 5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
    assert bipartite_edit_distance(C5)[0] == 1
    value, (a, b) = bipartite_edit_distance(rgraph.complete(2, 4))
    assert value == 2 and len(a) == 2 and len(b) == 2


def test_bipartite_edit_distance_matches_enumeration():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randrange(2, 9)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.5]
        G = rgraph.from_edge_list(2, n, edges)
        assert bipartite_edit_distance(G)[0] == _naive_bipartite_distance(G)


def test_bipartite_edit_distance_limit():
    big = rgraph.empty(2, 30)
    with pytest.raises(HypergraphError):
        bipartite_edit_distance(big)
    assert bipartite_edit_distance(big, exact_limit=30)[0] == 0


def test_independence_number_examples():
    assert independence_number(sts(7).triples)[0] == 4
    assert independence_number(sts(9).triples)[0] == 4
    assert independence_number(rgraph.empty(3, 5)) == (5, (0, 1, 2, 3, 4))


def _naive_alpha(H):
    best = 0
    for size in range(H.n, 0, -1):
        for S in itertools.combinations(range(H.n), size):
            ss = set(S)
            if not any(set(e) <= ss for e in H.edges):
                return size
    return best


def test_independence_number_matches_enumeration():
    rng = random.Random(12)
    for _ in range(25):
        n = rng.randrange(3, 10)
        r = rng.choice((2, 3))
        edges = [e for e in itertools.combinations(range(n), r) if rng.random() < 0.4]
        H = rgraph.from_edge_list(r, n, edges)
        assert independence_number(H)[0] == _naive_alpha(H)


def test_independence_witness_is_lex_minimal():
    H = rgraph.from_edge_list(2, 4, [(0, 1)])
    value, witness = independence_number(H)
    assert value == 3 and witness == (0, 2, 3)
