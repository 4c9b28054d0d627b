import itertools
import random

import pytest
from fractions import Fraction

from hypercover import rgraph
from hypercover.rgraph import HypergraphError, ParseError


def test_from_edge_list_k4_minus():
    G = rgraph.from_edge_list(3, 4, [[0, 1, 2], [0, 1, 3], [0, 2, 3]])
    assert G.r == 3 and G.n == 4 and len(G.edges) == 3


def test_from_edge_list_empty_and_triangle():
    assert rgraph.from_edge_list(3, 4, []).edges == ()
    K3 = rgraph.from_edge_list(2, 3, [[0, 1], [1, 2], [2, 0]])
    assert K3.edges == ((0, 1), (0, 2), (1, 2))


def test_from_edge_list_sorts_and_dedupes():
    G = rgraph.from_edge_list(3, 5, [[4, 2, 0], [0, 2, 4], [3, 1, 0]])
    assert G.edges == ((0, 1, 3), (0, 2, 4))


@pytest.mark.parametrize(
    "r,n,edges",
    [
        (1, 3, []),
        (3, 2, []),
        (3, 4, [[0, 1]]),
        (3, 4, [[0, 1, 4]]),
        (3, 4, [[0, 1, 1]]),
        (3, 4, [[-1, 0, 1]]),
    ],
)
def test_from_edge_list_rejects(r, n, edges):
    with pytest.raises(HypergraphError):
        rgraph.from_edge_list(r, n, edges)


def test_degree_examples():
    K4 = rgraph.complete(3, 4)
    assert rgraph.degree(K4, (0,)) == 3
    K4m = rgraph.from_edge_list(3, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    assert rgraph.degree(K4m, (1, 2)) == 1
    assert rgraph.degree(rgraph.empty(3, 5), (2,)) == 0
    with pytest.raises(HypergraphError):
        rgraph.degree(K4, (0, 1, 2, 3))


def test_min_i_degree_complete():
    K4 = rgraph.complete(3, 4)
    assert rgraph.min_i_degree(K4, 2) == (2, (0, 1))
    assert rgraph.min_i_degree(K4, 1) == (3, (0,))
    with pytest.raises(HypergraphError):
        rgraph.min_i_degree(K4, 3)


def test_link_of_complete():
    K4 = rgraph.complete(3, 4)
    res = rgraph.link(K4, (3,))
    assert res.graph == rgraph.complete(2, 3)
    assert res.original_labels == (0, 1, 2)


def test_link_relabelling():
    K4m = rgraph.from_edge_list(3, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    res = rgraph.link(K4m, (0,))
    assert res.graph == rgraph.complete(2, 3)
    assert res.original_labels == (1, 2, 3)
    with pytest.raises(HypergraphError):
        rgraph.link(K4m, ())
    with pytest.raises(HypergraphError):
        rgraph.link(K4m, (0, 1, 2))


def test_edge_density():
    assert rgraph.edge_density(rgraph.complete(3, 4)) == 1
    assert rgraph.edge_density(rgraph.empty(3, 6)) == 0
    K4m = rgraph.from_edge_list(3, 4, [(0, 1, 2), (0, 1, 3), (0, 2, 3)])
    assert rgraph.edge_density(K4m) == Fraction(3, 4)


def _random_graph(rng, r, n):
    edges = [e for e in itertools.combinations(range(n), r) if rng.random() < 0.4]
    return rgraph.from_edge_list(r, n, edges)


def test_handshake_sweep():
    rng = random.Random(1)
    for _ in range(50):
        r = rng.choice((2, 3, 4))
        n = rng.randrange(r, 10)
        G = _random_graph(rng, r, n)
        assert sum(G.vertex_degrees) == r * len(G.edges)


def test_link_size_matches_degree():
    rng = random.Random(2)
    for _ in range(40):
        r = rng.choice((3, 4))
        n = rng.randrange(r + 1, 10)
        G = _random_graph(rng, r, n)
        for size in range(1, r):
            S = tuple(sorted(rng.sample(range(n), size)))
            assert len(rgraph.link(G, S).graph.edges) == rgraph.degree(G, S)


def test_degrees_monotone_under_edge_addition():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(4, 9)
        G = _random_graph(rng, 3, n)
        missing = [e for e in itertools.combinations(range(n), 3) if e not in G.edge_set]
        if not missing:
            continue
        G2 = rgraph.from_edge_list(3, n, list(G.edges) + [rng.choice(missing)])
        for i in (1, 2):
            assert rgraph.min_i_degree(G2, i).value >= rgraph.min_i_degree(G, i).value


def test_text_roundtrip(tmp_path):
    rng = random.Random(4)
    for _ in range(20):
        r = rng.choice((2, 3))
        n = rng.randrange(r, 9)
        G = _random_graph(rng, r, n)
        path = tmp_path / "g.hg"
        rgraph.save(G, path)
        assert rgraph.load(path) == G
    text = rgraph.to_text(rgraph.complete(3, 4))
    assert text.endswith("\n")
    assert text.splitlines()[0] == "3 4"


def test_text_comments_and_errors():
    G = rgraph.from_text("# a comment\n3 4\n0 1 2\n\n# tail\n0 1 3\n")
    assert len(G.edges) == 2
    with pytest.raises(ParseError) as exc:
        rgraph.from_text("3 4\n0 1\n")
    assert exc.value.line == 2
    with pytest.raises(ParseError):
        rgraph.from_text("3 4\n2 1 0\n")  # not ascending
    with pytest.raises(ParseError):
        rgraph.from_text("# only comments\n")
    with pytest.raises(ParseError):
        rgraph.from_text("3 4\n0 1 x\n")


def test_exactness_types():
    G = rgraph.from_edge_list(3, 5, [(0, 1, 2)])
    assert isinstance(rgraph.edge_density(G), Fraction)
    assert isinstance(rgraph.degree(G, (0,)), int)
