import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from distrank.graph import (
    DomainError,
    InvalidEdgeError,
    NotConnectedError,
    ParseError,
    are_false_twins,
    are_true_twins,
    build_graph,
    diameter,
    disjoint_union,
    distance_exact_matrix,
    distance_matrix,
    graph_from_mask,
    graph_to_mask,
    is_connected,
    is_isometric_subgraph,
    join,
    make_complete,
    make_cycle,
    make_empty,
    make_path,
    make_star,
    max_degree,
    parse_edge_list,
    parse_graph6,
    read_graph,
    to_edge_list,
    to_graph6,
)
from distrank.iso import is_isomorphic
from distrank.linalg import rank

from .conftest import connected_graphs, random_connected


def test_build_graph_examples():
    p3 = build_graph(3, [(0, 1), (1, 2)])
    assert p3 == make_path(3)
    assert build_graph(1, []).n == 1
    c4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4 == make_cycle(4)
    assert build_graph(3, [(0, 1), (1, 0), (0, 1)]).m == 1


def test_build_graph_errors():
    with pytest.raises(InvalidEdgeError):
        build_graph(3, [(1, 1)])
    with pytest.raises(IndexError):
        build_graph(3, [(0, 3)])
    with pytest.raises(DomainError):
        make_cycle(2)


def test_constructors():
    assert make_complete(3).m == 3
    assert sorted(make_star(4).degrees(), reverse=True) == [3, 1, 1, 1]
    assert make_cycle(5).degrees() == [2] * 5
    assert make_path(4).m == 3


def test_join_and_union():
    assert join(make_empty(1), make_empty(1)) == make_complete(2)
    g = join(make_empty(2), make_empty(2))
    assert g.m == 4 and g.degrees() == [2, 2, 2, 2] and is_connected(g)
    assert is_isomorphic(g, make_cycle(4))
    u = disjoint_union(make_complete(2), make_empty(1))
    assert (u.n, u.m) == (3, 1)


def test_distance_matrix_examples():
    assert distance_matrix(make_path(3)) == ((0, 1, 2), (1, 0, 1), (2, 1, 0))
    k4 = distance_matrix(make_complete(4))
    assert all(k4[i][j] == (i != j) for i in range(4) for j in range(4))
    c4 = distance_matrix(make_cycle(4))
    assert c4[0][2] == c4[1][3] == 2 and c4[0][1] == 1
    with pytest.raises(NotConnectedError):
        distance_matrix(disjoint_union(make_complete(2), make_empty(1)))


def test_metrics():
    assert diameter(make_cycle(5)) == 2
    assert max_degree(make_star(6)) == 5
    assert not is_connected(disjoint_union(make_complete(2), make_empty(1)))
    with pytest.raises(NotConnectedError):
        diameter(make_empty(2))


@settings(max_examples=200, deadline=None)
@given(connected_graphs(max_n=9))
def test_distance_matrix_invariants(g):
    d = distance_matrix(g)
    n = g.n
    for i in range(n):
        assert d[i][i] == 0
        for j in range(n):
            assert d[i][j] == d[j][i]
            if i != j:
                assert d[i][j] >= 1
                assert (d[i][j] == 1) == g.has_edge(i, j)
            for k in range(n):
                assert d[i][k] <= d[i][j] + d[j][k]


def test_isometric_subgraph_examples():
    c6 = make_cycle(6)
    assert is_isometric_subgraph(c6, [0, 1, 2])
    # four consecutive vertices of C6: endpoints are 3 apart in both P4 and C6
    assert distance_matrix(c6)[0][3] == 3
    assert is_isometric_subgraph(c6, [0, 1, 2, 3])
    # in C5 the endpoints are 3 apart in the induced P4 but 2 apart in C5
    assert distance_matrix(make_cycle(5))[0][3] == 2
    assert not is_isometric_subgraph(make_cycle(5), [0, 1, 2, 3])
    # five consecutive vertices of C6: 0 and 4 are 4 apart in P5, 2 in C6
    assert not is_isometric_subgraph(c6, [0, 1, 2, 3, 4])
    assert is_isometric_subgraph(random_connected(7, random.Random(1)), range(7))
    with pytest.raises(DomainError):
        is_isometric_subgraph(c6, [])


def _connected_subsets(g, rng, tries=20):
    for _ in range(tries):
        size = rng.randint(1, g.n)
        s = rng.sample(range(g.n), size)
        if is_connected(g.induced(s)):
            yield s


def test_isometric_subgraph_rank_monotone(rng):
    """rank_d(G[S]) <= rank_d(G) whenever G[S] is isometric."""
    checked = 0
    for _ in range(150):
        g = random_connected(rng.randint(2, 9), rng, p=rng.random() * 0.6)
        rg = rank(distance_exact_matrix(g))
        for s in _connected_subsets(g, rng):
            if is_isometric_subgraph(g, s):
                assert rank(distance_exact_matrix(g.induced(sorted(s)))) <= rg
                checked += 1
    assert checked > 100


def test_diameter_two_subgraphs_are_isometric(rng):
    """A connected induced H with all H-distances <= 2 is isometric."""
    checked = 0
    for _ in range(150):
        g = random_connected(rng.randint(2, 9), rng, p=rng.random())
        for s in _connected_subsets(g, rng):
            h = g.induced(sorted(s))
            if diameter(h) <= 2:
                assert is_isometric_subgraph(g, s)
                checked += 1
    assert checked > 100


def test_twins():
    k3 = make_complete(3)
    assert all(are_true_twins(k3, u, v) for u, v in combinations(range(3), 2))
    c4 = make_cycle(4)
    assert are_false_twins(c4, 0, 2) and are_false_twins(c4, 1, 3)
    p3 = make_path(3)
    pairs = list(combinations(range(3), 2))
    assert [p for p in pairs if are_false_twins(p3, *p)] == [(0, 2)]
    assert not any(are_true_twins(p3, *p) for p in pairs)


# ---------------------------------------------------------------------------
# formats


def test_parse_edge_list():
    assert parse_edge_list("p edge 3 2\ne 1 2\ne 2 3") == make_path(3)
    text = "c comment\n\np edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"
    assert parse_edge_list(text) == make_cycle(4)
    with pytest.raises(InvalidEdgeError):
        parse_edge_list("p edge 2 1\ne 1 1")


@pytest.mark.parametrize(
    "text, line",
    [
        ("e 1 2", 1),
        ("p edge 2 1\ne 1 3", 2),
        ("p edge 2 1\nx 1 2", 2),
        ("p edge 2 2\ne 1 2", 1),
        ("p edge two 1", 1),
        ("p edge 3 1\ne 1", 2),
    ],
)
def test_parse_edge_list_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line


def test_edge_list_roundtrip(rng):
    g = random_connected(8, rng)
    assert parse_edge_list(to_edge_list(g)) == g


def test_graph6_hand_decoded():
    # 'B' -> n = 66 - 63 = 3; 'w' -> 119 - 63 = 56 = 0b111000: pairs (0,1),(0,2),(1,2) set
    assert parse_graph6("Bw") == make_complete(3)
    assert to_graph6(make_complete(3)) == "Bw"
    # 'C' -> n = 4; bits for (0,1),(0,2),(1,2),(0,3),(1,3),(2,3) of P4 0-1-2-3: 1,0,1,0,0,1
    # 0b101001 = 41 -> chr(104) = 'h'
    assert to_graph6(make_path(4)) == "Ch"
    assert parse_graph6("A_") == make_complete(2)
    assert parse_graph6("@") == make_empty(1)


@pytest.mark.parametrize("bad, pos", [("B~", 2), ("", 1), ("Bw\x01", 3), ("Bww", 2)])
def test_graph6_errors(bad, pos):
    with pytest.raises(ParseError) as info:
        parse_graph6(bad)
    assert info.value.pos == pos


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12), st.data())
def test_graph6_roundtrip(n, data):
    mask = data.draw(st.integers(0, (1 << (n * (n - 1) // 2)) - 1))
    g = graph_from_mask(n, mask)
    assert graph_to_mask(g) == mask
    assert parse_graph6(to_graph6(g)) == g


def test_read_graph_autodetect():
    assert read_graph("Bw\n") == make_complete(3)
    assert read_graph("p edge 2 1\ne 1 2\n") == make_complete(2)
