from itertools import combinations, permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bergesat.graph import (
    ClassTag,
    Graph,
    canonical_code,
    classify_for_theorem,
    complete,
    cycle,
    encode,
    enumerate_graphs,
    has_vertex_cover_le2,
    is_star,
    is_two_star_union,
    max_degree,
    path,
    predicted_sat,
    star,
)


@st.composite
def graphs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


def brute_cover(g):
    for size in range(0, 3):
        for c in combinations(range(1, g.n + 1), size):
            if all(u in c or v in c for u, v in g.edges):
                return c
    return None


def test_graph_normalises_edges():
    g = Graph(4, ((3, 1), (2, 1)))
    assert g.edges == ((1, 2), (1, 3))
    with pytest.raises(ValueError):
        Graph(3, ((1, 1),))
    with pytest.raises(ValueError):
        Graph(3, ((1, 4),))


def test_max_degree():
    assert max_degree(star(5)) == 4
    assert max_degree(path(4)) == 2
    assert max_degree(Graph(3)) == 0


def test_is_star():
    assert is_star(Graph(5, ((1, 2), (1, 3), (1, 4), (1, 5)))) == 1
    assert is_star(path(4)) is None
    assert is_star(Graph(2, ((1, 2),))) == 1
    with pytest.raises(ValueError, match="empty graph not classifiable"):
        is_star(Graph(3))


def test_vertex_cover_le2():
    assert has_vertex_cover_le2(complete(3)) == (1, 2)
    assert has_vertex_cover_le2(cycle(5)) is None
    assert has_vertex_cover_le2(Graph(5, ((1, 2), (1, 3), (4, 5)))) == (1, 4)
    assert has_vertex_cover_le2(Graph(4)) == ()


def test_vertex_cover_exhaustive_small():
    for n in range(1, 6):
        pairs = list(combinations(range(1, n + 1), 2))
        for bits in range(1 << len(pairs)):
            g = Graph(n, tuple(p for i, p in enumerate(pairs) if bits >> i & 1))
            assert has_vertex_cover_le2(g) == brute_cover(g)


def test_vertex_cover_six_vertex_classes():
    for g in enumerate_graphs(6, 15):
        if g.n == 6:
            assert has_vertex_cover_le2(g) == brute_cover(g)


@given(graphs())
def test_star_center_is_a_cover(g):
    if not g.edges:
        return
    center = is_star(g)
    cover = has_vertex_cover_le2(g)
    if center is not None:
        assert cover is not None and len(cover) == 1
        assert all(center in e for e in g.edges)


def test_two_star_union():
    assert is_two_star_union(Graph(6, ((1, 2), (1, 3), (4, 5), (4, 6)))) == (1, 4)
    assert is_two_star_union(complete(3)) == (1, 2)
    assert is_two_star_union(cycle(5)) is None
    assert is_two_star_union(star(5)) is None


def test_classify_and_predict():
    assert classify_for_theorem(star(5)).tag is ClassTag.STAR_WITH_AT_LEAST_4_EDGES
    assert classify_for_theorem(star(5)).center == 1
    assert classify_for_theorem(star(4)).tag is ClassTag.OTHER
    assert classify_for_theorem(complete(3)).tag is ClassTag.OTHER
    assert predicted_sat(star(5)) == 4
    assert predicted_sat(complete(3)) == 2
    assert predicted_sat(path(4)) == 2
    with pytest.raises(ValueError, match="isolated vertices not allowed"):
        classify_for_theorem(Graph(4, ((1, 2), (2, 3))))


@given(graphs())
def test_classification_matches_prediction(g):
    if not g.edges or g.isolated_vertices():
        return
    big_star = classify_for_theorem(g).tag is ClassTag.STAR_WITH_AT_LEAST_4_EDGES
    assert big_star == (predicted_sat(g) == g.num_edges)
    if not big_star:
        assert predicted_sat(g) == g.num_edges - 1


def test_enumerate_counts():
    assert enumerate_graphs(2, 1) == [Graph(2, ((1, 2),))]
    assert len(enumerate_graphs(3, 3)) == 3
    assert len(enumerate_graphs(4, 6)) == 10
    with pytest.raises(ValueError, match="enumeration bound exceeded"):
        enumerate_graphs(8, 3)


def _brute_classes(n_max, e_max):
    seen = set()
    for k in range(2, n_max + 1):
        pairs = list(combinations(range(1, k + 1), 2))
        for bits in range(1, 1 << len(pairs)):
            es = [p for i, p in enumerate(pairs) if bits >> i & 1]
            if len(es) > e_max or {v for e in es for v in e} != set(range(1, k + 1)):
                continue
            key = min(
                tuple(sorted(tuple(sorted((p[a - 1], p[b - 1]))) for a, b in es))
                for p in permutations(range(1, k + 1))
            )
            seen.add((k, key))
    return seen


def _iso(g, h):
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    target = set(h.edges)
    return any(
        {tuple(sorted((p[u - 1], p[v - 1]))) for u, v in g.edges} == target
        for p in permutations(range(1, g.n + 1))
    )


def test_enumerate_matches_brute_force():
    got = enumerate_graphs(5, 6)
    assert len(got) == len(_brute_classes(5, 6))
    for i, g in enumerate(got):
        assert not g.isolated_vertices() and 1 <= g.num_edges <= 6
        assert encode(g) == canonical_code(g)
        for h in got[i + 1:]:
            assert not _iso(g, h)


def test_enumerate_sorted_and_deterministic():
    got = enumerate_graphs(5, 5)
    keys = [(g.n, g.num_edges, encode(g)) for g in got]
    assert keys == sorted(keys)
    assert got == enumerate_graphs(5, 5)


def test_canonical_code_is_relabeling_invariant():
    g = Graph(5, ((1, 2), (2, 3), (3, 4), (4, 5), (1, 3)))
    base = canonical_code(g)
    for p in list(permutations(range(1, 6)))[::7]:
        assert canonical_code(g.relabel({v: p[v - 1] for v in range(1, 6)})) == base
