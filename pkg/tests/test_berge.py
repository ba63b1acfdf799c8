import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bergesat.berge import (
    BergeWitness,
    certificate_condition_iii,
    condition_iii_graph,
    contains_berge,
    contains_berge_oracle,
    validate_witness,
)
from bergesat.constructions import construct_hnm, construct_hprime
from bergesat.graph import Graph, complete, enumerate_graphs, has_vertex_cover_le2, path, star
from bergesat.hypergraph import Hypergraph, SetSystem, add_edge, iter_masks_ge2
from bergesat.matching import MatchKind

PAPER_HOST = Hypergraph(4, [[1, 2], [2, 3, 4], [1, 2, 3, 4]])


def test_paper_triangle_example(backend):
    w = contains_berge(complete(3), PAPER_HOST)
    assert w is not None
    assert validate_witness(complete(3), PAPER_HOST, w)
    assert w.vertex_map == {1: 1, 2: 2, 3: 3}
    hyper = {e: PAPER_HOST.hyperedges[j] for e, j in w.edge_assignment.items()}
    assert hyper == {(1, 2): (1, 2), (2, 3): (2, 3, 4), (1, 3): (1, 2, 3, 4)}


def test_too_few_hyperedges(backend):
    assert contains_berge(complete(3), Hypergraph(3, [[1, 2, 3], [2, 3]])) is None
    assert contains_berge_oracle(complete(3), Hypergraph(3, [[1, 2, 3], [2, 3]])) is None


def test_path_in_h42(backend):
    h = construct_hnm(4, 2)
    assert contains_berge(path(4), h) is None
    assert contains_berge_oracle(path(4), h) is None
    h2 = add_edge(h, [1, 2])
    w = contains_berge(path(4), h2)
    assert w is not None and validate_witness(path(4), h2, w)
    assert contains_berge_oracle(path(4), h2) is not None


def test_single_edge_oracle():
    w = contains_berge_oracle(Graph(2, ((1, 2),)), Hypergraph(3, [[1, 2, 3]]))
    assert w is not None and validate_witness(Graph(2, ((1, 2),)), Hypergraph(3, [[1, 2, 3]]), w)


def test_errors():
    with pytest.raises(ValueError, match="isolated vertices not allowed"):
        contains_berge(Graph(3, ((1, 2),)), PAPER_HOST)
    assert contains_berge(star(6), PAPER_HOST) is None
    with pytest.raises(ValueError, match="oracle bound exceeded"):
        contains_berge_oracle(star(8), PAPER_HOST)


def test_validate_rejects_bad_witnesses():
    g = complete(3)
    good = contains_berge(g, PAPER_HOST)
    shared = BergeWitness(good.vertex_map, {**good.edge_assignment, (1, 3): good.edge_assignment[(2, 3)]})
    assert not validate_witness(g, PAPER_HOST, shared)
    squashed = BergeWitness({1: 1, 2: 1, 3: 3}, good.edge_assignment)
    assert not validate_witness(g, PAPER_HOST, squashed)
    outside = BergeWitness({1: 1, 2: 3, 3: 4}, good.edge_assignment)
    assert not validate_witness(g, PAPER_HOST, outside)


def test_witness_json_roundtrip():
    w = contains_berge(complete(3), PAPER_HOST)
    assert BergeWitness.from_json(w.to_json()) == w


def _grid_hosts():
    for n in range(2, 5):
        universe = list(iter_masks_ge2(n))
        for m in range(0, 5):
            for masks in combinations(universe, m):
                yield Hypergraph.from_masks(n, masks)


def test_oracle_equivalence_exhaustive_grid(backend):
    graphs = enumerate_graphs(4, 6)
    hosts = list(_grid_hosts())
    checked = 0
    for h in hosts:
        for g in graphs:
            if g.n > h.n:
                continue
            w = contains_berge(g, h)
            o = contains_berge_oracle(g, h)
            assert (w is None) == (o is None), (g, h)
            if w is not None:
                assert validate_witness(g, h, w)
                assert validate_witness(g, h, o)
            checked += 1
    assert checked > 3000


def random_instance(rng):
    k = rng.randint(2, 5)
    pairs = list(combinations(range(1, k + 1), 2))
    while True:
        edges = rng.sample(pairs, rng.randint(1, min(len(pairs), 6)))
        g = Graph(k, tuple(edges))
        if not g.isolated_vertices():
            break
    n = rng.randint(k, 6)
    universe = list(iter_masks_ge2(n))
    h = Hypergraph.from_masks(n, rng.sample(universe, rng.randint(0, min(6, len(universe)))))
    return g, h


def test_oracle_equivalence_random(backend):
    rng = random.Random(20240611)
    for _ in range(300):
        g, h = random_instance(rng)
        w = contains_berge(g, h)
        assert (w is None) == (contains_berge_oracle(g, h) is None), (g, h)
        if w is not None:
            assert validate_witness(g, h, w)


@settings(max_examples=40, deadline=None)
@given(st.randoms(use_true_random=False))
def test_monotone_under_adding_edges(rnd):
    g, h = random_instance(rnd)
    if contains_berge(g, h) is None:
        return
    extra = [m for m in iter_masks_ge2(h.n) if m not in h.masks]
    for e in extra[:5]:
        assert contains_berge(g, add_edge(h, e)) is not None


def test_pigeonhole():
    for g in enumerate_graphs(4, 6):
        h = construct_hnm(6, g.num_edges - 1) if g.num_edges > 1 else Hypergraph(6)
        assert contains_berge(g, h) is None


def test_condition_iii_examples():
    res = certificate_condition_iii(path(4), (2, 3), construct_hprime(4, 2))
    assert res.kind is MatchKind.PERFECT and res.pairs == ((0, 0), (1, 1))
    res = certificate_condition_iii(complete(3), (1, 2), construct_hprime(3, 2))
    assert res.kind is MatchKind.PERFECT and res.pairs == ((0, 0), (1, 1))
    res = certificate_condition_iii(Graph(4, ((1, 2), (3, 4))), (1, 2), SetSystem(4, [[3]]))
    assert res.kind is MatchKind.DEFICIENT and res.violator == frozenset({0})
    with pytest.raises(ValueError, match="parts of F have unequal size"):
        certificate_condition_iii(path(4), (2, 3), construct_hprime(4, 3))


def _cert_instances(max_n=5):
    for g in enumerate_graphs(max_n, 10):
        m = g.num_edges - 1
        if m < 1:
            continue
        for n in range(max(g.n, 2), max_n + 1):
            if m > n * (n - 1) // 2 or (m >= n + 2 and n < 4):
                continue
            for ij in g.edges:
                yield g, ij, n, m


def test_certificate_soundness_and_violator_structure(backend):
    perfect = deficient = 0
    for g, ij, n, m in _cert_instances():
        hprime = construct_hprime(n, m)
        res = certificate_condition_iii(g, ij, hprime)
        if res.is_perfect:
            perfect += 1
            rest = g.remove_edge(ij).drop_isolated()
            assert contains_berge(rest, construct_hnm(n, m)) is not None
        else:
            deficient += 1
            left, right, f = condition_iii_graph(g, ij, hprime)
            s_edges = [left[i] for i in res.violator]
            q = [right[j] for j in range(len(right)) if j not in f.neighborhood(res.violator)]
            assert all(mask & (1 << (u - 1) | 1 << (v - 1)) for mask in q for u, v in s_edges)
            if any(bin(mask).count("1") == 2 for mask in q):
                assert has_vertex_cover_le2(Graph(g.n, tuple(s_edges))) is not None
    assert perfect > 50 and deficient > 0
