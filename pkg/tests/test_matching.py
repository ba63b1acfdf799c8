import random

from hypothesis import given
from hypothesis import strategies as st

from bergesat.matching import BipartiteGraph, MatchKind, max_matching, perfect_or_violator


def brute_optimum(b: BipartiteGraph) -> int:
    best = 0

    def rec(u, used, size):
        nonlocal best
        if size + (b.left_size - u) <= best:
            return
        if u == b.left_size:
            best = max(best, size)
            return
        for r in b.adjacency[u]:
            if r not in used:
                rec(u + 1, used | {r}, size + 1)
        rec(u + 1, used, size)

    rec(0, frozenset(), 0)
    return best


@st.composite
def bipartite(draw, max_side=7):
    left = draw(st.integers(0, max_side))
    right = draw(st.integers(0, max_side))
    adj = [draw(st.sets(st.integers(0, right - 1), max_size=right)) if right else set() for _ in range(left)]
    return BipartiteGraph(left, right, adj)


def check_matching(b, pairs):
    lefts = [u for u, _ in pairs]
    rights = [r for _, r in pairs]
    assert len(set(lefts)) == len(lefts) and len(set(rights)) == len(rights)
    assert all(r in b.adjacency[u] for u, r in pairs)


def test_examples():
    assert len(max_matching(BipartiteGraph(2, 2, [{0, 1}, {0, 1}]))) == 2
    assert len(max_matching(BipartiteGraph(3, 1, [{0}, {0}, {0}]))) == 1
    assert max_matching(BipartiteGraph(2, 2, [{0}, {0, 1}])) == [(0, 0), (1, 1)]


def test_violator_examples():
    res = perfect_or_violator(BipartiteGraph(3, 1, [{0}, {0}, {0}]))
    assert res.kind is MatchKind.DEFICIENT
    assert len(res.violator) == 2
    b = BipartiteGraph(3, 1, [{0}, {0}, {0}])
    assert len(b.neighborhood(res.violator)) == 1
    empty = perfect_or_violator(BipartiteGraph(0, 3, []))
    assert empty.kind is MatchKind.PERFECT and empty.pairs == ()


@given(bipartite())
def test_matches_exhaustive_optimum(b):
    pairs = max_matching(b)
    check_matching(b, pairs)
    assert len(pairs) == brute_optimum(b)


@given(bipartite())
def test_perfect_iff_full_and_violator_certifies(b):
    res = perfect_or_violator(b)
    check_matching(b, res.pairs)
    assert (res.kind is MatchKind.PERFECT) == (len(max_matching(b)) == b.left_size)
    if res.kind is MatchKind.DEFICIENT:
        assert len(b.neighborhood(res.violator)) < len(res.violator)
    else:
        assert len(res.pairs) == b.left_size


def test_deterministic():
    rng = random.Random(7)
    for _ in range(50):
        left, right = rng.randint(0, 7), rng.randint(1, 7)
        b = BipartiteGraph(left, right, [rng.sample(range(right), rng.randint(0, right)) for _ in range(left)])
        assert perfect_or_violator(b) == perfect_or_violator(b)
        assert max_matching(b) == max_matching(BipartiteGraph(left, right, b.adjacency))


def test_brute_force_oracle_itself():
    assert brute_optimum(BipartiteGraph(3, 3, [{0, 1, 2}] * 3)) == 3
    assert brute_optimum(BipartiteGraph(3, 2, [{0}, {0}, {0, 1}])) == 2
