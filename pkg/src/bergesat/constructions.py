"""Explicit saturated hypergraphs: H_t(n), H'(n, m), H(n, m) and the small-star/triangle witnesses."""

from __future__ import annotations

from math import comb

from .graph import Graph
from .hypergraph import Hypergraph, SetSystem, complement_system, full_mask, to_mask

SPECIAL_KINDS = {"S2": 2, "S3": 3, "S4": 4, "K3": 3}


def construct_ht(n: int, t: int) -> Hypergraph:
    """([n], {[n], [n]-{1}, ..., [n]-{t-3}, [t-3]}) for t >= 5, n >= t."""
    if t < 5 or n < t:
        raise ValueError("parameters outside Lemma regime")
    full = full_mask(n)
    masks = [full] + [full ^ (1 << (i - 1)) for i in range(1, t - 2)] + [full_mask(t - 3)]
    return Hypergraph.from_masks(n, masks)


def almost_regular_edges(n: int, k: int) -> Graph:
    """A graph on [n] with k edges whose degrees differ by at most one.

    Greedy: join the least-labelled minimum-degree vertex u to its least-labelled
    minimum-degree non-neighbour.  If that would leave a degree gap of two, add
    an edge between u and another minimum-degree vertex w instead, which is
    always possible after swapping out one edge xy for ux and wy.
    """
    if k < 0 or k > comb(n, 2):
        raise ValueError("too many edges")
    adj = [set() for _ in range(n + 1)]
    deg = [0] * (n + 1)

    def link(a: int, b: int) -> None:
        adj[a].add(b)
        adj[b].add(a)
        deg[a] += 1
        deg[b] += 1

    def unlink(a: int, b: int) -> None:
        adj[a].discard(b)
        adj[b].discard(a)
        deg[a] -= 1
        deg[b] -= 1

    verts = range(1, n + 1)
    for _ in range(k):
        d = min(deg[v] for v in verts)
        u = next(v for v in verts if deg[v] == d)
        others = [v for v in verts if v != u and v not in adj[u]]
        dv = min(deg[v] for v in others)
        v = next(x for x in others if deg[x] == dv)
        remaining_min = sum(1 for x in verts if deg[x] == d) - 1 - (dv == d)
        if dv == d or remaining_min == 0:
            link(u, v)
            continue
        # u's only non-neighbours sit one above the minimum while another
        # minimum-degree vertex exists; it must be adjacent to u.
        w = next(x for x in verts if x != u and deg[x] == d)
        for x, y in sorted((a, b) for a in verts for b in adj[a] if a < b):
            for a, b in ((x, y), (y, x)):
                if a not in adj[u] and a != u and b not in adj[w] and b != w:
                    unlink(a, b)
                    link(u, a)
                    link(w, b)
                    break
            else:
                continue
            break
        else:  # degree counting rules this out
            raise RuntimeError(f"almost-regular repair failed at n={n}, k={k}")
    return Graph(n, tuple((a, b) for a in verts for b in adj[a] if a < b))


def construct_hprime(n: int, m: int) -> SetSystem:
    """{∅} ∪ {{1},...,{x}} ∪ E' with x = min(m-1, n) and E' almost regular of size m-x-1."""
    if m < 1 or m > comb(n, 2):
        raise ValueError("m outside construction range")
    x = min(m - 1, n)
    pairs = almost_regular_edges(n, m - x - 1).edges
    return SetSystem(n, [()] + [(i,) for i in range(1, x + 1)] + list(pairs))


def construct_hnm(n: int, m: int) -> Hypergraph:
    """Complements of H'(n, m); H(n, 0) is the empty hypergraph on [n]."""
    if m == 0:
        return Hypergraph(n)
    hprime = construct_hprime(n, m)
    try:
        return complement_system(hprime)
    except ValueError:
        raise ValueError("ground set too small") from None


def special_saturated(kind: str, n: int) -> Hypergraph:
    """Saturated witnesses for S_2, S_3, S_4 and K_3."""
    kind = kind.upper()
    if kind not in SPECIAL_KINDS:
        raise ValueError(f"unknown witness kind {kind!r}")
    if n < SPECIAL_KINDS[kind]:
        raise ValueError("n too small for witness")
    full = full_mask(n)
    if kind == "S2":
        masks = []
    elif kind == "S3":
        masks = [full]
    else:
        masks = [full, full ^ to_mask([1])]
    return Hypergraph.from_masks(n, masks)
