"""Labeled simple graphs on {1..n}, structure predicates and small-graph enumeration."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

MAX_ENUM_VERTICES = 7

Edge = tuple[int, int]


def _norm_edge(e: Iterable[int]) -> Edge:
    u, v = e
    u, v = int(u), int(v)
    if u == v:
        raise ValueError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple graph with vertex set {1..n}.

    ``edges`` is normalised to a sorted tuple of ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        norm = sorted({_norm_edge(e) for e in self.edges})
        for u, v in norm:
            if u < 1 or v > self.n:
                raise ValueError(f"edge {(u, v)} outside 1..{self.n}")
        object.__setattr__(self, "edges", tuple(norm))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degrees(self) -> list[int]:
        """Degrees of vertices 1..n (index 0 holds vertex 1)."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u - 1] += 1
            deg[v - 1] += 1
        return deg

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def isolated_vertices(self) -> list[int]:
        return [v + 1 for v, d in enumerate(self.degrees()) if d == 0]

    def remove_edge(self, e: Iterable[int]) -> "Graph":
        e = _norm_edge(e)
        if e not in self.edges:
            raise ValueError(f"edge {e} not in graph")
        return Graph(self.n, tuple(x for x in self.edges if x != e))

    def drop_isolated(self) -> "Graph":
        """Relabel the non-isolated vertices to 1..k, preserving their order."""
        keep = [v for v in range(1, self.n + 1) if self.degree(v) > 0]
        if not keep:
            raise ValueError("empty graph has no non-isolated vertices")
        relabel = {v: i + 1 for i, v in enumerate(keep)}
        return Graph(len(keep), tuple((relabel[u], relabel[v]) for u, v in self.edges))

    def relabel(self, perm: dict[int, int]) -> "Graph":
        return Graph(self.n, tuple((perm[u], perm[v]) for u, v in self.edges))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Graph":
        return cls(int(obj["n"]), tuple(tuple(e) for e in obj["edges"]))


# Named families used throughout the tests and the CLI.

def star(t: int) -> Graph:
    """Star S_t: t vertices, center 1."""
    if t < 2:
        raise ValueError("star needs at least two vertices")
    return Graph(t, tuple((1, v) for v in range(2, t + 1)))


def path(k: int) -> Graph:
    """Path P_k on k vertices 1-2-...-k."""
    return Graph(k, tuple((v, v + 1) for v in range(1, k)))


def cycle(k: int) -> Graph:
    return Graph(k, tuple((v, v % k + 1) for v in range(1, k + 1)))


def complete(k: int) -> Graph:
    return Graph(k, tuple(combinations(range(1, k + 1), 2)))


def max_degree(g: Graph) -> int:
    return max(g.degrees(), default=0)


def is_star(g: Graph) -> Optional[int]:
    """Return the center if all edges share a common vertex, else None.

    A single edge is a star centered at its smaller endpoint.
    """
    if not g.edges:
        raise ValueError("empty graph not classifiable")
    common = set(g.edges[0])
    for e in g.edges[1:]:
        common &= set(e)
        if not common:
            return None
    return min(common)


def _covers(cover: tuple[int, ...], edges: Iterable[Edge]) -> bool:
    return all(u in cover or v in cover for u, v in edges)


def has_vertex_cover_le2(g: Graph) -> Optional[tuple[int, ...]]:
    """Lexicographically least minimum vertex cover of size at most two, or None."""
    if not g.edges:
        return ()
    verts = range(1, g.n + 1)
    for size in (1, 2):
        for cover in combinations(verts, size):
            if _covers(cover, g.edges):
                return cover
    return None


def is_two_star_union(g: Graph) -> Optional[tuple[int, int]]:
    """Least pair of distinct centers covering every edge, provided g is not a star."""
    if not g.edges or is_star(g) is not None:
        return None
    for a, b in combinations(range(1, g.n + 1), 2):
        if _covers((a, b), g.edges):
            return (a, b)
    return None


class ClassTag(enum.Enum):
    STAR_WITH_AT_LEAST_4_EDGES = "StarWithAtLeast4Edges"
    OTHER = "Other"


@dataclass(frozen=True)
class GraphClass:
    tag: ClassTag
    center: Optional[int] = None


def _require_theorem_graph(g: Graph) -> None:
    if not g.edges:
        raise ValueError("empty graph not classifiable")
    if g.isolated_vertices():
        raise ValueError("isolated vertices not allowed")


def classify_for_theorem(g: Graph) -> GraphClass:
    _require_theorem_graph(g)
    center = is_star(g)
    if center is not None and g.num_edges >= 4:
        return GraphClass(ClassTag.STAR_WITH_AT_LEAST_4_EDGES, center)
    return GraphClass(ClassTag.OTHER, center)


def predicted_sat(g: Graph) -> int:
    """Saturation number predicted for B(g): |E| for big stars, |E| - 1 otherwise."""
    cls = classify_for_theorem(g)
    if cls.tag is ClassTag.STAR_WITH_AT_LEAST_4_EDGES:
        return g.num_edges
    return g.num_edges - 1


# --- isomorph-free enumeration -------------------------------------------------
#
# Edge-set encoding: pairs ordered colexicographically, (1,2),(1,3),(2,3),(1,4),...
# the first pair is the most significant bit.  Under this order the bits fixed
# by choosing the preimages of new labels 1..r form a prefix, which lets the
# canonical labeling be found by branch and bound rather than scanning all n!.


def _colex_pairs(k: int) -> list[Edge]:
    return [(a, b) for b in range(2, k + 1) for a in range(1, b)]


def encode(g: Graph) -> int:
    pairs = _colex_pairs(g.n)
    total = len(pairs)
    es = set(g.edges)
    code = 0
    for i, p in enumerate(pairs):
        if p in es:
            code |= 1 << (total - 1 - i)
    return code


def decode(k: int, code: int) -> Graph:
    pairs = _colex_pairs(k)
    total = len(pairs)
    return Graph(k, tuple(p for i, p in enumerate(pairs) if code >> (total - 1 - i) & 1))


def canonical_code(g: Graph) -> int:
    """Least encoding of g over all relabelings of its vertices."""
    k = g.n
    adj = [[False] * (k + 1) for _ in range(k + 1)]
    for u, v in g.edges:
        adj[u][v] = adj[v][u] = True
    best: list[int] = []
    chosen: list[int] = []
    bits: list[int] = []
    used = [False] * (k + 1)

    def rec() -> None:
        nonlocal best
        r = len(chosen)
        if r == k:
            if not best or bits < best:
                best = list(bits)
            return
        for x in range(1, k + 1):
            if used[x]:
                continue
            new = [1 if adj[y][x] else 0 for y in chosen]
            bits.extend(new)
            if best and bits > best[: len(bits)]:
                del bits[len(bits) - r:]
                continue
            used[x] = True
            chosen.append(x)
            rec()
            chosen.pop()
            used[x] = False
            del bits[len(bits) - r:]

    rec()
    code = 0
    for b in best:
        code = code << 1 | b
    return code


def enumerate_graphs(n_max: int, e_max: int) -> list[Graph]:
    """One canonical representative per isomorphism class.

    Classes range over graphs without isolated vertices with 2 <= |V| <= n_max and
    1 <= |E| <= e_max, sorted by (|V|, |E|, encoding).
    """
    if n_max > MAX_ENUM_VERTICES:
        raise ValueError("enumeration bound exceeded")
    out: list[tuple[int, int, int]] = []
    for k in range(2, n_max + 1):
        pairs = _colex_pairs(k)
        level = {0}  # canonical codes of graphs on k vertices with e edges
        for e in range(1, min(e_max, len(pairs)) + 1):
            nxt = set()
            for code in level:
                g = decode(k, code)
                present = set(g.edges)
                for p in pairs:
                    if p not in present:
                        nxt.add(canonical_code(Graph(k, g.edges + (p,))))
            level = nxt
            for code in level:
                g = decode(k, code)
                if not g.isolated_vertices():
                    out.append((k, e, code))
    out.sort()
    return [decode(k, code) for k, _, code in out]
