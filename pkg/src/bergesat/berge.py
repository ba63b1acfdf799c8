"""Berge-G containment: search, brute-force oracle, witness checks, and the
perfect-matching certificate over the complement system H'."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from . import kernels
from .graph import Edge, Graph
from .hypergraph import Hypergraph, SetSystem, to_mask
from .matching import BipartiteGraph, MatchingResult, perfect_or_violator

ORACLE_MAX_VERTICES = 7
ORACLE_MAX_EDGES = 6
ORACLE_MAX_HYPEREDGES = 8


@dataclass(frozen=True)
class BergeWitness:
    """Injective vertex map V(G) -> V(H) and edge -> hyperedge-index assignment.

    Hyperedge indices refer to the host's canonical hyperedge order.
    """

    vertex_map: dict[int, int]
    edge_assignment: dict[Edge, int]

    def to_json(self) -> dict:
        return {
            "vertex_map": {str(v): self.vertex_map[v] for v in sorted(self.vertex_map)},
            "edge_assignment": [
                {"edge": list(e), "hyperedge_index": self.edge_assignment[e]}
                for e in sorted(self.edge_assignment)
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BergeWitness":
        vmap = {int(k): int(v) for k, v in obj["vertex_map"].items()}
        assign = {}
        for item in obj["edge_assignment"]:
            u, v = sorted(item["edge"])
            assign[(u, v)] = int(item["hyperedge_index"])
        return cls(vmap, assign)


def pattern_of(g: Graph) -> tuple[int, list[tuple[int, int]], list[int]]:
    """Kernel form of g: 0-based edges and the embedding order.

    Vertices are embedded by descending degree, ties broken by label.
    """
    deg = g.degrees()
    order = sorted(range(g.n), key=lambda v: (-deg[v], v))
    return g.n, [(u - 1, v - 1) for u, v in g.edges], order


def _witness(g: Graph, images: list[int], assign: list[int]) -> BergeWitness:
    return BergeWitness(
        {v + 1: images[v] + 1 for v in range(g.n)},
        {e: assign[i] for i, e in enumerate(g.edges)},
    )


def contains_berge(g: Graph, h: Hypergraph) -> Optional[BergeWitness]:
    """Find a Berge copy of g inside h, or return None.

    Backtracks over injective vertex embeddings and keeps a maximum matching of
    embedded edges to hyperedges, extending it by augmenting paths as each
    vertex is placed; a partial embedding is dropped as soon as one of its
    edges cannot be matched.
    """
    if g.isolated_vertices():
        raise ValueError("isolated vertices not allowed")
    if len(h) < g.num_edges or g.n > h.n:
        return None
    k, edges, order = pattern_of(g)
    found = kernels.berge_embed(k, edges, order, h.n, h.masks)
    if found is None:
        return None
    return _witness(g, *found)


def contains_berge_oracle(g: Graph, h: Hypergraph) -> Optional[BergeWitness]:
    """Exhaustive check over every vertex map and every edge assignment."""
    if g.n > ORACLE_MAX_VERTICES or g.num_edges > ORACLE_MAX_EDGES or len(h) > ORACLE_MAX_HYPEREDGES:
        raise ValueError("oracle bound exceeded")
    masks = h.masks
    for images in permutations(range(1, h.n + 1), g.n):
        pair_masks = [to_mask((images[u - 1], images[v - 1])) for u, v in g.edges]
        for assign in permutations(range(len(masks)), g.num_edges):
            if all(masks[j] & p == p for p, j in zip(pair_masks, assign)):
                return BergeWitness(
                    {v: images[v - 1] for v in range(1, g.n + 1)},
                    dict(zip(g.edges, assign)),
                )
    return None


def validate_witness(g: Graph, h: Hypergraph, w: BergeWitness) -> bool:
    vmap, assign = w.vertex_map, w.edge_assignment
    if set(vmap) != set(range(1, g.n + 1)):
        return False
    images = list(vmap.values())
    if len(set(images)) != len(images) or any(not 1 <= x <= h.n for x in images):
        return False
    if set(assign) != set(g.edges):
        return False
    targets = list(assign.values())
    if len(set(targets)) != len(targets) or any(not 0 <= j < len(h) for j in targets):
        return False
    for (u, v), j in assign.items():
        pair = to_mask((vmap[u], vmap[v]))
        if h.masks[j] & pair != pair:
            return False
    return True


def condition_iii_graph(
    g: Graph, removed_edge: tuple[int, int], hprime: SetSystem
) -> tuple[list[Edge], list[int], BipartiteGraph]:
    """Left part E(g) minus the removed edge, right part the members of H'.

    An edge is joined to a member iff they are disjoint.
    """
    removed = tuple(sorted(removed_edge))
    if removed not in g.edges:
        raise ValueError(f"edge {removed} not in graph")
    left = [e for e in g.edges if e != removed]
    right = list(hprime.masks)
    if len(left) != len(right):
        raise ValueError("parts of F have unequal size")
    adjacency = [[j for j, s in enumerate(right) if not s & to_mask(e)] for e in left]
    return left, right, BipartiteGraph(len(left), len(right), adjacency)


def certificate_condition_iii(g: Graph, removed_edge: tuple[int, int], hprime: SetSystem) -> MatchingResult:
    _, _, f = condition_iii_graph(g, removed_edge, hprime)
    return perfect_or_violator(f)
