"""Bipartite maximum matching with Hall-violator certificates."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True, init=False)
class BipartiteGraph:
    left_size: int
    right_size: int
    adjacency: tuple[tuple[int, ...], ...]

    def __init__(self, left_size: int, right_size: int, adjacency: Iterable[Iterable[int]]):
        adj = tuple(tuple(sorted(set(a))) for a in adjacency)
        if len(adj) != left_size:
            raise ValueError("adjacency must list every left vertex")
        for a in adj:
            if a and (a[0] < 0 or a[-1] >= right_size):
                raise ValueError("right index out of range")
        object.__setattr__(self, "left_size", left_size)
        object.__setattr__(self, "right_size", right_size)
        object.__setattr__(self, "adjacency", adj)

    def neighborhood(self, left: Iterable[int]) -> frozenset[int]:
        out: set[int] = set()
        for u in left:
            out.update(self.adjacency[u])
        return frozenset(out)


class MatchKind(enum.Enum):
    PERFECT = "Perfect"
    DEFICIENT = "Deficient"


@dataclass(frozen=True)
class MatchingResult:
    kind: MatchKind
    pairs: tuple[tuple[int, int], ...]
    violator: Optional[frozenset[int]] = None

    @property
    def is_perfect(self) -> bool:
        return self.kind is MatchKind.PERFECT


def _kuhn(b: BipartiteGraph) -> list[int]:
    match_right = [-1] * b.right_size
    match_left = [-1] * b.left_size

    def augment(u: int, seen: list[bool]) -> bool:
        for r in b.adjacency[u]:
            if seen[r]:
                continue
            seen[r] = True
            if match_right[r] == -1 or augment(match_right[r], seen):
                match_right[r] = u
                match_left[u] = r
                return True
        return False

    for u in range(b.left_size):
        augment(u, [False] * b.right_size)
    return match_left


def max_matching(b: BipartiteGraph) -> list[tuple[int, int]]:
    """Maximum matching by augmenting paths.

    Left vertices are processed in ascending order and each augmenting search
    tries right vertices in ascending order, so the output is deterministic.
    """
    match_left = _kuhn(b)
    return [(u, r) for u, r in enumerate(match_left) if r != -1]


def perfect_or_violator(b: BipartiteGraph) -> MatchingResult:
    """Left-perfect matching, or a set S of left vertices with |N(S)| < |S|.

    S is the least unmatched left vertex together with every left vertex reachable
    from it along alternating paths.
    """
    match_left = _kuhn(b)
    pairs = tuple((u, r) for u, r in enumerate(match_left) if r != -1)
    unmatched = [u for u, r in enumerate(match_left) if r == -1]
    if not unmatched:
        return MatchingResult(MatchKind.PERFECT, pairs)

    match_right = [-1] * b.right_size
    for u, r in pairs:
        match_right[r] = u
    root = unmatched[0]
    seen_left = {root}
    seen_right: set[int] = set()
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for r in b.adjacency[u]:
            if r in seen_right:
                continue
            seen_right.add(r)
            w = match_right[r]
            # every reachable right vertex is matched, else the matching was not maximum
            if w != -1 and w not in seen_left:
                seen_left.add(w)
                queue.append(w)
    return MatchingResult(MatchKind.DEFICIENT, pairs, frozenset(seen_left))
