"""Non-uniform hypergraphs and set systems on {1..n}, stored as bitmasks.

Vertex ``v`` corresponds to bit ``v - 1``.  Hyperedges are kept in a canonical
order so that listings compare byte-for-byte:

* ``Hypergraph``: descending size, then reverse lexicographic on the sorted
  vertex tuple (equivalently: complements in ascending lexicographic order);
* ``SetSystem``: ascending size, then lexicographic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_N = 62
MAX_ENUM_N = 20


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (int(v) - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def set_order_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Ascending size, then lexicographic."""
    return (popcount(mask), from_mask(mask))


def _complement_key(n: int):
    full = (1 << n) - 1
    return lambda mask: set_order_key(full ^ mask)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def _check_masks(n: int, masks: list[int]) -> None:
    if n < 1 or n > MAX_N:
        raise ValueError(f"ground set size must be in 1..{MAX_N}")
    full = full_mask(n)
    seen = set()
    for m in masks:
        if m & ~full:
            raise ValueError(f"set {set(from_mask(m))} not contained in 1..{n}")
        if m in seen:
            raise ValueError(f"duplicate set {set(from_mask(m))}")
        seen.add(m)


def format_set(vertices: Iterable[int]) -> str:
    return "{" + ",".join(str(v) for v in vertices) + "}"


@dataclass(frozen=True, init=False)
class Hypergraph:
    n: int
    masks: tuple[int, ...]

    def __init__(self, n: int, hyperedges: Iterable[Iterable[int]] = ()):
        masks = [to_mask(e) for e in hyperedges]
        self._init(n, masks)

    def _init(self, n: int, masks: list[int]) -> None:
        _check_masks(n, masks)
        for m in masks:
            if popcount(m) < 2:
                raise ValueError("hyperedge too small")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(sorted(masks, key=_complement_key(n))))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Hypergraph":
        h = cls.__new__(cls)
        h._init(n, list(masks))
        return h

    @property
    def hyperedges(self) -> tuple[tuple[int, ...], ...]:
        return tuple(from_mask(m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __contains__(self, e) -> bool:
        return (e if isinstance(e, int) else to_mask(e)) in self.masks

    def index(self, e) -> int:
        return self.masks.index(e if isinstance(e, int) else to_mask(e))

    def degree(self, v: int) -> int:
        if not 1 <= v <= self.n:
            raise ValueError("vertex out of range")
        bit = 1 << (v - 1)
        return sum(1 for m in self.masks if m & bit)

    def __str__(self) -> str:
        body = ", ".join(format_set(e) for e in self.hyperedges)
        return f"([{self.n}], {{{body}}})"

    def to_json(self) -> dict:
        return {"n": self.n, "hyperedges": [list(e) for e in self.hyperedges]}

    @classmethod
    def from_json(cls, obj: dict) -> "Hypergraph":
        return cls(int(obj["n"]), obj["hyperedges"])


@dataclass(frozen=True, init=False)
class SetSystem:
    n: int
    masks: tuple[int, ...]

    def __init__(self, n: int, members: Iterable[Iterable[int]] = ()):
        masks = [to_mask(e) for e in members]
        _check_masks(n, masks)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(sorted(masks, key=set_order_key)))

    @property
    def members(self) -> tuple[tuple[int, ...], ...]:
        return tuple(from_mask(m) for m in self.masks)

    def __len__(self) -> int:
        return len(self.masks)

    def __str__(self) -> str:
        return "{" + ", ".join("∅" if not e else format_set(e) for e in self.members) + "}"

    def to_json(self) -> dict:
        return {"n": self.n, "members": [list(e) for e in self.members]}

    @classmethod
    def from_json(cls, obj: dict) -> "SetSystem":
        return cls(int(obj["n"]), obj["members"])


def add_edge(h: Hypergraph, e: Iterable[int] | int) -> Hypergraph:
    mask = e if isinstance(e, int) else to_mask(e)
    if popcount(mask) < 2:
        raise ValueError("hyperedge too small")
    if mask in h.masks:
        raise ValueError("edge already present")
    return Hypergraph.from_masks(h.n, h.masks + (mask,))


def remove_edge(h: Hypergraph, e: Iterable[int] | int) -> Hypergraph:
    mask = e if isinstance(e, int) else to_mask(e)
    if mask not in h.masks:
        raise ValueError("edge not present")
    return Hypergraph.from_masks(h.n, (m for m in h.masks if m != mask))


def complement_system(s: SetSystem) -> Hypergraph:
    """Hypergraph whose hyperedges are the complements of the members of ``s``."""
    full = full_mask(s.n)
    if any(popcount(full ^ m) < 2 for m in s.masks):
        raise ValueError("complement too small")
    return Hypergraph.from_masks(s.n, (full ^ m for m in s.masks))


def hypergraph_complements(h: Hypergraph) -> SetSystem:
    full = full_mask(h.n)
    return SetSystem(h.n, (from_mask(full ^ m) for m in h.masks))


def iter_masks_ge2(n: int) -> Iterator[int]:
    """All subsets of {1..n} with at least two elements, ascending bitmask order."""
    for m in range(1 << n):
        if m & (m - 1):
            yield m


def absent_masks(h: Hypergraph) -> list[int]:
    if h.n > MAX_ENUM_N:
        raise ValueError("enumeration bound exceeded")
    present = set(h.masks)
    return sorted((m for m in iter_masks_ge2(h.n) if m not in present), key=set_order_key)


def absent_edges(h: Hypergraph) -> list[tuple[int, ...]]:
    """Every subset of size >= 2 not already a hyperedge, ascending size then lexicographic."""
    return [from_mask(m) for m in absent_masks(h)]


def degree(h: Hypergraph, v: int) -> int:
    return h.degree(v)
