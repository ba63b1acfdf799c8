"""Saturation checks and exact saturation numbers by exhaustive search."""

from __future__ import annotations

import os
from array import array
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from typing import Optional

from . import kernels
from .berge import BergeWitness, contains_berge, pattern_of
from .constructions import construct_hnm, construct_ht, special_saturated
from .graph import ClassTag, Graph, classify_for_theorem, enumerate_graphs, predicted_sat, star
from .hypergraph import Hypergraph, absent_masks, add_edge, from_mask, iter_masks_ge2

REPORT_MAX_N = 12
SOLVER_MAX_N = 6
SWEEP_MAX_N = 5
SWEEP_MAX_E = 6


class CapExceeded(ValueError):
    """No saturated hypergraph exists with at most ``m_cap`` hyperedges."""


@dataclass(frozen=True)
class SaturationReport:
    is_free: bool
    failing_edges: tuple[tuple[int, ...], ...]
    witness_per_edge: Optional[dict[tuple[int, ...], BergeWitness]] = None

    @property
    def is_saturated(self) -> bool:
        return self.is_free and not self.failing_edges

    def to_json(self) -> dict:
        out = {
            "is_free": self.is_free,
            "is_saturated": self.is_saturated,
            "failing_edges": [list(e) for e in self.failing_edges],
        }
        if self.witness_per_edge is not None:
            out["witnesses"] = [
                {"edge": list(e), "witness": w.to_json()} for e, w in self.witness_per_edge.items()
            ]
        return out


def _check_pattern(g: Graph, n: int) -> None:
    if g.isolated_vertices():
        raise ValueError("isolated vertices not allowed")
    if n < g.n:
        raise ValueError("host smaller than pattern")


def saturation_report(g: Graph, h: Hypergraph, witnesses: bool = True) -> SaturationReport:
    """Is h free of Berge-g, and which absent hyperedges fail to create one?"""
    _check_pattern(g, h.n)
    if h.n > REPORT_MAX_N:
        raise ValueError("closure enumeration bound exceeded")
    is_free = contains_berge(g, h) is None
    failing = []
    found = {} if witnesses else None
    for mask in absent_masks(h):
        e = from_mask(mask)
        w = contains_berge(g, add_edge(h, mask))
        if w is None:
            failing.append(e)
        elif found is not None:
            found[e] = w
    return SaturationReport(is_free, tuple(failing), found)


# --- exact search ------------------------------------------------------------


@dataclass
class SearchStats:
    candidates: int = 0
    iso_rejected: int = 0
    not_free: int = 0
    tested: int = 0

    def merge(self, other: "SearchStats") -> None:
        self.candidates += other.candidates
        self.iso_rejected += other.iso_rejected
        self.not_free += other.not_free
        self.tested += other.tested

    def to_json(self) -> dict:
        return dict(vars(self))


@dataclass(frozen=True)
class SatResult:
    value: int
    witness_hypergraph: Hypergraph
    search_stats: SearchStats = field(compare=False)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "witness_hypergraph": self.witness_hypergraph.to_json(),
            "search_stats": self.search_stats.to_json(),
        }


@lru_cache(maxsize=None)
def perm_table(n: int) -> array:
    """Flat table: entry ``p * 2**n + mask`` is the image of mask under the p-th permutation."""
    stride = 1 << n
    table = array("Q")
    for perm in permutations(range(n)):
        for mask in range(stride):
            img = 0
            for x in range(n):
                if mask >> x & 1:
                    img |= 1 << perm[x]
            table.append(img)
    return table


def is_canonical(cand: tuple[int, ...], n: int) -> bool:
    """Is the ascending mask tuple the least image of itself under relabeling?"""
    return kernels.is_canonical(cand, perm_table(n), 1 << n, factorial(n))


class _Level:
    """Candidate test for one (pattern, n, m) search level."""

    def __init__(self, g: Graph, n: int, m: int):
        self.k, self.edges, self.order = pattern_of(g)
        self.n = n
        self.m = m
        self.check_free = m >= g.num_edges
        self.universe = list(iter_masks_ge2(n))
        self.table = perm_table(n)
        self.nperms = factorial(n)
        self.hint: list[int] = []

    def accepts(self, cand: tuple[int, ...], stats: SearchStats) -> bool:
        stats.candidates += 1
        if not kernels.is_canonical(cand, self.table, 1 << self.n, self.nperms):
            stats.iso_rejected += 1
            return False
        if self.check_free and kernels.berge_embed(self.k, self.edges, self.order, self.n, cand) is not None:
            stats.not_free += 1
            return False
        stats.tested += 1
        present = set(cand)
        # try recently failing additions first; only the verdict is used
        front = [x for x in self.hint if x not in present]
        absent = front + [x for x in self.universe if x not in present and x not in self.hint]
        idx = kernels.first_failing(self.k, self.edges, self.order, self.n, cand, absent)
        if idx == -1:
            return True
        bad = absent[idx]
        if bad in self.hint:
            self.hint.remove(bad)
        self.hint.insert(0, bad)
        del self.hint[4:]
        return False

    def candidates_from(self, first: int):
        u = self.universe
        if self.m == 0:
            yield ()
            return
        for rest in combinations(u[first + 1:], self.m - 1):
            yield (u[first],) + rest

    def firsts(self) -> range:
        return range(1) if self.m == 0 else range(len(self.universe) - self.m + 1)


def _scan(g: Graph, n: int, m: int, firsts, stop_at_first: bool):
    level = _Level(g, n, m)
    stats = SearchStats()
    accepted = []
    for first in firsts:
        for cand in level.candidates_from(first):
            if level.accepts(cand, stats):
                accepted.append(cand)
                if stop_at_first:
                    return accepted, stats
    return accepted, stats


def _scan_task(args):
    return _scan(*args)


def _workers(workers: Optional[int]) -> int:
    if workers is None:
        workers = int(os.environ.get("BERGESAT_THREADS", "1") or 1)
    if workers < 1:
        raise ValueError("BERGESAT_THREADS must be a positive integer")
    return workers


def scan_level(
    g: Graph, n: int, m: int, stop_at_first: bool = True, workers: Optional[int] = None
) -> tuple[list[tuple[int, ...]], SearchStats]:
    """Canonical m-edge hypergraphs on [n] that are Berge-g saturated.

    Candidates are m-subsets of the size->=2 masks in ascending lexicographic
    order.  With ``stop_at_first`` only the least accepted candidate is
    returned; parallel runs split by first element and keep the least hit.
    """
    workers = _workers(workers)
    level = _Level(g, n, m)
    firsts = list(level.firsts())
    if workers == 1 or len(firsts) < 2:
        return _scan(g, n, m, firsts, stop_at_first)
    stats = SearchStats()
    accepted: list[tuple[int, ...]] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for start in range(0, len(firsts), workers):
            wave = [(g, n, m, [f], stop_at_first) for f in firsts[start:start + workers]]
            for acc, st in pool.map(_scan_task, wave):
                stats.merge(st)
                accepted.extend(acc)
            if stop_at_first and accepted:
                return [min(accepted)], stats
    return sorted(accepted), stats


def sat_number(g: Graph, n: int, m_cap: Optional[int] = None, workers: Optional[int] = None) -> SatResult:
    """Least number of hyperedges of a Berge-g saturated hypergraph on [n]."""
    _check_pattern(g, n)
    if n > SOLVER_MAX_N:
        raise ValueError("solver bound exceeded")
    if m_cap is None:
        m_cap = g.num_edges + 1
    if m_cap < g.num_edges:
        raise ValueError("m_cap must be at least |E(G)|")
    stats = SearchStats()
    for m in range(max(g.num_edges - 1, 0), m_cap + 1):
        accepted, st = scan_level(g, n, m, stop_at_first=True, workers=workers)
        stats.merge(st)
        if accepted:
            return SatResult(m, Hypergraph.from_masks(n, accepted[0]), stats)
    raise CapExceeded(f"cap exceeded: no saturated hypergraph with at most {m_cap} hyperedges")


def lemma_lower_bound_check(t: int, n: int, workers: Optional[int] = None) -> bool:
    """True iff no hypergraph on [n] with t-2 hyperedges is Berge-S_t saturated."""
    if t != 5 or n not in (5, 6):
        raise ValueError("exhaustive bound exceeded")
    accepted, _ = scan_level(star(t), n, t - 2, stop_at_first=False, workers=workers)
    return not accepted


# --- the sweep over small graphs ----------------------------------------------


def paper_construction(g: Graph, n: int) -> Hypergraph:
    """The explicit saturated hypergraph for g on [n] (big star, small star, or H(n, |E|-1))."""
    cls = classify_for_theorem(g)
    if cls.tag is ClassTag.STAR_WITH_AT_LEAST_4_EDGES:
        return construct_ht(n, g.num_edges + 1)
    if cls.center is not None:
        return special_saturated(f"S{g.num_edges + 1}", n)
    return construct_hnm(n, g.num_edges - 1)


@dataclass(frozen=True)
class TheoremRow:
    graph: Graph
    predicted: int
    computed: int
    construction: Hypergraph
    construction_saturated: bool

    @property
    def agree(self) -> bool:
        return self.predicted == self.computed and self.construction_saturated

    def to_json(self) -> dict:
        return {
            "graph": self.graph.to_json(),
            "predicted": self.predicted,
            "computed": self.computed,
            "construction": self.construction.to_json(),
            "construction_saturated": self.construction_saturated,
            "agree": self.agree,
        }


def theorem_check(n_max: int, e_max: int, workers: Optional[int] = None) -> list[TheoremRow]:
    if n_max > SWEEP_MAX_N or e_max > SWEEP_MAX_E:
        raise ValueError("sweep bound exceeded")
    rows = []
    for g in enumerate_graphs(n_max, e_max):
        res = sat_number(g, g.n, workers=workers)
        constr = paper_construction(g, g.n)
        rows.append(
            TheoremRow(
                g,
                predicted_sat(g),
                res.value,
                constr,
                saturation_report(g, constr, witnesses=False).is_saturated,
            )
        )
    return rows
