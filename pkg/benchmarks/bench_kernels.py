"""Compare the compiled and pure-Python kernels on the solver's workloads.

    python benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import random
import time
from contextlib import contextmanager
from math import factorial

from bergesat import kernels
from bergesat.berge import pattern_of
from bergesat.constructions import construct_ht
from bergesat.graph import cycle, star
from bergesat.hypergraph import absent_masks, iter_masks_ge2
from bergesat.saturation import perm_table, scan_level, theorem_check


@contextmanager
def use_backend(name):
    impl = kernels.load(name)
    saved = {f: getattr(kernels, f) for f in ("berge_embed", "first_failing", "is_canonical")}
    for f in saved:
        setattr(kernels, f, getattr(impl, f))
    try:
        yield impl
    finally:
        for f, fn in saved.items():
            setattr(kernels, f, fn)


def negative_embeds(impl):
    # C_6 against random 6-edge hosts on 9 points: mostly exhaustive failures
    rng = random.Random(0)
    k, edges, order = pattern_of(cycle(6))
    universe = list(iter_masks_ge2(9))
    hosts = [rng.sample(universe, 6) for _ in range(40)]
    for masks in hosts:
        impl.berge_embed(k, edges, order, 9, masks)


def ht_closure(impl):
    h = construct_ht(10, 7)
    k, edges, order = pattern_of(star(7))
    impl.first_failing(k, edges, order, h.n, h.masks, absent_masks(h))


def canonical_checks(impl):
    rng = random.Random(1)
    n = 6
    table = perm_table(n)
    universe = list(iter_masks_ge2(n))
    for _ in range(3000):
        cand = tuple(sorted(rng.sample(universe, 4)))
        impl.is_canonical(cand, table, 1 << n, factorial(n))


def lemma_scan(_impl):
    scan_level(star(5), 6, 3, stop_at_first=False, workers=1)


def sweep(_impl):
    theorem_check(5, 5, workers=1)


WORKLOADS = [
    ("berge_embed, C6 vs 40 random hosts", negative_embeds),
    ("closure of H_7(10) under S_7", ht_closure),
    ("3000 isomorph-rejection checks, n=6", canonical_checks),
    ("lemma scan t=5, n=6 (29260 candidates)", lemma_scan),
    ("theorem sweep n<=5, e<=5", sweep),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = kernels.available()
    print(f"{'workload':<42}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) == 2 else ""))
    for label, fn in WORKLOADS:
        times = []
        for b in backends:
            with use_backend(b) as impl:
                best = float("inf")
                for _ in range(args.repeat):
                    t0 = time.perf_counter()
                    fn(impl)
                    best = min(best, time.perf_counter() - t0)
            times.append(best)
        row = f"{label:<42}" + "".join(f"{t * 1e3:>10.1f}ms" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
