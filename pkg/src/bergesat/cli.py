"""Command-line front end.

Exit status: 0 on success, 1 when a command that asserts a verdict gets a
negative one (unsaturated host, sweep disagreement, lemma failure, cap
exceeded), 2 on usage, parse or constraint errors.
"""

from __future__ import annotations

import argparse
import sys

from . import io
from .berge import contains_berge
from .constructions import construct_hnm, construct_ht, special_saturated
from .hypergraph import Hypergraph, format_set
from .saturation import CapExceeded, lemma_lower_bound_check, sat_number, saturation_report, theorem_check

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


def _hypergraph_text(h: Hypergraph) -> str:
    return str(h) + "\n"


def _cmd_construct(args) -> tuple[int, str]:
    if args.family == "ht":
        h = construct_ht(args.n, args.t)
    elif args.family == "hnm":
        h = construct_hnm(args.n, args.m)
    else:
        h = special_saturated(args.kind, args.n)
    if args.format == "json":
        return EXIT_OK, io.dumps(h.to_json())
    return EXIT_OK, _hypergraph_text(h)


def _cmd_check_berge(args) -> tuple[int, str]:
    g = io.load_graph(args.graph)
    h = io.load_hypergraph(args.host)
    w = contains_berge(g, h)
    if args.format == "json":
        return EXIT_OK, io.dumps({"contains": w is not None, "witness": None if w is None else w.to_json()})
    if w is None:
        return EXIT_OK, "none\n"
    lines = ["vertex map: " + ", ".join(f"{v}->{x}" for v, x in sorted(w.vertex_map.items()))]
    for (u, v), j in sorted(w.edge_assignment.items()):
        lines.append(f"{u}{v} -> {format_set(h.hyperedges[j])} (hyperedge {j})")
    return EXIT_OK, "\n".join(lines) + "\n"


def _cmd_verify_sat(args) -> tuple[int, str]:
    g = io.load_graph(args.graph)
    h = io.load_hypergraph(args.host)
    rep = saturation_report(g, h, witnesses=args.witnesses)
    code = EXIT_OK if rep.is_saturated else EXIT_NEGATIVE
    if args.format == "json":
        return code, io.dumps(rep.to_json())
    failing = ", ".join(format_set(e) for e in rep.failing_edges) or "none"
    text = (
        f"free: {str(rep.is_free).lower()}\n"
        f"saturated: {str(rep.is_saturated).lower()}\n"
        f"failing edges: {failing}\n"
    )
    return code, text


def _cmd_sat_number(args) -> tuple[int, str]:
    g = io.load_graph(args.graph)
    try:
        res = sat_number(g, args.n, args.cap)
    except CapExceeded as exc:
        if args.format == "json":
            return EXIT_NEGATIVE, io.dumps({"error": str(exc)})
        return EXIT_NEGATIVE, f"{exc}\n"
    if args.format == "json":
        return EXIT_OK, io.dumps(res.to_json())
    st = res.search_stats
    return EXIT_OK, (
        f"sat = {res.value}\n"
        f"witness: {res.witness_hypergraph}\n"
        f"candidates: {st.candidates}, isomorph-rejected: {st.iso_rejected}, "
        f"not free: {st.not_free}, tested: {st.tested}\n"
    )


def _cmd_theorem_check(args) -> tuple[int, str]:
    rows = theorem_check(args.n_max, args.e_max)
    code = EXIT_OK if all(r.agree for r in rows) else EXIT_NEGATIVE
    if args.format == "json":
        return code, io.dumps({"rows": [r.to_json() for r in rows], "all_agree": code == EXIT_OK})
    lines = [f"{'|V|':>3} {'|E|':>3}  {'predicted':>9} {'computed':>8} {'construction':>12}  agree  edges"]
    for r in rows:
        edges = " ".join(f"{u}{v}" for u, v in r.graph.edges)
        lines.append(
            f"{r.graph.n:>3} {r.graph.num_edges:>3}  {r.predicted:>9} {r.computed:>8} "
            f"{'saturated' if r.construction_saturated else 'FAILED':>12}  {'yes' if r.agree else 'NO':>5}  {edges}"
        )
    lines.append(f"all agree: {str(code == EXIT_OK).lower()}")
    return code, "\n".join(lines) + "\n"


def _cmd_lemma_check(args) -> tuple[int, str]:
    ok = lemma_lower_bound_check(args.t, args.n)
    code = EXIT_OK if ok else EXIT_NEGATIVE
    if args.format == "json":
        return code, io.dumps({"t": args.t, "n": args.n, "holds": ok})
    return code, f"no {args.t - 2}-edge Berge-S_{args.t} saturated hypergraph on [{args.n}]: {str(ok).lower()}\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bergesat", description=__doc__.splitlines()[0])
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("construct", help="build an explicit hypergraph")
    fam = c.add_subparsers(dest="family", required=True)
    ht = fam.add_parser("ht", parents=[fmt])
    ht.add_argument("--n", type=int, required=True)
    ht.add_argument("--t", type=int, required=True)
    hnm = fam.add_parser("hnm", parents=[fmt])
    hnm.add_argument("--n", type=int, required=True)
    hnm.add_argument("--m", type=int, required=True)
    sp = fam.add_parser("special", parents=[fmt])
    sp.add_argument("--kind", choices=("s2", "s3", "s4", "k3"), type=str.lower, required=True)
    sp.add_argument("--n", type=int, required=True)
    c.set_defaults(func=_cmd_construct)

    cb = sub.add_parser("check-berge", parents=[fmt], help="find a Berge copy of a graph in a host")
    cb.add_argument("--graph", required=True, help="graph file, or a name such as K3, S5, P4, C5")
    cb.add_argument("--host", required=True)
    cb.set_defaults(func=_cmd_check_berge)

    vs = sub.add_parser("verify-sat", parents=[fmt], help="check that a host is Berge-G saturated")
    vs.add_argument("--graph", required=True)
    vs.add_argument("--host", required=True)
    vs.add_argument("--witnesses", action="store_true", help="include a witness per absent edge (json)")
    vs.set_defaults(func=_cmd_verify_sat)

    sn = sub.add_parser("sat-number", parents=[fmt], help="exact saturation number by exhaustive search")
    sn.add_argument("--graph", required=True)
    sn.add_argument("--n", type=int, required=True)
    sn.add_argument("--cap", type=int, default=None)
    sn.set_defaults(func=_cmd_sat_number)

    tc = sub.add_parser("theorem-check", parents=[fmt], help="compare exact values with the formula")
    tc.add_argument("--n-max", type=int, required=True)
    tc.add_argument("--e-max", type=int, required=True)
    tc.set_defaults(func=_cmd_theorem_check)

    lc = sub.add_parser("lemma-check", parents=[fmt], help="exhaustive star lower bound")
    lc.add_argument("--t", type=int, default=5)
    lc.add_argument("--n", type=int, required=True)
    lc.set_defaults(func=_cmd_lemma_check)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        code, out = args.func(args)
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    sys.stdout.write(out)
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
